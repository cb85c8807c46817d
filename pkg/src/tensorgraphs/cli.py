"""Command-line interface: ``tensorgraphs SUBCOMMAND ...``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
Graph arguments are a file path, ``-`` for standard input, or the name of a
builtin fixture (see ``tensorgraphs validate --help``).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import io
from .automorphisms import aut_group
from .boundary import boundary, cone
from .enumeration import EnumerationRequest, InfeasibleRequest, enumerate_graphs
from .fixtures import FIXTURES
from .graphs import (ColoredGraph, DisconnectedGraph, InteractionModel, OpenFeynmanGraph,
                     as_graph, canonical_form, validate)
from .invariants import degree_report, faces, jackets
from .perm import cycles
from .pi1 import abelianization, gagliardi_presentation, tietze_simplify
from .realization import realize
from .surgery import EdgeRef, connected_sum, pretzel, remove_dipole, separatrix
from .wti import free_energy_terms, sde_two_point_terms, y_expansion


class DomainError(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if not os.path.exists(source) and source in FIXTURES:
        return io.dumps(FIXTURES[source]())
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {source}: {exc.strerror}") from None


def _load(source: str):
    return io.loads(_read(source))


def _closed(g) -> ColoredGraph:
    if isinstance(g, OpenFeynmanGraph):
        if not g.is_vacuum:
            raise DomainError("expected a closed graph, got an open graph with external legs")
        return g.to_colored_graph()
    return as_graph(g)


def _emit(args, text: str, record=None) -> None:
    if args.json:
        sys.stdout.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_graph(args, g, metadata=None) -> None:
    sys.stdout.write(io.dumps(g, metadata))


def _fmt_cycles(p) -> str:
    cs = [c for c in cycles(p) if len(c) > 1]
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"


# subcommands ----------------------------------------------------------------------


def cmd_validate(args) -> int:
    text = _read(args.graph)
    g = io._loads(text)
    try:
        g = io.doc_to_graph(g)
    except io.GraphFormatError as exc:
        _emit(args, f"invalid: {exc}", {"valid": False, "problems": [str(exc)]})
        return 1
    rep = validate(g)
    if isinstance(g, OpenFeynmanGraph):
        text = f"valid: open graph, D={g.rank}, n={g.half_order}, legs={rep.legs}"
        rec = {"valid": True, "kind": "open", "colors": g.rank, "white": g.half_order, "legs": rep.legs}
    else:
        enc = canonical_form(g).encoding.decode()
        text = f"valid: closed graph, D={g.rank}, p={g.half_order}, encoding {enc}"
        rec = {"valid": True, "kind": "closed", "colors": g.rank, "white": g.half_order, "encoding": enc}
    _emit(args, text, rec)
    return 0


def cmd_boundary(args) -> int:
    g = _load(args.graph)
    if not isinstance(g, OpenFeynmanGraph):
        # a closed graph read as a vacuum graph, its color 1 playing color 0
        g = as_graph(g)
        g = OpenFeynmanGraph(g.perms[1:], g.perms[0])
    res = boundary(g)
    if args.encoding:
        enc = canonical_form(res.graph).encoding.decode()
        _emit(args, enc, {"encoding": enc})
    else:
        _emit_graph(args, res.graph)
    return 0


def cmd_degree(args) -> int:
    g = _closed(_load(args.graph))
    rep = degree_report(g)
    genera = ",".join(str(x) for x in sorted(rep.jacket_genera))
    _emit(args, f"omega = {rep.omega}; jackets: {genera}",
          {"omega": str(rep.omega), "jackets": sorted(rep.jacket_genera), "consistent": rep.consistent})
    return 0


def cmd_jackets(args) -> int:
    g = _closed(_load(args.graph))
    reps = jackets(g)
    lines = [f"{'-'.join(map(str, j.cycle_class))} faces={j.face_count} "
             f"chi={j.euler_characteristic} genus={j.genus}" for j in reps]
    _emit(args, "\n".join(lines), [
        {"cycle": list(j.cycle_class), "faces": j.face_count, "chi": j.euler_characteristic,
         "genus": j.genus} for j in reps])
    return 0


def cmd_faces(args) -> int:
    g = _closed(_load(args.graph))
    fc = faces(g)
    lines = [f"{c},{d}: {n}" for (c, d), n in fc.items()] + [f"total: {sum(fc.values())}"]
    _emit(args, "\n".join(lines), {"faces": {f"{c},{d}": n for (c, d), n in fc.items()},
                                   "total": sum(fc.values())})
    return 0


def cmd_aut(args) -> int:
    g = _closed(_load(args.graph))
    grp = aut_group(g)
    gens = [_fmt_cycles(x) for x in grp.generators]
    _emit(args, f"order = {grp.order}\ngenerators: {' '.join(gens) if gens else '-'}",
          {"order": grp.order, "generators": [list(x) for x in grp.generators]})
    return 0


def cmd_connsum(args) -> int:
    g1, g2 = _load(args.first), _load(args.second)
    if isinstance(g1, DisconnectedGraph):
        g1 = g1.union()
    if isinstance(g2, DisconnectedGraph):
        g2 = g2.union()
    try:
        out = connected_sum(g1, EdgeRef(args.color, args.edge1), g2, EdgeRef(args.color, args.edge2))
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit_graph(args, out)
    return 0


def cmd_remove_edge(args) -> int:
    g = _load(args.graph)
    if isinstance(g, OpenFeynmanGraph):
        raise DomainError("remove-edge acts on closed graphs")
    try:
        res = remove_dipole(as_graph(g), EdgeRef(args.color, args.white))
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit_graph(args, res.graph, {"removed_colors": sorted(res.removed_colors)})
    return 0


def cmd_cone(args) -> int:
    g = _load(args.graph)
    if isinstance(g, OpenFeynmanGraph):
        raise DomainError("cone acts on closed graphs")
    _emit_graph(args, cone(g))
    return 0


def cmd_realize(args) -> int:
    g = _load(args.graph)
    if isinstance(g, OpenFeynmanGraph):
        raise DomainError("realize acts on closed boundary graphs")
    try:
        out = realize(g)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit_graph(args, out)
    return 0


def cmd_separatrix(args) -> int:
    try:
        out = pretzel(args.rank) if args.closed else separatrix(args.rank)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit_graph(args, out)
    return 0


def cmd_enumerate(args) -> int:
    if args.vertices % 2:
        raise DomainError("the vertex count must be even")
    req = EnumerationRequest(args.colors, args.vertices // 2, args.connected)
    try:
        graphs = enumerate_graphs(req, jobs=args.jobs)
    except InfeasibleRequest as exc:
        raise DomainError(str(exc)) from None
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(io.dump_graph_list(graphs))
    encs = [canonical_form(g).encoding.decode() for g in graphs]
    if args.count_only:
        _emit(args, str(len(graphs)), {"count": len(graphs)})
    else:
        _emit(args, "\n".join(encs) if encs else "", {"count": len(graphs), "encodings": encs})
    return 0


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two colors like 1,2, got {text!r}") from None
    return i, j


def cmd_pi1(args) -> int:
    g = _closed(_load(args.graph))
    i, j = args.drop_colors
    try:
        pres = gagliardi_presentation(g, i, j)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    if args.simplify:
        pres = tietze_simplify(pres)
    ab = abelianization(pres)
    _emit(args, f"{pres}\nabelianization: {ab}",
          {"presentation": io.presentation_to_doc(pres), "free_rank": ab.free_rank,
           "torsion": list(ab.torsion)})
    return 0


def cmd_abelianize(args) -> int:
    pres = io.loads_presentation(_read(args.presentation))
    ab = abelianization(pres)
    _emit(args, str(ab), {"free_rank": ab.free_rank, "torsion": list(ab.torsion)})
    return 0


def _model(args) -> InteractionModel:
    if args.model != "phi4":
        raise DomainError(f"unknown model {args.model!r}")
    return InteractionModel.phi4(args.rank)


def cmd_wti_y(args) -> int:
    try:
        terms = y_expansion(_model(args), args.color, args.order)
    except (ValueError, InfeasibleRequest) as exc:
        raise DomainError(str(exc)) from None
    _emit(args, "\n".join(t.record() for t in terms), [
        {"coefficient": str(t.coefficient), "boundary": canonical_form(t.boundary).encoding.decode(),
         "r": t.r, "color": t.color, "removed_colors": list(t.removed_colors),
         "residual": canonical_form(t.residual).encoding.decode(),
         "zmap": [str(s) for s in t.zmap]} for t in terms])
    return 0


def cmd_fe_terms(args) -> int:
    try:
        terms = free_energy_terms(_model(args), args.order)
    except (ValueError, InfeasibleRequest) as exc:
        raise DomainError(str(exc)) from None
    _emit(args, "\n".join(f"{t.coefficient}\t{t.order}\t{t.encoding}" for t in terms), [
        {"coefficient": str(t.coefficient), "order": t.order, "boundary": t.encoding} for t in terms])
    return 0


def cmd_sde_terms(args) -> int:
    try:
        inv = sde_two_point_terms(args.rank)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    lines = []
    for t in inv.terms:
        summed = ",".join(t.summed) or "-"
        extra = f"\tkernel {t.kernel} minus G2({t.subtracted})" if t.kernel else ""
        lines.append(f"{t.category}\t{t.color or '-'}\t{t.multiplicity}\t{t.prefactor}\t"
                     f"{t.graph or '-'}\t{t.arguments or '-'}\tsum {summed}{extra}")
    _emit(args, "\n".join(lines), [t.__dict__ for t in inv.terms])
    return 0


def to_dot(g) -> str:
    """Graphviz description: circles for white, filled boxes for black vertices."""
    lines = ["graph G {", "  node [fontsize=10];"]
    n = g.half_order
    for w in range(n):
        lines.append(f'  w{w} [shape=circle, label="w{w}"];')
    for b in range(n):
        lines.append(f'  b{b} [shape=box, style=filled, fillcolor=black, fontcolor=white, label="b{b}"];')
    for c, p in enumerate(g.perms, start=1):
        for w, b in enumerate(p):
            lines.append(f'  w{w} -- b{b} [label="{c}"];')
    if isinstance(g, OpenFeynmanGraph):
        for w, b in enumerate(g.prop0):
            if b is not None:
                lines.append(f'  w{w} -- b{b} [label="0", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_dot(args) -> int:
    g = _load(args.graph)
    if isinstance(g, DisconnectedGraph):
        g = g.union()
    sys.stdout.write(to_dot(g))
    return 0


# parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(
        prog="tensorgraphs", description="Exact combinatorics of colored graphs.",
        epilog="builtin fixtures: " + ", ".join(sorted(FIXTURES)))
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if graph:
            p.add_argument("graph", help="graph file, '-' for stdin, or fixture name")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a graph document")
    p = add("boundary", cmd_boundary, "boundary graph of an open graph")
    p.add_argument("--encoding", action="store_true", help="print the canonical encoding only")
    add("degree", cmd_degree, "Gurau degree and jacket genera")
    add("jackets", cmd_jackets, "per-jacket face counts and genera")
    add("faces", cmd_faces, "face counts per color pair")
    add("aut", cmd_aut, "colored automorphism group")
    p = add("connsum", cmd_connsum, "connected sum along two edges of one color", graph=False)
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--edge1", type=int, required=True, help="white vertex of the edge in FIRST")
    p.add_argument("--edge2", type=int, required=True, help="white vertex of the edge in SECOND")
    p = add("remove-edge", cmd_remove_edge, "dipole removal at an edge")
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--white", type=int, required=True)
    add("cone", cmd_cone, "attach an external leg to every vertex")
    add("realize", cmd_realize, "quartic melonic Feynman graph with the given boundary")
    p = add("separatrix", cmd_separatrix, "separating gadget", graph=False)
    p.add_argument("--rank", type=int, default=3)
    p.add_argument("--closed", action="store_true", help="emit the closed (vacuum) form")
    p = add("enumerate", cmd_enumerate, "isomorphism classes of closed graphs", graph=False)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p = add("pi1", cmd_pi1, "fundamental group of a crystallization")
    p.add_argument("--drop-colors", type=_parse_pair, default=(1, 2))
    p.add_argument("--simplify", action="store_true")
    p = add("abelianize", cmd_abelianize, "abelianization of a presentation document", graph=False)
    p.add_argument("presentation")
    for name, func, text in (("wti-y", cmd_wti_y, "Y-term expansion"),
                             ("fe-terms", cmd_fe_terms, "free-energy expansion")):
        p = add(name, func, text, graph=False)
        p.add_argument("--model", default="phi4")
        p.add_argument("--rank", type=int, default=3)
        p.add_argument("--order", type=int, required=True)
        if name == "wti-y":
            p.add_argument("--color", type=int, required=True)
    p = add("sde-terms", cmd_sde_terms, "two-point equation term inventory", graph=False)
    p.add_argument("--rank", type=int, default=3)
    add("dot", cmd_dot, "graphviz description")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, io.GraphFormatError, InfeasibleRequest) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
