"""Command-line front end.

Thin adapter over the library: every subcommand parses inputs, calls one
or two module functions, and prints stable line-oriented text.  Identical
invocations produce byte-identical output.  Exit codes: 0 success, 1 for
a flagged negative analysis result (check-k --expect mismatch), 2 for
input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .geometry import (
    SearchScope,
    bigon_report_line,
    enumerate_bigons,
    enumerate_triangles,
    find_ladders,
    ladder_bound_A,
    ladder_report_line,
    triangle_report_line,
)
from .graphs import (
    Graph,
    SaturationError,
    graph_to_dot,
    min_geodetic_k,
    parse_graph,
)
from .groups import (
    BallBudgetError,
    CayleyBall,
    cayley_ball,
    parse_group_file,
    word_to_element,
)
from .lang import (
    build_factor_automaton,
    centraliser_in_ball,
    forbidden_set_lines,
    minimal_forbidden_factors,
    parse_forbidden_file,
    power_language,
    power_report_lines,
)
from .words import (
    commuting_common_root,
    format_word,
    parse_word,
    primitive_root,
    solve_zx_eq_yz,
)


def _bool_flag(text: str) -> bool:
    low = text.lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_ball(args) -> CayleyBall:
    gf = parse_group_file(_read(args.group))
    radius = args.radius if args.radius is not None else gf.default_radius
    if radius is None:
        raise ValueError("no radius: pass --radius or a 'ball R=<r>' line in the group file")
    return cayley_ball(gf.spec, gf.genset, radius)


def _load_host(args):
    """Graph file or group ball; analyses on balls stay on trusted pairs."""
    if getattr(args, "graph", None):
        if getattr(args, "group", None):
            raise ValueError("pass --graph or --group, not both")
        return parse_graph(_read(args.graph))
    if getattr(args, "group", None):
        return _load_ball(args)
    raise ValueError("pass --graph FILE or --group FILE")


def _host_parts(host) -> tuple[Graph, Optional[object]]:
    if isinstance(host, CayleyBall):
        return host.graph, host.is_trusted_pair
    return host, None


def _scope(args) -> SearchScope:
    scope = SearchScope()
    if getattr(args, "scope_pairs", None) is not None:
        scope.max_pairs = args.scope_pairs
    if getattr(args, "scope_geodesics", None) is not None:
        scope.max_geodesics = args.scope_geodesics
    return scope


def cmd_ball(args) -> int:
    ball = _load_ball(args)
    g = ball.graph
    print(
        f"ball: radius={ball.radius} vertices={g.vertex_count} "
        f"edges={g.edge_count} complete={'true' if ball.complete else 'false'}"
    )
    if args.verbose:
        for d in range(ball.radius + 1):
            n = sum(1 for x in ball.norms if x == d)
            if n:
                print(f"norm {d}: {n} elements")
        frac = ball.reached_fraction()
        if frac is not None:
            print(f"reached {len(ball.elements)} of {ball.spec.order()} group elements")
    if args.dot:
        _write(args.dot, graph_to_dot(g))
    return 0


def cmd_check_k(args) -> int:
    host = _load_host(args)
    g, pair_filter = _host_parts(host)
    min_k, witness = min_geodetic_k(g, pair_filter=pair_filter)
    ok = min_k <= args.k
    print(f"k-geodetic: {'true' if ok else 'false'} (min k = {min_k})")
    if args.verbose and witness is not None:
        u, v = witness
        print(f"witness: {min_k} geodesics between vertices {u} and {v}")
    if args.expect is not None and args.expect != ok:
        return 1
    return 0


def cmd_min_k(args) -> int:
    host = _load_host(args)
    g, pair_filter = _host_parts(host)
    min_k, witness = min_geodetic_k(g, pair_filter=pair_filter)
    print(f"min k = {min_k}")
    if args.verbose and witness is not None:
        u, v = witness
        print(f"witness: {min_k} geodesics between vertices {u} and {v}")
    return 0


def cmd_ladders(args) -> int:
    host = _load_host(args)
    g, pair_filter = _host_parts(host)
    if args.k is not None:
        k = args.k
    else:
        k, _ = min_geodetic_k(g, pair_filter=pair_filter)
    scan = find_ladders(host, args.m, k, _scope(args))
    print(f"ladders: m={args.m} k={k} bound={ladder_bound_A(args.m, k)} found={len(scan.reports)}")
    for report in scan.reports:
        print(ladder_report_line(report))
    print(
        f"scanned: pairs={scan.pairs_scanned} geodesic_pairs={scan.geodesic_pairs_scanned} "
        f"skipped={scan.skipped_untrusted} exhausted={'true' if scan.scope_exhausted else 'false'}"
    )
    return 0


def cmd_bigons(args) -> int:
    host = _load_host(args)
    bigons, best = enumerate_bigons(host, _scope(args))
    nondeg = sum(1 for b in bigons if not b.degenerate)
    print(
        f"bigons: found={len(bigons)} non_degenerate={nondeg} "
        f"max_non_degenerate_side={'none' if best is None else best}"
    )
    for b in bigons:
        print(bigon_report_line(b))
    return 0


def cmd_triangles(args) -> int:
    host = _load_host(args)
    triangles = enumerate_triangles(host, _scope(args))
    nondeg = sum(1 for t in triangles if not t.degenerate)
    print(f"triangles: found={len(triangles)} non_degenerate={nondeg}")
    for t in triangles:
        print(triangle_report_line(t))
    return 0


def cmd_forbidden(args) -> int:
    ball = _load_ball(args)
    forbidden = minimal_forbidden_factors(ball, args.e)
    for line in forbidden_set_lines(forbidden):
        print(line)
    return 0


def cmd_automaton(args) -> int:
    if args.file:
        forbidden = parse_forbidden_file(_read(args.file))
        letters = sorted({letter for w in forbidden.words for letter in w})
        if not letters:
            raise ValueError("forbidden file carries no letters to build an alphabet from")
    else:
        ball = _load_ball(args)
        if args.e is None:
            raise ValueError("pass --e for the forbidden-factor length bound")
        forbidden = minimal_forbidden_factors(ball, args.e)
        letters = sorted(ball.genset.labels)
    automaton = build_factor_automaton(forbidden, letters)
    for line in automaton.table_lines():
        print(line)
    if args.dot:
        _write(args.dot, automaton.to_dot())
    return 0


def cmd_powers(args) -> int:
    ball = _load_ball(args)
    w = parse_word(args.word, ball.genset.alphabet())
    report = power_language(ball, w, args.nmax)
    for line in power_report_lines(report):
        print(line)
    return 0


def cmd_centraliser(args) -> int:
    ball = _load_ball(args)
    w = parse_word(args.word, ball.genset.alphabet())
    g = word_to_element(ball.spec, ball.genset, w)
    members = centraliser_in_ball(ball, g)
    print(f"centraliser of {ball.spec.format_element(g)} in ball: size={len(members)}")
    for h in members:
        print(ball.spec.format_element(h))
    return 0


def cmd_word_tool(args) -> int:
    if args.action == "primitive-root":
        if len(args.words) != 1:
            raise ValueError("primitive-root takes one word")
        root, power = primitive_root(parse_word(args.words[0]))
        print(f"{format_word(root)} ^ {power}")
        return 0
    if args.action == "solve-zx-yz":
        if len(args.words) != 3:
            raise ValueError("solve-zx-yz takes three words: x y z")
        x, y, z = (parse_word(t) for t in args.words)
        sol = solve_zx_eq_yz(x, y, z)
        print(f"s = {format_word(sol.s)}")
        print(f"t = {format_word(sol.t)}")
        print(f"q = {sol.q}")
        return 0
    if args.action == "common-root":
        if len(args.words) != 2:
            raise ValueError("common-root takes two words")
        root = commuting_common_root(parse_word(args.words[0]), parse_word(args.words[1]))
        print(format_word(root))
        return 0
    raise ValueError(f"unknown word-tool action {args.action!r}")


def cmd_export_dot(args) -> int:
    host = _load_host(args)
    g, _ = _host_parts(host)
    text = graph_to_dot(g)
    if args.dot:
        _write(args.dot, text)
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodetic",
        description="Geodesic counting, Cayley balls, ladder bounds, and geodesic languages.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, **flags):
        p = sub.add_parser(name, help=help_text)
        if flags.get("graph"):
            p.add_argument("--graph", metavar="FILE", help="graph file")
        if flags.get("group"):
            p.add_argument("--group", metavar="FILE", help="group file")
        if flags.get("radius"):
            p.add_argument("--radius", type=int, help="ball radius (overrides the file default)")
        if flags.get("scope"):
            p.add_argument("--scope-pairs", type=int, help="max vertex pairs scanned")
            p.add_argument("--scope-geodesics", type=int, help="max geodesics per pair")
        p.add_argument("--verbose", action="store_true", help="add human-oriented detail")
        p.set_defaults(func=func)
        return p

    p = add("ball", cmd_ball, "build a Cayley ball and summarize it", group=True, radius=True)
    p.add_argument("--dot", metavar="FILE", help="also write the ball graph as DOT")

    p = add("check-k", cmd_check_k, "test k-geodeticity", graph=True, group=True, radius=True)
    p.add_argument("--k", type=int, required=True, help="geodeticity constant to test")
    p.add_argument("--expect", type=_bool_flag, help="exit 1 unless the verdict matches")

    add("min-k", cmd_min_k, "smallest k with at most k geodesics per pair",
        graph=True, group=True, radius=True)

    p = add("ladders", cmd_ladders, "search for ladder-like geodesic pairs",
            graph=True, group=True, radius=True, scope=True)
    p.add_argument("--m", type=int, default=1, help="width (synchronized distance)")
    p.add_argument("--k", type=int, help="verified geodeticity constant (computed when absent)")

    add("bigons", cmd_bigons, "enumerate geodesic bigons",
        graph=True, group=True, radius=True, scope=True)

    add("triangles", cmd_triangles, "enumerate geodesic triangles",
        graph=True, group=True, radius=True, scope=True)

    p = add("forbidden", cmd_forbidden, "minimal non-geodesic factors of the ball language",
            group=True, radius=True)
    p.add_argument("--e", type=int, required=True, help="max factor length")

    p = add("automaton", cmd_automaton, "factor-excluding automaton as a transition table",
            group=True, radius=True)
    p.add_argument("file", nargs="?", help="forbidden-set file (instead of --group)")
    p.add_argument("--e", type=int, help="max factor length when deriving from a group")
    p.add_argument("--dot", metavar="FILE", help="also write the automaton as DOT")

    p = add("powers", cmd_powers, "geodesic languages of powers of a base word",
            group=True, radius=True)
    p.add_argument("word", help="base word in generator labels")
    p.add_argument("--nmax", type=int, default=6, help="largest power analyzed")

    p = add("centraliser", cmd_centraliser, "ball elements commuting with a given one",
            group=True, radius=True)
    p.add_argument("word", help="word in generator labels naming the element")

    p = add("word-tool", cmd_word_tool, "standalone word utilities")
    p.add_argument("action", choices=["primitive-root", "solve-zx-yz", "common-root"])
    p.add_argument("words", nargs="+", help="word arguments (apostrophe marks an inverse)")

    p = add("export-dot", cmd_export_dot, "write a graph or ball as DOT",
            graph=True, group=True, radius=True)
    p.add_argument("--dot", metavar="FILE", help="output file (stdout when absent)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, BallBudgetError, SaturationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
