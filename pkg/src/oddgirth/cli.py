"""Command-line interface.

Graphs travel as edge-list text on stdin/stdout (or files).  Exit status: 0
when the property holds, 1 when it fails or a witness turns up where absence
was expected, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .campaigns import verify_lemmas, verify_sharpness, verify_theorem
from .enumeration import EnumerationConstraints, enumerate_graphs
from .errors import HypothesisViolated, InternalContradiction, OddGirthError, SearchBudgetExceeded
from .forbidden import DEFAULT_BUDGET, find_induced_phi, find_phi_prime, find_tetrahedron
from .generators import (
    gen_blowup,
    gen_complete,
    gen_cycle,
    gen_f_family,
    gen_grotzsch,
    gen_mobius_ladder,
)
from .graph import Graph, parse_edge_list, to_edge_list
from .homcore import (
    constructive_c_hom,
    find_hom,
    independent_set_from_hom,
    is_blowup_of,
    parse_certificate,
)
from .parity import INF, odd_girth, shortest_odd_cycle
from .saturation import SaturationOrder, saturate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def named_graph(spec: str) -> Graph:
    """Resolve ``cycle5``, ``complete3``, ``mobius8``, ``f4,2``, ``grotzsch`` or an edge-list path."""
    try:
        if spec == "grotzsch":
            return gen_grotzsch()
        for prefix, make in (("cycle", gen_cycle), ("complete", gen_complete), ("mobius", gen_mobius_ladder)):
            if spec.startswith(prefix) and spec[len(prefix):].isdigit():
                return make(int(spec[len(prefix):]))
        if spec.startswith("f") and "," in spec:
            ell, k = spec[1:].split(",")
            return gen_f_family(int(ell), int(k))
    except (ValueError, OddGirthError) as exc:
        raise UsageError(f"bad graph spec {spec!r}: {exc}") from exc
    path = Path(spec)
    if path.is_file():
        return parse_edge_list(path.read_text(encoding="utf-8"))
    raise UsageError(f"unknown graph spec {spec!r}")


def read_graph(source: str) -> Graph:
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    return parse_edge_list(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    kind, params = args.kind, args.params
    try:
        if kind == "cycle":
            g = gen_cycle(*params)
        elif kind == "complete":
            g = gen_complete(*params)
        elif kind == "mobius":
            g = gen_mobius_ladder(*params)
        elif kind == "f":
            g = gen_f_family(*params)
        elif kind == "grotzsch":
            g = gen_grotzsch(*params)
        else:
            if args.base is None or args.sizes is None:
                raise UsageError("gen blowup needs --base and --sizes")
            g, class_map = gen_blowup(named_graph(args.base), args.sizes)
            if args.classes_out:
                Path(args.classes_out).write_text(" ".join(map(str, class_map)) + "\n", encoding="utf-8")
    except TypeError:
        raise UsageError(f"wrong number of parameters for gen {kind}") from None
    sys.stdout.write(to_edge_list(g))
    return EXIT_OK


def cmd_girth(args) -> int:
    g = read_graph(args.input)
    og = odd_girth(g)
    print(f"odd_girth {'inf' if og == INF else int(og)}")
    if args.witness:
        w = shortest_odd_cycle(g)
        print("cycle " + ("none" if w is None else " ".join(map(str, w.vertices))))
    return EXIT_OK


def cmd_saturate(args) -> int:
    g = read_graph(args.input)
    order = SaturationOrder.lexicographic() if args.seed is None else SaturationOrder.seeded(args.seed)
    sys.stdout.write(to_edge_list(saturate(g, args.k, order)))
    return EXIT_OK


def cmd_detect(args) -> int:
    g = read_graph(args.input)
    budget = None if args.budget <= 0 else args.budget
    try:
        if args.what == "phi":
            found = find_induced_phi(g)
        elif args.what == "phi-prime":
            found = find_phi_prime(g, args.k, budget)
        else:
            found = find_tetrahedron(g, args.k, budget)
    except SearchBudgetExceeded as exc:
        print(f"inconclusive {exc}")
        return EXIT_FAIL
    if found is None:
        print("none")
        return EXIT_OK
    print(json.dumps(found.to_record()))
    return EXIT_FAIL


def _target(args) -> tuple[Graph, str]:
    if args.target == "cycle":
        return gen_cycle(2 * args.k + 1), f"C{2 * args.k + 1}"
    if args.target == "mobius":
        return gen_mobius_ladder(4 * args.k), f"M{4 * args.k}"
    if args.target == "complete":
        return gen_complete(args.colours), f"K{args.colours}"
    if args.target_file is None:
        raise UsageError("--target file needs --target-file")
    return named_graph(args.target_file), args.target_file


def cmd_hom(args) -> int:
    g = read_graph(args.input)
    h, label = _target(args)
    try:
        cert = find_hom(g, h, args.budget, label)
    except SearchBudgetExceeded as exc:
        print(f"inconclusive {exc}")
        return EXIT_FAIL
    if cert is None:
        print("none")
        return EXIT_FAIL
    sys.stdout.write(cert.to_text())
    return EXIT_OK


def cmd_check(args) -> int:
    g = read_graph(args.input)
    order = SaturationOrder.lexicographic() if args.seed is None else SaturationOrder.seeded(args.seed)
    try:
        result = constructive_c_hom(g, args.k, order)
    except HypothesisViolated as exc:
        print(f"hypothesis_violated {exc.failed}: {exc}", file=sys.stderr)
        print(f"hypothesis_violated {exc.failed}")
        return EXIT_FAIL
    except InternalContradiction as exc:
        print(f"internal_contradiction: {exc}", file=sys.stderr)
        print("internal_contradiction")
        return EXIT_FAIL
    sys.stdout.write(result.certificate.to_text())
    if args.decomposition_out:
        text = result.decomposition.to_text() if result.decomposition else ""
        Path(args.decomposition_out).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_indep(args) -> int:
    g = read_graph(args.input)
    cycle = gen_cycle(2 * args.k + 1)
    try:
        if args.certificate:
            cert = parse_certificate(Path(args.certificate).read_text(encoding="utf-8"), cycle)
        else:
            cert = constructive_c_hom(g, args.k).certificate
        chosen = independent_set_from_hom(g, cert, args.k)
    except (HypothesisViolated, InternalContradiction) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"independent_set {len(chosen)}")
    print(" ".join(map(str, chosen)))
    return EXIT_OK


def cmd_search(args) -> int:
    k = args.k
    num = 3 * args.n if args.num is None else args.num
    den = 4 * k if args.den is None else args.den
    constraints = EnumerationConstraints(args.n, args.min_odd_girth or 2 * k + 1, num, den)
    cycle, ladder = gen_cycle(2 * k + 1), gen_mobius_ladder(4 * k)
    total = hom = 0
    for g in enumerate_graphs(constraints, bound=args.bound):
        total += 1
        if find_hom(g, cycle) is not None:
            hom += 1
            continue
        blowup = is_blowup_of(g, ladder) is not None if g.n >= 4 * k else False
        print(f"# not homomorphic to C{2 * k + 1}; blow-up of M{4 * k}: {'yes' if blowup else 'no'}")
        sys.stdout.write(to_edge_list(g))
    print(f"graphs {total} homomorphic {hom} non_homomorphic {total - hom}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.campaign == "theorem":
        report = verify_theorem(args.k, args.n_max, args.mode, args.seed, args.count)
    elif args.campaign == "sharpness":
        report = verify_sharpness(args.k, args.t)
    else:
        report = verify_lemmas(args.k, args.seed, args.count)
    if args.json:
        sys.stdout.write(report.to_jsonl())
    else:
        print(report.summary())
    return report.exit_status


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddgirth",
        description="Odd girth, edge-maximal saturation and homomorphisms into odd cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="edge-list file, or - for stdin (default)")

    p = sub.add_parser("gen", help="generate a named graph")
    p.add_argument("kind", choices=["cycle", "complete", "mobius", "f", "grotzsch", "blowup"])
    p.add_argument("params", nargs="*", type=int, help="cycle R | complete R | mobius R | f ELL K")
    p.add_argument("--base", help="blow-up base: cycle5, complete2, mobius8, f4,2, grotzsch or a file")
    p.add_argument("--sizes", type=_int_list, help="comma-separated class sizes for blowup")
    p.add_argument("--classes-out", help="write the blow-up class map to this file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("girth", help="print the odd girth")
    add_input(p)
    p.add_argument("--witness", action="store_true", help="also print a shortest odd cycle")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("saturate", help="edge-maximal supergraph keeping odd girth >= 2k+1")
    add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, help="seeded random pair order (default: lexicographic)")
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("detect", help="search for a forbidden configuration")
    p.add_argument("what", choices=["phi", "phi-prime", "tetra"])
    add_input(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget; <= 0 for unbounded")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("hom", help="brute-force homomorphism search")
    add_input(p)
    p.add_argument("--target", choices=["cycle", "mobius", "complete", "file"], required=True)
    p.add_argument("--k", type=int, default=2, help="cycle target C_{2k+1}, mobius target M_{4k}")
    p.add_argument("--colours", type=int, default=3, help="complete target K_c")
    p.add_argument("--target-file", help="target graph spec or edge-list file for --target file")
    p.add_argument("--budget", type=int, help="search node budget (default unbounded)")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("check", help="constructive homomorphism into C_{2k+1}")
    add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, help="seeded saturation order (default: lexicographic)")
    p.add_argument("--decomposition-out", help="write the blow-up classes to this file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("indep", help="independent set of size >= kn/(2k+1)")
    add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--certificate", help="certificate file; computed constructively when omitted")
    p.set_defaults(func=cmd_indep)

    p = sub.add_parser("search", help="enumerate small graphs and report those not homomorphic to C_{2k+1}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--num", type=int, help="degree threshold numerator (default 3n)")
    p.add_argument("--den", type=int, help="degree threshold denominator (default 4k)")
    p.add_argument("--min-odd-girth", type=int, help="default 2k+1")
    p.add_argument("--bound", type=int, default=10, help="largest n accepted")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("campaign", choices=["theorem", "sharpness", "lemmas"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=0)
    p.add_argument("--t", type=int, default=1, help="class size for sharpness")
    p.add_argument("--json", action="store_true", help="line-delimited JSON records")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"oddgirth: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OddGirthError, OSError, ValueError) as exc:
        print(f"oddgirth: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
