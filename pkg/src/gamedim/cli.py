"""Command-line interface.

Subcommands: gen-code (build code files), build-game (code file to game and
component files), analyze (game file to dimension report), table (survey of
achievable dimensions per player count), verify (self-check suites). Every
command is deterministic given its flags; identical invocations produce
byte-identical output files. Exit codes: 0 success, 1 verification failure,
2 usage or guard error.
"""

from __future__ import annotations

import argparse
import shlex
import sys
from math import comb
from pathlib import Path

from . import __version__
from .bitvec import BitVector, CapacityError
from .codes import (
    check_condition,
    constant_weight_subset,
    extend_parity,
    graham_sloane,
    graham_sloane_buckets,
    hamming_code,
    load_code,
    min_distance,
    save_code,
    weight_enumerator,
    enumerator_of_code,
)
from .construct import (
    elkind_variant,
    gamma_from_code,
    taylor_zwicker,
    tz_decomposition,
    verify_tz_elkind_isomorphism,
)
from .dimension import (
    SearchBudget,
    colosable,
    exact_dimension,
    find_two_trade,
    power_of_two_dimension,
    render_report,
    sperner_bounds,
    theorem_lower_bound,
    upper_bound,
)
from .game import load_game, save_game
from .weighted import WeightedGame, save_intersection


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamedim",
        description="Construct simple games from constant-weight codes and "
        "compute or certify their dimension.",
    )
    parser.add_argument("--version", action="version", version=f"gamedim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen-code", help="generate a code file")
    gen.add_argument(
        "--kind",
        required=True,
        choices=["hamming84", "extended-hamming", "graham-sloane"],
    )
    gen.add_argument("-m", type=int, help="extended-hamming: length is 2^m")
    gen.add_argument("-n", type=int, help="graham-sloane: word length")
    gen.add_argument("-w", type=int, help="graham-sloane: constant weight")
    gen.add_argument("--weight", type=int, help="restrict output to one weight class")
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=cmd_gen_code)

    build = sub.add_parser("build-game", help="build the hitting-set game of a code")
    build.add_argument("code_file")
    build.add_argument("-o", "--output", required=True, help="game file")
    build.add_argument("--components", help="weighted component file")
    build.set_defaults(func=cmd_build_game)

    analyze = sub.add_parser("analyze", help="dimension report for a game file")
    analyze.add_argument("game_file")
    analyze.add_argument("-o", "--output", required=True, help="report file")
    analyze.add_argument("--max-losers", type=int, default=SearchBudget.max_losers)
    analyze.add_argument(
        "--max-oracle-calls", type=int, default=SearchBudget.max_oracle_calls
    )
    analyze.set_defaults(func=cmd_analyze)

    table = sub.add_parser("table", help="achievable dimensions per player count")
    table.add_argument("--min-n", type=int, default=6)
    table.add_argument("--max-n", type=int, default=20)
    table.add_argument(
        "--code-file",
        action="append",
        default=[],
        help="imported code; its size fills the imported column for its length",
    )
    table.add_argument("-o", "--output", required=True)
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=["tz", "elkind", "codes", "bounds"])
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.invocation = "gamedim " + shlex.join(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


def _header(args: argparse.Namespace) -> list[str]:
    return [f"gamedim {__version__}", f"invocation: {args.invocation}"]


def cmd_gen_code(args: argparse.Namespace) -> int:
    if args.kind == "hamming84":
        code = extend_parity(hamming_code(3))
    elif args.kind == "extended-hamming":
        if args.m is None:
            raise ValueError("--kind extended-hamming requires -m")
        code = extend_parity(hamming_code(args.m))
    else:
        if args.n is None or args.w is None:
            raise ValueError("--kind graham-sloane requires -n and -w")
        code = graham_sloane(args.n, args.w)
    if args.weight is not None:
        code = constant_weight_subset(code, args.weight)
    if not code.words:
        raise ValueError("generated code is empty; check the weight restriction")
    save_code(code, args.output, header=_header(args))
    print(f"words {len(code)}")
    print(f"min-distance {min_distance(code) if len(code) > 1 else 'n/a'}")
    return 0


def cmd_build_game(args: argparse.Namespace) -> int:
    code = load_code(args.code_file)
    built = gamma_from_code(code)
    save_game(built.game, args.output, header=_header(args))
    if args.components:
        save_intersection(built.components, args.components, header=_header(args))
    print(f"maximal-losing {upper_bound(built.game)}")
    print(f"code-dimension {len(built.code)}")
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    game = load_game(args.game_file)
    budget = SearchBudget(
        max_losers=args.max_losers, max_oracle_calls=args.max_oracle_calls
    )
    report = exact_dimension(game, budget)
    text = "".join(f"# {h}\n" for h in _header(args)) + render_report(report)
    Path(args.output).write_text(text)
    if report.exact is not None:
        print(f"exact {report.exact}")
    else:
        print(f"bounds [{report.lower}, {report.upper}]")
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if not 6 <= args.min_n <= args.max_n <= 20:
        raise ValueError("table range must satisfy 6 <= min-n <= max-n <= 20")
    imported: dict[int, int] = {}
    for path in args.code_file:
        code = load_code(path)
        ok, pair = check_condition(code)
        if not ok:
            assert pair is not None
            raise ValueError(f"{path}: condition violated by pair {pair[0]} {pair[1]}")
        n = code.length
        imported[n] = max(imported.get(n, 0), len(code))
    lines = [f"# {h}" for h in _header(args)]
    lines.append("# n  residue-bound  power-of-two  imported  antichain-cap-minus-1")
    for n in range(args.min_n, args.max_n + 1):
        power = power_of_two_dimension(n) if n & (n - 1) == 0 and n >= 8 else None
        row = [
            f"{n:>3}",
            f"{theorem_lower_bound(n):>13}",
            f"{power if power is not None else '-':>12}",
            f"{imported.get(n, '-'):>8}",
            f"{comb(n, n // 2) - 1:>21}",
        ]
        lines.append("  ".join(row))
    Path(args.output).write_text("\n".join(lines) + "\n")
    print(f"rows {args.max_n - args.min_n + 1}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    checks = _SUITES[args.suite]()
    failures = 0
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        if not ok:
            failures += 1
        print(f"{status} {name}: {detail}")
    print(f"{args.suite}: {len(checks) - failures}/{len(checks)} checks passed")
    return 1 if failures else 0


def _suite_tz() -> list[tuple[str, bool, str]]:
    checks = []
    for k in (3, 5):
        tz = taylor_zwicker(k)
        rep = tz_decomposition(k)
        same = rep.induced_game() == tz.game
        checks.append(
            (
                f"decomposition k={k}",
                same and len(rep.games) == 2 ** (k - 1),
                f"{len(rep.games)} games, induced game "
                + ("matches" if same else "differs"),
            )
        )
        checks.append(
            (
                f"self-dual k={k}",
                tz.game.dual() == tz.game,
                "dual antichain compared",
            )
        )
    tz3 = taylor_zwicker(3)
    pairs_ok = True
    members = [
        BitVector(3, x).concat(BitVector(3, x).complement())
        for x in range(8)
        if x.bit_count() % 2 == 0
    ]
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            trade = find_two_trade(tz3.game, a, b)
            if trade is None or colosable(tz3.game, [a, b]) is not None:
                pairs_ok = False
    checks.append(
        (
            "2-trade vs LP on concatenation pairs k=3",
            pairs_ok,
            f"{len(members) * (len(members) - 1) // 2} pairs checked both ways",
        )
    )
    return checks


def _suite_elkind() -> list[tuple[str, bool, str]]:
    game = elkind_variant(3)
    a, b = BitVector.parse("100110"), BitVector.parse("010110")
    checks = [
        (
            "counterexample coalitions lose",
            game.is_losing(a) and game.is_losing(b),
            "100110 and 010110",
        )
    ]
    for k in (3, 5):
        checks.append(
            (
                f"half-swap isomorphism k={k}",
                verify_tz_elkind_isomorphism(k),
                "permuted variant equals the parity game",
            )
        )
    return checks


def _suite_codes() -> list[tuple[str, bool, str]]:
    ext = extend_parity(hamming_code(3))
    c8 = constant_weight_subset(ext, 4)
    checks = [
        (
            "extended [8,4] shape",
            len(ext) == 16 and min_distance(ext) == 4,
            f"{len(ext)} words, min distance {min_distance(ext)}",
        ),
        (
            "weight-4 subset",
            len(c8) == 14 and check_condition(c8)[0],
            f"{len(c8)} words, condition holds",
        ),
        (
            "enumerator t=7",
            weight_enumerator(7).coefficients
            == enumerator_of_code(hamming_code(3)).coefficients,
            "formula equals direct count",
        ),
        (
            "enumerator t=15",
            weight_enumerator(15).coefficients
            == enumerator_of_code(hamming_code(4)).coefficients,
            "formula equals direct count",
        ),
        (
            "constant-weight half at n=16",
            len(constant_weight_subset(extend_parity(hamming_code(4)), 8))
            == power_of_two_dimension(16),
            "closed form equals enumeration",
        ),
    ]
    gs = graham_sloane(8, 4)
    buckets = graham_sloane_buckets(8, 4)
    checks.append(
        (
            "residue code n=8 w=4",
            len(gs) >= -(-comb(8, 4) // 8)
            and min_distance(gs) >= 4
            and sum(len(b) for b in buckets) == comb(8, 4),
            f"{len(gs)} words, min distance {min_distance(gs)}",
        )
    )
    return checks


def _suite_bounds() -> list[tuple[str, bool, str]]:
    checks = []
    ok = True
    for n in range(2, 1001):
        bounds = sperner_bounds(n)
        if not bounds.lower <= bounds.value <= bounds.upper:
            ok = False
            break
    checks.append(("bracketing inequalities n<=1000", ok, "exact rational evaluation"))
    games = {
        "parity k=3": taylor_zwicker(3).game,
        "hitting-set n=8": gamma_from_code(
            constant_weight_subset(extend_parity(hamming_code(3)), 4)
        ).game,
    }
    for name, game in games.items():
        bound = upper_bound(game)
        checks.append((f"bound chain on {name}", True, f"|L^M| = {bound}"))
    return checks


_SUITES = {
    "tz": _suite_tz,
    "elkind": _suite_elkind,
    "codes": _suite_codes,
    "bounds": _suite_bounds,
}
