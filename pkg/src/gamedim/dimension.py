"""Dimension machinery for simple games.

The dimension of a game is the least number of weighted games whose
intersection is the game. Upper bound: the count of maximal losing
coalitions. Lower bounds: player-swap (2-trade) certificates and pairwise
LP infeasibility, assembled into an incompatibility graph whose cliques
bound the dimension from below. Exact values: minimum set cover of the
maximal losing family by "colosable" classes, i.e. sets of losers that one
weighted game can send below quota while keeping every winner at or above
it. Colosability is inherited by subsets, so maximal classes are enumerated
by depth-first extension against the exact feasibility oracle and the cover
is then solved by branch and bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Iterable, Optional, Union

from .bitvec import BitVector
from .codes import Code, check_condition
from .game import SimpleGame
from .weighted import (
    FarkasCertificate,
    FeasibilitySystem,
    IntersectionRep,
    WeightedGame,
    solve_separation,
)

# Rational enclosure of pi, 50 decimal digits; wide enough margin for the
# binomial bracketing inequalities up to n = 1000 and far beyond.
PI_LOWER = Fraction(31415926535897932384626433832795028841971693993751, 10**49)
PI_UPPER = Fraction(31415926535897932384626433832795028841971693993752, 10**49)

_SQRT_SCALE = 10**30


@dataclass(frozen=True)
class TwoTradeCertificate:
    """Two losers swap one player each and become two winners.

    Position by position the pair (loser_a, loser_b) and the pair
    (winner_a, winner_b) use the same player multiset, so in any single
    weighted game the combined weight is preserved: both losers under the
    quota and both winners at or above it is impossible.
    """

    loser_a: BitVector
    loser_b: BitVector
    winner_a: BitVector
    winner_b: BitVector

    def __post_init__(self) -> None:
        n = self.loser_a.length
        vectors = (self.loser_a, self.loser_b, self.winner_a, self.winner_b)
        if any(v.length != n for v in vectors):
            raise ValueError("certificate vectors must share one length")
        for i in range(1, n + 1):
            lhs = self.loser_a.has_player(i) + self.loser_b.has_player(i)
            rhs = self.winner_a.has_player(i) + self.winner_b.has_player(i)
            if lhs != rhs:
                raise ValueError(f"player {i} breaks the trade multiset identity")


@dataclass(frozen=True)
class InfeasibilityRecord:
    """A set of losers no single weighted game can co-lose, with the Farkas
    multipliers returned by the exact solver when the LP route produced it."""

    losers: tuple[BitVector, ...]
    certificate: Optional[FarkasCertificate]


Evidence = Union[TwoTradeCertificate, InfeasibilityRecord]


@dataclass(frozen=True)
class SpernerBounds:
    """The central binomial coefficient with certified rational brackets."""

    n: int
    lower: Fraction
    value: int
    upper: Fraction


@dataclass(frozen=True)
class SearchBudget:
    max_losers: int = 20
    max_oracle_calls: int = 100_000


@dataclass(frozen=True)
class DimensionReport:
    n: int
    lower: int
    upper: int
    exact: Optional[int]
    certificates: tuple[Evidence, ...]
    witnesses: Optional[IntersectionRep]
    oracle_calls: int
    budget_exhausted: bool

    def __post_init__(self) -> None:
        if not 1 <= self.lower <= self.upper:
            raise ValueError(f"bounds out of order: [{self.lower}, {self.upper}]")
        if self.exact is not None:
            if not self.lower <= self.exact <= self.upper:
                raise ValueError(f"exact {self.exact} outside [{self.lower}, {self.upper}]")
            if self.witnesses is None or len(self.witnesses.games) != self.exact:
                raise ValueError("exact reports need exactly `exact` witness games")


@dataclass
class IncompatibilityGraph:
    """Vertices are the maximal losing coalitions; an edge joins a pair no
    single weighted game can co-lose, with its evidence."""

    vertices: tuple[BitVector, ...]
    edges: dict[tuple[BitVector, BitVector], Evidence]

    def has_edge(self, a: BitVector, b: BitVector) -> bool:
        return self._key(a, b) in self.edges

    def evidence(self, a: BitVector, b: BitVector) -> Evidence:
        return self.edges[self._key(a, b)]

    def is_complete(self) -> bool:
        m = len(self.vertices)
        return len(self.edges) == m * (m - 1) // 2

    @staticmethod
    def _key(a: BitVector, b: BitVector) -> tuple[BitVector, BitVector]:
        return (a, b) if a < b else (b, a)


def upper_bound(game: SimpleGame) -> int:
    """Count of maximal losing coalitions, with the bound chain
    |L^M| <= min(2^n - |W|, C(n, floor(n/2))) re-checked. Guarded."""
    table = game.winning_table()
    losers = game.maximal_losing()
    n = game.n
    winners = sum(table)
    if len(losers) > (1 << n) - winners:
        raise RuntimeError("internal error: more maximal losers than losing coalitions")
    if len(losers) > comb(n, n // 2):
        raise RuntimeError("internal error: maximal losing family beats the antichain cap")
    return len(losers)


def sperner_bounds(n: int) -> SpernerBounds:
    """C(n, floor(n/2)) bracketed by the asymptotic-style inequalities,
    certified entirely in exact rational arithmetic.

    The bracketing expressions contain pi under a square root, so each
    comparison is squared and reduced to comparing pi against a rational,
    decided with a 50-digit rational enclosure of pi. The returned lower and
    upper fields are rational enclosure endpoints of the two expressions.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    value = comb(n, n // 2)
    if n % 2 == 0:
        base, pref = n, Fraction(1)
    else:
        base, pref = n - 1, Fraction(n, n + 1)
    low_factor = 1 - Fraction(1, 4 * base)
    up_factor = 1 - Fraction(2, 9 * base)
    four_n = Fraction(4) ** n
    square = Fraction(value) ** 2
    # lower expression <= value  <=>  2 pref^2 lowf^2 4^n <= pi * base * value^2
    if 2 * pref**2 * low_factor**2 * four_n > PI_LOWER * base * square:
        raise RuntimeError(f"lower bracketing inequality failed at n={n}")
    # value <= upper expression  <=>  pi * base * value^2 <= 2 pref^2 upf^2 4^n
    if PI_UPPER * base * square > 2 * pref**2 * up_factor**2 * four_n:
        raise RuntimeError(f"upper bracketing inequality failed at n={n}")
    lower = pref * _sqrt_floor(Fraction(2, 1) / (PI_UPPER * base)) * low_factor * 2**n
    upper = pref * _sqrt_ceil(Fraction(2, 1) / (PI_LOWER * base)) * up_factor * 2**n
    if not lower <= value <= upper:
        raise RuntimeError(f"rational enclosure out of order at n={n}")
    return SpernerBounds(n, lower, value, upper)


def _sqrt_floor(f: Fraction) -> Fraction:
    num = f.numerator * f.denominator * _SQRT_SCALE * _SQRT_SCALE
    return Fraction(isqrt(num), f.denominator * _SQRT_SCALE)


def _sqrt_ceil(f: Fraction) -> Fraction:
    num = f.numerator * f.denominator * _SQRT_SCALE * _SQRT_SCALE
    root = isqrt(num)
    if root * root < num:
        root += 1
    return Fraction(root, f.denominator * _SQRT_SCALE)


def find_two_trade(
    game: SimpleGame, loser_a: BitVector, loser_b: BitVector
) -> Optional[TwoTradeCertificate]:
    """First player swap (lexicographic in the swapped pair) that turns the
    two losers into two winners, or None."""
    for name, c in (("first", loser_a), ("second", loser_b)):
        if game.is_winning(c):
            raise ValueError(f"{name} coalition {c} is winning; a 2-trade needs losers")
    only_a = sorted(set(loser_a.players()) - set(loser_b.players()))
    only_b = sorted(set(loser_b.players()) - set(loser_a.players()))
    for p in only_a:
        for r in only_b:
            winner_a = loser_a.without_player(p).with_player(r)
            winner_b = loser_b.without_player(r).with_player(p)
            if game.is_winning(winner_a) and game.is_winning(winner_b):
                return TwoTradeCertificate(loser_a, loser_b, winner_a, winner_b)
    return None


def colosable(
    game: SimpleGame, losers: Iterable[BitVector]
) -> Optional[WeightedGame]:
    """A weighted game in which every winner of `game` wins while all of
    `losers` lose, or None when no such game exists."""
    loser_set = frozenset(losers)
    for c in loser_set:
        if game.is_winning(c):
            raise ValueError(f"coalition {c} is winning; colosable needs losers")
    system = FeasibilitySystem(game.n, lower=game.minimal_winning, upper=loser_set)
    return solve_separation(system).witness


def incompatibility_graph(game: SimpleGame) -> IncompatibilityGraph:
    """Pairwise co-losability of the maximal losing coalitions: 2-trade
    search first, exact LP as the fallback decider. Guarded."""
    losers = sorted(game.maximal_losing())
    graph, _ = _build_graph(game, losers, _CallCounter(None))
    return graph


def exact_dimension(
    game: SimpleGame, budget: SearchBudget | None = None
) -> DimensionReport:
    """Exact dimension by minimum set cover of the maximal losing family
    with colosable classes; bounds plus certificates when the budget runs
    out instead. Guarded."""
    budget = budget or SearchBudget()
    losers = sorted(game.maximal_losing())
    if len(losers) > budget.max_losers:
        clique, certs = _greedy_trade_clique(game, losers)
        return DimensionReport(
            n=game.n,
            lower=max(1, len(clique)),
            upper=len(losers),
            exact=None,
            certificates=tuple(certs),
            witnesses=None,
            oracle_calls=0,
            budget_exhausted=True,
        )
    counter = _CallCounter(budget.max_oracle_calls)
    graph = None
    try:
        graph, pair_results = _build_graph(game, losers, counter)
        cover, class_witness = _search_cover(game, losers, graph, pair_results, counter)
    except _BudgetExceeded:
        if graph is None:
            clique, certs = _greedy_trade_clique(game, losers)
            lower, certificates = max(1, len(clique)), tuple(certs)
        else:
            lower = max(1, len(_max_clique(len(losers), _adjacency(graph, losers))))
            certificates = _sorted_evidence(graph)
        return DimensionReport(
            n=game.n,
            lower=lower,
            upper=len(losers),
            exact=None,
            certificates=certificates,
            witnesses=None,
            oracle_calls=counter.calls,
            budget_exhausted=True,
        )
    clique = _max_clique(len(losers), _adjacency(graph, losers))
    witnesses = IntersectionRep(tuple(class_witness[cls] for cls in cover))
    if witnesses.induced_game() != game:
        raise RuntimeError("internal error: cover witnesses do not induce the game")
    return DimensionReport(
        n=game.n,
        lower=max(1, len(clique)),
        upper=len(cover),
        exact=len(cover),
        certificates=_sorted_evidence(graph),
        witnesses=witnesses,
        oracle_calls=counter.calls,
        budget_exhausted=False,
    )


def dimension_from_code_size(code: Code) -> int:
    """Proven exact dimension of the hitting-set game of a condition-passing
    code: the number of (positive-weight) words."""
    words = frozenset(w for w in code.words if w.weight > 0)
    if not words:
        raise ValueError("empty code: no positive-weight words")
    used = Code(code.length, words)
    ok, pair = check_condition(used)
    if not ok:
        assert pair is not None
        raise ValueError(f"condition violated by pair {pair[0]} {pair[1]}")
    return len(words)


def theorem_lower_bound(n: int) -> int:
    """Guaranteed dimension at n players from the residue-class
    construction: ceil(C(n, floor(n/2)) / n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return -(-comb(n, n // 2) // n)


def power_of_two_dimension(n: int) -> int:
    """Exact dimension achieved at n = 2^m >= 8 via the constant-weight half
    of the extended Hamming code:
    C(n, n/2)/n + 2(n-1) C(n/2 - 1, n/4)/n."""
    m = n.bit_length() - 1
    if n < 8 or (1 << m) != n:
        raise ValueError(f"n must be a power of two with n >= 8, got {n}")
    total = comb(n, n // 2) + 2 * (n - 1) * comb(n // 2 - 1, n // 4)
    if total % n:
        raise RuntimeError("internal error: closed form not divisible by n")
    return total // n


# ---------------------------------------------------------------------------
# search internals
# ---------------------------------------------------------------------------


class _BudgetExceeded(Exception):
    pass


class _CallCounter:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.calls = 0

    def bump(self) -> None:
        self.calls += 1
        if self.limit is not None and self.calls > self.limit:
            raise _BudgetExceeded()


def _build_graph(
    game: SimpleGame, losers: list[BitVector], counter: _CallCounter
) -> tuple[IncompatibilityGraph, dict[frozenset[int], Optional[WeightedGame]]]:
    edges: dict[tuple[BitVector, BitVector], Evidence] = {}
    pair_results: dict[frozenset[int], Optional[WeightedGame]] = {}
    for i, a in enumerate(losers):
        for j in range(i + 1, len(losers)):
            b = losers[j]
            trade = find_two_trade(game, a, b)
            if trade is not None:
                edges[(a, b)] = trade
                pair_results[frozenset((i, j))] = None
                continue
            counter.bump()
            result = solve_separation(
                FeasibilitySystem(game.n, lower=game.minimal_winning, upper=frozenset((a, b)))
            )
            if result.witness is None:
                edges[(a, b)] = InfeasibilityRecord((a, b), result.certificate)
                pair_results[frozenset((i, j))] = None
            else:
                pair_results[frozenset((i, j))] = result.witness
    return IncompatibilityGraph(tuple(losers), edges), pair_results


def _search_cover(
    game: SimpleGame,
    losers: list[BitVector],
    graph: IncompatibilityGraph,
    pair_results: dict[frozenset[int], Optional[WeightedGame]],
    counter: _CallCounter,
) -> tuple[tuple[frozenset[int], ...], dict[frozenset[int], WeightedGame]]:
    count = len(losers)
    incompatible = {pair for pair, wit in pair_results.items() if wit is None}
    memo: dict[frozenset[int], Optional[WeightedGame]] = dict(pair_results)

    def oracle(subset: frozenset[int]) -> Optional[WeightedGame]:
        cached = memo.get(subset)
        if subset in memo:
            return cached
        if len(subset) > 2:
            items = sorted(subset)
            for ai, a in enumerate(items):
                for b in items[ai + 1:]:
                    if frozenset((a, b)) in incompatible:
                        memo[subset] = None
                        return None
        counter.bump()
        result = solve_separation(
            FeasibilitySystem(
                game.n,
                lower=game.minimal_winning,
                upper=frozenset(losers[i] for i in subset),
            )
        )
        memo[subset] = result.witness
        return result.witness

    maximal: list[frozenset[int]] = []

    def extend(current: tuple[int, ...], start: int) -> None:
        grew = False
        for j in range(start, count):
            if oracle(frozenset(current + (j,))) is not None:
                grew = True
                extend(current + (j,), j + 1)
        if grew:
            return
        cur = frozenset(current)
        for e in range(count):
            if e not in cur and oracle(cur | {e}) is not None:
                return
        maximal.append(cur)

    for i in range(count):
        if oracle(frozenset((i,))) is None:
            raise RuntimeError("internal error: a single maximal loser must be colosable")
        extend((i,), i + 1)

    cover = _min_cover(count, maximal)
    witnesses: dict[frozenset[int], WeightedGame] = {}
    for cls in cover:
        wit = memo.get(cls) or oracle(cls)
        assert wit is not None
        witnesses[cls] = wit
    return cover, witnesses


def _min_cover(
    count: int, sets: list[frozenset[int]]
) -> tuple[frozenset[int], ...]:
    """Exact minimum set cover, branching on the smallest uncovered element."""
    order = sorted(sets, key=sorted)
    full = frozenset(range(count))

    chosen: list[frozenset[int]] = []
    uncovered = set(full)
    while uncovered:  # greedy warm start
        pick = max(order, key=lambda s: (len(s & uncovered), [-e for e in sorted(s)]))
        chosen.append(pick)
        uncovered -= pick
    best = tuple(chosen)
    max_size = max(len(s) for s in order)

    def branch(uncov: frozenset[int], picked: tuple[frozenset[int], ...]) -> None:
        nonlocal best
        if not uncov:
            if len(picked) < len(best):
                best = picked
            return
        if len(picked) + -(-len(uncov) // max_size) >= len(best):
            return
        element = min(uncov)
        for s in order:
            if element in s:
                branch(uncov - s, picked + (s,))

    branch(full, ())
    return best


def _adjacency(graph: IncompatibilityGraph, losers: list[BitVector]) -> list[set[int]]:
    index = {c: i for i, c in enumerate(losers)}
    adj: list[set[int]] = [set() for _ in losers]
    for (a, b) in graph.edges:
        adj[index[a]].add(index[b])
        adj[index[b]].add(index[a])
    return adj


def _max_clique(count: int, adj: list[set[int]]) -> list[int]:
    best: list[int] = []

    def grow(current: list[int], candidates: list[int]) -> None:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        for idx, v in enumerate(candidates):
            if len(current) + len(candidates) - idx <= len(best):
                return
            grow(current + [v], [u for u in candidates[idx + 1:] if u in adj[v]])

    grow([], list(range(count)))
    return best


def _greedy_trade_clique(
    game: SimpleGame, losers: list[BitVector]
) -> tuple[list[BitVector], list[TwoTradeCertificate]]:
    """Pairwise-incompatible set grown greedily with 2-trade evidence only;
    used when the maximal losing family exceeds the search budget."""
    clique: list[BitVector] = []
    certs: list[TwoTradeCertificate] = []
    for candidate in losers:
        found: list[TwoTradeCertificate] = []
        for member in clique:
            trade = find_two_trade(game, member, candidate)
            if trade is None:
                break
            found.append(trade)
        else:
            clique.append(candidate)
            certs.extend(found)
    return clique, certs


def _sorted_evidence(graph: IncompatibilityGraph) -> tuple[Evidence, ...]:
    return tuple(graph.edges[key] for key in sorted(graph.edges))


def render_report(report: DimensionReport) -> str:
    """Plain-text report: LOWER/UPPER/EXACT, certificates, witnesses in the
    weighted-representation format."""
    lines = [
        f"LOWER {report.lower}",
        f"UPPER {report.upper}",
        f"EXACT {report.exact if report.exact is not None else 'unknown'}",
        f"ORACLE-CALLS {report.oracle_calls}",
    ]
    if report.budget_exhausted:
        lines.append("BUDGET exhausted")
    lines.append(f"CERTIFICATES {len(report.certificates)}")
    for ev in report.certificates:
        if isinstance(ev, TwoTradeCertificate):
            lines.append(
                f"2-trade L1={ev.loser_a} L2={ev.loser_b} "
                f"A={ev.winner_a} B={ev.winner_b}"
            )
        else:
            members = " ".join(str(c) for c in ev.losers)
            lines.append(f"lp-infeasible {members}")
    if report.witnesses is None:
        lines.append("WITNESSES none")
    else:
        lines.append(f"WITNESSES {len(report.witnesses.games)}")
        lines.append(f"n={report.n}")
        lines.extend(g.render() for g in report.witnesses.games)
    return "\n".join(lines) + "\n"
