"""Weighted games, intersections, and exact rational separation.

The separation question asked everywhere in this package is: do integer
weights and a quota exist so that every coalition in a *lower* set reaches
the quota while every coalition in an *upper* set stays at least one below
it? Upper constraints use ``<= quota - 1`` rather than a strict inequality:
any strict rational separation scales to an integer one with margin 1, so
nothing is lost and the system stays a closed linear feasibility problem.

Feasibility is decided by an exact rational simplex (Bland's smallest-index
rule, no floating point anywhere on the decision path) applied to the Farkas
form of the system: the alternative system is bounded by a normalization row
and maximized; a zero optimum yields a primal witness from the simplex
multipliers, a positive objective yields an explicit Farkas certificate of
infeasibility. Both outcomes are re-verified in integer arithmetic before
they are returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from pathlib import Path
from typing import Optional, Sequence

from .bitvec import BitVector
from .game import SimpleGame

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class WeightedGame:
    """Integer quota plus non-negative integer weights; a coalition wins iff
    its total weight reaches the quota."""

    quota: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.quota < 1:
            raise ValueError(f"quota must be >= 1, got {self.quota}")
        if not self.weights:
            raise ValueError("weights must be non-empty")
        if any(w < 0 for w in self.weights):
            raise ValueError(f"weights must be non-negative: {self.weights}")
        if sum(self.weights) < self.quota:
            raise ValueError("grand coalition must win: sum of weights below quota")

    @property
    def n(self) -> int:
        return len(self.weights)

    def weight_of(self, s: BitVector) -> int:
        if s.length != self.n:
            raise ValueError(f"coalition length {s.length} does not match n={self.n}")
        v = s.value
        n = self.n
        total = 0
        while v:
            low = v & -v
            total += self.weights[n - low.bit_length()]
            v ^= low
        return total

    def is_winning(self, s: BitVector) -> bool:
        return self.weight_of(s) >= self.quota

    def induced_game(self) -> SimpleGame:
        return SimpleGame.from_truth_table(self.n, self.is_winning)

    def render(self) -> str:
        return f"{self.quota}; " + " ".join(str(w) for w in self.weights)

    @classmethod
    def parse(cls, text: str) -> "WeightedGame":
        left, _, right = text.partition(";")
        if not right:
            raise ValueError(f"expected 'q; w_1 ... w_n', got {text!r}")
        return cls(int(left.strip()), tuple(int(t) for t in right.split()))


@dataclass(frozen=True)
class IntersectionRep:
    """Ordered list of weighted games over a common player set; a coalition
    wins iff it wins in every member."""

    games: tuple[WeightedGame, ...]

    def __post_init__(self) -> None:
        if not self.games:
            raise ValueError("intersection must have at least one member game")
        if len({g.n for g in self.games}) != 1:
            raise ValueError("member games must share a player count")

    @property
    def n(self) -> int:
        return self.games[0].n

    def is_winning(self, s: BitVector) -> bool:
        return all(g.is_winning(s) for g in self.games)

    def induced_game(self) -> SimpleGame:
        """The represented simple game; rejects degenerate intersections
        (empty set winning or grand coalition losing). Guarded."""
        return SimpleGame.from_truth_table(self.n, self.is_winning)


@dataclass(frozen=True)
class FeasibilitySystem:
    """Separation demanded of a single weighted game: `lower` coalitions must
    reach the quota, `upper` coalitions must stay at or below quota - 1."""

    n: int
    lower: frozenset[BitVector]
    upper: frozenset[BitVector]

    def __post_init__(self) -> None:
        if not self.lower:
            raise ValueError("lower constraint set must be non-empty")
        for c in self.lower | self.upper:
            if c.length != self.n:
                raise ValueError(f"coalition {c} does not match n={self.n}")
        if self.lower & self.upper:
            clash = sorted(self.lower & self.upper)[0]
            raise ValueError(f"coalition {clash} appears in both constraint sets")


@dataclass(frozen=True)
class FarkasCertificate:
    """Non-negative multipliers proving a separation system infeasible.

    Summing `lower` rows (w(S) - q >= 0 after substituting q = t + 1, i.e.
    w(S) - t >= 1) and `upper` rows (t - w(T) >= 0) with these multipliers
    produces a combination whose variable coefficients are all <= 0 while the
    constant forced on it is positive: impossible for non-negative variables.
    """

    lower: tuple[tuple[BitVector, Fraction], ...]
    upper: tuple[tuple[BitVector, Fraction], ...]

    def is_valid_for(self, system: FeasibilitySystem) -> bool:
        if any(y < 0 for _, y in self.lower + self.upper):
            return False
        gain = sum((y for _, y in self.lower), _ZERO)
        if gain <= 0:
            return False
        for i in range(1, system.n + 1):
            coeff = sum((y for s, y in self.lower if s.has_player(i)), _ZERO)
            coeff -= sum((y for t, y in self.upper if t.has_player(i)), _ZERO)
            if coeff > 0:
                return False
        t_coeff = sum((y for _, y in self.upper), _ZERO) - sum(
            (y for _, y in self.lower), _ZERO
        )
        return t_coeff <= 0


@dataclass(frozen=True)
class SeparationResult:
    witness: Optional[WeightedGame]
    certificate: Optional[FarkasCertificate]

    @property
    def feasible(self) -> bool:
        return self.witness is not None


def solve_separation(system: FeasibilitySystem) -> SeparationResult:
    """Decide a separation system exactly; witness or Farkas certificate."""
    lows = sorted(system.lower)
    ups = sorted(system.upper)
    outcome = _farkas_simplex(system.n, lows, ups)
    if outcome[0] == "feasible":
        weights, quota = outcome[1]
        witness = _integerize(weights, quota)
        _recheck_witness(witness, system)
        return SeparationResult(witness, None)
    y = outcome[1]
    cert = FarkasCertificate(
        lower=tuple((c, y[j]) for j, c in enumerate(lows) if y[j]),
        upper=tuple((c, y[len(lows) + j]) for j, c in enumerate(ups) if y[len(lows) + j]),
    )
    if not cert.is_valid_for(system):
        raise RuntimeError("internal error: simplex produced an invalid Farkas certificate")
    return SeparationResult(None, cert)


def feasible_separation(system: FeasibilitySystem) -> Optional[WeightedGame]:
    """Integer witness for the system, or None when provably infeasible."""
    return solve_separation(system).witness


def is_weighted(game: SimpleGame) -> Optional[WeightedGame]:
    """Witness that the game is weighted, or None. Separates the minimal
    winning family from the maximal losing family and re-checks that the
    witness induces exactly the input game. Guarded."""
    system = FeasibilitySystem(
        game.n, lower=game.minimal_winning, upper=game.maximal_losing()
    )
    witness = feasible_separation(system)
    if witness is not None and witness.induced_game() != game:
        raise RuntimeError("internal error: separation witness induces a different game")
    return witness


# ---------------------------------------------------------------------------
# Exact rational simplex on the Farkas alternative
#
# Primal system over x = (w_1..w_n, t) >= 0 with q = t + 1:
#   lower S:  sum_{i in S} w_i - t >= 1
#   upper T: -sum_{i in T} w_i + t >= 0
# Alternative: maximize b.y subject to A^T y <= 0, sum(y) <= 1, y >= 0.
# Optimum 0  -> primal feasible; simplex multipliers give x directly.
# Optimum >0 -> the current basic y is a Farkas certificate.
# ---------------------------------------------------------------------------


def _farkas_simplex(n: int, lows: list[BitVector], ups: list[BitVector]):
    m = len(lows) + len(ups)
    rows = n + 2  # one per primal variable plus the normalization row
    width = m + rows + 1
    tab = [[_ZERO] * width for _ in range(rows)]
    for j, c in enumerate(lows):
        for i in c.players():
            tab[i - 1][j] = _ONE
        tab[n][j] = -_ONE
        tab[n + 1][j] = _ONE
    for k, c in enumerate(ups):
        j = len(lows) + k
        for i in c.players():
            tab[i - 1][j] = -_ONE
        tab[n][j] = _ONE
        tab[n + 1][j] = _ONE
    for r in range(rows):
        tab[r][m + r] = _ONE
    tab[n + 1][-1] = _ONE

    obj = [_ZERO] * width
    for j in range(len(lows)):
        obj[j] = -_ONE  # reduced cost z_j - c_j with c_j = 1 on lower columns
    basis = list(range(m, m + rows))

    while True:
        if obj[-1] > 0:
            # objective can only grow: the basic solution is already a certificate
            y = [_ZERO] * m
            for r, b in enumerate(basis):
                if b < m:
                    y[b] = tab[r][-1]
            return "infeasible", y
        enter = next((j for j in range(width - 1) if obj[j] < 0), None)
        if enter is None:
            weights = [obj[m + i] for i in range(n)]
            quota = obj[m + n] + 1
            return "feasible", (weights, quota)
        leave = None
        best: Fraction | None = None
        for r in range(rows):
            coef = tab[r][enter]
            if coef > 0:
                ratio = tab[r][-1] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leave]  # type: ignore[index]
                ):
                    best = ratio
                    leave = r
        if leave is None:
            raise RuntimeError("internal error: normalized Farkas LP unbounded")
        _pivot(tab, obj, basis, leave, enter)


def _pivot(tab, obj, basis, leave: int, enter: int) -> None:
    piv = tab[leave][enter]
    row = [x / piv for x in tab[leave]]
    tab[leave] = row
    for r in range(len(tab)):
        if r != leave and tab[r][enter]:
            f = tab[r][enter]
            tab[r] = [a - f * b for a, b in zip(tab[r], row)]
    if obj[enter]:
        f = obj[enter]
        obj[:] = [a - f * b for a, b in zip(obj, row)]
    basis[leave] = enter


def _integerize(weights: Sequence[Fraction], quota: Fraction) -> WeightedGame:
    """Clear denominators, then divide by the gcd of all values."""
    scale = lcm(*(f.denominator for f in list(weights) + [quota]))
    ws = [int(f * scale) for f in weights]
    q = int(quota * scale)
    g = gcd(q, *ws)
    return WeightedGame(q // g, tuple(w // g for w in ws))


def _recheck_witness(witness: WeightedGame, system: FeasibilitySystem) -> None:
    """Exact integer re-evaluation of every constraint; no tolerance."""
    for s in system.lower:
        if witness.weight_of(s) < witness.quota:
            raise RuntimeError(f"internal error: witness misses lower constraint {s}")
    for t in system.upper:
        if witness.weight_of(t) > witness.quota - 1:
            raise RuntimeError(f"internal error: witness misses upper constraint {t}")


def save_intersection(
    rep: IntersectionRep, path: str | Path, header: Sequence[str] = ()
) -> None:
    """Weighted-representation file: ``n=<int>``, then one 'q; w ...' line
    per member game, in member order."""
    lines = [f"# {h}" for h in header]
    lines.append(f"n={rep.n}")
    lines.extend(g.render() for g in rep.games)
    Path(path).write_text("\n".join(lines) + "\n")


def load_intersection(path: str | Path) -> IntersectionRep:
    content = [
        line.strip()
        for line in Path(path).read_text().splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not content or not content[0].startswith("n="):
        raise ValueError(f"{path}: expected a leading 'n=<int>' line")
    n = int(content[0][2:])
    games = []
    for line in content[1:]:
        g = WeightedGame.parse(line)
        if g.n != n:
            raise ValueError(f"{path}: game {line!r} does not match n={n}")
        games.append(g)
    return IntersectionRep(tuple(games))
