"""Simple games stored as their antichain of minimal winning coalitions.

A game knows its player count and minimal winning family; everything else
(the full winning family, maximal losing coalitions, the dual game) is
recovered by guarded exhaustive enumeration, which doubles as the oracle
for the cheaper antichain-based queries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .bitvec import BitVector, check_enumeration_guard


class GameValidationError(ValueError):
    """A candidate winning family violates the simple-game conditions."""

    def __init__(self, message: str, witness: tuple[BitVector, ...] = ()):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class SimpleGame:
    """n players plus the antichain of minimal winning coalitions."""

    n: int
    minimal_winning: frozenset[BitVector]
    _mins: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not self.minimal_winning:
            raise GameValidationError("minimal winning family is empty")
        mins = sorted(self.minimal_winning)
        for c in mins:
            if c.length != self.n:
                raise ValueError(f"coalition {c} does not match n={self.n}")
            if c.value == 0:
                raise GameValidationError("empty set wins", (c,))
        for i, a in enumerate(mins):
            for b in mins[i + 1:]:
                if a.value & b.value in (a.value, b.value):
                    raise GameValidationError(
                        "minimal winning family is not an antichain", (a, b)
                    )
        object.__setattr__(self, "_mins", tuple(c.value for c in mins))

    def is_winning(self, s: BitVector) -> bool:
        """True iff some minimal winning coalition is contained in s."""
        if s.length != self.n:
            raise ValueError(f"coalition length {s.length} does not match n={self.n}")
        v = s.value
        return any(m & v == m for m in self._mins)

    def is_losing(self, s: BitVector) -> bool:
        return not self.is_winning(s)

    def winning_table(self) -> bytearray:
        """Truth table over all 2^n coalitions, indexed by coalition value.

        Built by upward closure from the minimal winning family; this is the
        brute-force oracle behind the enumeration-based operations. Guarded.
        """
        check_enumeration_guard(self.n)
        table = bytearray(1 << self.n)
        for m in self._mins:
            table[m] = 1
        for v in range(1 << self.n):
            if table[v]:
                continue
            bits = v
            while bits:
                low = bits & -bits
                if table[v ^ low]:
                    table[v] = 1
                    break
                bits ^= low
        return table

    def maximal_losing(self) -> frozenset[BitVector]:
        """All losing coalitions whose every proper superset wins. Guarded."""
        table = self.winning_table()
        n = self.n
        full = (1 << n) - 1
        out = []
        for v in range(1 << n):
            if table[v]:
                continue
            free = full ^ v
            maximal = True
            while free:
                low = free & -free
                if not table[v | low]:
                    maximal = False
                    break
                free ^= low
            if maximal:
                out.append(BitVector(n, v))
        return frozenset(out)

    def dual(self) -> "SimpleGame":
        """Game where S wins iff the complement of S loses here. Guarded."""
        table = self.winning_table()
        n = self.n
        full = (1 << n) - 1
        dual_win = bytearray(not table[full ^ v] for v in range(1 << n))
        return SimpleGame(n, _extract_minimal(n, dual_win))

    @classmethod
    def from_truth_table(
        cls, n: int, winning: Callable[[BitVector], bool]
    ) -> "SimpleGame":
        """Validate a predicate as a simple game and extract its antichain.

        Rejects predicates where the empty set wins, the grand coalition
        loses, or monotonicity fails; each error carries a witness coalition.
        Guarded.
        """
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        check_enumeration_guard(n)
        size = 1 << n
        full = size - 1
        table = bytearray(size)
        for v in range(size):
            table[v] = 1 if winning(BitVector(n, v)) else 0
        if table[0]:
            raise GameValidationError("empty set wins", (BitVector.zeros(n),))
        if not table[full]:
            raise GameValidationError("grand coalition loses", (BitVector.ones(n),))
        for v in range(size):
            if not table[v]:
                continue
            free = full ^ v
            while free:
                low = free & -free
                if not table[v | low]:
                    raise GameValidationError(
                        "not monotone",
                        (BitVector(n, v), BitVector(n, v | low)),
                    )
                free ^= low
        return cls(n, _extract_minimal(n, table))


def _extract_minimal(n: int, table: bytearray) -> frozenset[BitVector]:
    """Winning coalitions all of whose proper subsets lose (assumes monotone)."""
    out = []
    for v in range(1 << n):
        if not table[v] or v == 0:
            continue
        bits = v
        minimal = True
        while bits:
            low = bits & -bits
            if table[v ^ low]:
                minimal = False
                break
            bits ^= low
        if minimal:
            out.append(BitVector(n, v))
    return frozenset(out)


def games_equal(a: SimpleGame, b: SimpleGame) -> bool:
    """Antichain equality; requires a common player count."""
    if a.n != b.n:
        raise ValueError(f"player count mismatch: {a.n} vs {b.n}")
    return a.minimal_winning == b.minimal_winning


def unanimity_game(n: int) -> SimpleGame:
    """Only the grand coalition wins."""
    return SimpleGame(n, frozenset({BitVector.ones(n)}))


def save_game(game: SimpleGame, path: str | Path, header: Sequence[str] = ()) -> None:
    """Write the game file: comments, an ``n=<int>`` line, then one minimal
    winning coalition per line, sorted."""
    lines = [f"# {h}" for h in header]
    lines.append(f"n={game.n}")
    lines.extend(c.text() for c in sorted(game.minimal_winning))
    Path(path).write_text("\n".join(lines) + "\n")


def load_game(path: str | Path) -> SimpleGame:
    content = [
        line.strip()
        for line in Path(path).read_text().splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not content or not content[0].startswith("n="):
        raise ValueError(f"{path}: expected a leading 'n=<int>' line")
    n = int(content[0][2:])
    coalitions = []
    for line in content[1:]:
        c = BitVector.parse(line)
        if c.length != n:
            raise ValueError(f"{path}: coalition {line!r} does not match n={n}")
        coalitions.append(c)
    return SimpleGame(n, frozenset(coalitions))
