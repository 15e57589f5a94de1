"""Fixed-length bit vectors doubling as coalition characteristic vectors.

Player i occupies text position i, leftmost character first, so the textual
form of a vector is exactly the binary numeral of its internal value. Values
are immutable and hashable; every operation returns a fresh vector, which
makes shared concurrent use safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_LENGTH = 64          # one machine word; longer vectors are out of scope
ENUMERATION_GUARD = 24   # full 2^n sweeps must stay desk-scale


class CapacityError(ValueError):
    """An operation would exceed an enumeration guard."""


def check_enumeration_guard(n: int) -> None:
    if n > ENUMERATION_GUARD:
        raise CapacityError(
            f"n={n} exceeds the enumeration guard of {ENUMERATION_GUARD} players"
        )


@dataclass(frozen=True, order=True)
class BitVector:
    """Immutable 0/1 word of fixed length, also read as the coalition
    {i : bit i = 1} over players 1..length."""

    length: int
    value: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_LENGTH:
            raise ValueError(f"length must be in 1..{MAX_LENGTH}, got {self.length}")
        if not 0 <= self.value < (1 << self.length):
            raise ValueError(f"value {self.value} out of range for length {self.length}")

    @classmethod
    def parse(cls, text: str) -> "BitVector":
        """Parse '0'/'1' text; internal whitespace is ignored."""
        compact = "".join(text.split())
        if not compact or set(compact) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls(len(compact), int(compact, 2))

    @classmethod
    def from_players(cls, n: int, players: Iterable[int]) -> "BitVector":
        value = 0
        for i in players:
            if not 1 <= i <= n:
                raise ValueError(f"player {i} outside 1..{n}")
            value |= 1 << (n - i)
        return cls(n, value)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    def text(self) -> str:
        return format(self.value, f"0{self.length}b")

    def __str__(self) -> str:
        return self.text()

    @property
    def weight(self) -> int:
        """Number of 1-bits (coalition size)."""
        return self.value.bit_count()

    def distance(self, other: "BitVector") -> int:
        """Number of positions where the two vectors differ."""
        self._check_same_length(other)
        return (self.value ^ other.value).bit_count()

    def complement(self) -> "BitVector":
        return BitVector(self.length, self.value ^ ((1 << self.length) - 1))

    def concat(self, other: "BitVector") -> "BitVector":
        """This vector followed by `other`; combined length must fit a word."""
        n = self.length + other.length
        if n > MAX_LENGTH:
            raise ValueError(f"concatenated length {n} exceeds {MAX_LENGTH}")
        return BitVector(n, (self.value << other.length) | other.value)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check_same_length(other)
        return BitVector(self.length, self.value & other.value)

    def __or__(self, other: "BitVector") -> "BitVector":
        self._check_same_length(other)
        return BitVector(self.length, self.value | other.value)

    def __invert__(self) -> "BitVector":
        return self.complement()

    def is_subset_of(self, other: "BitVector") -> bool:
        self._check_same_length(other)
        return self.value & other.value == self.value

    def intersects(self, other: "BitVector") -> bool:
        self._check_same_length(other)
        return self.value & other.value != 0

    def has_player(self, i: int) -> bool:
        self._check_player(i)
        return bool(self.value >> (self.length - i) & 1)

    def players(self) -> tuple[int, ...]:
        """Members of the coalition in ascending order."""
        n = self.length
        return tuple(i for i in range(1, n + 1) if self.value >> (n - i) & 1)

    def with_player(self, i: int) -> "BitVector":
        self._check_player(i)
        return BitVector(self.length, self.value | (1 << (self.length - i)))

    def without_player(self, i: int) -> "BitVector":
        self._check_player(i)
        return BitVector(self.length, self.value & ~(1 << (self.length - i)))

    def _check_same_length(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def _check_player(self, i: int) -> None:
        if not 1 <= i <= self.length:
            raise ValueError(f"player {i} outside 1..{self.length}")


def enumerate_subsets(n: int, weight: int | None = None) -> Iterator[BitVector]:
    """Yield every coalition over n players once, in lexicographic text order.

    With `weight` given, only coalitions of that exact size are produced
    (C(n, weight) of them). Guarded: n must stay within the enumeration cap.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_enumeration_guard(n)
    if weight is None:
        for v in range(1 << n):
            yield BitVector(n, v)
        return
    if not 0 <= weight <= n:
        raise ValueError(f"weight {weight} outside 0..{n}")
    if weight == 0:
        yield BitVector.zeros(n)
        return
    v = (1 << weight) - 1
    limit = 1 << n
    while v < limit:
        yield BitVector(n, v)
        # Gosper's hack: next integer with the same popcount
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r
