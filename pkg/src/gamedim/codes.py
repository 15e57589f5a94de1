"""Bit-vector families feeding the game constructions.

Covers the pairwise weight/distance condition a family must satisfy before
it induces a game, Hamming and extended Hamming codes, the weight enumerator
of the Hamming family, constant-weight subcodes, and the residue-class
construction of constant-weight distance-4 codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Optional, Sequence

from .bitvec import BitVector, CapacityError

HAMMING_M_GUARD = 5          # 2^(t-m) codewords are enumerated explicitly
RESIDUE_CODE_GUARD = 20      # C(n, w) weight-w words are enumerated explicitly

# Systematic [7,4] generator: message in positions 1-4, parity rows below
# (appending an even-parity bit extends these rows to 1101/1011/0111/1110).
_HAMMING74_PARITY_ROWS = (0b110, 0b101, 0b011, 0b111)


@dataclass(frozen=True)
class Code:
    """A set of equal-length bit vectors.

    Raw linear codes keep the zero word; it is only dropped when a code is
    consumed to build a game, which requires positive weights.
    """

    length: int
    words: frozenset[BitVector]

    def __post_init__(self) -> None:
        for w in self.words:
            if w.length != self.length:
                raise ValueError(f"word {w} does not match length {self.length}")

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[BitVector]:
        return sorted(self.words)


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficient i counts the codewords of Hamming weight i."""

    length: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.length + 1:
            raise ValueError("need one coefficient per weight 0..length")
        if any(a < 0 for a in self.coefficients):
            raise ValueError("coefficients must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.coefficients)


def check_condition(
    code: Code,
) -> tuple[bool, Optional[tuple[BitVector, BitVector]]]:
    """Whether every unordered pair x != y satisfies
    ``|hw(x) - hw(y)| < d(x, y) - 2`` strictly; on failure also returns the
    first violating pair (in sorted order)."""
    if not code.words:
        raise ValueError("condition check needs at least one word")
    words = code.sorted_words()
    for i, x in enumerate(words):
        for y in words[i + 1:]:
            if abs(x.weight - y.weight) >= x.distance(y) - 2:
                return False, (x, y)
    return True, None


def hamming_code(m: int) -> Code:
    """The length 2^m - 1 Hamming code with 2^(2^m - 1 - m) words.

    For m = 3 the code comes from the fixed systematic generator above so
    that its even-parity extension reproduces the canonical [8,4] listing
    bit for bit; larger m use the parity-check matrix whose columns are the
    non-zero m-bit values in ascending numeric order. Includes the zero word.
    """
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if m > HAMMING_M_GUARD:
        raise CapacityError(
            f"m={m} exceeds the Hamming construction guard of {HAMMING_M_GUARD}"
        )
    t = (1 << m) - 1
    if m == 3:
        words = []
        for msg in range(16):
            parity = 0
            for i in range(4):
                if msg >> (3 - i) & 1:
                    parity ^= _HAMMING74_PARITY_ROWS[i]
            words.append(BitVector(7, (msg << 3) | parity))
        return Code(7, frozenset(words))
    basis = _hamming_kernel_basis(m, t)
    span = [0]
    for b in basis:
        span += [v ^ b for v in span]
    return Code(t, frozenset(BitVector(t, v) for v in span))


def _hamming_kernel_basis(m: int, t: int) -> list[int]:
    """GF(2) kernel basis of the parity-check matrix with columns 1..t."""
    # row r flags the positions j whose binary numeral has bit r set;
    # position j sits at vector bit t - j
    rows = []
    for r in range(m):
        mask = 0
        for j in range(1, t + 1):
            if j >> r & 1:
                mask |= 1 << (t - j)
        rows.append(mask)
    reduced: list[int] = []
    pivots: list[int] = []
    for row in rows:
        cur = row
        for pr, pp in zip(reduced, pivots):
            if cur >> pp & 1:
                cur ^= pr
        if cur == 0:
            continue
        pp = cur.bit_length() - 1
        for idx, pr in enumerate(reduced):
            if pr >> pp & 1:
                reduced[idx] = pr ^ cur
        reduced.append(cur)
        pivots.append(pp)
    if len(reduced) != m:
        raise RuntimeError("internal error: parity-check rows are dependent")
    pivot_set = set(pivots)
    basis = []
    for fb in range(t):
        if fb in pivot_set:
            continue
        v = 1 << fb
        for pr, pp in zip(reduced, pivots):
            if pr >> fb & 1:
                v |= 1 << pp
        basis.append(v)
    return basis


def extend_parity(raw: Code) -> Code:
    """Append one bit to each word making its total weight even."""
    n = raw.length + 1
    return Code(
        n,
        frozenset(
            BitVector(n, (w.value << 1) | (w.weight & 1)) for w in raw.words
        ),
    )


def weight_enumerator(t: int) -> WeightEnumerator:
    """Weight distribution of the length-t Hamming code, t = 2^m - 1 >= 7,
    from its closed-form enumerator polynomial in exact integer arithmetic."""
    m = (t + 1).bit_length() - 1
    if t < 7 or (1 << m) != t + 1:
        raise ValueError(f"t must be 2^m - 1 with t >= 7, got {t}")
    half = (t - 1) // 2
    # (1 - x^2)^half, then multiplied by (1 - x)
    sq = [0] * (t + 1)
    for j in range(half + 1):
        sq[2 * j] = (-1) ** j * comb(half, j)
    mixed = [sq[i] - (sq[i - 1] if i else 0) for i in range(t + 1)]
    coeffs = []
    for i in range(t + 1):
        total = comb(t, i) + t * mixed[i]
        if total % (t + 1):
            raise RuntimeError("internal error: enumerator coefficient not integral")
        coeffs.append(total // (t + 1))
    enum = WeightEnumerator(t, tuple(coeffs))
    if enum.total != 1 << (t - m):
        raise RuntimeError("internal error: enumerator total is not 2^(t-m)")
    return enum


def enumerator_of_code(code: Code) -> WeightEnumerator:
    """Weight distribution obtained by direct counting."""
    coeffs = [0] * (code.length + 1)
    for w in code.words:
        coeffs[w.weight] += 1
    return WeightEnumerator(code.length, tuple(coeffs))


def constant_weight_subset(code: Code, weight: int) -> Code:
    """Words of the given exact weight; may be empty."""
    if weight < 1:
        raise ValueError(f"weight must be positive, got {weight}")
    return Code(code.length, frozenset(w for w in code.words if w.weight == weight))


def graham_sloane_buckets(n: int, weight: int) -> list[frozenset[BitVector]]:
    """Partition of all weight-w words by position sum modulo n (positions
    run 1..n); bucket r holds the words with residue r."""
    if not 1 <= weight <= n:
        raise ValueError(f"weight {weight} outside 1..{n}")
    if n > RESIDUE_CODE_GUARD:
        raise CapacityError(
            f"n={n} exceeds the residue construction guard of {RESIDUE_CODE_GUARD}"
        )
    buckets: list[list[BitVector]] = [[] for _ in range(n)]
    for positions in combinations(range(1, n + 1), weight):
        value = 0
        for i in positions:
            value |= 1 << (n - i)
        buckets[sum(positions) % n].append(BitVector(n, value))
    return [frozenset(b) for b in buckets]


def graham_sloane(n: int, weight: int) -> Code:
    """Largest residue class of weight-w words (ties to the smallest
    residue): a constant-weight code with minimum distance >= 4 and at least
    C(n, w) / n words."""
    buckets = graham_sloane_buckets(n, weight)
    best = min(range(n), key=lambda r: (-len(buckets[r]), r))
    return Code(n, buckets[best])


def min_distance(code: Code) -> int:
    """Minimum pairwise Hamming distance; needs at least two words."""
    if len(code.words) < 2:
        raise ValueError("minimum distance needs at least two words")
    values = sorted(w.value for w in code.words)
    best = code.length + 1
    for i, v in enumerate(values):
        for u in values[i + 1:]:
            d = (v ^ u).bit_count()
            if d < best:
                best = d
    return best


def save_code(code: Code, path: str | Path, header: Sequence[str] = ()) -> None:
    """Code file: '#' comments then one word per line, sorted."""
    lines = [f"# {h}" for h in header]
    lines.extend(w.text() for w in code.sorted_words())
    Path(path).write_text("\n".join(lines) + "\n")


def load_code(path: str | Path) -> Code:
    words = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.append(BitVector.parse(line))
    if not words:
        raise ValueError(f"{path}: no words found")
    lengths = {w.length for w in words}
    if len(lengths) != 1:
        raise ValueError(f"{path}: words have mixed lengths {sorted(lengths)}")
    return Code(lengths.pop(), frozenset(words))
