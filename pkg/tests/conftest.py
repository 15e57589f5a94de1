from __future__ import annotations

import random

import pytest

from gamedim import (
    BitVector,
    Code,
    SimpleGame,
    constant_weight_subset,
    extend_parity,
    gamma_from_code,
    hamming_code,
    taylor_zwicker,
)

# Canonical extended [8,4] code in systematic form (message bits first,
# even-parity extension last); 16 words, minimum distance 4.
HAMMING84_WORDS = frozenset(
    BitVector.parse(text)
    for text in (
        "0000 0000", "0001 1110", "0010 0111", "0011 1001",
        "0100 1011", "0101 0101", "0110 1100", "0111 0010",
        "1000 1101", "1001 0011", "1010 1010", "1011 0100",
        "1100 0110", "1101 1000", "1110 0001", "1111 1111",
    )
)

EXAMPLE_CODE_WORDS = frozenset(
    BitVector.parse(text) for text in ("0000 1111", "1100 0000", "0011 1100")
)

# Survey of the antichain cap minus one (C(n, floor(n/2)) - 1) for n = 6..20.
ANTICHAIN_CAP_MINUS_ONE = {
    6: 19, 7: 34, 8: 69, 9: 125, 10: 251, 11: 461, 12: 923, 13: 1715,
    14: 3431, 15: 6434, 16: 12869, 17: 24309, 18: 48619, 19: 92377, 20: 184755,
}


@pytest.fixture(scope="session")
def extended_hamming8() -> Code:
    return extend_parity(hamming_code(3))


@pytest.fixture(scope="session")
def c8(extended_hamming8: Code) -> Code:
    return constant_weight_subset(extended_hamming8, 4)


@pytest.fixture(scope="session")
def gamma_c8(c8: Code):
    return gamma_from_code(c8)


@pytest.fixture(scope="session")
def example_code() -> Code:
    return Code(8, EXAMPLE_CODE_WORDS)


@pytest.fixture(scope="session")
def example_game(example_code: Code):
    return gamma_from_code(example_code)


@pytest.fixture(scope="session")
def tz3():
    return taylor_zwicker(3)


@pytest.fixture(scope="session")
def tz5():
    return taylor_zwicker(5)


def concatenation_losers(k: int) -> list[BitVector]:
    """The 2^(k-1) losers of the parity game built by gluing each
    even-parity word of length k to its own negation."""
    return [
        BitVector(k, x).concat(BitVector(k, x).complement())
        for x in range(1 << k)
        if x.bit_count() % 2 == 0
    ]


def random_antichain_game(rng: random.Random, max_n: int = 8) -> SimpleGame:
    """Random small game: sample coalitions, keep the minimal ones."""
    n = rng.randint(3, max_n)
    draws = rng.randint(1, 6)
    candidates = set()
    for _ in range(draws):
        size = rng.randint(1, n)
        candidates.add(BitVector.from_players(n, rng.sample(range(1, n + 1), size)))
    minimal = {
        c
        for c in candidates
        if not any(o != c and o.is_subset_of(c) for o in candidates)
    }
    return SimpleGame(n, frozenset(minimal))
