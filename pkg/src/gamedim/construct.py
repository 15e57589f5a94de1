"""Game families built in this package.

Three constructions: the hitting-set game of a code whose words satisfy the
pairwise weight/distance condition, the half-and-half parity game on 2k
players together with its explicit decomposition into 2^(k-1) weighted games
(weights 0, 1, 2 only), and the variant that swaps the roles of the two
halves, plus the permutation check relating the last two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bitvec import BitVector, check_enumeration_guard
from .codes import Code, check_condition
from .game import SimpleGame, games_equal
from .weighted import IntersectionRep, WeightedGame


@dataclass(frozen=True)
class CodeGame:
    """Hitting-set game of a code: a coalition wins iff it intersects the
    support of every word. One quota-1 component game per word."""

    code: Code
    game: SimpleGame
    components: IntersectionRep

    def __post_init__(self) -> None:
        if len(self.components.games) != len(self.code.words):
            raise ValueError("one component game per code word required")


@dataclass(frozen=True)
class TZGame:
    """Parity game on n = 2k players (k odd): a coalition X wins iff
    |X| >= k+1, or |X| = k and |X ∩ {k+1..2k}| is even."""

    k: int
    game: SimpleGame
    decomposition: IntersectionRep


def gamma_from_code(code: Code) -> CodeGame:
    """Build the hitting-set game of a code.

    Zero-weight words are dropped here (they cannot be hit); the remaining
    words must be non-empty and satisfy the pairwise condition. The game is
    validated against the component intersection by exhaustive enumeration,
    so the player count is guarded.
    """
    n = code.length
    words = frozenset(w for w in code.words if w.weight > 0)
    if not words:
        raise ValueError("empty code: no positive-weight words to build a game from")
    used = Code(n, words)
    ok, pair = check_condition(used)
    if not ok:
        assert pair is not None
        raise ValueError(
            f"condition violated by pair {pair[0]} {pair[1]}: "
            f"|hw(x)-hw(y)| = {abs(pair[0].weight - pair[1].weight)} is not below "
            f"d(x,y)-2 = {pair[0].distance(pair[1]) - 2}"
        )
    check_enumeration_guard(n)
    supports = tuple(w.value for w in sorted(words))
    game = SimpleGame.from_truth_table(
        n, lambda s: all(s.value & sup for sup in supports)
    )
    components = IntersectionRep(
        tuple(
            WeightedGame(1, tuple(1 if w.has_player(i) else 0 for i in range(1, n + 1)))
            for w in sorted(words)
        )
    )
    return CodeGame(used, game, components)


def taylor_zwicker(k: int) -> TZGame:
    """The parity game on 2k players together with its decomposition into
    2^(k-1) weighted games, one per even-parity word of length k."""
    _check_odd(k)
    n = 2 * k
    t_mask = (1 << k) - 1  # players k+1..2k occupy the low k bits
    minimal = []
    for v in _weight_k_values(n, k):
        if (v & t_mask).bit_count() % 2 == 0:
            minimal.append(BitVector(n, v))
    game = SimpleGame(n, frozenset(minimal))
    return TZGame(k, game, IntersectionRep(_component_games(k)))


def tz_decomposition(k: int) -> IntersectionRep:
    """The 2^(k-1) weighted games whose intersection is the parity game.

    For an even-parity word x != 0 of length k: weight 0 on the first-half
    players flagged by x, weight 2 on the rest of the first half, weight 1 on
    the second half, quota k - (hw(x) - 1). For x = 0: weight 1 on the first
    half, 0 on the second, quota 1. Requires k >= 3; k = 1 is a single
    weighted game handled at the CLI layer.
    """
    _check_odd(k)
    if k < 3:
        raise ValueError(f"decomposition requires k >= 3, got {k}")
    return IntersectionRep(_component_games(k))


def _component_games(k: int) -> tuple[WeightedGame, ...]:
    games = []
    for xv in range(1 << k):
        if xv.bit_count() % 2:
            continue
        if xv == 0:
            games.append(WeightedGame(1, (1,) * k + (0,) * k))
            continue
        x = BitVector(k, xv)
        first = tuple(0 if x.has_player(i) else 2 for i in range(1, k + 1))
        games.append(WeightedGame(k - (x.weight - 1), first + (1,) * k))
    return tuple(games)


def elkind_variant(k: int) -> SimpleGame:
    """Variant parity game: size k coalitions win iff their first-half part
    is even and their second-half part is odd; larger sizes win, smaller
    lose."""
    _check_odd(k)
    n = 2 * k
    check_enumeration_guard(n)
    s_mask = ((1 << k) - 1) << k
    t_mask = (1 << k) - 1

    def winning(s: BitVector) -> bool:
        size = s.weight
        if size != k:
            return size > k
        return (s.value & s_mask).bit_count() % 2 == 0 and (
            s.value & t_mask
        ).bit_count() % 2 == 1

    return SimpleGame.from_truth_table(n, winning)


def permute_game(game: SimpleGame, perm: Sequence[int]) -> SimpleGame:
    """Relabel players; perm[i-1] is the new label of player i."""
    if sorted(perm) != list(range(1, game.n + 1)):
        raise ValueError(f"not a permutation of 1..{game.n}: {perm}")
    relabeled = frozenset(
        BitVector.from_players(game.n, (perm[i - 1] for i in c.players()))
        for c in game.minimal_winning
    )
    return SimpleGame(game.n, relabeled)


def verify_tz_elkind_isomorphism(k: int) -> bool:
    """Whether swapping the two halves of the variant game yields the parity
    game, checked by antichain equality."""
    _check_odd(k)
    perm = tuple(range(k + 1, 2 * k + 1)) + tuple(range(1, k + 1))
    return games_equal(permute_game(elkind_variant(k), perm), taylor_zwicker(k).game)


def _check_odd(k: int) -> None:
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k must be a positive odd integer, got {k}")


def _weight_k_values(n: int, k: int):
    v = (1 << k) - 1
    limit = 1 << n
    while v < limit:
        yield v
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r
