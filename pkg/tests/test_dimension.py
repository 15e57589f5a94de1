import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from gamedim import (
    BitVector,
    Code,
    InfeasibilityRecord,
    SearchBudget,
    TwoTradeCertificate,
    colosable,
    dimension_from_code_size,
    exact_dimension,
    find_two_trade,
    games_equal,
    gamma_from_code,
    incompatibility_graph,
    power_of_two_dimension,
    render_report,
    sperner_bounds,
    theorem_lower_bound,
    unanimity_game,
    upper_bound,
)

from conftest import concatenation_losers, random_antichain_game


class TestUpperBound:
    def test_gamma_c8(self, gamma_c8):
        assert upper_bound(gamma_c8.game) == 14

    def test_tz3(self, tz3):
        assert upper_bound(tz3.game) == 10

    def test_unanimity(self):
        for n in (3, 5, 7):
            assert upper_bound(unanimity_game(n)) == n

    def test_chain_on_random_games(self):
        rng = random.Random(31)
        for _ in range(50):
            g = random_antichain_game(rng)
            losers = upper_bound(g)
            winners = sum(g.winning_table())
            assert losers <= (1 << g.n) - winners
            assert losers <= comb(g.n, g.n // 2)


class TestSpernerBounds:
    def test_small_even(self):
        b = sperner_bounds(2)
        assert b.value == 2
        assert b.lower <= 2 <= b.upper

    def test_survey_values(self):
        assert sperner_bounds(20).value == 184756
        assert sperner_bounds(13).value == 1716

    @pytest.mark.parametrize("n", [2, 3, 10, 13, 20, 57, 256, 999, 1000])
    def test_brackets_hold(self, n):
        b = sperner_bounds(n)
        assert isinstance(b.lower, Fraction) and isinstance(b.upper, Fraction)
        assert b.lower <= b.value <= b.upper

    def test_brackets_are_tight(self):
        # the enclosures stay within a percent for moderate n
        b = sperner_bounds(50)
        assert b.upper / b.lower < Fraction(101, 100)

    def test_rejects_tiny_n(self):
        with pytest.raises(ValueError):
            sperner_bounds(1)


class TestFindTwoTrade:
    def test_concatenation_pair(self, tz3):
        cert = find_two_trade(
            tz3.game, BitVector.parse("110001"), BitVector.parse("011100")
        )
        assert cert is not None
        assert tz3.game.is_winning(cert.winner_a)
        assert tz3.game.is_winning(cert.winner_b)

    def test_all_c8_pairs(self, gamma_c8):
        losers = sorted(gamma_c8.game.maximal_losing())
        for a, b in combinations(losers, 2):
            assert find_two_trade(gamma_c8.game, a, b) is not None

    def test_unanimity_has_no_trade(self):
        game = unanimity_game(3)
        assert (
            find_two_trade(
                game,
                BitVector.from_players(3, [1, 2]),
                BitVector.from_players(3, [1, 3]),
            )
            is None
        )

    def test_winning_input_rejected(self, tz3):
        winner = BitVector.ones(6)
        loser = BitVector.parse("110100")
        with pytest.raises(ValueError, match="needs losers"):
            find_two_trade(tz3.game, winner, loser)

    def test_multiset_identity_enforced(self):
        with pytest.raises(ValueError, match="multiset"):
            TwoTradeCertificate(
                BitVector.parse("10"),
                BitVector.parse("10"),
                BitVector.parse("01"),
                BitVector.parse("10"),
            )

    def test_certificates_imply_lp_infeasibility(self):
        rng = random.Random(13)
        checked = 0
        while checked < 25:
            g = random_antichain_game(rng, max_n=7)
            losers = sorted(g.maximal_losing())
            for a, b in combinations(losers, 2):
                cert = find_two_trade(g, a, b)
                if cert is not None:
                    assert colosable(g, [a, b]) is None
                    checked += 1
                    break


class TestColosable:
    def test_empty_losers_trivially_feasible(self, tz3):
        witness = colosable(tz3.game, [])
        assert witness is not None

    def test_single_maximal_loser(self, gamma_c8):
        loser = sorted(gamma_c8.game.maximal_losing())[0]
        witness = colosable(gamma_c8.game, [loser])
        assert witness is not None
        assert witness.weight_of(loser) <= witness.quota - 1

    def test_pair_from_concatenation_family_infeasible(self, tz3):
        assert (
            colosable(
                tz3.game, [BitVector.parse("110001"), BitVector.parse("011100")]
            )
            is None
        )

    def test_winning_coalition_rejected(self, tz3):
        with pytest.raises(ValueError, match="needs losers"):
            colosable(tz3.game, [BitVector.ones(6)])


class TestIncompatibilityGraph:
    def test_gamma_c8_complete_with_trades(self, gamma_c8):
        graph = incompatibility_graph(gamma_c8.game)
        assert len(graph.vertices) == 14
        assert graph.is_complete()
        assert len(graph.edges) == 91
        assert all(isinstance(e, TwoTradeCertificate) for e in graph.edges.values())

    def test_unanimity_graph_empty(self):
        graph = incompatibility_graph(unanimity_game(3))
        assert len(graph.vertices) == 3
        assert len(graph.edges) == 0

    def test_tz3_contains_concatenation_clique(self, tz3):
        graph = incompatibility_graph(tz3.game)
        members = concatenation_losers(3)
        for a, b in combinations(members, 2):
            assert graph.has_edge(a, b)


class TestExactDimension:
    def test_tz3(self, tz3):
        report = exact_dimension(tz3.game)
        assert report.exact == 4
        assert report.lower == 4
        assert games_equal(report.witnesses.induced_game(), tz3.game)

    def test_gamma_c8(self, gamma_c8):
        report = exact_dimension(gamma_c8.game)
        assert report.exact == 14
        assert len(report.witnesses.games) == 14
        assert games_equal(report.witnesses.induced_game(), gamma_c8.game)

    def test_example_game(self, example_game):
        report = exact_dimension(example_game.game)
        assert report.exact == 3

    def test_unanimity(self):
        report = exact_dimension(unanimity_game(3))
        assert report.exact == 1
        assert report.witnesses.games[0].induced_game() == unanimity_game(3)

    def test_budget_loser_cap(self, tz3):
        report = exact_dimension(tz3.game, SearchBudget(max_losers=5))
        assert report.exact is None
        assert report.budget_exhausted
        assert report.lower == 4  # greedy trade clique still finds the family
        assert report.upper == 10
        assert report.witnesses is None

    def test_budget_oracle_cap(self, tz3):
        report = exact_dimension(tz3.game, SearchBudget(max_oracle_calls=3))
        assert report.exact is None
        assert report.budget_exhausted
        assert 1 <= report.lower <= 4 <= report.upper

    def test_exact_within_graph_bounds(self):
        rng = random.Random(17)
        for _ in range(20):
            g = random_antichain_game(rng, max_n=6)
            report = exact_dimension(g)
            assert report.exact is not None
            assert report.lower <= report.exact <= report.upper
            assert games_equal(report.witnesses.induced_game(), g)


class TestCodeDimension:
    def test_c8(self, c8):
        assert dimension_from_code_size(c8) == 14

    def test_example(self, example_code):
        assert dimension_from_code_size(example_code) == 3

    def test_prefix_subsets_match_search(self, c8, gamma_c8):
        words = c8.sorted_words()
        for size in (1, 2, 3, 4, 5):
            prefix = Code(8, frozenset(words[:size]))
            assert dimension_from_code_size(prefix) == size
            report = exact_dimension(gamma_from_code(prefix).game)
            assert report.exact == size

    def test_condition_violation_rejected(self):
        bad = Code(2, frozenset({BitVector.parse("10"), BitVector.parse("01")}))
        with pytest.raises(ValueError, match="condition violated"):
            dimension_from_code_size(bad)


class TestClosedForms:
    def test_residue_guarantee(self):
        assert theorem_lower_bound(8) == 9  # ceil(70 / 8)
        assert theorem_lower_bound(6) == 4  # ceil(20 / 6)

    def test_power_of_two_values(self):
        assert power_of_two_dimension(8) == 14
        assert power_of_two_dimension(16) == 870

    def test_power_of_two_matches_code_size(self, c8):
        assert power_of_two_dimension(8) == len(c8)

    def test_power_of_two_rejects_others(self):
        for n in (6, 12, 4):
            with pytest.raises(ValueError):
                power_of_two_dimension(n)


class TestReportRendering:
    def test_sections_present(self, example_game):
        report = exact_dimension(example_game.game)
        text = render_report(report)
        for token in ("LOWER", "UPPER", "EXACT 3", "CERTIFICATES", "WITNESSES 3", "n=8"):
            assert token in text

    def test_budget_report(self, tz3):
        report = exact_dimension(tz3.game, SearchBudget(max_losers=5))
        text = render_report(report)
        assert "EXACT unknown" in text
        assert "BUDGET exhausted" in text
        assert "WITNESSES none" in text

    def test_infeasibility_records_round_to_text(self):
        rng = random.Random(23)
        # find a game whose graph has an LP-only edge
        for _ in range(300):
            g = random_antichain_game(rng, max_n=6)
            graph = incompatibility_graph(g)
            records = [
                e for e in graph.edges.values() if isinstance(e, InfeasibilityRecord)
            ]
            if records:
                report = exact_dimension(g)
                assert "lp-infeasible" in render_report(report)
                return
        pytest.skip("no LP-only incompatibility found in the sample")
