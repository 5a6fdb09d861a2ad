"""Value-type construction, validation, and JSON round trips."""

import math

import pytest

from intercausal import (
    BeliefQuery,
    EvidenceState,
    FactoredSymmetric,
    GeneralLikelihoodMatrix,
    LikelihoodMatrix,
    NoisyOrParams,
    OutOfRangeError,
    ParseError,
    SingularFactorization,
    probabilities,
    require_probability,
)


def test_require_probability_accepts_endpoints():
    assert require_probability(0.0, "x") == 0.0
    assert require_probability(1.0, "x") == 1.0
    assert require_probability(0.25, "x") == 0.25


@pytest.mark.parametrize("bad", [-0.1, 1.0000001, math.nan, math.inf, -math.inf])
def test_require_probability_rejects(bad):
    with pytest.raises(OutOfRangeError):
        require_probability(bad, "x")


def test_probabilities_names_the_offender():
    with pytest.raises(OutOfRangeError, match=r"v\[1\]"):
        probabilities([0.5, 1.5], "v")


def test_evidence_state_flip_and_parse():
    assert EvidenceState.POS.flipped is EvidenceState.NEG
    assert EvidenceState.NEG.flipped is EvidenceState.POS
    assert EvidenceState.parse("pos") is EvidenceState.POS
    with pytest.raises(ParseError):
        EvidenceState.parse("maybe")


class TestLikelihoodMatrix:
    def test_entries_follow_row_b_column_a_layout(self):
        m = LikelihoodMatrix(EvidenceState.POS, 0.7, 0.2, 0.4, 0.5)
        assert m.entries == ((0.7, 0.2), (0.4, 0.5))
        assert m.max_entry == 0.7
        assert m.min_entry == 0.2

    def test_rejects_out_of_range_entries(self):
        with pytest.raises(OutOfRangeError):
            LikelihoodMatrix(EvidenceState.POS, 0.7, 0.2, 1.4, 0.5)
        with pytest.raises(OutOfRangeError):
            LikelihoodMatrix(EvidenceState.NEG, math.nan, 0.2, 0.4, 0.5)

    def test_complement_is_an_involution(self):
        # dyadic entries keep both complements exact, so == is safe
        m = LikelihoodMatrix(EvidenceState.POS, 0.75, 0.25, 0.5, 0.125)
        c = m.complement()
        assert c.state is EvidenceState.NEG
        assert c.entries == ((0.25, 0.75), (0.5, 0.875))
        assert c.complement() == m

    def test_state_selectors(self):
        m = LikelihoodMatrix(EvidenceState.NEG, 0.1, 0.2, 0.3, 0.4)
        assert m.neg_table() is m
        assert m.pos_table().state is EvidenceState.POS
        assert m.pos_table().r == 0.9

    def test_swaps_move_the_expected_cells(self):
        m = LikelihoodMatrix(EvidenceState.POS, 0.1, 0.2, 0.3, 0.4)
        assert m.swap_rows().entries == ((0.3, 0.4), (0.1, 0.2))
        assert m.swap_columns().entries == ((0.2, 0.1), (0.4, 0.3))
        assert m.swap_rows().swap_rows() == m

    def test_json_round_trip(self):
        m = LikelihoodMatrix(EvidenceState.NEG, 0.125, 0.25, 0.5, 0.75)
        data = m.to_json()
        assert data == {"state": "neg", "rows": [[0.125, 0.25], [0.5, 0.75]]}
        assert LikelihoodMatrix.from_json(data) == m

    @pytest.mark.parametrize(
        "data",
        [
            "not a dict",
            {},
            {"state": "pos"},
            {"state": "pos", "rows": [[0.1, 0.2]]},
            {"state": "pos", "rows": [[0.1, 0.2], [0.3]]},
            {"state": "pos", "rows": [[0.1, 0.2], [0.3, "x"]]},
            {"state": "pos", "rows": [[0.1, 0.2], [0.3, True]]},
            {"state": "sideways", "rows": [[0.1, 0.2], [0.3, 0.4]]},
        ],
    )
    def test_from_json_rejects_malformed_input(self, data):
        with pytest.raises(ParseError):
            LikelihoodMatrix.from_json(data)

    def test_from_json_rejects_bad_probabilities_as_range_errors(self):
        with pytest.raises(OutOfRangeError):
            LikelihoodMatrix.from_json({"state": "pos", "rows": [[0.1, 0.2], [0.3, 1.4]]})


class TestGeneralLikelihoodMatrix:
    def test_shape_and_max_entry(self):
        g = GeneralLikelihoodMatrix(
            EvidenceState.POS, ((0.1, 0.2, 0.3), (0.4, 0.5, 0.6))
        )
        assert g.shape == (2, 3)
        assert g.max_entry == 0.6

    def test_rejects_ragged_and_empty_grids(self):
        with pytest.raises(OutOfRangeError):
            GeneralLikelihoodMatrix(EvidenceState.POS, ((0.1, 0.2), (0.3,)))
        with pytest.raises(OutOfRangeError):
            GeneralLikelihoodMatrix(EvidenceState.POS, ())


def test_noisy_or_params_require_positive_terms():
    NoisyOrParams(1.0, 1.0, 1.0)
    NoisyOrParams(0.001, 0.5, 0.5)
    with pytest.raises(OutOfRangeError):
        NoisyOrParams(0.0, 0.5, 0.5)
    with pytest.raises(OutOfRangeError):
        NoisyOrParams(0.9, 0.5, 1.1)


def test_singular_factorization_caps_the_scale():
    SingularFactorization(0.5, 0.5, 4.0)
    with pytest.raises(OutOfRangeError):
        SingularFactorization(0.5, 0.5, 4.1)
    with pytest.raises(OutOfRangeError):
        SingularFactorization(0.1, 0.1, 1.3)


def test_factored_symmetric_requires_interior_parameters():
    FactoredSymmetric(0.5, 0.9)
    for k, w in [(0.0, 0.9), (1.0, 0.9), (0.5, 0.0), (0.5, 1.0)]:
        with pytest.raises(OutOfRangeError):
            FactoredSymmetric(k, w)


def test_belief_query_validates_all_three_coordinates():
    q = BeliefQuery(0.3, 0.5, 0.8)
    assert (q.a, q.b, q.f) == (0.3, 0.5, 0.8)
    for bad in [(-0.1, 0.5, 0.5), (0.5, 2.0, 0.5), (0.5, 0.5, math.nan)]:
        with pytest.raises(OutOfRangeError):
            BeliefQuery(*bad)
