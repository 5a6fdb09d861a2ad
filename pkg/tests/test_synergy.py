"""Synergy measures, axis scaling, and Bayesian reversal."""

import numpy as np
import pytest

from intercausal import (
    EvidenceState,
    LikelihoodMatrix,
    NoisyOrParams,
    NonPositiveWeightError,
    OutOfRangeError,
    SynergyClass,
    ZeroPreposteriorError,
    additive_synergy,
    bayes_reverse,
    multiplicative_synergy,
    noisy_or_matrix,
    outer_product_matrix,
    scale_axis,
    synergy_report,
)

HAND = LikelihoodMatrix(EvidenceState.POS, 0.7, 0.2, 0.4, 0.5)


def test_multiplicative_synergy_is_the_determinant():
    assert multiplicative_synergy(HAND) == pytest.approx(0.35 - 0.08, abs=1e-15)
    assert multiplicative_synergy(((0.7, 0.2), (0.4, 0.5))) == pytest.approx(
        0.27, abs=1e-15
    )


def test_additive_synergy_is_the_diagonal_difference():
    assert additive_synergy(HAND) == pytest.approx(0.7 + 0.5 - 0.2 - 0.4, abs=1e-15)
    assert additive_synergy([[1.0, 0.0], [0.0, 1.0]]) == 2.0


class TestSynergyReport:
    def test_noisy_or_exclusion(self):
        rep = synergy_report(noisy_or_matrix(NoisyOrParams(0.9, 0.5, 0.5)))
        assert rep.classification is SynergyClass.EXCLUSIONARY
        assert rep.det_pos == pytest.approx(-0.225, abs=1e-15)
        assert rep.det_neg == pytest.approx(0.0, abs=1e-15)
        assert rep.y_pos == pytest.approx(-0.225, abs=1e-15)
        assert rep.y_neg == -rep.y_pos

    def test_collaboration(self):
        m = LikelihoodMatrix(EvidenceState.POS, 0.9, 0.1, 0.1, 0.9)
        rep = synergy_report(m)
        assert rep.classification is SynergyClass.COLLABORATIVE
        assert rep.y_pos > 0

    def test_independence_preserving_tie_band(self):
        # dyadic entries keep the sum exact, so Y lands on 0.0 bit for bit
        m = LikelihoodMatrix(EvidenceState.POS, 0.5, 0.25, 0.5, 0.25)
        rep = synergy_report(m)
        assert rep.classification is SynergyClass.INDEPENDENCE_PRESERVING
        assert rep.y_pos == 0.0
        near = LikelihoodMatrix(EvidenceState.POS, 0.6, 0.3, 0.6, 0.3)
        assert synergy_report(near).classification is SynergyClass.INDEPENDENCE_PRESERVING

    def test_rejects_negative_state_input(self):
        with pytest.raises(OutOfRangeError):
            synergy_report(HAND.complement())

    def test_negation_is_exact_bit_for_bit(self):
        rng = np.random.default_rng(42)
        for _ in range(500):
            m = LikelihoodMatrix(EvidenceState.POS, *rng.uniform(0.0, 1.0, 4))
            rep = synergy_report(m)
            assert rep.y_neg == -rep.y_pos


class TestScaleAxis:
    def test_row_scaling(self):
        # doubling and halving are exact, so the tuples compare with ==
        assert scale_axis(HAND, (2.0, 0.5), "rows") == ((1.4, 0.4), (0.2, 0.25))

    def test_column_scaling(self):
        assert scale_axis(HAND, (2.0, 0.5), "cols") == ((1.4, 0.1), (0.8, 0.25))
        assert scale_axis(HAND, (2.0, 0.5), "columns") == scale_axis(
            HAND, (2.0, 0.5), "cols"
        )

    def test_determinant_scales_by_the_weight_product(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            m = LikelihoodMatrix(EvidenceState.POS, *rng.uniform(0.01, 0.99, 4))
            w = rng.uniform(0.1, 10.0, 2)
            scaled = scale_axis(m, tuple(w), "rows")
            assert multiplicative_synergy(scaled) == pytest.approx(
                w[0] * w[1] * multiplicative_synergy(m), rel=1e-12, abs=1e-13
            )

    @pytest.mark.parametrize("weights", [(0.0, 1.0), (1.0, -2.0), (1.0,), (1, 2, 3)])
    def test_rejects_bad_weights(self, weights):
        with pytest.raises(NonPositiveWeightError):
            scale_axis(HAND, weights, "rows")

    def test_rejects_unknown_axis(self):
        with pytest.raises(OutOfRangeError):
            scale_axis(HAND, (1.0, 2.0), "diagonal")


class TestBayesReverse:
    def test_reversal_over_a(self):
        # prior (0.3, 0.7) on A; each row renormalizes to 1
        out = bayes_reverse(HAND, (0.3, 0.7), "A")
        np.testing.assert_allclose(
            out, ((0.6, 0.4), (12 / 47, 35 / 47)), atol=1e-15
        )
        assert out[0][0] + out[0][1] == pytest.approx(1.0, abs=1e-15)
        assert out[1][0] + out[1][1] == pytest.approx(1.0, abs=1e-15)

    def test_reversal_over_b(self):
        out = bayes_reverse(HAND, (0.3, 0.7), "B")
        np.testing.assert_allclose(
            out, ((3 / 7, 6 / 41), (4 / 7, 35 / 41)), atol=1e-15
        )
        assert out[0][0] + out[1][0] == pytest.approx(1.0, abs=1e-15)
        assert out[0][1] + out[1][1] == pytest.approx(1.0, abs=1e-15)

    def test_sign_of_determinant_survives(self):
        rng = np.random.default_rng(42)
        for _ in range(500):
            m = LikelihoodMatrix(EvidenceState.POS, *rng.uniform(0.01, 0.99, 4))
            p = rng.uniform(0.05, 0.95)
            for axis in ("A", "B"):
                out = bayes_reverse(m, (p, 1.0 - p), axis)
                assert np.sign(multiplicative_synergy(out)) == np.sign(
                    multiplicative_synergy(m)
                )

    def test_rank_one_stays_rank_one(self):
        m = outer_product_matrix(0.3, 0.4, 0.8)
        out = bayes_reverse(m, (0.25, 0.75), "B")
        assert abs(multiplicative_synergy(out)) < 1e-15

    def test_zero_mass_row_is_an_error(self):
        m = LikelihoodMatrix(EvidenceState.POS, 0.0, 0.0, 0.5, 0.5)
        with pytest.raises(ZeroPreposteriorError):
            bayes_reverse(m, (0.5, 0.5), "A")

    @pytest.mark.parametrize("prior", [(0.0, 1.0), (0.5, -0.5), (1.0,), (0.2, 0.3, 0.5)])
    def test_rejects_bad_priors(self, prior):
        with pytest.raises(OutOfRangeError):
            bayes_reverse(HAND, prior, "A")

    def test_rejects_unknown_axis(self):
        with pytest.raises(OutOfRangeError):
            bayes_reverse(HAND, (0.5, 0.5), "E")
