"""Unit tests for the correlation measures.

Tests cover:
- Pearson correlation and correlation ratios, unconditional and conditional
- MMSE and the Q-matrix
- Maximal correlation: SVD route, binary formula, alternating-maximization oracle
- Conditional maximal correlation and event-conditional tables
- Gács-Körner common information
"""

import math

import numpy as np
import pytest

from corrlab.corr import (
    common_part,
    cond_corr_ratio,
    cond_corr_ratio_yx,
    cond_maxcorr,
    cond_maxcorr_slices,
    cond_pearson,
    conditional_report,
    corr_ratio,
    correlation_report,
    event_conditional,
    event_conditional_table,
    expected_var_x,
    gk_common_info,
    maxcorr_binary_formula,
    maxcorr_bruteforce,
    maxcorr_svd,
    mmse,
    pearson,
    q_matrix,
)
from corrlab.dist import (
    JointDist2,
    JointDist3,
    block_diagonal,
    diagonal_uniform,
    independent,
    make_binary,
    make_dsbs,
    random_dist2,
    random_dist3,
    swap_construction,
)
from corrlab.errors import NotBinary, ZeroConditioningMass

DIAGONAL = JointDist2.from_array([[0.5, 0.0], [0.0, 0.5]])
UNIFORM = independent([0.5, 0.5], [0.5, 0.5])


def _with_u(p: np.ndarray, pu: list[float]) -> JointDist3:
    """P_XY P_U as a tensor."""
    return JointDist3.from_array(np.asarray(p)[:, :, None] * np.asarray(pu))


def _mixture(p0: float, p1: float) -> JointDist3:
    """DSBS(p0) given U=0 and DSBS(p1) given U=1, each with mass 1/2."""
    slices = [0.5 * make_dsbs(p).array for p in (p0, p1)]
    return JointDist3.from_array(np.stack(slices, axis=2))


class TestPearson:
    """Test pearson and cond_pearson."""

    def test_equal_variables(self) -> None:
        """X = Y gives 1."""
        assert pearson(DIAGONAL) == pytest.approx(1.0, abs=1e-12)

    def test_independent(self) -> None:
        """Independence gives 0."""
        assert pearson(UNIFORM) == pytest.approx(0.0, abs=1e-12)

    def test_dsbs(self) -> None:
        """DSBS(0.1) has correlation 1 - 2*0.1."""
        assert pearson(make_dsbs(0.1)) == pytest.approx(0.8, abs=1e-12)

    def test_negative(self) -> None:
        """Anti-diagonal mass gives -1."""
        d = JointDist2.from_array([[0.0, 0.5], [0.5, 0.0]])
        assert pearson(d) == pytest.approx(-1.0, abs=1e-12)

    def test_conditioning_on_noise(self) -> None:
        """U independent of (X, Y) leaves the value unchanged."""
        d = make_binary(0.3, 0.6, 0.25)
        assert cond_pearson(_with_u(d.array, [0.2, 0.3, 0.5])) == pytest.approx(
            pearson(d), abs=1e-12
        )

    def test_swap_counterexample(self) -> None:
        """Conditional correlation 2*eta*sqrt(ab)/(a+b) = 0.4 below both slices."""
        d = swap_construction(1.0, 4.0, 0.5)
        assert cond_pearson(d) == pytest.approx(0.4, abs=1e-10)
        for row in event_conditional_table(d):
            assert row.report.pearson == pytest.approx(0.5, abs=1e-10)

    def test_u_equal_to_x(self) -> None:
        """var(X|U) = 0 gives 0."""
        p = make_dsbs(0.1).array
        t = np.zeros((2, 2, 2))
        for x in range(2):
            t[x, :, x] = p[x]
        assert cond_pearson(JointDist3.from_array(t)) == 0.0


class TestCorrelationRatio:
    """Test corr_ratio and cond_corr_ratio."""

    def test_equal_variables(self) -> None:
        """E var(X|Y) = 0 gives 1."""
        assert corr_ratio(DIAGONAL) == pytest.approx(1.0, abs=1e-12)

    def test_independent(self) -> None:
        """Independence gives 0."""
        assert corr_ratio(UNIFORM) == pytest.approx(0.0, abs=1e-12)

    def test_dsbs(self) -> None:
        """Binary symmetric pairs have theta = |rho|."""
        assert corr_ratio(make_dsbs(0.1)) == pytest.approx(0.8, abs=1e-12)

    def test_asymmetric(self) -> None:
        """theta(X;Y) and theta(Y;X) differ when Y is a function of X only."""
        # Y = X mod 2 with X uniform on {0, 1, 2}
        d = JointDist2.from_array([[1 / 3, 0.0], [0.0, 1 / 3], [1 / 3, 0.0]])
        report = correlation_report(d)
        assert report.theta_yx == pytest.approx(1.0, abs=1e-12)
        assert report.theta_xy < 1.0

    def test_degenerate_u(self) -> None:
        """A single value of U reduces to the unconditional measure."""
        d = make_binary(0.4, 0.5, 0.3)
        assert cond_corr_ratio(_with_u(d.array, [1.0])) == pytest.approx(
            corr_ratio(d), abs=1e-12
        )

    def test_equal_given_every_u(self) -> None:
        """Y = X in every slice gives 1."""
        t = np.zeros((3, 3, 2))
        t[:, :, 0] = np.diag([0.1, 0.2, 0.1])
        t[:, :, 1] = np.diag([0.3, 0.1, 0.2])
        d = JointDist3.from_array(t)
        assert cond_corr_ratio(d) == pytest.approx(1.0, abs=1e-12)
        assert cond_corr_ratio_yx(d) == pytest.approx(1.0, abs=1e-12)


class TestMmse:
    """Test the minimum mean square error of estimating X from (Y, U)."""

    def test_perfect_estimation(self) -> None:
        """Y = X gives 0."""
        assert mmse(_with_u(DIAGONAL.array, [1.0])) == pytest.approx(0.0, abs=1e-15)

    def test_independent(self) -> None:
        """X independent of (Y, U) gives var(X)."""
        d = _with_u(independent([0.3, 0.7], [0.5, 0.5]).array, [0.4, 0.6])
        assert mmse(d) == pytest.approx(0.21, abs=1e-12)

    def test_dsbs(self) -> None:
        """var(X) (1 - theta^2) = 0.25 * 0.36."""
        assert mmse(_with_u(make_dsbs(0.1).array, [1.0])) == pytest.approx(
            0.09, abs=1e-12
        )

    def test_variance_ratio(self, rng: np.random.Generator) -> None:
        """mmse = E[var(X|U)] (1 - theta^2(X;Y|U))."""
        for _ in range(50):
            d = random_dist3(rng, 3, 4, 2)
            expected = expected_var_x(d) * (1.0 - cond_corr_ratio(d) ** 2)
            assert mmse(d) == pytest.approx(expected, abs=1e-12)


class TestQMatrix:
    """Test the normalized joint matrix."""

    def test_uniform(self) -> None:
        """0.25 / sqrt(0.5 * 0.5) everywhere."""
        assert np.allclose(q_matrix(UNIFORM).entries, np.full((2, 2), 0.5))

    def test_diagonal(self) -> None:
        """Identity for X = Y."""
        assert np.allclose(q_matrix(DIAGONAL).entries, np.eye(2))

    def test_zero_column_removed(self) -> None:
        """Columns of zero mass are dropped."""
        d = JointDist2.from_array([[0.5, 0.0, 0.0], [0.0, 0.0, 0.5]])
        q = q_matrix(d)
        assert q.cols == [0, 2]
        assert np.asarray(q.entries).shape == (2, 2)


class TestMaxcorr:
    """Test maximal correlation."""

    def test_independent(self) -> None:
        """Rank-one Q gives 0."""
        assert maxcorr_svd(independent([0.2, 0.3, 0.5], [0.6, 0.4])) == pytest.approx(
            0.0, abs=1e-9
        )

    def test_diagonal(self) -> None:
        """X determines Y."""
        assert maxcorr_svd(diagonal_uniform(3)) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("p0", [0.05 * i for i in range(11)])
    def test_dsbs(self, p0: float) -> None:
        """rho_m(DSBS(p0)) = 1 - 2*p0 and the binary formula agrees."""
        d = make_dsbs(p0)
        assert maxcorr_svd(d) == pytest.approx(1.0 - 2.0 * p0, abs=1e-9)
        assert maxcorr_binary_formula(d) == pytest.approx(maxcorr_svd(d), abs=1e-12)

    def test_binary_formula_rejects_larger_alphabets(self) -> None:
        """Only 2x2 pairs."""
        with pytest.raises(NotBinary):
            maxcorr_binary_formula(diagonal_uniform(3))

    def test_single_row(self) -> None:
        """A 1 x k support is degenerate."""
        assert maxcorr_svd(JointDist2.from_array([[0.3, 0.7]])) == 0.0

    def test_bruteforce_diagonal(self) -> None:
        """Oracle finds 1 for X = Y."""
        assert maxcorr_bruteforce(diagonal_uniform(3)) == pytest.approx(1.0, abs=1e-9)

    def test_bruteforce_dsbs(self) -> None:
        """Oracle converges to 1 - 2*0.25."""
        assert maxcorr_bruteforce(make_dsbs(0.25)) == pytest.approx(0.5, abs=1e-6)

    def test_bruteforce_random(self, rng: np.random.Generator) -> None:
        """Oracle matches the SVD route on a full-support 3x4 pmf."""
        d = random_dist2(rng, 3, 4)
        assert maxcorr_bruteforce(d, iters=5000) == pytest.approx(
            maxcorr_svd(d), abs=1e-6
        )

    def test_bruteforce_is_seeded(self, rng: np.random.Generator) -> None:
        """Same seed, same answer."""
        d = random_dist2(rng, 4, 4)
        assert maxcorr_bruteforce(d, seed=3) == maxcorr_bruteforce(d, seed=3)


class TestConditionalMaxcorr:
    """Test cond_maxcorr and per-slice tables."""

    def test_degenerate_u(self) -> None:
        """A single value of U gives the unconditional value."""
        d = make_dsbs(0.2)
        assert cond_maxcorr(_with_u(d.array, [1.0])) == pytest.approx(
            maxcorr_svd(d), abs=1e-12
        )

    def test_mixture_is_max_over_slices(self) -> None:
        """max(0.8, 0.2)."""
        d = _mixture(0.1, 0.4)
        assert cond_maxcorr(d) == pytest.approx(0.8, abs=1e-9)
        slices = cond_maxcorr_slices(d)
        assert slices[0] == pytest.approx(0.8, abs=1e-9)
        assert slices[1] == pytest.approx(0.2, abs=1e-9)

    def test_conditionally_independent(self) -> None:
        """Product slices give 0."""
        t = np.stack(
            [
                0.5 * np.outer([0.2, 0.8], [0.5, 0.5]),
                0.5 * np.outer([0.6, 0.4], [0.1, 0.9]),
            ],
            axis=2,
        )
        assert cond_maxcorr(JointDist3.from_array(t)) == pytest.approx(0.0, abs=1e-9)

    def test_unsupported_slice(self) -> None:
        """Slices of zero mass report None and do not count."""
        t = np.zeros((2, 2, 2))
        t[:, :, 1] = make_dsbs(0.3).array
        d = JointDist3.from_array(t)
        assert cond_maxcorr_slices(d)[0] is None
        assert cond_maxcorr(d) == pytest.approx(0.4, abs=1e-9)


class TestReports:
    """Test bundled reports and event-conditional tables."""

    def test_conditional_report_degenerate(self) -> None:
        """Degenerate U reproduces the unconditional report."""
        d = make_binary(0.3, 0.4, 0.2)
        cond = conditional_report(_with_u(d.array, [1.0]))
        plain = correlation_report(d)
        for field in ("pearson", "theta_xy", "theta_yx", "maxcorr"):
            expected = getattr(plain, field)
            assert getattr(cond, field) == pytest.approx(expected, abs=1e-12)

    def test_event_table(self) -> None:
        """One row per supported u with its mass and slice report."""
        rows = event_conditional_table(_mixture(0.1, 0.4))
        assert [r.u for r in rows] == [0, 1]
        assert [r.mass for r in rows] == pytest.approx([0.5, 0.5])
        assert rows[0].report.maxcorr == pytest.approx(0.8, abs=1e-9)
        assert rows[1].report.maxcorr == pytest.approx(0.2, abs=1e-9)

    def test_event_conditional_zero_mass(self) -> None:
        """A slice of zero mass cannot be reported."""
        t = np.zeros((2, 2, 2))
        t[:, :, 0] = make_dsbs(0.3).array
        with pytest.raises(ZeroConditioningMass):
            event_conditional(JointDist3.from_array(t), 1)


class TestGacsKorner:
    """Test the common part and its entropy."""

    def test_full_support(self, rng: np.random.Generator) -> None:
        """One component, no common information."""
        assert gk_common_info(random_dist2(rng, 3, 3)) == pytest.approx(0.0)

    def test_two_half_blocks(self) -> None:
        """Two blocks of mass 1/2 give one bit."""
        d = block_diagonal([[[1, 2], [2, 1]], [[1, 1], [3, 1]]], [0.5, 0.5])
        assert gk_common_info(d) == pytest.approx(1.0, abs=1e-12)
        assert common_part(d) == ([0, 0, 1, 1], [0, 0, 1, 1])

    @pytest.mark.parametrize("n", [2, 3, 4, 8])
    def test_diagonal_uniform(self, n: int) -> None:
        """n components of equal mass."""
        assert gk_common_info(diagonal_uniform(n)) == pytest.approx(math.log2(n))

    def test_unsupported_symbols(self) -> None:
        """Symbols of zero mass get -1."""
        d = JointDist2.from_array([[0.5, 0.0, 0.0], [0.0, 0.0, 0.5]])
        assert common_part(d) == ([0, 1], [0, -1, 1])
