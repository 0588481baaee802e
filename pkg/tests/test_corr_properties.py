"""Property tests for the correlation measures on seeded random families.

Tests cover:
- |rho| <= theta <= rho_m <= 1 for conditional measures
- Zero iff conditional independence, rho_m = 1 iff common part
- Monotonicity in the observed variable
- Event-conditional bounds for discrete U
- Tensorization, data processing and the correlation-ratio chain rule
- Joint maximal correlation of no-signaling boxes
- Conditioning reduces the covariance gap
- Concavity in P_U and invariance under relabeling
- Singular-value route against the alternating-maximization oracle
"""

import numpy as np
import pytest

from corrlab.common.constants import ORDER_TOL
from corrlab.corr import (
    cond_corr_ratio,
    cond_maxcorr,
    cond_maxcorr_array,
    cond_pearson,
    conditional_report,
    corr_ratio,
    covariance_gap,
    event_conditional_table,
    gk_common_info,
    maxcorr_array,
    maxcorr_bruteforce,
    maxcorr_svd,
    pearson,
)
from corrlab.dist import (
    JointDist2,
    JointDist3,
    block_diagonal,
    markov_tensor,
    nosignaling_joint,
    product_box,
    product_pair,
    random_dist2,
    random_dist3,
    random_kernel,
    random_pmf,
)


def _dims(rng: np.random.Generator, lo: int, hi: int, k: int) -> list[int]:
    return [int(v) for v in rng.integers(lo, hi + 1, size=k)]


class TestOrdering:
    """Test the ordering chain and the extreme cases."""

    def test_chain_on_random_tensors(self, rng: np.random.Generator) -> None:
        """|rho| <= theta <= rho_m <= 1 on 200 tensors up to 4x4x3."""
        for _ in range(200):
            nx, ny = _dims(rng, 2, 4, 2)
            nu = int(rng.integers(1, 4))
            d = random_dist3(rng, nx, ny, nu)
            rho = abs(cond_pearson(d))
            theta = cond_corr_ratio(d)
            rho_m = cond_maxcorr(d)
            assert rho <= theta + ORDER_TOL
            assert theta <= rho_m + ORDER_TOL
            assert rho_m <= 1.0 + ORDER_TOL
            assert conditional_report(d).satisfies_ordering()

    def test_zero_iff_conditionally_independent(self, rng: np.random.Generator) -> None:
        """Product slices give 0; random full-support tensors do not."""
        for _ in range(50):
            pu = rng.dirichlet(np.ones(3))
            slices = [
                np.outer(rng.dirichlet(np.ones(3)), rng.dirichlet(np.ones(4)))
                for _ in range(3)
            ]
            t = np.stack([w * s for w, s in zip(pu, slices, strict=True)], axis=2)
            assert cond_maxcorr(JointDist3.from_array(t)) <= 1e-9
            assert cond_maxcorr(random_dist3(rng, 3, 4, 3)) > 1e-9

    def test_unit_maxcorr_iff_common_part(self, rng: np.random.Generator) -> None:
        """rho_m = 1 exactly when the Gács-Körner common information is positive."""
        for _ in range(30):
            blocks = [random_pmf(rng, (2, 3)), random_pmf(rng, (2, 2))]
            d = block_diagonal(blocks, list(rng.dirichlet(np.ones(2))))
            assert maxcorr_svd(d) == pytest.approx(1.0, abs=1e-9)
            assert gk_common_info(d) > 0.0
            full = random_dist2(rng, 3, 3)
            assert maxcorr_svd(full) < 1.0 - 1e-9
            assert gk_common_info(full) == 0.0

    def test_observing_more_never_hurts(self, rng: np.random.Generator) -> None:
        """theta and rho_m against (Y, Z) are at least those against Y."""
        for _ in range(100):
            p = random_pmf(rng, (3, 2, 3))
            merged = JointDist2.from_array(p.reshape(3, 6))
            plain = JointDist2.from_array(p.sum(axis=2))
            assert corr_ratio(merged) >= corr_ratio(plain) - 1e-9
            assert maxcorr_svd(merged) >= maxcorr_svd(plain) - 1e-9


class TestEventConditional:
    """Test bounds by the event-conditional measures for discrete U."""

    def test_bounds_on_random_tensors(self, rng: np.random.Generator) -> None:
        """rho below the largest slice, theta between slices, rho_m the max."""
        for _ in range(200):
            d = random_dist3(rng, 3, 3, int(rng.integers(2, 5)))
            rows = event_conditional_table(d)
            slice_rho = max(r.report.pearson for r in rows)
            slice_theta = [r.report.theta_xy for r in rows]
            slice_max = max(r.report.maxcorr for r in rows)
            assert cond_pearson(d) <= max(slice_rho, 0.0) + 1e-9
            assert min(slice_theta) - 1e-9 <= cond_corr_ratio(d)
            assert cond_corr_ratio(d) <= max(slice_theta) + 1e-9
            assert cond_maxcorr(d) == pytest.approx(slice_max, abs=1e-9)


class TestTensorization:
    """Test rho_m of independent pairs of pairs."""

    def test_product_is_max(self, rng: np.random.Generator) -> None:
        """rho_m(d1 x d2) = max(rho_m(d1), rho_m(d2)) on 50 random pairs."""
        for _ in range(50):
            d1 = random_dist2(rng, *_dims(rng, 2, 3, 2))
            d2 = random_dist2(rng, *_dims(rng, 2, 3, 2))
            expected = max(maxcorr_svd(d1), maxcorr_svd(d2))
            assert maxcorr_svd(product_pair(d1, d2)) == pytest.approx(
                expected, abs=1e-8
            )

    def test_conditional_with_shared_u(self, rng: np.random.Generator) -> None:
        """Slice-wise products under an independent U tensorize too."""
        for _ in range(20):
            pu = rng.dirichlet(np.ones(2))
            a = [random_pmf(rng, (2, 2)) for _ in range(2)]
            b = [random_pmf(rng, (2, 3)) for _ in range(2)]
            prod = np.stack(
                [
                    pu[u] * np.einsum("ab,cd->acbd", a[u], b[u]).reshape(4, 6)
                    for u in range(2)
                ],
                axis=2,
            )
            first = np.stack([pu[u] * a[u] for u in range(2)], axis=2)
            second = np.stack([pu[u] * b[u] for u in range(2)], axis=2)
            assert cond_maxcorr_array(prod) <= max(
                cond_maxcorr_array(first), cond_maxcorr_array(second)
            ) + 1e-8
            for u in range(2):
                assert maxcorr_array(prod[:, :, u]) == pytest.approx(
                    max(maxcorr_array(a[u]), maxcorr_array(b[u])), abs=1e-8
                )


class TestDataProcessing:
    """Test the Markov chain X -> (Z, U) -> Y."""

    @staticmethod
    def _chain(rng: np.random.Generator, same_law: bool) -> np.ndarray:
        nz, nu, n = 3, 2, 3
        if same_law:
            pzu = rng.dirichlet(np.ones(nz * nu)).reshape(nz, nu)
            k = rng.dirichlet(np.ones(n), size=(nz, nu))
            p_xzu = np.einsum("zu,zux->xzu", pzu, k)
        else:
            p_xzu = random_pmf(rng, (n, nz, nu))
            k = rng.dirichlet(np.ones(n), size=(nz, nu))
        return markov_tensor(p_xzu, k)

    @staticmethod
    def _views(t: np.ndarray) -> tuple[JointDist3, JointDist3, JointDist3]:
        xy = JointDist3.from_array(t.sum(axis=2))
        xz = JointDist3.from_array(t.sum(axis=1))
        yz = JointDist3.from_array(t.sum(axis=0))
        return xy, xz, yz

    def test_inequalities(self, rng: np.random.Generator) -> None:
        """Each conditional measure contracts through Z on 200 chains."""
        for _ in range(200):
            xy, xz, yz = self._views(self._chain(rng, same_law=False))
            assert abs(cond_pearson(xy)) <= (
                cond_corr_ratio(xz) * cond_corr_ratio(yz) + 1e-9
            )
            assert cond_corr_ratio(xy) <= cond_corr_ratio(xz) * cond_maxcorr(yz) + 1e-9
            assert cond_maxcorr(xy) <= cond_maxcorr(xz) * cond_maxcorr(yz) + 1e-9

    def test_equality_for_identical_laws(self, rng: np.random.Generator) -> None:
        """Pearson and rho_m bounds are tight when (X,Z,U) and (Y,Z,U) agree."""
        for _ in range(50):
            xy, xz, yz = self._views(self._chain(rng, same_law=True))
            assert cond_pearson(xy) == pytest.approx(
                cond_corr_ratio(xz) * cond_corr_ratio(yz), abs=1e-10
            )
            assert cond_maxcorr(xy) == pytest.approx(
                cond_maxcorr(xz) * cond_maxcorr(yz), abs=1e-10
            )

    def test_covariance_gap(self, rng: np.random.Generator) -> None:
        """Conditioning on U never widens sqrt(var X var Y) - cov(X, Y)."""
        for _ in range(200):
            d = random_dist3(rng, 3, 3, 3)
            plain = JointDist3.from_array(d.array.sum(axis=2, keepdims=True))
            assert covariance_gap(d) <= covariance_gap(plain) + 1e-10


class TestChainRule:
    """Test 1 - theta^2(X;(Y,Z)|U) = (1 - theta^2(X;Z|U))(1 - theta^2(X;Y|Z,U))."""

    def test_identity_on_random_tensors(self, rng: np.random.Generator) -> None:
        """Exact on 200 random p[x, y, z, u]."""
        for _ in range(200):
            nx, ny, nz, nu = _dims(rng, 2, 3, 4)
            p = random_pmf(rng, (nx, ny, nz, nu))
            joint = cond_corr_ratio(JointDist3.from_array(p.reshape(nx, ny * nz, nu)))
            via_z = cond_corr_ratio(JointDist3.from_array(p.sum(axis=1)))
            rest = cond_corr_ratio(JointDist3.from_array(p.reshape(nx, ny, nz * nu)))
            lhs = 1.0 - joint**2
            rhs = (1.0 - via_z**2) * (1.0 - rest**2)
            assert lhs == pytest.approx(rhs, abs=1e-10)
            assert joint >= via_z - 1e-9
            assert joint >= rest * np.sqrt(1.0 - via_z**2) - 1e-9

    def test_maxcorr_inequalities(self, rng: np.random.Generator) -> None:
        """The rho_m counterparts hold as inequalities on 200 random p[x, y, z, u]."""
        for _ in range(200):
            nx, ny, nz, nu = _dims(rng, 2, 3, 4)
            p = random_pmf(rng, (nx, ny, nz, nu))
            yz = JointDist3.from_array(p.reshape(nx, ny * nz, nu))
            given_zu = JointDist3.from_array(p.reshape(nx, ny, nz * nu))
            joint = cond_maxcorr(yz)
            via_z = cond_maxcorr(JointDist3.from_array(p.sum(axis=1)))
            rest = cond_maxcorr(given_zu)
            lhs = 1.0 - joint**2
            assert lhs >= (1.0 - via_z**2) * (1.0 - rest**2) - 1e-9
            assert joint >= rest - 1e-9
            assert cond_corr_ratio(yz) >= cond_corr_ratio(given_zu) - 1e-9


class TestNoSignaling:
    """Test the joint maximal correlation of a no-signaling box output."""

    def test_max_identity(self, rng: np.random.Generator) -> None:
        """rho_m((U,X);(V,Y)) = max(rho_m(X;Y), rho_m(U;V|X,Y)) on U-X-Y-V."""
        for _ in range(100):
            p_xy = random_pmf(rng, (2, 2))
            box = product_box(random_kernel(rng, 2, 2), random_kernel(rng, 2, 2))
            joint = nosignaling_joint(p_xy, box)
            pairs = np.transpose(joint, (0, 1, 3, 2)).reshape(4, 4)
            given_xy = np.transpose(joint, (0, 3, 1, 2)).reshape(2, 2, 4)
            expected = max(maxcorr_array(p_xy), cond_maxcorr_array(given_xy))
            assert maxcorr_array(pairs) == pytest.approx(expected, abs=1e-7)


class TestStructural:
    """Test concavity in P_U and label invariance."""

    def test_concavity_in_pu(self, rng: np.random.Generator) -> None:
        """Mixing U-marginals does not lower rho_m below the convex combination."""
        for _ in range(50):
            slices = random_pmf(rng, (3, 3, 3))
            slices /= slices.sum(axis=(0, 1), keepdims=True)
            p1, p2 = rng.dirichlet(np.ones(3)), rng.dirichlet(np.ones(3))
            lam = float(rng.random())
            mix = lam * p1 + (1.0 - lam) * p2
            c1 = cond_maxcorr_array(slices * p1)
            c2 = cond_maxcorr_array(slices * p2)
            assert cond_maxcorr_array(slices * mix) >= lam * c1 + (1 - lam) * c2 - 1e-9

    def test_relabeling(self, rng: np.random.Generator) -> None:
        """rho_m and C_GK ignore labels; rho and theta follow affine maps."""
        for _ in range(50):
            d = random_dist2(rng, 3, 4)
            perm_x, perm_y = rng.permutation(3), rng.permutation(4)
            shuffled = JointDist2.from_array(d.array[np.ix_(perm_x, perm_y)])
            assert maxcorr_svd(shuffled) == pytest.approx(maxcorr_svd(d), abs=1e-10)
            assert gk_common_info(shuffled) == pytest.approx(gk_common_info(d))

            lx = d.alphabet_x.values
            scaled = JointDist2.from_array(
                d.array,
                labels_x=(-3.0 * lx + 7.0).tolist(),
                labels_y=d.alphabet_y.labels,
            )
            assert pearson(scaled) == pytest.approx(-pearson(d), abs=1e-10)
            assert corr_ratio(scaled) == pytest.approx(corr_ratio(d), abs=1e-10)


class TestOracle:
    """Test the SVD route against alternating maximization."""

    def test_two_hundred_random_pmfs(self, rng: np.random.Generator) -> None:
        """Agreement within 1e-6 on full-support pmfs up to 5x5."""
        for _ in range(200):
            d = random_dist2(rng, *_dims(rng, 2, 5, 2))
            assert maxcorr_bruteforce(d, iters=5000) == pytest.approx(
                maxcorr_svd(d), abs=1e-6
            )
