import numpy as np
import pytest

from efinv import (
    BadParams,
    NotExistent,
    NotInner,
    NotOuter,
    ShapeMismatch,
    bc_to_ef,
    bilateral_inverse,
    crcr_inverse,
    drazin,
    ef_canonical_form,
    ef_exists,
    ef_from_outer_pair,
    ef_inverse,
    ef_is_inner,
    ef_verify,
    group_inverse,
    inner_inverse_sampler,
    mary_inverse,
    matrix_index,
    moore_penrose,
    nullspace_of,
    outer_prescribed,
    range_of,
)

from conftest import (
    example1,
    example2,
    example3,
    random_index,
    random_rank,
    random_valid_triple,
    rng_for,
)


def qp_pair(A):
    P = moore_penrose(A)
    return P @ A, A @ P


class TestExistence:
    def test_worked_example_exists(self):
        A, E, F, _ = example1(a=2.0)
        report = ef_exists(A, E, F)
        assert report.exists
        assert all(value < 1e-12 for value in report.checks.values())
        assert report.details == {"b": True, "c": True, "d": True, "e": True}

    def test_orthogonal_projector_pair_always_exists(self, rng):
        A = random_rank(rng, 5, 4, 2)
        E, F = qp_pair(A)
        report = ef_exists(A, E, F)
        assert report.exists and not report.failed_checks

    def test_non_idempotent_left_factor_fails(self, rng):
        A = random_rank(rng, 2, 2, 1)
        E = np.array([[1.0, 1.0], [0.0, 1.0]])
        report = ef_exists(A, E, np.eye(2))
        assert not report.exists
        assert "E_idem" in report.failed_checks

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            ef_exists(np.eye(2), np.eye(3), np.eye(2))

    def test_zero_matrix_needs_zero_pair(self):
        A = np.zeros((3, 2))
        assert ef_exists(A, np.zeros((2, 2)), np.zeros((3, 3))).exists
        assert not ef_exists(A, np.eye(2), np.zeros((3, 3))).exists

    def test_zero_pair_on_any_matrix(self, rng):
        A = random_rank(rng, 4, 3, 2)
        assert ef_exists(A, np.zeros((3, 3)), np.zeros((4, 4))).exists
        np.testing.assert_array_equal(
            ef_inverse(A, np.zeros((3, 3)), np.zeros((4, 4))), np.zeros((3, 4))
        )


class TestEfInverse:
    def test_worked_example_one(self):
        A, E, F, expected = example1(a=2.0)
        np.testing.assert_allclose(ef_inverse(A, E, F), expected, atol=1e-13)

    def test_worked_example_two(self):
        A, E, F, expected = example2(a=2.0, b=4.0)
        np.testing.assert_allclose(ef_inverse(A, E, F), expected, atol=1e-13)

    def test_orthogonal_pair_gives_moore_penrose(self):
        A = rng_for(9).standard_normal((4, 3))
        E, F = qp_pair(A)
        assert np.linalg.norm(ef_inverse(A, E, F) - moore_penrose(A)) < 1e-11

    def test_not_existent_carries_report(self, rng):
        A = random_rank(rng, 3, 3, 2)
        with pytest.raises(NotExistent) as info:
            ef_inverse(A, np.eye(3) * 2.0, np.eye(3))
        assert info.value.report is not None
        assert not info.value.report.exists


class TestVerify:
    def test_computed_inverse_passes(self, rng):
        A, E, F, _ = random_valid_triple(rng, 5, 4, 3, 2)
        cert = ef_verify(A, E, F, ef_inverse(A, E, F))
        assert cert.passed

    def test_moore_penrose_passes_with_orthogonal_pair(self, rng):
        A = random_rank(rng, 4, 3, 2)
        E, F = qp_pair(A)
        assert ef_verify(A, E, F, moore_penrose(A)).passed

    def test_perturbed_candidate_fails(self):
        A, E, F, _ = example1(a=2.0)
        X = ef_inverse(A, E, F) + 0.1 * np.ones((3, 4))
        cert = ef_verify(A, E, F, X)
        assert not cert.passed
        assert cert.left_residual > 0.09


class TestOuterPair:
    def test_worked_example_factors(self):
        A, E, F, expected = example1(a=2.0)
        X1, X2 = ef_from_outer_pair(A, E, F)
        np.testing.assert_allclose(E @ X1, expected, atol=1e-13)
        np.testing.assert_allclose(X2 @ F, expected, atol=1e-13)

    def test_orthogonal_pair_absorbs_into_pseudoinverse(self, rng):
        A = random_rank(rng, 4, 3, 2)
        E, F = qp_pair(A)
        P = moore_penrose(A)
        X1, X2 = ef_from_outer_pair(A, E, F)
        assert np.linalg.norm(X1 - P) < 1e-12
        assert np.linalg.norm(X2 - P) < 1e-12

    def test_factors_are_outer_inverses(self):
        rng = rng_for(11)
        A, E, F, X = random_valid_triple(rng, 6, 5, 3, 2)
        X1, X2 = ef_from_outer_pair(A, E, F)
        assert np.linalg.norm(X1 @ A @ X1 - X1) < 1e-10
        assert np.linalg.norm(X2 @ A @ X2 - X2) < 1e-10
        assert np.linalg.norm(E @ X1 - X2 @ F) < 1e-11
        assert np.linalg.norm(E @ X1 - X) < 1e-11


class TestCanonicalForm:
    def test_worked_example_three(self):
        A, E, F, expected = example3(a=2.0, b=3.0, c=5.0)
        X = ef_canonical_form(A, E, F)
        np.testing.assert_allclose(X, expected, atol=1e-13)
        assert np.linalg.norm(X - ef_inverse(A, E, F)) < 1e-12

    def test_orthogonal_pair_reduces_to_pseudoinverse(self, rng):
        A = random_rank(rng, 5, 4, 3)
        E, F = qp_pair(A)
        assert np.linalg.norm(ef_canonical_form(A, E, F) - moore_penrose(A)) < 1e-11

    def test_matches_product_form(self):
        A, E, F, _ = example1(a=2.0)
        assert np.linalg.norm(ef_canonical_form(A, E, F) - ef_inverse(A, E, F)) < 1e-12

    def test_reports_violated_blocks(self, rng):
        A = random_rank(rng, 4, 3, 2)
        with pytest.raises(NotExistent) as info:
            ef_canonical_form(A, 2.0 * np.eye(3), np.eye(4))
        assert info.value.violated


class TestCrcr:
    def test_adjoint_pair_gives_moore_penrose(self, rng):
        A = random_rank(rng, 4, 4, 2)
        B = A.conj().T
        assert np.linalg.norm(crcr_inverse(A, B, B) - moore_penrose(A)) < 1e-10

    def test_power_pair_gives_drazin(self, rng):
        A, _ = random_index(rng, 5, 2)
        Ak = np.linalg.matrix_power(A, matrix_index(A))
        assert np.linalg.norm(crcr_inverse(A, Ak, Ak) - drazin(A)) < 1e-10

    def test_worked_example_two(self):
        A, E, F, expected = example2(a=2.0, b=4.0)
        np.testing.assert_allclose(crcr_inverse(A, E, F), expected, atol=1e-13)

    def test_rank_condition_reported(self, rng):
        A = random_rank(rng, 3, 3, 1)
        B = np.eye(3)
        with pytest.raises(NotExistent) as info:
            crcr_inverse(A, B, B)
        assert info.value.ranks == (1, 3, 3)

    def test_defining_equations(self, rng):
        A = random_rank(rng, 4, 4, 3)
        B = A.conj().T
        X = crcr_inverse(A, B, B)
        assert np.linalg.norm(X @ A @ B - B) < 1e-10
        assert np.linalg.norm(B @ A @ X - B) < 1e-10
        assert range_of(B).contains(range_of(X))
        assert range_of(B.conj().T).contains(range_of(X.conj().T))


class TestBcToEf:
    def test_adjoint_pair_gives_orthogonal_projectors(self, rng):
        A = random_rank(rng, 4, 4, 2)
        B = A.conj().T
        E, F = bc_to_ef(A, B, B)
        QA, PA = qp_pair(A)
        assert np.linalg.norm(E - QA) < 1e-10
        assert np.linalg.norm(F - PA) < 1e-10

    def test_power_pair_gives_spectral_projector(self, rng):
        A, _ = random_index(rng, 5, 2)
        Ak = np.linalg.matrix_power(A, matrix_index(A))
        E, F = bc_to_ef(A, Ak, Ak)
        P = drazin(A) @ A
        assert np.linalg.norm(E - P) < 1e-10
        assert np.linalg.norm(F - P) < 1e-10

    def test_bridge_to_prescribed_inverse(self):
        A, B, C, expected = example2(a=2.0, b=4.0)
        E, F = bc_to_ef(A, B, C)
        assert np.linalg.norm(ef_inverse(A, E, F) - crcr_inverse(A, B, C)) < 1e-12
        np.testing.assert_allclose(ef_inverse(A, E, F), expected, atol=1e-12)

    def test_bridge_on_random_valid_data(self, rng):
        for trial in range(5):
            A = random_rank(rng, 5, 5, 3)
            B = random_rank(rng, 5, 5, 2)
            C = B.conj().T
            try:
                X = crcr_inverse(A, B, C)
            except NotExistent:
                continue
            E, F = bc_to_ef(A, B, C)
            assert np.linalg.norm(ef_inverse(A, E, F) - X) < 1e-10


class TestMary:
    def test_adjoint_gives_moore_penrose(self, rng):
        A = random_rank(rng, 4, 4, 2)
        assert np.linalg.norm(mary_inverse(A, A.conj().T) - moore_penrose(A)) < 1e-10

    def test_self_gives_group_inverse(self, rng):
        A, _ = random_index(rng, 5, 1)
        assert np.linalg.norm(mary_inverse(A, A) - group_inverse(A)) < 1e-10

    def test_power_gives_drazin(self, rng):
        A, _ = random_index(rng, 6, 3)
        Ak = np.linalg.matrix_power(A, matrix_index(A))
        assert np.linalg.norm(mary_inverse(A, Ak) - drazin(A)) < 1e-9

    def test_sandwich_equations(self, rng):
        A = random_rank(rng, 4, 4, 3)
        D = A.conj().T
        X = mary_inverse(A, D)
        assert np.linalg.norm(X @ A @ D - D) < 1e-10
        assert np.linalg.norm(D @ A @ X - D) < 1e-10

    def test_nilpotent_self_not_existent(self):
        A = np.array([[0.0, 1.0], [0.0, 0.0]])
        with pytest.raises(NotExistent):
            mary_inverse(A, A)


class TestIsInner:
    def test_orthogonal_pair_inner(self, rng):
        A = random_rank(rng, 4, 3, 2)
        E, F = qp_pair(A)
        verdict, clauses = ef_is_inner(A, E, F)
        assert verdict and all(clauses.values())

    def test_worked_example_not_inner(self):
        A, E, F, _ = example1(a=2.0)
        # E averages the first two coordinates, so AE != A
        assert np.linalg.norm(A @ E - A) > 0.5
        verdict, clauses = ef_is_inner(A, E, F)
        assert not verdict and not any(clauses.values())

    def test_identity_pair_on_invertible(self, rng):
        A = random_rank(rng, 3, 3, 3)
        verdict, _ = ef_is_inner(A, np.eye(3), np.eye(3))
        assert verdict

    def test_clauses_agree_on_valid_triples(self, rng):
        for trial in range(10):
            A, E, F, _ = random_valid_triple(rng, 5, 4, 3, 2)
            _, clauses = ef_is_inner(A, E, F)
            assert len(set(clauses.values())) == 1


class TestBilateral:
    def test_pseudoinverse_both_orders(self, rng):
        A = random_rank(rng, 4, 3, 2)
        P = moore_penrose(A)
        for order in ("outer-first", "inner-first"):
            X, E, F = bilateral_inverse(A, P, P, order)
            assert np.linalg.norm(X - P) < 1e-12
            assert ef_verify(A, E, F, X).passed

    def test_drazin_then_pseudoinverse(self, rng):
        A, _ = random_index(rng, 5, 2)
        Ad = drazin(A)
        P = moore_penrose(A)
        X, E, F = bilateral_inverse(A, Ad, P, "outer-first")
        assert np.linalg.norm(X - Ad @ A @ P) < 1e-12
        assert np.linalg.norm(E - Ad @ A) < 1e-12
        assert ef_verify(A, E, F, X).passed
        X2, E2, F2 = bilateral_inverse(A, Ad, P, "inner-first")
        assert np.linalg.norm(X2 - P @ A @ Ad) < 1e-12
        assert np.linalg.norm(F2 - A @ Ad) < 1e-12
        assert ef_verify(A, E2, F2, X2).passed

    def test_certificate_closure_with_sampled_inner(self, rng):
        # arbitrary outer x inner composition is itself a prescribed inverse
        for trial in range(6):
            A, _, _, X1 = random_valid_triple(rng, 5, 4, 3, 2)
            sampler = inner_inverse_sampler(A, seed=trial)
            X2 = sampler.sample(0)
            for order in ("outer-first", "inner-first"):
                X, E, F = bilateral_inverse(A, X1, X2, order)
                assert ef_verify(A, E, F, X).passed

    def test_membership_checks(self, rng):
        A = random_rank(rng, 4, 3, 2)
        P = moore_penrose(A)
        bad = P + np.ones((3, 4))
        with pytest.raises(NotOuter):
            bilateral_inverse(A, bad, P, "outer-first")
        with pytest.raises(NotInner):
            bilateral_inverse(A, P, bad, "outer-first")

    def test_bad_order(self, rng):
        A = random_rank(rng, 3, 3, 2)
        P = moore_penrose(A)
        with pytest.raises(BadParams):
            bilateral_inverse(A, P, P, "sideways")


class TestInvariants:
    def test_inner_inverse_independence(self, rng):
        # the product E G F is the same for every inner inverse G
        for trial in range(5):
            A, E, F, _ = random_valid_triple(rng, 5, 4, 3, 2)
            base = E @ moore_penrose(A) @ F
            sampler = inner_inverse_sampler(A, seed=100 + trial)
            for draw in range(10):
                G = sampler.sample(draw)
                assert np.linalg.norm(E @ G @ F - base) < 1e-10

    def test_uniqueness_under_perturbation(self, rng):
        A, E, F, _ = random_valid_triple(rng, 5, 4, 3, 2)
        X = ef_inverse(A, E, F)
        direction = rng.standard_normal((4, 5)) + 1j * rng.standard_normal((4, 5))
        direction /= np.linalg.norm(direction)
        cert = ef_verify(A, E, F, X + 1e-3 * direction)
        assert not cert.passed
        assert max(cert.outer_residual, cert.left_residual, cert.right_residual) > 1e-4

    def test_triple_representation(self, rng):
        for trial in range(5):
            A, E, F, _ = random_valid_triple(rng, 6, 5, 3, 2)
            X_prod = ef_inverse(A, E, F)
            X_canon = ef_canonical_form(A, E, F)
            X_outer = outer_prescribed(A, range_of(E), nullspace_of(F))
            assert np.linalg.norm(X_prod - X_canon) < 1e-10
            assert np.linalg.norm(X_prod - X_outer) < 1e-10

    def test_clause_equivalence_valid_and_perturbed(self, rng):
        for trial in range(10):
            A, E, F, _ = random_valid_triple(rng, 5, 4, 2, 2)
            report = ef_exists(A, E, F)
            assert report.details == {"b": True, "c": True, "d": True, "e": True}
            E_bad = E + 0.01 * (rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
            F_bad = F + 0.01 * (rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5)))
            report = ef_exists(A, E_bad, F_bad)
            assert report.details == {"b": False, "c": False, "d": False, "e": False}
