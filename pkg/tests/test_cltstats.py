import math
from fractions import Fraction as F

import pytest

from symcheb import (
    ChebKind,
    DomainError,
    UsageError,
    char_fn,
    cheb_coeffs,
    convergence_report,
    distribution,
    freegroup_convergence_report,
    moments,
    sigma2_rederived,
    sigma2_reported,
)
from symcheb.cltstats import (
    MODE_EXACT,
    MODE_FLOAT,
    fg_marginal_moments_exact,
    fg_marginal_moments_float,
    marginal_moments_exact,
    marginal_moments_float,
)

T = ChebKind.FIRST


class TestDistribution:
    def test_degree_one(self):
        d = distribution(1, F(2), 1)
        assert d.probabilities == {(1,): F(1, 2), (-1,): F(1, 2)}

    def test_degree_two(self):
        d = distribution(2, F(2), 1)
        assert d.probabilities == {(2,): F(2, 7), (0,): F(3, 7), (-2,): F(2, 7)}

    @pytest.mark.parametrize("n,c,k", [(5, F(3, 2), 1), (4, F(2), 2), (3, F(3), 3)])
    def test_normalization_is_exact(self, n, c, k):
        d = distribution(n, c, k)
        assert sum(d.probabilities.values()) == 1
        assert all(p > 0 for p in d.probabilities.values())

    def test_rejects_c_at_most_one(self):
        with pytest.raises(DomainError):
            distribution(3, F(1), 1)
        with pytest.raises(DomainError):
            distribution(3, F(1, 2), 1)

    def test_negative_coefficient_carries_witness(self):
        with pytest.raises(DomainError) as info:
            distribution(3, F(11, 10), 2)
        assert info.value.witness == (-1, 0)

    def test_rejects_nonpositive_n(self):
        with pytest.raises(UsageError):
            distribution(0, F(2), 1)


class TestMoments:
    def test_second_moment_n2(self):
        report = moments(distribution(2, F(2), 1))
        assert report.covariance[0][0] == F(16, 7)
        assert report.mean == (F(0),)

    def test_second_moment_n4(self):
        # T_4(x + 1/x) has coefficients 8, 24, 33, 24, 8 and T_4(2) = 97
        report = moments(distribution(4, F(2), 1))
        assert report.covariance[0][0] == F(448, 97)
        assert report.m2_over_n[0] == pytest.approx(float(F(112, 97)))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_odd_moments_vanish(self, n):
        d = distribution(n, F(5, 2), 2)
        third = [F(0), F(0)]
        for exponents, prob in d.probabilities.items():
            for i in range(2):
                third[i] += exponents[i] ** 3 * prob
        assert third == [0, 0]
        assert moments(d).mean == (0, 0)

    def test_covariance_diagonal_with_equal_entries(self):
        for n in range(1, 9):
            report = moments(distribution(n, F(2), 2))
            assert report.covariance[0][1] == 0
            assert report.covariance[1][0] == 0
            assert report.covariance[0][0] == report.covariance[1][1]

    def test_probabilities_symmetric_under_flips_and_permutations(self):
        d = distribution(4, F(5, 2), 2)
        for (e1, e2), prob in d.probabilities.items():
            assert d.probabilities[(-e1, e2)] == prob
            assert d.probabilities[(e1, -e2)] == prob
            assert d.probabilities[(e2, e1)] == prob


class TestCharFn:
    def test_at_zero(self):
        assert char_fn(7, F(2), 1, [0.0]) == pytest.approx(1.0, abs=1e-12)
        assert char_fn(4, F(3, 2), 2, [0.0, 0.0]) == pytest.approx(1.0, abs=1e-12)

    def test_degree_one_is_cosine(self):
        for theta in (0.3, 1.2, 2.9):
            assert char_fn(1, F(2), 1, [theta]) == pytest.approx(math.cos(theta), abs=1e-12)

    def test_even_degree_parity(self):
        assert char_fn(2, F(2), 1, [math.pi]) == pytest.approx(1.0, abs=1e-12)

    def test_matches_distribution_sum(self):
        thetas = [-3.0 + 6.0 * i / 99 for i in range(100)]
        for n in range(1, 13):
            for c in (F(3, 2), F(2)):
                d = distribution(n, c, 1)
                for theta in thetas:
                    direct = sum(
                        float(p) * math.cos(e[0] * theta) for e, p in d.probabilities.items()
                    )
                    assert char_fn(n, c, 1, [theta]) == pytest.approx(direct, abs=1e-10)

    def test_validates_arguments(self):
        with pytest.raises(UsageError):
            char_fn(3, F(2), 2, [0.0])
        with pytest.raises(DomainError):
            char_fn(3, F(1), 1, [0.0])


class TestVarianceConstants:
    def test_reported_values(self):
        assert sigma2_reported(2, 1) == pytest.approx(5.4641016, abs=1e-6)
        assert sigma2_reported(2, 2) == pytest.approx(2.7320508, abs=1e-6)
        assert sigma2_reported(3, 1) == pytest.approx(7.2426407, abs=1e-6)

    def test_rederived_values(self):
        assert sigma2_rederived(2, 1) == pytest.approx(2 / math.sqrt(3), abs=1e-12)
        assert sigma2_rederived(2, 2) == pytest.approx(1 / math.sqrt(3), abs=1e-12)
        assert sigma2_rederived(3, 1) == pytest.approx(3 / math.sqrt(8), abs=1e-12)

    def test_domain(self):
        for fn in (sigma2_reported, sigma2_rederived):
            with pytest.raises(DomainError):
                fn(1, 1)
            with pytest.raises(DomainError):
                fn(F(1, 2), 1)


class TestMarginalEngine:
    @pytest.mark.parametrize("c,k", [(F(2), 1), (F(3, 2), 1), (F(5, 2), 2), (F(3), 3)])
    def test_exact_identities(self, c, k):
        # independent oracle: sum_j j^2 b_j = n (c/k) U_{n-1}(c) and
        # sum_j b_j = T_n(c), both from the coefficient-vector recurrence
        ns = [1, 2, 3, 4, 8, 16]
        for n, m2, _m4 in marginal_moments_exact(c, k, ns):
            t_n = cheb_coeffs(ChebKind.FIRST, n).evaluate(c)
            u_prev = cheb_coeffs(ChebKind.SECOND, n - 1).evaluate(c)
            assert m2 == F(n) * F(c, k) * u_prev / t_n

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_matches_full_table_moments(self, k):
        c = F(k + 1)
        ns = [1, 2, 3, 5, 8]
        marginal = dict(
            (n, (m2, m4)) for n, m2, m4 in marginal_moments_exact(c, k, ns)
        )
        for n in ns:
            report = moments(distribution(n, c, k))
            assert report.covariance[0][0] == marginal[n][0]
            assert report.fourth_moment_diag[0] == marginal[n][1]

    def test_negative_row_raises_for_k1(self):
        with pytest.raises(DomainError):
            marginal_moments_exact(F(1, 2), 1, [2])

    def test_c_below_k_works_when_rows_stay_nonnegative(self):
        # c = 3/2 < k = 2: joint nonnegativity holds here (verified against
        # the full table), and the marginal engine must agree with it
        (_, m2, m4), = marginal_moments_exact(F(3, 2), 2, [4])
        report = moments(distribution(4, F(3, 2), 2))
        assert report.covariance[0][0] == m2
        assert report.fourth_moment_diag[0] == m4

    @pytest.mark.parametrize("c,k", [(2.0, 1), (1.5, 1), (2.0, 2)])
    def test_float_matches_exact(self, c, k):
        ns = [1, 2, 4, 8, 16, 32, 64]
        exact = marginal_moments_exact(F(c), k, ns)
        approx = marginal_moments_float(c, k, ns)
        for (n1, m2e, m4e), (n2, m2f, m4f) in zip(exact, approx):
            assert n1 == n2
            assert m2f == pytest.approx(float(m2e), rel=1e-9)
            assert m4f == pytest.approx(float(m4e), rel=1e-9)

    def test_n_list_validation(self):
        with pytest.raises(UsageError):
            marginal_moments_exact(F(2), 1, [4, 2])
        with pytest.raises(UsageError):
            marginal_moments_exact(F(2), 1, [])
        with pytest.raises(UsageError):
            marginal_moments_exact(F(2), 1, [0, 2])


class TestConvergenceReport:
    def test_exact_row_values(self):
        report = convergence_report(F(2), 1, [2, 4], mode=MODE_EXACT)
        assert report.rows[0].m2_over_n == F(8, 7)
        assert report.rows[1].m2_over_n == F(112, 97)
        assert report.rows[1].dist_rederived < report.rows[0].dist_rederived
        assert report.sigma2_reported == pytest.approx(5.4641016, abs=1e-6)

    def test_exact_offdiag_is_zero(self):
        report = convergence_report(F(2), 2, [2, 4, 8], mode=MODE_EXACT)
        assert all(row.max_offdiag == 0 for row in report.rows)

    def test_exact_mode_ceiling(self):
        with pytest.raises(UsageError):
            convergence_report(F(2), 1, [256], mode=MODE_EXACT)
        report = convergence_report(F(2), 1, [256], mode=MODE_EXACT, exact_ceiling=256)
        assert report.rows[0].n == 256
        with pytest.raises(UsageError):
            convergence_report(F(2), 2, [64], mode=MODE_EXACT)

    def test_exact_mode_rejects_float_c(self):
        with pytest.raises(UsageError):
            convergence_report(2.0, 1, [4], mode=MODE_EXACT)

    def test_float_mode(self):
        report = convergence_report(2.0, 1, [16, 256], mode=MODE_FLOAT)
        last = report.rows[-1]
        assert last.m2_over_n == pytest.approx(2 / math.sqrt(3), rel=1e-9)
        # within 0.5% of 2/sqrt(3) and more than 350% away from 2(1+sqrt(3))
        assert last.dist_rederived < 0.005 * report.sigma2_rederived
        assert last.dist_reported > 3.5 * report.sigma2_rederived

    def test_bad_mode(self):
        with pytest.raises(UsageError):
            convergence_report(F(2), 1, [4], mode="fast")


class TestFreeGroupLink:
    def test_exact_small_value(self):
        rows = fg_marginal_moments_exact(2, [2])
        n, m2, _ = rows[0]
        assert (n, m2) == (2, F(4, 3))  # m2/n = 2/3

    def test_exact_matches_count_table(self):
        from symcheb import counts_by_formula

        for n in (1, 2, 3, 4, 5, 6):
            table = counts_by_formula(2, n)
            total = table.total()
            m2_direct = F(sum(e[0] ** 2 * v for e, v in table.counts.items()), total)
            (_, m2, _), = fg_marginal_moments_exact(2, [n])
            assert m2 == m2_direct

    def test_float_matches_exact(self):
        ns = [2, 8, 32, 64]
        exact = fg_marginal_moments_exact(2, ns)
        approx = fg_marginal_moments_float(2, ns)
        for (n1, m2e, m4e), (n2, m2f, m4f) in zip(exact, approx):
            assert n1 == n2
            assert m2f == pytest.approx(float(m2e), rel=1e-9)
            assert m4f == pytest.approx(float(m4e), rel=1e-9)

    def test_report_constants(self):
        report = freegroup_convergence_report(2, [64, 128], mode=MODE_FLOAT)
        assert report.sigma2_rederived == 1.0
        assert report.sigma2_reported == pytest.approx(2.7320508, abs=1e-6)
        assert report.rows[-1].m2_over_n == pytest.approx(1.0, rel=1e-9)

    def test_rank_validation(self):
        with pytest.raises(UsageError):
            freegroup_convergence_report(1, [4])
