"""Gosper certificates, telescoped evaluation, and creative telescoping."""

from fractions import Fraction

import pytest

from catalemma.fields import CoefficientField
from catalemma.polynomials import Polynomial, RationalFunction
from catalemma.summation import (
    GosperCertificate,
    _normal_form,
    NoRecurrenceFound,
    NotGosperSummable,
    TelescopedRecurrence,
    TelescopeEvaluator,
    bivariate_hyperterm,
    definite_sum,
    gosper,
    hyperterm,
    telescope_definite,
    verify_gosper,
    verify_zeilberger,
    zeilberger,
)
from catalemma.termparse import parse_term

from conftest import GOSPER_NOT_SUMMABLE, GOSPER_SUMMABLE, ZEILBERGER_FIXTURES

Q = CoefficientField()


def P(*ascending):
    return Polynomial.from_coeffs(Q, "k", ascending)


class TestGosper:
    def test_factorial_times_k(self):
        term = hyperterm(parse_term("k*factorial(k)", "k", ()))
        result = gosper(term)
        assert isinstance(result, GosperCertificate)
        # R = 1/k: z = R*t = k!, and (k+1)! - k! = k*k!
        assert result.certificate == RationalFunction(P(1), P(0, 1))
        assert verify_gosper(term, result)

    def test_harmonic_not_summable(self):
        term = hyperterm(parse_term("1/k", "k", ()))
        result = gosper(term)
        assert isinstance(result, NotGosperSummable)
        assert result.stage == "key_equation"

    def test_factorial_not_summable_at_degree_stage(self):
        term = hyperterm(parse_term("factorial(k)", "k", ()))
        result = gosper(term)
        assert isinstance(result, NotGosperSummable)
        assert result.stage == "degree_bound"

    @pytest.mark.parametrize("src,var,params", GOSPER_SUMMABLE)
    def test_summable_corpus_round_trips(self, src, var, params):
        term = hyperterm(parse_term(src, var, params))
        result = gosper(term)
        assert isinstance(result, GosperCertificate), (src, result)
        assert verify_gosper(term, result)

    @pytest.mark.parametrize("src,var,params,stage", GOSPER_NOT_SUMMABLE)
    def test_non_summable_corpus_reports_stage(self, src, var, params, stage):
        term = hyperterm(parse_term(src, var, params))
        result = gosper(term)
        assert isinstance(result, NotGosperSummable), src
        assert result.stage == stage
        assert result.detail


class TestNormalForm:
    def test_contract_across_corpus(self):
        from catalemma.polynomials import dispersion_set

        seen_nontrivial_c = False
        for src, var, params in GOSPER_SUMMABLE + [c[:3] for c in GOSPER_NOT_SUMMABLE]:
            term = hyperterm(parse_term(src, var, params))
            a, b, c = _normal_form(term.ratio)
            # the factorization reconstructs the quotient exactly
            recon = (
                RationalFunction(a, b)
                * RationalFunction(c.shift(1), Polynomial.constant(c.field, c.var, 1))
                / c
            )
            assert recon == term.ratio, src
            # no shift of b shares a factor with a anymore
            assert dispersion_set(a, b) == set(), src
            if c.degree >= 1:
                seen_nontrivial_c = True
        assert seen_nontrivial_c  # the corpus exercises the dispersion loop


class TestVerifyGosper:
    def test_wrong_certificate_rejected(self):
        term = hyperterm(parse_term("k*factorial(k)", "k", ()))
        wrong = GosperCertificate(RationalFunction(P(1), P(1, 1)))  # 1/(k+1)
        assert not verify_gosper(term, wrong)

    def test_zero_certificate_rejected(self):
        term = hyperterm(parse_term("k*factorial(k)", "k", ()))
        zero = GosperCertificate(RationalFunction.constant(Q, "k", 0))
        assert not verify_gosper(term, zero)

    def test_telescoped_partial_sums_match(self):
        # z(k) = R(k) t(k) must reproduce the running partial sums
        term = hyperterm(parse_term("k*2^k", "k", ()))
        cert = gosper(term)
        assert isinstance(cert, GosperCertificate)
        running = Fraction(0)
        z = lambda k: cert.certificate.evaluate_rational(k, {}) * term.value(k)
        for k in range(1, 15):
            running += term.value(k)
            assert z(k + 1) - z(1) == running


class TestTelescopeDefinite:
    def test_alternating_catalan_sum(self, paper_identity1_term):
        term = hyperterm(paper_identity1_term)
        evaluator = telescope_definite(term, 0, "s")
        for s in range(1, 30):
            result = evaluator.evaluate({"s": s})
            assert result.value == 0
            assert not result.endpoint_singular
        # the single-term case is the documented exception and needs the
        # direct fallback: the certificate has a pole at s = 0
        result = evaluator.evaluate({"s": 0})
        assert result.value == 1
        assert result.endpoint_singular

    def test_empty_range_is_zero(self):
        term = hyperterm(parse_term("k*factorial(k)", "k", ("n",)))
        evaluator = telescope_definite(term, 3, "n")
        result = evaluator.evaluate({"n": 1})
        assert result.value == 0 and not result.endpoint_singular

    def test_rejects_non_summable(self):
        term = hyperterm(parse_term("binomial(n,k)", "k", ("n",)))
        with pytest.raises(ValueError, match="not Gosper-summable"):
            telescope_definite(term, 0, "n")

    def test_unknown_upper_parameter(self):
        term = hyperterm(parse_term("k", "k", ()))
        cert = gosper(term)
        with pytest.raises(ValueError):
            TelescopeEvaluator(term, cert, 0, "missing")


class TestBivariateTerm:
    def test_compatibility_invariant(self, paper_identity3_term):
        F = bivariate_hyperterm(paper_identity3_term, "m")
        assert F.check_compatibility()

    def test_ratios_match_values(self):
        F = bivariate_hyperterm(parse_term("binomial(n,k)", "k", ("n",)), "n")
        for n in range(2, 7):
            for k in range(0, n):
                value = F.value(n, k)
                assert F.ratio_sum.evaluate_rational(k, {"n": n}) == F.value(n, k + 1) / value
                assert F.ratio_rec.evaluate_rational(k, {"n": n}) == F.value(n + 1, k) / value

    def test_recvar_must_be_parameter(self):
        with pytest.raises(ValueError):
            bivariate_hyperterm(parse_term("binomial(n,k)", "k", ("n",)), "j")


class TestZeilberger:
    def test_binomial_row_sums(self):
        F = bivariate_hyperterm(parse_term("binomial(n,k)", "k", ("n",)), "n")
        rec = zeilberger(F, 2)
        assert isinstance(rec, TelescopedRecurrence)
        assert rec.order == 1
        field = rec.coefficients[0].field
        assert rec.coefficients[0] == Polynomial.constant(field, "n", -2)
        assert rec.coefficients[1] == Polynomial.constant(field, "n", 1)
        assert rec.inhomogeneous is not None and rec.inhomogeneous.is_zero
        assert verify_zeilberger(F, rec)
        # cross-check against the closed form 2^n
        for n in range(0, 12):
            assert definite_sum(F, n, {}) == 2 ** n

    def test_constant_term_telescopes(self):
        F = bivariate_hyperterm(parse_term("1", "k", ("n",)), "n")
        rec = zeilberger(F, 1)
        assert isinstance(rec, TelescopedRecurrence)
        assert verify_zeilberger(F, rec)

    @pytest.mark.parametrize("src,sumvar,recvar,params,order,samples", ZEILBERGER_FIXTURES)
    def test_fixture_corpus(self, src, sumvar, recvar, params, order, samples):
        term = parse_term(src, sumvar, (recvar, *params))
        F = bivariate_hyperterm(term, recvar)
        assert F.check_compatibility()
        rec = zeilberger(F, 2, rhs_param_samples=samples or None)
        assert isinstance(rec, TelescopedRecurrence), (src, rec)
        assert rec.order == order
        assert verify_zeilberger(F, rec, param_samples=samples or None)

    def test_max_order_exhaustion_reports_stages(self):
        # cubed binomials satisfy no first-order recurrence; order 2 is needed
        F = bivariate_hyperterm(parse_term("binomial(n,k)^3", "k", ("n",)), "n")
        result = zeilberger(F, 1)
        assert isinstance(result, NoRecurrenceFound)
        assert result.max_order == 1
        assert result.stages == ((1, "key_equation"),)

    def test_non_polynomial_boundary_replays_via_certificate(self):
        # 1/(n+k) telescopes at order 1, but sum_j a_j f(n+j) is not a
        # polynomial in n; the recurrence carries no inhomogeneous side and
        # the numeric replay uses the certificate's boundary value instead
        F = bivariate_hyperterm(parse_term("1/(n+k)", "k", ("n",)), "n")
        rec = zeilberger(F, 1)
        assert isinstance(rec, TelescopedRecurrence)
        assert rec.inhomogeneous is None
        assert verify_zeilberger(F, rec)

    def test_invalid_order_rejected(self):
        F = bivariate_hyperterm(parse_term("1", "k", ("n",)), "n")
        with pytest.raises(ValueError):
            zeilberger(F, 0)


class TestPaperRecurrence:
    def test_normalized_coefficients_and_inhomogeneous_side(self, paper_identity3_term):
        F = bivariate_hyperterm(paper_identity3_term, "m")
        rec = zeilberger(F, 2, rhs_param_samples={"l": [41, 43, 47]})
        assert isinstance(rec, TelescopedRecurrence)
        assert rec.order == 1
        field = CoefficientField(("l",))
        assert rec.coefficients[0] == Polynomial.from_coeffs(field, "m", [-1, -1])
        assert rec.coefficients[1] == Polynomial.from_coeffs(field, "m", [2, 1])
        assert rec.inhomogeneous == Polynomial.constant(field, "m", 1)

    def test_induction_replays(self, paper_identity3_term):
        F = bivariate_hyperterm(paper_identity3_term, "m")
        rec = zeilberger(F, 2, rhs_param_samples={"l": [41, 43, 47]})
        assert verify_zeilberger(
            F, rec, recvar_samples=range(1, 8), param_samples={"l": [29, 31]}
        )
        # f(m) = 1 for every sampled l >= 2m+1, by the recurrence from f(1) = 1
        for m in range(1, 9):
            for l in (2 * m + 1, 2 * m + 5):
                assert definite_sum(F, m, {"l": l}) == 1

    def test_perturbed_recurrence_fails(self, paper_identity3_term):
        F = bivariate_hyperterm(paper_identity3_term, "m")
        rec = zeilberger(F, 2, rhs_param_samples={"l": [41, 43]})
        assert isinstance(rec, TelescopedRecurrence)
        bumped = TelescopedRecurrence(
            rec.order,
            rec.recvar,
            (rec.coefficients[0] + 1, rec.coefficients[1]),
            rec.certificate,
            rec.inhomogeneous,
        )
        assert not verify_zeilberger(F, bumped, param_samples={"l": [31]})
        zeroed = TelescopedRecurrence(
            rec.order,
            rec.recvar,
            rec.coefficients,
            RationalFunction.constant(rec.certificate.field, rec.certificate.var, 0),
            rec.inhomogeneous,
        )
        assert not verify_zeilberger(F, zeroed, param_samples={"l": [31]})
