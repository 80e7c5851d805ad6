"""Identity evaluators: exact values, conventions, and cross-recurrences."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalemma.identities import (
    Composition,
    IdentityReport,
    a_recurrence_eval,
    a_recurrence_table,
    binomial_gen,
    catalan,
    compositions,
    f_value,
    lhs_identity1,
    lhs_identity2prime,
    lhs_identity3,
    rhs_identity3,
)


class TestCatalan:
    def test_values(self):
        assert catalan(0) == 1
        assert catalan(3) == 5
        assert catalan(5) == 42
        assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            catalan(-1)

    def test_segner_recurrence(self):
        for n in range(31):
            assert catalan(n + 1) == sum(catalan(i) * catalan(n - i) for i in range(n + 1))


class TestBinomialGen:
    def test_worked_examples(self):
        assert binomial_gen(5, 2) == 10
        assert binomial_gen(-1, 2) == 1  # (-1)(-2)/2
        assert binomial_gen(1, 2) == 0  # 1*0/2
        assert binomial_gen(7, -1) == 0

    def test_negative_upper_via_falling_factorial(self):
        # direct product definition
        for n in range(-8, 1):
            for k in range(0, 8):
                product = 1
                for t in range(k):
                    product *= n - t
                num = Fraction(product)
                for t in range(1, k + 1):
                    num /= t
                assert num.denominator == 1
                assert binomial_gen(n, k) == num

    @given(st.integers(-20, 20), st.integers(0, 20))
    @settings(max_examples=200)
    def test_pascal_rule(self, n, k):
        assert binomial_gen(n, k) == binomial_gen(n - 1, k - 1) + binomial_gen(n - 1, k)


class TestIdentity1:
    def test_worked_examples(self):
        assert lhs_identity1(1) == 0
        assert lhs_identity1(2) == 0
        assert lhs_identity1(0) == 1  # documented exception

    def test_vanishes_on_range(self):
        for s in range(1, 120):
            assert lhs_identity1(s) == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            lhs_identity1(-1)


class TestCompositions:
    def test_worked_examples(self):
        assert [c.parts for c in compositions(1)] == [(1,)]
        assert [c.parts for c in compositions(3)] == [(1, 1, 1), (1, 2), (2, 1), (3,)]
        assert sum(1 for _ in compositions(5)) == 16

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            list(compositions(0))

    def test_composition_invariants(self):
        with pytest.raises(ValueError):
            Composition((1, 0))
        with pytest.raises(ValueError):
            Composition(())
        c = Composition((2, 1, 3))
        assert c.total == 6 and c.num_parts == 3

    @given(st.integers(1, 12))
    @settings(max_examples=12, deadline=None)
    def test_count_and_order(self, m):
        seen = [c.parts for c in compositions(m)]
        assert len(seen) == 2 ** (m - 1)
        assert len(set(seen)) == len(seen)
        assert seen == sorted(seen)
        assert all(sum(p) == m for p in seen)


class TestIdentity2Prime:
    def test_worked_examples(self):
        assert lhs_identity2prime(3, 3) == -2
        assert lhs_identity2prime(1, 1) == -1
        assert lhs_identity2prime(5, 2) == 1

    def test_equals_signed_catalan(self):
        for l in range(1, 13):
            for m in range(1, l + 1):
                assert lhs_identity2prime(l, m) == (-1) ** m * catalan(m - 1)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            lhs_identity2prime(3, 0)
        with pytest.raises(ValueError):
            lhs_identity2prime(3, 4)

    def test_matches_direct_composition_sum(self):
        # independent route: iterate the composition stream explicitly
        for l in range(1, 11):
            for m in range(1, l + 1):
                total = 0
                for comp in compositions(m):
                    parts = comp.parts
                    product = binomial_gen(l - parts[0], parts[0] - 1)
                    for p in parts[1:]:
                        product *= binomial_gen(l - p, p)
                    total += (-1) ** len(parts) * product
                assert total == lhs_identity2prime(l, m)


class TestRecurrenceA:
    def test_worked_examples(self):
        assert a_recurrence_eval(3, 1, {}) == -1
        assert a_recurrence_eval(3, 2, {1: -1}) == 1
        assert a_recurrence_eval(3, 3, {1: -1, 2: 1}) == -2

    def test_missing_prior_rejected(self):
        with pytest.raises(ValueError, match="missing prior"):
            a_recurrence_eval(3, 3, {1: -1})

    def test_reproduces_brute_force(self):
        for l in range(1, 13):
            table = a_recurrence_table(l, l)
            for m in range(1, l + 1):
                assert table[m] == lhs_identity2prime(l, m)


class TestIdentity3:
    def test_worked_examples(self):
        assert lhs_identity3(3, 1) == 1
        assert lhs_identity3(2, 2) == 1
        for l in (0, 3, 9, 14):
            assert lhs_identity3(l, 0) == 1

    def test_rhs_examples(self):
        assert rhs_identity3(3, 1) == 1
        assert rhs_identity3(7, 2) == 6
        for m in range(0, 9):
            assert rhs_identity3(m, m) == (-1) ** m

    def test_equality_on_grid(self):
        for m in range(0, 25):
            for l in range(m, m + 25):
                assert lhs_identity3(l, m) == rhs_identity3(l, m)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            lhs_identity3(2, 3)


class TestFValue:
    def test_worked_examples(self):
        assert f_value(3, 1) == 1
        assert f_value(9, 3) == 1
        with pytest.raises(ZeroDivisionError):
            f_value(4, 3)

    def test_one_wherever_defined(self):
        for m in range(0, 16):
            for l in range(m, 2 * m + 41):
                if 0 <= l - m - 1 < m:
                    with pytest.raises(ZeroDivisionError):
                        f_value(l, m)
                else:
                    assert f_value(l, m) == 1

    def test_returns_exact_rational(self):
        assert isinstance(f_value(7, 2), Fraction)


class TestIdentityReport:
    def test_verdict_consistency(self):
        ok = IdentityReport("identity3", (("l", 3), ("m", 1)), 1, 1)
        assert ok.verdict == "equal" and ok.ok
        bad = IdentityReport("identity3", (("l", 3), ("m", 1)), 1, 2)
        assert bad.verdict == "unequal" and not bad.ok
        assert "identity3" in ok.line()
