"""Sparse two-variable polynomials and unreduced fraction pairs."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hforge.bivar import (
    BiFrac,
    BiPoly,
    FactoredFrac,
    bifrac_eq,
    cross_difference,
    ffsum,
)
from hforge.exact import PoleError, Poly, RatFunc, ZeroDenominatorError

keys = st.tuples(st.integers(0, 3), st.integers(0, 3))
coeffs = st.fractions(min_value=-6, max_value=6, max_denominator=4)
bipolys = st.dictionaries(keys, coeffs, max_size=4).map(BiPoly)


def rand_bipoly(rng, max_deg=2, span=5):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        key = (rng.randint(0, max_deg), rng.randint(0, max_deg))
        terms[key] = Fraction(rng.randint(-span, span))
    return BiPoly(terms)


def rand_bifrac(rng):
    num = rand_bipoly(rng)
    den = rand_bipoly(rng)
    while den.is_zero():
        den = rand_bipoly(rng)
    return BiFrac(num, den)


class TestBiPoly:
    def test_zero_coefficients_are_dropped(self):
        assert BiPoly({(1, 0): 0, (0, 0): 2}) == BiPoly.const(2)
        assert BiPoly({}).is_zero()

    def test_builders_and_degrees(self):
        p = BiPoly.x(2) * BiPoly.s() + BiPoly.one()
        assert p.deg_x == 2 and p.deg_s == 1
        assert p.min_x() == 0 and p.min_s() == 0
        assert BiPoly.x().min_x() == 1

    def test_promotion_from_univariate(self):
        assert BiPoly.from_s_poly(Poly([1, 1])) == BiPoly.s() + BiPoly.one()
        assert BiPoly.from_x_poly(Poly([0, 0, 1])) == BiPoly.x(2)

    def test_scalar_mixing(self):
        p = BiPoly.x() + 1
        assert 1 + BiPoly.x() == p
        assert 2 * p == p + p
        assert p - 1 == BiPoly.x()
        assert 1 - BiPoly.x() == -(BiPoly.x() - 1)

    def test_evaluation_matches_structure(self):
        p = BiPoly.x(2) * BiPoly.s() - BiPoly.const(3)
        assert p.eval(Fraction(2), Fraction(3)) == 9 * 2 - 3
        assert p.eval_x(1) == BiPoly.s() - BiPoly.const(3)
        assert p.eval_s(0) == BiPoly.const(-3)

    def test_synthetic_division_by_roots(self):
        p = BiPoly.x(2) - BiPoly.one()
        assert p.synth_div_x(1) == BiPoly.x() + BiPoly.one()
        q = (BiPoly.s() - BiPoly.one()) * (BiPoly.x() + BiPoly.s())
        assert q.synth_div_s(1) == BiPoly.x() + BiPoly.s()

    def test_synthetic_division_requires_a_root(self):
        with pytest.raises(ValueError):
            (BiPoly.x() - BiPoly.one()).synth_div_x(2)
        with pytest.raises(ValueError):
            (BiPoly.s() - BiPoly.one()).synth_div_s(0)

    def test_shift_down_divides_monomials(self):
        p = BiPoly.x(2) * BiPoly.s(3)
        assert p.shift_down(1, 2) == BiPoly.x() * BiPoly.s()

    def test_univariate_extraction(self):
        assert (BiPoly.s(2) + BiPoly.one()).to_s_poly() == Poly([1, 0, 1])
        assert (BiPoly.x() * 2).to_x_poly() == Poly([0, 2])
        with pytest.raises(ValueError):
            (BiPoly.x() + BiPoly.s()).to_s_poly()

    def test_deriv_s(self):
        p = BiPoly.s(3) * BiPoly.x()
        assert p.deriv_s() == BiPoly.s(2) * BiPoly.x() * 3
        assert BiPoly.x().deriv_s().is_zero()

    def test_pow(self):
        p = BiPoly.x() + BiPoly.s()
        assert p ** 2 == p * p
        assert (p ** 0).as_constant() == 1
        with pytest.raises(ValueError):
            p ** -1


@given(bipolys, bipolys, bipolys)
@settings(max_examples=50, deadline=None)
def test_bipoly_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + BiPoly.zero() == p
    assert p * BiPoly.one() == p


class TestBiFrac:
    def test_equality_is_cross_multiplied(self):
        # (x-1)/(x^2-1) stays unreduced but equals 1/(x+1)
        a = BiFrac(BiPoly.x() - 1, BiPoly.x(2) - 1)
        b = BiFrac(BiPoly.one(), BiPoly.x() + 1)
        assert a == b
        assert bifrac_eq(a, b)
        assert cross_difference(a, b).is_zero()

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDenominatorError):
            BiFrac(BiPoly.one(), BiPoly.zero())

    def test_promotions(self):
        assert BiFrac.from_rational(Fraction(1, 2)).as_constant() == Fraction(1, 2)
        rf = RatFunc(Poly([1, 1]), Poly([0, 1]))
        bf = BiFrac.from_ratfunc(rf)
        assert bf.to_ratfunc() == rf

    def test_to_ratfunc_requires_x_free(self):
        b = BiFrac(BiPoly.x(), BiPoly.s())
        with pytest.raises(ValueError):
            b.to_ratfunc()

    def test_subst_cancels_removable_zeros(self):
        b = BiFrac(BiPoly.x() - 1, BiPoly.x(2) - 1)
        assert b.subst_x(1).as_constant() == Fraction(1, 2)

    def test_subst_raises_at_true_poles(self):
        b = BiFrac(BiPoly.x(), BiPoly.s())
        with pytest.raises(PoleError) as exc:
            b.subst_s(0)
        assert exc.value.var == "s"
        with pytest.raises(PoleError):
            BiFrac(BiPoly.one(), BiPoly.x() + 1).subst_x(-1)

    def test_field_operations_agree_with_pointwise(self):
        rng = random.Random(41)
        pts = [(Fraction(1), Fraction(2)), (Fraction(2), Fraction(3)), (Fraction(3), Fraction(5))]
        for _ in range(40):
            a, b = rand_bifrac(rng), rand_bifrac(rng)
            for op in ("add", "sub", "mul"):
                c = {"add": a + b, "sub": a - b, "mul": a * b}[op]
                for s0, x0 in pts:
                    try:
                        want = {
                            "add": a.eval(s0, x0) + b.eval(s0, x0),
                            "sub": a.eval(s0, x0) - b.eval(s0, x0),
                            "mul": a.eval(s0, x0) * b.eval(s0, x0),
                        }[op]
                        assert c.eval(s0, x0) == want
                    except (ZeroDivisionError, PoleError):
                        continue

    def test_deriv_s_quotient_rule_pointwise(self):
        # d/ds (s/(s+x)) = x/(s+x)^2
        b = BiFrac(BiPoly.s(), BiPoly.s() + BiPoly.x())
        expect = BiFrac(BiPoly.x(), (BiPoly.s() + BiPoly.x()) ** 2)
        assert bifrac_eq(b.deriv_s(), expect)

    def test_pow_and_division(self):
        b = BiFrac(BiPoly.x(), BiPoly.s())
        assert b ** 2 == b * b
        assert bifrac_eq(b ** -1, 1 / b)
        assert bifrac_eq(b / b, BiFrac.from_rational(1))

    def test_string_form(self):
        assert str(BiFrac(BiPoly.x(), BiPoly.s()) + 1) == "(x + s) / (s)"


def test_bifrac_eq_is_an_equivalence_relation():
    rng = random.Random(47)
    pool = [rand_bifrac(rng) for _ in range(12)]
    # scaled copies land in the same class without reduction
    for b in pool[:6]:
        two = BiPoly.const(2)
        pool.append(BiFrac(b.num * two, b.den * two))
    for a in pool:
        assert bifrac_eq(a, a)
    for a in pool:
        for b in pool:
            assert bifrac_eq(a, b) == bifrac_eq(b, a)
            for c in pool:
                if bifrac_eq(a, b) and bifrac_eq(b, c):
                    assert bifrac_eq(a, c)


class TestFactoredFrac:
    def test_sum_keeps_factorwise_max_denominator(self):
        one_px = FactoredFrac.var_x() + 1
        a = one_px.inverse()
        b = (one_px * one_px).inverse()
        total = (a + b).to_bifrac()
        expect = BiFrac(BiPoly.x() + 2, (BiPoly.x() + 1) ** 2)
        assert bifrac_eq(total, expect)

    def test_inverse_of_product_splits_factors(self):
        f = FactoredFrac.var_s() * (FactoredFrac.var_x() + 1)
        inv = f.inverse().to_bifrac()
        assert bifrac_eq(inv, BiFrac(BiPoly.one(), BiPoly.s() * (BiPoly.x() + 1)))

    def test_inverse_rejects_zero(self):
        with pytest.raises(ZeroDenominatorError):
            FactoredFrac.from_scalar(0).inverse()

    def test_negative_pow_and_division(self):
        f = FactoredFrac.var_x() + 1
        assert bifrac_eq((f ** -2).to_bifrac(), BiFrac(BiPoly.one(), (BiPoly.x() + 1) ** 2))
        q = (FactoredFrac.var_s() / f).to_bifrac()
        assert bifrac_eq(q, BiFrac(BiPoly.s(), BiPoly.x() + 1))

    def test_ffsum_matches_sequential_addition(self):
        rng = random.Random(53)
        terms = []
        for k in range(1, 6):
            terms.append((FactoredFrac.var_s() + k).inverse())
        total = ffsum(terms).to_bifrac()
        seq = FactoredFrac.from_scalar(0)
        for t in terms:
            seq = seq + t
        assert bifrac_eq(total, seq.to_bifrac())
        # pointwise spot check at s=1: sum 1/(1+k)
        got = total.subst_x(0).subst_s(1).as_constant()
        assert got == sum(Fraction(1, 1 + k) for k in range(1, 6))

    def test_scalar_mixing(self):
        f = FactoredFrac.var_x()
        assert bifrac_eq((2 * f).to_bifrac(), (f + f).to_bifrac())
        assert bifrac_eq((f - 1).to_bifrac(), BiFrac(BiPoly.x() - 1, BiPoly.one()))
