import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reesdual import BiDegree, Poly, PrimeField, VarSet, ZERO_BIDEGREE, parse_poly
from reesdual.fields import QQ

VS = VarSet(3, 3)  # x1..x3, T1..T3


def P(text, vars=VS, field=QQ):
    return parse_poly(text, vars, field)


def random_poly(rng, vars=VS, terms=4, degree=3, field=QQ):
    items = []
    for _ in range(terms):
        mon = [0] * vars.total
        for _ in range(rng.randint(0, degree)):
            mon[rng.randrange(vars.total)] += 1
        items.append((tuple(mon), rng.randint(-5, 5)))
    return Poly.from_terms(vars, items, field)


class TestArithmetic:
    def test_additive_cancellation(self):
        assert P("x1 + T1") + P("-x1") == P("T1")

    def test_square_expansion_by_hand(self):
        # (T1*T2 - T3^2)^2, expanded term by term
        q = P("T1*T2 - T3^2")
        expected = P("T1^2*T2^2 - 2*T1*T2*T3^2 + T3^4")
        assert q * q == expected

    def test_multiplicative_identity(self):
        rng = random.Random(7)
        one = Poly.const(VS, 1)
        for _ in range(20):
            p = random_poly(rng)
            assert p * one == p

    def test_varset_mismatch_rejected(self):
        other = VarSet(2, 4)
        with pytest.raises(ValueError):
            P("x1") + parse_poly("x1", other)

    def test_ring_axioms_on_random_triples(self):
        rng = random.Random(11)
        for _ in range(25):
            a, b, c = (random_poly(rng, terms=3) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)

    @given(st.integers(-20, 20), st.integers(-20, 20))
    @settings(max_examples=30, deadline=None)
    def test_constant_arithmetic_matches_integers(self, a, b):
        pa, pb = Poly.const(VS, a), Poly.const(VS, b)
        assert pa + pb == Poly.const(VS, a + b)
        assert pa * pb == Poly.const(VS, a * b)

    def test_prime_field_arithmetic(self):
        gf = PrimeField(101)
        p = P("3*x1 + 100*T1", field=gf)
        q = P("98*x1 + T1", field=gf)
        assert p + q == Poly.zero(VS, gf)

    def test_power(self):
        q = P("T1*T2 - T3^2")
        assert q ** 3 == q * q * q
        assert q ** 0 == Poly.const(VS, 1)


class TestBidegree:
    def test_example_fiber_factors(self):
        assert P("x1^2*(T1*T2 - T3^2)").bidegree() == BiDegree(2, 2)
        assert P("(T1*T2 - T3^2)^3").bidegree() == BiDegree(0, 6)

    def test_mixed_is_not_bihomogeneous(self):
        assert P("x1 + T1").bidegree() is None

    def test_zero_polynomial_is_compatible_with_everything(self):
        bd = Poly.zero(VS).bidegree()
        assert bd is ZERO_BIDEGREE
        assert bd == BiDegree(5, 7)
        assert BiDegree(5, 7) == bd

    def test_product_adds_bidegrees(self):
        rng = random.Random(3)
        mons = [P("x1*T1"), P("x2^2*T3"), P("T1*T2 - T3^2"), P("x1 - 2*x3")]
        for _ in range(20):
            a, b = rng.choice(mons), rng.choice(mons)
            ab = (a * b).bidegree()
            assert ab == a.bidegree() + b.bidegree()


class TestDerivative:
    def test_power_rule(self):
        assert P("x1^3").derivative(0) == P("3*x1^2")

    def test_product_with_pure_t_factor(self):
        p = P("x1^2*(T1*T2 - T3^2)")
        assert p.derivative(0) == P("2*x1*(T1*T2 - T3^2)")

    def test_unrelated_variable(self):
        assert P("T1").derivative(0).is_zero()

    def test_euler_identity_on_x_homogeneous(self):
        rng = random.Random(5)
        for _ in range(10):
            # random x-homogeneous of x-degree 3 (arbitrary T parts)
            items = []
            for _ in range(5):
                mon = [0] * VS.total
                for _ in range(3):
                    mon[rng.randrange(3)] += 1
                for _ in range(rng.randint(0, 2)):
                    mon[3 + rng.randrange(3)] += 1
                items.append((tuple(mon), rng.randint(-4, 4)))
            p = Poly.from_terms(VS, items)
            euler = Poly.zero(VS)
            for k in range(3):
                euler = euler + Poly.var(VS, k) * p.derivative(k)
            assert euler == p.scale(3)


class TestPrinting:
    def test_canonical_string_round_trip(self):
        fixtures = [
            "0",
            "1",
            "-3/2*x1",
            "x1^2*T1*T2 - x1^2*T3^2",
            "T1^3*T2^3 - 3*T1^2*T2^2*T3^2 + 3*T1*T2*T3^4 - T3^6",
            "x1*T1 + x2*T2 + x3*T3",
        ]
        for text in fixtures:
            p = P(text)
            assert parse_poly(str(p), VS) == p

    def test_equal_polynomials_print_identically(self):
        a = P("T1*T2 - T3^2") * P("x1 + x2")
        b = P("(x1 + x2)*T1*T2 - (x2 + x1)*T3^2")
        assert a == b
        assert str(a) == str(b)
