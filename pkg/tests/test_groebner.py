import random
from itertools import combinations

import pytest

from reesdual import (
    GroebnerLimits,
    IdealGens,
    Poly,
    PrimeField,
    ResourceLimitExceeded,
    TermOrder,
    VarSet,
    buchberger_criterion_holds,
    colon,
    colon_ideal,
    dimension,
    eliminate,
    groebner,
    height,
    ideal_equal,
    intersect,
    normal_form,
    parse_poly,
    saturate,
)
from reesdual.fields import QQ

VS = VarSet(3, 3)


def P(text, vars=VS, field=QQ):
    return parse_poly(text, vars, field)


def gens(*texts, vars=VS, field=QQ):
    return IdealGens(vars, [parse_poly(t, vars, field) for t in texts], field)


def random_poly(rng, vars, terms=3, degree=2, field=QQ):
    items = []
    for _ in range(terms):
        mon = [0] * vars.total
        for _ in range(rng.randint(0, degree)):
            mon[rng.randrange(vars.total)] += 1
        items.append((tuple(mon), rng.randint(-3, 3)))
    return Poly.from_terms(vars, items, field)


class TestBasis:
    def test_monomial_ideal_already_reduced(self):
        gb = groebner(gens("x1", "T1"))
        assert set(gb.polys) == {P("x1"), P("T1")}

    def test_lex_eliminant_of_monomial_curve(self):
        # by-hand Buchberger run: x1 -> (T1, T2) = (x1^2, x1^3) has the
        # lex basis below; the pure eliminant is T1^3 - T2^2
        vs = VarSet(1, 2)
        ideal = gens("x1^2 - T1", "x1^3 - T2", vars=vs)
        gb = groebner(ideal, TermOrder.lex(vs.total))
        expected = {
            parse_poly(t, vs)
            for t in ("x1^2 - T1", "x1*T1 - T2", "x1*T2 - T1^2", "T1^3 - T2^2")
        }
        assert set(gb.polys) == expected

    def test_zero_ideal(self):
        gb = groebner(IdealGens(VS, []))
        assert gb.polys == ()

    def test_deterministic_and_reduced(self):
        ideal = gens("x1*T1 + x2*T2 + x3*T3", "x3*T1 + x1*T2 + x2*T3", "x1^3")
        g1 = groebner(ideal)
        g2 = groebner(gens("x1*T1 + x2*T2 + x3*T3", "x3*T1 + x1*T2 + x2*T3", "x1^3"))
        assert g1.polys == g2.polys
        lts = g1.leading_monomials()
        for i, g in enumerate(g1.polys):
            assert g.terms[g.leading_monomial(g1.order)] == 1
            for j, lt in enumerate(lts):
                if i != j:
                    assert not all(
                        a <= b
                        for a, b in zip(lt, g.leading_monomial(g1.order))
                    )

    def test_buchberger_criterion_exhaustive(self):
        fixtures = [
            gens("x1^2 - T1", "x1^3 - T2"),
            gens("x1*T1 + x2*T2 + x3*T3", "x3*T1 + x1*T2 + x2*T3", "x1^3"),
            gens("x1^2 - x2*x3", "x1*x2 - x3^2", "x2^2 - x1*x3"),
        ]
        for ideal in fixtures:
            assert buchberger_criterion_holds(groebner(ideal))

    def test_prime_field_basis(self):
        vs = VarSet(1, 2)
        gf = PrimeField(101)
        ideal = gens("x1^2 - T1", "x1^3 - T2", vars=vs, field=gf)
        gb = groebner(ideal, TermOrder.lex(vs.total))
        assert parse_poly("T1^3 - T2^2", vs, gf) in set(gb.polys)

    def test_resource_cap_reported(self):
        ideal = gens("x1^2 - T1", "x1^3 - T2")
        with pytest.raises(ResourceLimitExceeded):
            groebner(
                ideal,
                TermOrder.lex(VS.total),
                GroebnerLimits(max_basis=2, max_pairs=1),
            )


class TestNormalForm:
    def test_membership_of_original_generators(self):
        ideal = gens(
            "x1*T1 + x2*T2 + x3*T3", "x3*T1 + x1*T2 + x2*T3", "x1^3"
        )
        gb = groebner(ideal)
        for g in ideal.gens:
            assert normal_form(g, gb).is_zero()

    def test_one_stays_one_for_proper_ideal(self):
        gb = groebner(gens("x1", "x2"))
        assert normal_form(P("1"), gb) == P("1")

    def test_fiber_generator_not_in_symmetric_ideal(self, example_instance):
        from reesdual import mjd_iterations

        states = mjd_iterations(example_instance.psi, example_instance.f)
        gb = groebner(states[0].ideal)
        assert not normal_form(states[0].det, gb).is_zero()

    def test_idempotent(self):
        rng = random.Random(23)
        gb = groebner(gens("x1^2 - T1", "x1*x2 - T3"))
        for _ in range(15):
            p = random_poly(rng, VS, terms=4, degree=3)
            nf = normal_form(p, gb)
            assert normal_form(nf, gb) == nf


class TestIdealEqual:
    def test_reflexive(self):
        a = gens("x1^2 - T1", "x2")
        assert ideal_equal(a, a)

    def test_unit_multiple(self):
        assert ideal_equal(gens("x1"), gens("2*x1"))

    def test_strict_containment_detected(self):
        assert not ideal_equal(gens("x1"), gens("x1^2"))


class TestColonAndSaturate:
    def test_colon_monomials(self):
        assert ideal_equal(colon(gens("x1*x2"), P("x1")), gens("x2"))
        assert ideal_equal(colon(gens("x1^2"), P("x1")), gens("x1"))

    def test_colon_members_multiply_back(self):
        rng = random.Random(17)
        for _ in range(10):
            a = IdealGens(
                VS, [random_poly(rng, VS) for _ in range(2)], QQ
            )
            g = random_poly(rng, VS, terms=2, degree=2)
            if g.is_zero() or len(a) < 2:
                continue
            quotient = colon(a, g)
            gb = groebner(a)
            for h in quotient.gens:
                assert gb.contains(h * g)

    def test_saturate_unit(self):
        sat, index = saturate(gens("x1^2"), gens("x1"))
        assert [str(g) for g in sat.gens] == ["1"]
        assert index == 2

    def test_saturate_principal(self):
        sat, index = saturate(gens("x1*x2"), gens("x1"))
        assert ideal_equal(sat, gens("x2"))
        assert index == 1

    def test_saturate_is_fixed_point(self):
        a = gens("x1^2*T1", "x1*x2")
        b = gens("x1", "x2")
        sat, _ = saturate(a, b)
        assert ideal_equal(colon_ideal(sat, b), sat)

    def test_first_colon_of_symmetric_ideal(self, example_instance, example_xs):
        from reesdual import mjd_iterations

        states = mjd_iterations(example_instance.psi, example_instance.f)
        L = states[0].ideal
        first = colon_ideal(L, example_xs)
        assert ideal_equal(first, L.plus([states[0].det]))

    def test_saturation_of_symmetric_ideal(self, example_instance, example_xs):
        from reesdual import mjd_iterations

        states = mjd_iterations(example_instance.psi, example_instance.f)
        L = states[0].ideal
        sat, index = saturate(L, example_xs)
        dets = [s.det for s in states]
        assert ideal_equal(sat, L.plus(dets))
        assert index == 3


class TestIntersect:
    def test_principal_monomials(self):
        inter = intersect(gens("x1"), gens("x2"))
        assert ideal_equal(inter, gens("x1*x2"))

    def test_contained_in_both(self):
        rng = random.Random(29)
        a = IdealGens(VS, [random_poly(rng, VS) for _ in range(2)], QQ)
        b = IdealGens(VS, [random_poly(rng, VS) for _ in range(2)], QQ)
        inter = intersect(a, b)
        gba, gbb = groebner(a), groebner(b)
        for h in inter.gens:
            assert gba.contains(h) and gbb.contains(h)


class TestDimensionHeight:
    def test_variable_ideal_has_full_height_in_x(self):
        vs = VarSet(3, 1)
        ideal = gens("x1", "x2", "x3", vars=vs)
        assert height(ideal) == 3
        assert dimension(ideal) == 1  # the T line survives

    def test_symmetric_square_minors(self):
        # 2x2 minors of the circulant presentation: a height-2 ideal
        ideal = gens("x1^2 - x2*x3", "x1*x2 - x3^2", "x2^2 - x1*x3")
        assert height(ideal) == 2

    def test_zero_and_unit_ideals(self):
        assert height(IdealGens(VS, [])) == 0
        assert dimension(IdealGens(VS, [])) == VS.total
        unit = gens("1")
        assert dimension(unit) == -1
        assert height(unit) == VS.total

    def test_monomial_dimension_matches_bruteforce(self):
        rng = random.Random(41)
        vs = VarSet(4, 4)

        def bruteforce(monomials):
            supports = [
                {i for i, e in enumerate(m) if e} for m in monomials
            ]
            best = -1
            for size in range(vs.total + 1):
                for subset in combinations(range(vs.total), size):
                    s = set(subset)
                    if all(not sup <= s for sup in supports):
                        best = max(best, size)
            return best

        for _ in range(10):
            monomials = []
            for _ in range(rng.randint(1, 5)):
                mon = [0] * vs.total
                for _ in range(rng.randint(1, 3)):
                    mon[rng.randrange(vs.total)] += 1
                monomials.append(tuple(mon))
            ideal = IdealGens(
                vs, [Poly.from_terms(vs, [(m, 1)]) for m in monomials], QQ
            )
            assert dimension(ideal) == bruteforce(monomials)


class TestEliminate:
    def test_no_pure_t_consequence(self):
        vs = VarSet(1, 1)
        result = eliminate(gens("x1 - T1", vars=vs), keep=[1])
        assert len(result) == 0

    def test_hand_elimination(self):
        vs = VarSet(1, 2)
        result = eliminate(gens("x1", "x1*T1 - T2", vars=vs), keep=[1, 2])
        assert ideal_equal(result, gens("T2", vars=vs))

    def test_keep_everything(self):
        a = gens("x1^2 - T1", "x2*T2")
        result = eliminate(a, keep=range(VS.total))
        assert ideal_equal(result, a)
