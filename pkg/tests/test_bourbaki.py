from fractions import Fraction

import pytest

from reesdual import (
    IdealGens,
    Poly,
    bourbaki_reduce,
    defining_ideal,
    ideal_equal,
    module_defining_ideal,
    module_instance_from_strings,
    random_module_instance,
    saturate,
    special_fiber,
)
from reesdual.bourbaki import invert_matrix
from reesdual.fields import QQ
from reesdual.rees import sym_linear_forms


def test_invert_matrix_round_trip():
    rows = [[2, 1, 0], [1, 1, 0], [3, 0, 1]]
    inv = invert_matrix(rows, QQ)
    n = 3
    for i in range(n):
        for j in range(n):
            acc = sum(
                Fraction(rows[i][k]) * inv[k][j] for k in range(n)
            )
            assert acc == (1 if i == j else 0)
    with pytest.raises(ZeroDivisionError):
        invert_matrix([[1, 2], [2, 4]], QQ)


class TestReduction:
    def test_rank_one_is_identity(self, example_instance):
        inst = module_instance_from_strings(
            2, 3, 1, "x1^3", [["x1", "x3"], ["x2", "x1"], ["x3", "x2"]]
        )
        red = bourbaki_reduce(inst, seed=4)
        assert red.psi_reduced == inst.psi
        assert red.y_forms == []
        assert red.instance.psi.to_strings() == inst.psi.to_strings()

    def test_rank_two_shapes(self):
        inst = random_module_instance(2, 1, 2, seed=3)
        red = bourbaki_reduce(inst, seed=3)
        assert red.instance.psi.rows == 3
        assert red.instance.psi.cols == 2
        assert len(red.y_forms) == 1
        y = red.y_forms[0]
        bd = y.bidegree()
        assert (bd.x, bd.t) == (0, 1)

    def test_seed_determinism(self):
        inst = random_module_instance(2, 1, 2, seed=3)
        red1 = bourbaki_reduce(inst, seed=9)
        red2 = bourbaki_reduce(inst, seed=9)
        assert red1.transform == red2.transform
        assert red1.y_forms == red2.y_forms
        assert red1.psi_reduced == red2.psi_reduced


class TestModulePipeline:
    def test_rank_one_matches_ideal_pipeline(self, example_instance):
        inst = module_instance_from_strings(
            2, 3, 1, "x1^3", [["x1", "x3"], ["x2", "x1"], ["x3", "x2"]]
        )
        result = module_defining_ideal(inst, seed=0)
        ideal_result = defining_ideal(example_instance)
        assert ideal_equal(result.gens, ideal_result.ambient)

    def test_rank_two_cross_check_and_oracle(self):
        inst = random_module_instance(2, 1, 2, seed=1)
        result = module_defining_ideal(inst, seed=1)
        ells = sym_linear_forms(inst.psi, inst.vars)
        L = IdealGens(inst.vars, ells + [inst.f], inst.field)
        xs = IdealGens(
            inst.vars,
            [Poly.var(inst.vars, i) for i in inst.vars.x_indices()],
            inst.field,
        )
        sat, index = saturate(L, xs)
        assert ideal_equal(result.gens, sat)
        assert index == inst.m
        fiber, degree = special_fiber(result.gens)
        assert degree == inst.m * inst.d

    def test_generator_count(self):
        inst = random_module_instance(2, 2, 2, seed=2)
        result = module_defining_ideal(inst, seed=2)
        assert len(result.gens) == inst.d + inst.m + 1
