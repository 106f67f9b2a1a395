"""Reduction of a module instance to an ideal instance.

A rank-e module with generators a_1..a_n is cut down to an ideal by
factoring out e-1 generic linear combinations y_j = sum_i Z_ij a_i.
Instead of adjoining the Z's as indeterminates and localizing, the
coefficients are specialized to random field scalars with a retry on
degenerate draws; every downstream claim is still verified exactly on
the specialized instance.  The generator change fixes a_e..a_n, so the
transform is [[Z-rows], [0 | identity]]; a fully random completion
would scramble the dual T-coordinates of the ideal-side run.

The cross-check: running the dual iterations on the module's own
presentation and on the (zero-padded) reduced presentation must give
the same ideal once the dual linear forms Y_j = sum_i Z_ij T_i are
added to both sides.
"""

import random

from .fields import QQ
from .groebner import IdealGens, ideal_equal
from .hypotheses import (
    RetryBudgetExceeded,
    check_ideal_instance,
    check_module_instance,
)
from .instances import InstanceIdeal, make_varset
from .matrix import PolyMatrix
from .poly import Poly
from .rees import HypothesisViolation, mjd_iterations


class CrossCheckError(RuntimeError):
    """The direct and reduced computations disagreed: a bug or a bad
    specialization; retry with another seed."""

    def __init__(self, message, seed):
        super().__init__(f"{message} (seed {seed})")
        self.seed = seed


def invert_matrix(rows, field):
    """Exact inverse of a square scalar matrix by Gauss-Jordan."""
    n = len(rows)
    aug = [
        [field.coerce(c) for c in row]
        + [field.one if i == j else field.zero for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if aug[r][col] != field.zero), None
        )
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = field.inv(aug[col][col])
        aug[col] = [field.mul(v, inv) for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != field.zero:
                factor = aug[r][col]
                aug[r] = [
                    field.sub(v, field.mul(factor, w))
                    for v, w in zip(aug[r], aug[col])
                ]
    return [row[n:] for row in aug]


class BourbakiReduction:
    def __init__(self, seed, transform, instance, y_forms, psi_reduced):
        self.seed = seed
        self.transform = transform
        self.instance = instance
        self.y_forms = y_forms
        self.psi_reduced = psi_reduced


def _project_x_only(p, new_vars):
    """Rebuild an x-block-only polynomial over another variable set."""
    nx = new_vars.nx
    terms = {}
    for mon, c in p.terms.items():
        if any(mon[nx:]):
            raise ValueError("polynomial is not x-block only")
        terms[mon[:nx] + (0,) * (new_vars.total - nx)] = c
    return Poly(new_vars, p.field, terms, _clean=True)


def bourbaki_reduce(inst, seed, max_tries=200):
    """Specialize a rank-e module instance to an ideal instance.

    For e = 1 the reduction is the identity.  For e >= 2, random
    coefficient rows are drawn (deterministically from the seed) until
    the transform is invertible and the reduced instance passes the
    ideal-case hypothesis checks.
    """
    field = inst.field
    n, e = inst.n, inst.e
    if e == 1:
        compact = InstanceIdeal(inst.d, inst.m, inst.f, inst.psi)
        identity = [
            [field.one if i == j else field.zero for j in range(n)]
            for i in range(n)
        ]
        return BourbakiReduction(seed, identity, compact, [], inst.psi)
    rng = random.Random(f"bourbaki:{inst.d}:{inst.m}:{e}:{seed}")
    compact_vars = make_varset(inst.d, n - e + 1)
    tvars = list(inst.vars.t_indices())
    for _ in range(max_tries):
        z_rows = [
            [field.coerce(rng.randint(-3, 3)) for _ in range(n)]
            for _ in range(e - 1)
        ]
        transform = z_rows + [
            [field.one if j == e - 1 + i else field.zero for j in range(n)]
            for i in range(n - e + 1)
        ]
        try:
            inv = invert_matrix(transform, field)
        except ZeroDivisionError:
            continue
        inv_t = [
            [inv[j][i] for j in range(n)] for i in range(n)
        ]
        psi_new = inst.psi.scalar_left_mul(inv_t)
        reduced_rows = [psi_new.entries[i] for i in range(e - 1, n)]
        psi_reduced = PolyMatrix(inst.vars, reduced_rows, field=field)
        compact_entries = [
            [_project_x_only(p, compact_vars) for p in row]
            for row in reduced_rows
        ]
        try:
            compact = InstanceIdeal(
                inst.d,
                inst.m,
                _project_x_only(inst.f, compact_vars),
                PolyMatrix(compact_vars, compact_entries, field=field),
            )
        except ValueError:
            continue
        if not check_ideal_instance(compact).overall:
            continue
        y_forms = [
            sum(
                (
                    Poly.var(inst.vars, tvars[i], field).scale(z_rows[j][i])
                    for i in range(n)
                ),
                Poly.zero(inst.vars, field),
            )
            for j in range(e - 1)
        ]
        return BourbakiReduction(seed, transform, compact, y_forms, psi_reduced)
    raise RetryBudgetExceeded(
        f"no valid specialization after {max_tries} draws; "
        f"try another seed than {seed}"
    )


class ModulePipelineResult:
    def __init__(self, gens, reduction, ideal_side, states):
        self.gens = gens
        self.reduction = reduction
        self.ideal_side = ideal_side
        self.states = states


def module_defining_ideal(inst, seed, mode="greedy"):
    """Defining-ideal generators for a module instance.

    Runs the dual iterations directly on the module's own presentation
    and, independently, on the zero-padded reduced presentation from the
    specialized reduction; the two must agree after adding the Y-forms,
    else the disagreement is surfaced loudly.
    """
    report = check_module_instance(inst)
    if not report.overall:
        raise HypothesisViolation(
            "module hypotheses failed: " + ", ".join(report.failed_names()),
            report=report,
        )
    states = mjd_iterations(inst.psi, inst.f, mode, inst.vars)
    last = states[-1]
    direct = last.ideal.plus([last.det])

    reduction = bourbaki_reduce(inst, seed)
    e = inst.e
    if e == 1:
        padded = inst.psi
    else:
        zero = Poly.zero(inst.vars, inst.field)
        pad_rows = [
            [zero] * reduction.psi_reduced.cols for _ in range(e - 1)
        ]
        padded = PolyMatrix(
            inst.vars,
            pad_rows + [list(r) for r in reduction.psi_reduced.entries],
            field=inst.field,
        )
    ideal_states = mjd_iterations(padded, inst.f, mode, inst.vars)
    ideal_last = ideal_states[-1]
    ideal_side = ideal_last.ideal.plus([ideal_last.det])

    lhs = direct.plus(reduction.y_forms)
    rhs = ideal_side.plus(reduction.y_forms)
    if not ideal_equal(lhs, rhs):
        raise CrossCheckError(
            "direct and reduced defining ideals disagree", seed
        )
    return ModulePipelineResult(direct, reduction, ideal_side, states)
