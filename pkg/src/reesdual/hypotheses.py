"""Theorem-hypothesis checks and random instance generation.

The main results need: a grade-2 perfect ideal (checked through the
height of the maximal minors of the lifted presentation), the local
generation bounds expressed through Fitting-ideal heights, the entry
ideal of the presentation equal to the variable ideal, and second
analytic deviation one (n = d + 1; n = d + e for modules).

Heights of ideals living in the hypersurface ring R = S/(f) are
evaluated with a fixed convention: ht_R(a) = ht_S(a + (f)) - 1 when
adding f raises the height (f avoids the minimal primes of a), else
ht_S(a); conditions are checked conservatively against both the S- and
the R-height.
"""

import random
from itertools import combinations, combinations_with_replacement

from .fields import QQ
from .groebner import IdealGens, height, ideal_equal
from .instances import InstanceIdeal, make_varset
from .matrix import PolyMatrix
from .parser import parse_poly
from .poly import Poly


class Condition:
    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = passed
        self.detail = detail

    def __repr__(self):
        status = "pass" if self.passed else "FAIL"
        return f"Condition({self.name}: {status}, {self.detail})"


class HypothesisReport:
    def __init__(self, conditions):
        self.conditions = list(conditions)
        self.overall = all(c.passed for c in self.conditions)

    def failed_names(self):
        return [c.name for c in self.conditions if not c.passed]

    def as_dict(self):
        return {
            "overall": self.overall,
            "conditions": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.conditions
            ],
        }

    def __repr__(self):
        return f"HypothesisReport(overall={self.overall})"


def minor_ideal(psi, size):
    """All size x size minors of psi as an ideal (zero if too large)."""
    gens = []
    if 0 < size <= min(psi.rows, psi.cols):
        for rows in combinations(range(psi.rows), size):
            for cols in combinations(range(psi.cols), size):
                v = psi._minor(rows, cols)
                if not v.is_zero() and v not in gens:
                    gens.append(v)
    return IdealGens(psi.vars, gens, psi.field)


def entry_ideal(psi):
    gens = []
    for row in psi.entries:
        for p in row:
            if not p.is_zero() and p not in gens:
                gens.append(p)
    return IdealGens(psi.vars, gens, psi.field)


def variable_ideal(vars, field, indices=None):
    indices = vars.x_indices() if indices is None else indices
    return IdealGens(
        vars, [Poly.var(vars, i, field) for i in indices], field
    )


def quotient_height(a, f):
    """Height of the image of a in S/(f) under the fixed convention."""
    h_ambient = height(a)
    h_plus = height(a.plus([f]))
    if h_plus > h_ambient:
        return h_plus - 1
    return h_ambient


def conservative_height(a, f):
    """min(S-height, quotient-ring height): both must clear a bound."""
    return min(height(a), quotient_height(a, f))


def check_ideal_instance(inst):
    """Verdicts for the ideal-case theorem hypotheses."""
    psi, f, d, n = inst.psi, inst.f, inst.d, inst.n
    conditions = []

    hmax = height(minor_ideal(psi, n - 1))
    conditions.append(
        Condition(
            "grade-2 perfect (Hilbert-Burch)",
            hmax >= 2,
            f"ht of maximal minors = {hmax}, need >= 2",
        )
    )

    gd_ok = True
    details = []
    for j in range(1, d):
        hj = conservative_height(minor_ideal(psi, n - j), f)
        details.append(f"ht Fitt_{j} = {hj} (need >= {j + 1})")
        if hj < j + 1:
            gd_ok = False
    conditions.append(
        Condition(f"G_{d} via Fitting heights", gd_ok, "; ".join(details))
    )

    if n - d >= 1:
        hlift = height(minor_ideal(psi, n - d))
        lift_ok = hlift >= d + 1
        lift_detail = f"ht of (n-d)-minors = {hlift}, need >= {d + 1}"
    else:
        lift_ok, lift_detail = False, "n <= d: no (n-d)-minors to test"
    conditions.append(
        Condition(f"G_{d + 1} for the lifted ideal", lift_ok, lift_detail)
    )

    spans = ideal_equal(
        entry_ideal(psi), variable_ideal(inst.vars, inst.field)
    )
    conditions.append(
        Condition(
            "entry ideal equals the variable ideal",
            spans,
            "I_1(psi) == (x_1..x_{d+1})" if spans else "entry ideal too small",
        )
    )

    if n == d + 1:
        sad = Condition("second analytic deviation one", True, "n = d + 1")
    elif n <= d:
        sad = Condition(
            "second analytic deviation one",
            False,
            "linear type: n <= d, so the defining ideal is just the "
            "symmetric-algebra ideal",
        )
    else:
        sad = Condition(
            "second analytic deviation one",
            False,
            f"n = {n} > d + 1 = {d + 1}: out of scope for the square pipeline",
        )
    conditions.append(sad)
    return HypothesisReport(conditions)


def check_module_instance(inst):
    """Verdicts for the module-case theorem hypotheses."""
    psi, f, d, e, n = inst.psi, inst.f, inst.d, inst.e, inst.n
    conditions = []

    fit_ok = True
    details = []
    for j in range(e, d + e - 1):
        hj = conservative_height(minor_ideal(psi, n - j), f)
        details.append(f"ht Fitt_{j} = {hj} (need >= {j - e + 2})")
        if hj < j - e + 2:
            fit_ok = False
    conditions.append(
        Condition(f"G_{d} via Fitting heights", fit_ok, "; ".join(details))
    )

    spans = ideal_equal(
        entry_ideal(psi), variable_ideal(inst.vars, inst.field)
    )
    conditions.append(
        Condition(
            "entry ideal equals the variable ideal",
            spans,
            "I_1(psi) == (x_1..x_{d+1})" if spans else "entry ideal too small",
        )
    )

    conditions.append(
        Condition(
            "generator count n = d + e",
            n == d + e,
            f"n = {n}, d + e = {d + e}",
        )
    )
    return HypothesisReport(conditions)


def _random_linear_form(rng, vars, field, pool=3):
    items = []
    for k in vars.x_indices():
        c = rng.randint(-pool, pool)
        if c:
            mon = tuple(1 if i == k else 0 for i in range(vars.total))
            items.append((mon, c))
    return Poly.from_terms(vars, items, field)


def _random_homogeneous(rng, vars, degree, field, pool=3):
    items = []
    for combo in combinations_with_replacement(vars.x_indices(), degree):
        c = rng.randint(-pool, pool)
        if c:
            exps = [0] * vars.total
            for k in combo:
                exps[k] += 1
            items.append((tuple(exps), c))
    return Poly.from_terms(vars, items, field)


class RetryBudgetExceeded(RuntimeError):
    pass


def random_instance(d, m, seed, field=QQ, max_tries=400):
    """A random ideal instance passing the hypothesis checks; identical
    seeds reproduce identical instances."""
    if d < 2 or m < 1:
        raise ValueError("need d >= 2 and m >= 1")
    rng = random.Random(f"instance:{d}:{m}:{seed}")
    n = d + 1
    vars = make_varset(d, n)
    for _ in range(max_tries):
        entries = [
            [_random_linear_form(rng, vars, field) for _ in range(n - 1)]
            for _ in range(n)
        ]
        f = _random_homogeneous(rng, vars, m, field)
        if f.is_zero():
            continue
        try:
            inst = InstanceIdeal(d, m, f, PolyMatrix(vars, entries, field=field))
        except ValueError:
            continue
        if check_ideal_instance(inst).overall:
            return inst
    raise RetryBudgetExceeded(
        f"no passing instance for d={d}, m={m}, seed={seed} "
        f"after {max_tries} draws"
    )


def random_module_instance(d, m, e, seed, field=QQ, max_tries=400):
    """A random module instance passing the module hypothesis checks."""
    from .instances import InstanceModule

    if d < 2 or m < 1 or e < 1:
        raise ValueError("need d >= 2, m >= 1, e >= 1")
    rng = random.Random(f"module:{d}:{m}:{e}:{seed}")
    n = d + e
    vars = make_varset(d, n)
    for _ in range(max_tries):
        entries = [
            [_random_linear_form(rng, vars, field) for _ in range(n - e)]
            for _ in range(n)
        ]
        f = _random_homogeneous(rng, vars, m, field)
        if f.is_zero():
            continue
        try:
            inst = InstanceModule(
                d, m, e, f, PolyMatrix(vars, entries, field=field)
            )
        except ValueError:
            continue
        if check_module_instance(inst).overall:
            return inst
    raise RetryBudgetExceeded(
        f"no passing module instance for d={d}, m={m}, e={e}, seed={seed}"
    )
