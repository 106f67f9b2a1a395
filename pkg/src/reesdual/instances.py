"""Problem-statement types for the ideal and module pipelines.

An ideal instance packages the hypersurface degree m, the dimension
parameter d, the hypersurface equation f (x-block only, homogeneous of
degree m), and an n x (n-1) presentation matrix psi of x-linear forms.
A module instance additionally carries the rank e and presents with an
n x (n-e) matrix.  Construction validates shapes, linearity, and
homogeneity; the theorem-level conditions (heights of Fitting ideals
and so on) are the hypotheses module's job.
"""

from .fields import QQ
from .poly import BiDegree, Poly, VarSet


def _validate_linear_matrix(psi, vars):
    want = BiDegree(1, 0)
    for i in range(psi.rows):
        for j in range(psi.cols):
            bd = psi.entry(i, j).bidegree()
            if bd is None or bd != want:
                raise ValueError(
                    f"presentation entry ({i},{j}) is not x-linear"
                )


def _validate_f(f, m):
    bd = f.bidegree()
    if f.is_zero() or bd is None or bd != BiDegree(m, 0):
        raise ValueError(
            f"hypersurface equation must be homogeneous of degree {m} "
            "in the x-block"
        )


class InstanceIdeal:
    """A linearly presented grade-2-perfect ideal over k[x]/(f)."""

    def __init__(self, d, m, f, psi):
        if d < 1 or m < 1:
            raise ValueError("need d >= 1 and m >= 1")
        vars = f.vars
        if psi.vars != vars:
            raise ValueError("f and psi over different variable sets")
        if vars.nx != d + 1:
            raise ValueError(f"variable set must have {d + 1} x-variables")
        n = psi.rows
        if vars.nt != n:
            raise ValueError(f"variable set must have {n} T-variables")
        if psi.cols != n - 1:
            raise ValueError("presentation matrix must have shape n x (n-1)")
        _validate_f(f, m)
        _validate_linear_matrix(psi, vars)
        self.d = d
        self.m = m
        self.f = f
        self.psi = psi
        self.n = n
        self.vars = vars
        self.field = f.field

    def is_square_pipeline(self):
        return self.n == self.d + 1

    def __repr__(self):
        return f"InstanceIdeal(d={self.d}, m={self.m}, n={self.n})"


class InstanceModule:
    """A linearly presented projective-dimension-one module over
    k[x]/(f), of rank e with n generators."""

    def __init__(self, d, m, e, f, psi):
        if d < 2:
            raise ValueError("module pipeline needs d >= 2")
        if m < 1 or e < 1:
            raise ValueError("need m >= 1 and e >= 1")
        vars = f.vars
        if psi.vars != vars:
            raise ValueError("f and psi over different variable sets")
        if vars.nx != d + 1:
            raise ValueError(f"variable set must have {d + 1} x-variables")
        n = psi.rows
        if vars.nt != n:
            raise ValueError(f"variable set must have {n} T-variables")
        if psi.cols != n - e:
            raise ValueError("presentation matrix must have shape n x (n-e)")
        _validate_f(f, m)
        _validate_linear_matrix(psi, vars)
        self.d = d
        self.m = m
        self.e = e
        self.f = f
        self.psi = psi
        self.n = n
        self.vars = vars
        self.field = f.field

    def __repr__(self):
        return (
            f"InstanceModule(d={self.d}, m={self.m}, e={self.e}, n={self.n})"
        )


def make_varset(d, n, field_unused=None):
    return VarSet(nx=d + 1, nt=n)


def ideal_instance_from_strings(d, m, f_text, psi_texts, field=QQ):
    """Build an ideal instance from polynomial expression strings."""
    from .matrix import PolyMatrix
    from .parser import parse_poly

    n = len(psi_texts)
    vars = make_varset(d, n)
    f = parse_poly(f_text, vars, field)
    entries = [[parse_poly(s, vars, field) for s in row] for row in psi_texts]
    psi = PolyMatrix(vars, entries, field=field)
    return InstanceIdeal(d, m, f, psi)


def module_instance_from_strings(d, m, e, f_text, psi_texts, field=QQ):
    from .matrix import PolyMatrix
    from .parser import parse_poly

    n = len(psi_texts)
    vars = make_varset(d, n)
    f = parse_poly(f_text, vars, field)
    entries = [[parse_poly(s, vars, field) for s in row] for row in psi_texts]
    psi = PolyMatrix(vars, entries, field=field)
    return InstanceModule(d, m, e, f, psi)
