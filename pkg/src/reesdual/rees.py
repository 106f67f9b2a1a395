"""Jacobian duals, modified Jacobian duals, and the dual iterations.

The pipeline: from an x-linear presentation psi build the Jacobian dual
B(psi) over k[T] (the unique matrix with [x] * B(psi) = [T] * psi),
extend it by a column writing the hypersurface equation f as [x] * col
into the modified dual B = [B(psi) | col], then iterate.  In the square
case (B(psi) has d columns, B is (d+1) x (d+1)) each iteration takes a
single determinant:

    F_0 = f,           L_0 = (ell_1, ..., ell_d)
    L_i = L_{i-1} + (F_{i-1}),  B_i = [B(psi) | col(F_{i-1})],
    F_i = det B_i

and stops after exactly m = deg f steps, with bidegree(F_i) = (m-i, i*d).
The defining ideal of the Rees algebra is then generated by the d+m+1
polynomials ell_1, ..., ell_d, f, F_1, ..., F_m, and F_m is the special
fiber equation, pure in T of degree m*d.

Two choices of the column col(F) are provided: a characteristic-free
greedy split of each term along its least x-variable, and the scaled
gradient column (valid when the x-degree is invertible in k).  Either
choice generates the same ideal.
"""

from .groebner import IdealGens, groebner, normal_form
from .matrix import PolyMatrix
from .poly import BiDegree, Poly, ZERO_BIDEGREE


class HypothesisViolation(RuntimeError):
    """An input failed a condition the main theorems require."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def x_row(vars, field):
    return [Poly.var(vars, i, field) for i in vars.x_indices()]


def t_row(vars, field):
    return [Poly.var(vars, i, field) for i in vars.t_indices()]


def jacobian_dual(psi, vars=None):
    """The unique matrix B over k[T] with [x] * B = [T] * psi, for psi
    with x-linear entries.  Shape: (#x) x (psi.cols)."""
    vars = vars or psi.vars
    field = psi.field
    nx = vars.nx
    rows = [
        [Poly.zero(vars, field) for _ in range(psi.cols)] for _ in range(nx)
    ]
    tvars = list(vars.t_indices())
    for i in range(psi.rows):
        ti = Poly.var(vars, tvars[i], field)
        for j in range(psi.cols):
            p = psi.entry(i, j)
            bd = p.bidegree()
            if bd is None or bd != BiDegree(1, 0):
                raise ValueError(f"entry ({i},{j}) of psi is not x-linear")
            for mon, c in p.terms.items():
                k = next(v for v in range(nx) if mon[v] > 0)
                rows[k][j] = rows[k][j] + ti.scale(c)
    bidegs = [BiDegree(0, 1)] * psi.cols
    return PolyMatrix(vars, rows, col_bidegrees=bidegs, field=field)


def partial_column(F, mode="greedy", vars=None):
    """A column P with [x] * P = F, entries bihomogeneous of constant
    bidegree.

    greedy: each term is assigned to its least x-variable (works in any
    characteristic).  euler: P_k = (1/a) dF/dx_k with a the x-degree of
    F, requiring a invertible in the field.
    """
    vars = vars or F.vars
    field = F.field
    nx = vars.nx
    bd = F.bidegree()
    if bd is None:
        raise ValueError("column construction needs a bihomogeneous input")
    if F.is_zero() or bd.x == 0:
        raise ValueError(
            "input must lie in the x-variable ideal (positive x-degree)"
        )
    if mode == "greedy":
        cols = [dict() for _ in range(nx)]
        for mon, c in F.terms.items():
            k = next((v for v in range(nx) if mon[v] > 0), None)
            if k is None:
                raise ValueError("term of x-degree zero")
            m2 = mon[:k] + (mon[k] - 1,) + mon[k + 1 :]
            acc = cols[k].get(m2)
            c2 = field.add(acc, c) if acc is not None else c
            if c2 == field.zero:
                cols[k].pop(m2, None)
            else:
                cols[k][m2] = c2
        entries = [[Poly(vars, field, d, _clean=True)] for d in cols]
    elif mode == "euler":
        a = bd.x
        if not field.is_unit_int(a):
            raise ValueError(
                f"x-degree {a} is not invertible in {field!r}; use greedy"
            )
        inv = field.inv(field.coerce(a))
        entries = [[F.derivative(k).scale(inv)] for k in range(nx)]
    else:
        raise ValueError(f"unknown column mode {mode!r}")
    coldeg = BiDegree(bd.x - 1, bd.t)
    return PolyMatrix(vars, entries, col_bidegrees=[coldeg], field=field)


def sym_linear_forms(psi, vars=None):
    """The linear forms ell_j with [ell_1 ... ell_s] = [T] * psi."""
    vars = vars or psi.vars
    return psi.row_times(t_row(vars, psi.field))


def modified_jacobian_dual(psi, f, mode="greedy", vars=None):
    """The matrix B = [B(psi) | col(f)] and the ideal of [x] * B.

    The ideal comes out as (ell_1, ..., ell_s, f): the defining ideal of
    the symmetric algebra, lifted to the polynomial ring.
    """
    vars = vars or psi.vars
    B = jacobian_dual(psi, vars).hstack(partial_column(f, mode, vars))
    ells = sym_linear_forms(psi, vars)
    L = IdealGens(vars, ells + [f], psi.field)
    return B, L


class IterationState:
    """The pair (B_i, L_i) of the i-th dual iteration, with the running
    determinant in the square case."""

    def __init__(self, step, matrix, ideal, det=None):
        self.step = step
        self.matrix = matrix
        self.ideal = ideal
        self.det = det

    def __repr__(self):
        return f"IterationState(step={self.step})"


def _require_nonzero_det(value, step):
    if value.is_zero():
        raise HypothesisViolation(
            f"det B_{step} = 0: the iteration degenerated, so the "
            "theorem hypotheses cannot hold for this input"
        )


def mjd_iterations(psi, f, mode="greedy", vars=None, steps=None):
    """Run the modified dual iterations; returns one state per step.

    Square case (B(psi) has #x - 1 columns): exactly m = deg f steps,
    one determinant per step.  General case: at each step the kept
    generators are the positive-x-degree minors using all but one column
    from B(psi), and one new column is appended per kept minor.
    """
    vars = vars or psi.vars
    field = psi.field
    Bpsi = jacobian_dual(psi, vars)
    nx = vars.nx
    m = f.bidegree().x
    total_steps = m if steps is None else steps
    ells = sym_linear_forms(psi, vars)
    if Bpsi.cols == nx - 1:
        return _mjd_square(Bpsi, ells, f, mode, vars, field, total_steps)
    return _mjd_general(Bpsi, ells, f, mode, vars, field, total_steps)


def _mjd_square(Bpsi, ells, f, mode, vars, field, total_steps):
    states = []
    L_gens = list(ells)
    F_prev = f
    for i in range(1, total_steps + 1):
        L_gens.append(F_prev)
        col = partial_column(F_prev, mode, vars)
        Bi = Bpsi.hstack(col)
        Fi = Bi.det()
        _require_nonzero_det(Fi, i)
        if Fi.bidegree() is None:
            raise HypothesisViolation(
                f"det B_{i} is not bihomogeneous; bad column bidegrees"
            )
        states.append(
            IterationState(i, Bi, IdealGens(vars, list(L_gens), field), Fi)
        )
        F_prev = Fi
    return states


def _mjd_general(Bpsi, ells, f, mode, vars, field, total_steps):
    states = []
    L_gens = list(ells) + [f]
    B_cur = Bpsi.hstack(partial_column(f, mode, vars))
    appended = {f}
    states.append(
        IterationState(
            1,
            B_cur,
            IdealGens(vars, list(L_gens), field),
            B_cur.det() if B_cur.rows == B_cur.cols else None,
        )
    )
    for i in range(2, total_steps + 1):
        minors = subminor_ideal(Bpsi, B_cur, 1)
        kept = []
        for u in minors.gens:
            bd = u.bidegree()
            if bd is None:
                raise HypothesisViolation(
                    "a dual minor is not bihomogeneous"
                )
            if bd.x > 0 and u not in appended and u not in kept:
                kept.append(u)
        if not kept:
            break
        cols = None
        for u in kept:
            c = partial_column(u, mode, vars)
            cols = c if cols is None else cols.hstack(c)
            appended.add(u)
        L_gens.extend(kept)
        B_cur = Bpsi.hstack(cols)
        states.append(
            IterationState(
                i,
                B_cur,
                IdealGens(vars, list(L_gens), field),
                B_cur.det() if B_cur.rows == B_cur.cols else None,
            )
        )
    return states


def matrix_iterations(psi, f, steps, mode="greedy", vars=None, trim=True):
    """Column-accumulating variant: at each step the positive-x-degree
    maximal minors become new columns.  Returns (B_steps, L +
    I_rows(B_steps)).

    The appended generators may be any set that generates the filtered
    minors modulo the running ideal (the resulting ideal is independent
    of the choice), so with trim=True a minor is dropped when its normal
    form against the running ideal is zero: an exact redundancy
    certificate.  This keeps the matrices near the sizes of the
    one-determinant-per-step pipeline instead of accumulating minors
    whose term counts grow multiplicatively with each step.
    """
    vars = vars or psi.vars
    field = psi.field
    B, L = modified_jacobian_dual(psi, f, mode, vars)
    B_cur = B
    running = list(L.gens)
    appended = set()
    for _ in range(2, steps + 1):
        candidates = []
        for _, v in B_cur.maximal_minors():
            if v.is_zero() or v in appended or v in candidates:
                continue
            bd = v.bidegree()
            if bd is None:
                raise HypothesisViolation("a dual minor is not bihomogeneous")
            if bd.x > 0:
                candidates.append(v)
        kept = []
        for v in candidates:
            if trim:
                base = groebner(IdealGens(vars, running + kept, field))
                if base.contains(v):
                    continue
            kept.append(v)
        if not kept:
            break
        cols = None
        for u in kept:
            c = partial_column(u, mode, vars)
            cols = c if cols is None else cols.hstack(c)
            appended.add(u)
        running.extend(kept)
        B_cur = B_cur.hstack(cols)
    minors = []
    for _, v in B_cur.maximal_minors():
        if not v.is_zero() and v not in minors:
            minors.append(v)
    return B_cur, L.plus(minors)


def subminor_ideal(Mprime, M, i):
    """The ideal of r x r minors of M (r = row count) whose column sets
    use at least r - i columns of the submatrix Mprime."""
    from itertools import combinations

    if Mprime.rows != M.rows:
        raise ValueError("row counts differ")
    r = M.rows
    if i < 0 or r - i > Mprime.cols:
        raise ValueError("not enough columns in the submatrix")
    prime_cols = []
    used = set()
    for j in range(Mprime.cols):
        col = Mprime.column(j)
        hit = None
        for k in range(M.cols):
            if k not in used and M.column(k) == col:
                hit = k
                break
        if hit is None:
            raise ValueError("Mprime is not a column-subset of M")
        used.add(hit)
        prime_cols.append(hit)
    prime_set = set(prime_cols)
    subsets = set()
    for cols in combinations(range(M.cols), r):
        if len(prime_set.intersection(cols)) >= r - i:
            subsets.add(cols)
    gens = []
    for cols in sorted(subsets):
        v = M._minor(tuple(range(r)), cols)
        if not v.is_zero() and v not in gens:
            gens.append(v)
    return IdealGens(M.vars, gens, M.field)


def diffop_apply(Bpsi, g):
    """Apply det[B(psi) | d/dx] to g, expanding along the operator
    column: sum_k (-1)^(k + #x) * (minor with row k deleted) * dg/dx_k."""
    vars = Bpsi.vars
    nx = vars.nx
    out = Poly.zero(vars, Bpsi.field)
    for k in range(nx):
        dg = g.derivative(k)
        if dg.is_zero():
            continue
        cof = Bpsi.delete_row(k).det()
        term = cof * dg
        out = out + term if (k + nx + 1) % 2 == 0 else out - term
    return out


class DiffopResult:
    def __init__(self, gens, powers):
        self.gens = gens
        self.powers = powers


def diffop_iterations(psi, f, vars=None):
    """The generator list (ell_1..ell_s, f, Df, ..., D^m f) for the
    determinantal differential operator D = det[B(psi) | d/dx].

    Requires characteristic zero or characteristic > m, so the degree
    units appearing through the Euler relation are invertible.
    """
    vars = vars or psi.vars
    field = psi.field
    m = f.bidegree().x
    char = field.characteristic
    if char != 0 and char <= m:
        raise ValueError(
            f"characteristic {char} must be zero or exceed {m}"
        )
    Bpsi = jacobian_dual(psi, vars)
    ells = sym_linear_forms(psi, vars)
    powers = [f]
    for _ in range(m):
        powers.append(diffop_apply(Bpsi, powers[-1]))
    gens = IdealGens(vars, ells + powers, field)
    return DiffopResult(gens, powers)


def cramer_check(a_row, M, limits=None):
    """Check the determinantal relations a_t * m_k = (-1)^(t-k) a_k * m_t
    modulo the ideal of entries of [a] * M, where m_t is the maximal
    minor of M with row t deleted.  Membership goes through the oracle.
    """
    vars = M.vars
    field = M.field
    r = M.rows
    if len(a_row) != r or M.cols != r - 1:
        raise ValueError("need a row of length r and an r x (r-1) matrix")
    relations = IdealGens(vars, M.row_times(a_row), field)
    gb = groebner(relations, limits=limits)
    minors = [M.delete_row(t).det() for t in range(r)]
    for t in range(r):
        for k in range(r):
            expr = a_row[t] * minors[k] - (
                a_row[k] * minors[t]
                if (t - k) % 2 == 0
                else -(a_row[k] * minors[t])
            )
            if not gb.contains(expr):
                return False
    return True


class DefiningIdealResult:
    """The computed generating set, in the canonical order
    ell_1, ..., ell_s, f, F_1, ..., F_m."""

    def __init__(self, states, ambient, modulo_f):
        self.states = states
        self.ambient = ambient
        self.modulo_f = modulo_f

    @property
    def determinants(self):
        return [s.det for s in self.states]


def defining_ideal(inst, mode="greedy"):
    """Full pipeline for an ideal instance: hypothesis check, then the
    dual iterations; the ambient result lists exactly d + m + 1
    generators, and dropping f gives the description modulo f."""
    from .hypotheses import check_ideal_instance

    report = check_ideal_instance(inst)
    if not report.overall:
        raise HypothesisViolation(
            "hypotheses failed: " + ", ".join(report.failed_names()),
            report=report,
        )
    states = mjd_iterations(inst.psi, inst.f, mode, inst.vars)
    last = states[-1]
    ambient = last.ideal.plus([last.det])
    modulo_f = IdealGens(
        inst.vars,
        [g for g in ambient.gens if g != inst.f],
        inst.field,
    )
    return DefiningIdealResult(states, ambient, modulo_f)


def special_fiber(ambient):
    """The unique pure-T generator and its T-degree: the special fiber
    of the Rees algebra is the hypersurface it cuts out."""
    pure = []
    for g in ambient.gens:
        bd = g.bidegree()
        if bd is not None and not bd.is_zero and bd.x == 0:
            pure.append((g, bd.t))
    if len(pure) != 1:
        raise HypothesisViolation(
            f"expected exactly one pure-T generator, found {len(pure)}"
        )
    return pure[0]


def saturation_index_bound(degrees, n_vars):
    """Upper bound for the saturation index of an ideal of forms with
    the given x-degrees with respect to the x-variable ideal:
    sum of (top n_vars degrees - 1) plus one."""
    degrees = sorted(degrees, reverse=True)
    if len(degrees) < n_vars:
        raise ValueError("fewer generators than variables")
    return sum(deg - 1 for deg in degrees[:n_vars]) + 1


def minimality_holds(gens, limits=None):
    """No generator lies in the ideal of the others (normal forms).

    For a bihomogeneous generator only generators of componentwise
    smaller bidegree can appear in its graded component, so the
    membership test runs against that subset; this is exact, and it
    keeps the basis computations small.
    """
    polys = list(gens.gens)
    bidegrees = [g.bidegree() for g in polys]
    for i, g in enumerate(polys):
        bd = bidegrees[i]
        if bd is None:
            others = polys[:i] + polys[i + 1 :]
        else:
            others = [
                h
                for j, h in enumerate(polys)
                if j != i
                and bidegrees[j] is not None
                and bidegrees[j].x <= bd.x
                and bidegrees[j].t <= bd.t
            ]
        if not others:
            continue
        basis = groebner(
            IdealGens(gens.vars, others, gens.field), limits=limits
        )
        if basis.contains(g):
            return False
    return True
