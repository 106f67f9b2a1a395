"""Sparse exact multivariate polynomials over a bigraded variable set.

The ambient ring is k[x-block][T-block] with optional auxiliary Z and Y
blocks; the bigrading puts deg x_i = (1, 0) and deg T_i = (0, 1) while
auxiliary variables count toward neither component.  Monomials are bare
exponent tuples (one slot per variable); polynomials are immutable maps
from monomial to nonzero coefficient.  All arithmetic is exact.

Canonical printed form sorts terms by grevlex on the full variable list
with the x-block first, so equal polynomials always print identically.
"""

from fractions import Fraction

from .fields import QQ
from .orders import TermOrder


class VarSet:
    """A fixed block structure of variables: x1..x{nx}, T1..T{nt},
    optional Z{i}_{j} (zshape grid) and Y1..Y{ny}, plus internal
    auxiliary slots used by elimination constructions."""

    def __init__(self, nx, nt, zshape=(0, 0), ny=0, naux=0):
        if nx < 1 or nt < 1:
            raise ValueError("need at least one x and one T variable")
        self.nx = nx
        self.nt = nt
        self.zshape = tuple(zshape)
        self.ny = ny
        self.naux = naux
        self.nz = zshape[0] * zshape[1]
        names = [f"x{i+1}" for i in range(nx)]
        names += [f"T{i+1}" for i in range(nt)]
        names += [
            f"Z{i+1}_{j+1}" for i in range(zshape[0]) for j in range(zshape[1])
        ]
        names += [f"Y{j+1}" for j in range(ny)]
        names += [f"t{k+1}" for k in range(naux)]
        self.names = tuple(names)
        self.total = len(names)
        self.index = {name: i for i, name in enumerate(self.names)}
        self._zero_mon = (0,) * self.total
        self._key = (nx, nt, self.zshape, ny, naux)

    def x_indices(self):
        return range(self.nx)

    def t_indices(self):
        return range(self.nx, self.nx + self.nt)

    def extended(self, extra=1):
        """Same blocks with `extra` more auxiliary slots appended."""
        return VarSet(self.nx, self.nt, self.zshape, self.ny, self.naux + extra)

    def __eq__(self, other):
        return isinstance(other, VarSet) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"VarSet(nx={self.nx}, nt={self.nt})"


class BiDegree:
    """Total degree in the x-block and the T-block, as a pair.

    The zero polynomial gets the distinguished ZERO_BIDEGREE, which is
    compatible with (compares equal to) every bidegree so that zero
    matrix entries pass any declared column bidegree.
    """

    __slots__ = ("x", "t", "is_zero")

    def __init__(self, x, t, is_zero=False):
        self.x = x
        self.t = t
        self.is_zero = is_zero

    def __add__(self, other):
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return BiDegree(self.x + other.x, self.t + other.t)

    def __eq__(self, other):
        if not isinstance(other, BiDegree):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return True
        return self.x == other.x and self.t == other.t

    def __hash__(self):
        return hash("zero") if self.is_zero else hash((self.x, self.t))

    def pair(self):
        return (self.x, self.t)

    def __repr__(self):
        return "BiDegree(zero)" if self.is_zero else f"BiDegree({self.x}, {self.t})"


ZERO_BIDEGREE = BiDegree(0, 0, is_zero=True)


def mon_mul(a, b):
    return tuple(i + j for i, j in zip(a, b))

def mon_divides(a, b):
    return all(i <= j for i, j in zip(a, b))

def mon_div(a, b):
    return tuple(i - j for i, j in zip(a, b))

def mon_lcm(a, b):
    return tuple(max(i, j) for i, j in zip(a, b))

def mon_coprime(a, b):
    return all(i == 0 or j == 0 for i, j in zip(a, b))


class Poly:
    """An immutable sparse polynomial over a VarSet and a field."""

    __slots__ = ("vars", "field", "terms", "_hash")

    def __init__(self, vars, field, terms, _clean=False):
        self.vars = vars
        self.field = field
        if _clean:
            self.terms = terms
        else:
            zero = field.zero
            self.terms = {
                m: c for m, c in terms.items() if c != zero
            }
        self._hash = None

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, vars, field=QQ):
        return cls(vars, field, {}, _clean=True)

    @classmethod
    def const(cls, vars, value, field=QQ):
        c = field.coerce(value)
        if c == field.zero:
            return cls.zero(vars, field)
        return cls(vars, field, {vars._zero_mon: c}, _clean=True)

    @classmethod
    def var(cls, vars, index, field=QQ):
        mon = tuple(1 if i == index else 0 for i in range(vars.total))
        return cls(vars, field, {mon: field.one}, _clean=True)

    @classmethod
    def from_terms(cls, vars, items, field=QQ):
        terms = {}
        zero = field.zero
        for mon, c in items:
            c = field.coerce(c)
            acc = terms.get(mon)
            c = field.add(acc, c) if acc is not None else c
            if c == zero:
                terms.pop(mon, None)
            else:
                terms[mon] = c
        return cls(vars, field, terms, _clean=True)

    # -- basic protocol -----------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.vars, self.field, frozenset(self.terms.items()))
            )
        return self._hash

    def _check_compatible(self, other):
        if self.vars != other.vars:
            raise ValueError("polynomials over different variable sets")
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other, self.field)
        self._check_compatible(other)
        f = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            if acc is None:
                terms[m] = c
            else:
                s = f.add(acc, c)
                if s == f.zero:
                    del terms[m]
                else:
                    terms[m] = s
        return Poly(self.vars, f, terms, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Poly(
            self.vars, f, {m: f.neg(c) for m, c in self.terms.items()}, _clean=True
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other, self.field)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other)
        f = self.field
        zero = f.zero
        if len(self.terms) * len(other.terms) >= 256:
            return self._mul_packed(other)
        terms = {}
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                m = tuple(i + j for i, j in zip(ma, mb))
                prod = f.mul(ca, cb)
                acc = terms.get(m)
                if acc is None:
                    terms[m] = prod
                else:
                    s = f.add(acc, prod)
                    if s == zero:
                        del terms[m]
                    else:
                        terms[m] = s
        return Poly(self.vars, f, terms, _clean=True)

    def _mul_packed(self, other):
        """Large-product path: monomials packed into single integers so
        the inner loop does int adds and int-keyed dict updates."""
        f = self.field
        zero = f.zero
        shift = 16
        nv = self.vars.total

        def pack(m):
            out = 0
            for i in range(nv):
                out |= m[i] << (shift * i)
            return out

        a = [(pack(m), c) for m, c in self.terms.items()]
        b = [(pack(m), c) for m, c in other.terms.items()]
        if len(a) > len(b):
            a, b = b, a
        mul, add = f.mul, f.add
        acc = {}
        get = acc.get
        for ma, ca in a:
            for mb, cb in b:
                k = ma + mb
                old = get(k)
                if old is None:
                    acc[k] = mul(ca, cb)
                else:
                    s = add(old, mul(ca, cb))
                    if s == zero:
                        del acc[k]
                    else:
                        acc[k] = s
        mask = (1 << shift) - 1
        terms = {
            tuple((k >> (shift * i)) & mask for i in range(nv)): c
            for k, c in acc.items()
        }
        return Poly(self.vars, f, terms, _clean=True)

    __rmul__ = __mul__

    def scale(self, value):
        f = self.field
        c = f.coerce(value)
        if c == f.zero:
            return Poly.zero(self.vars, f)
        return Poly(
            self.vars, f, {m: f.mul(cc, c) for m, cc in self.terms.items()},
            _clean=True,
        )

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.const(self.vars, 1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def mul_term(self, mon, coeff):
        f = self.field
        c = f.coerce(coeff)
        if c == f.zero:
            return Poly.zero(self.vars, f)
        return Poly(
            self.vars,
            f,
            {mon_mul(m, mon): f.mul(cc, c) for m, cc in self.terms.items()},
            _clean=True,
        )

    # -- degrees ------------------------------------------------------

    def x_degree_of(self, mon):
        return sum(mon[: self.vars.nx])

    def t_degree_of(self, mon):
        nx = self.vars.nx
        return sum(mon[nx : nx + self.vars.nt])

    def bidegree(self):
        """The (x-degree, T-degree) pair if bihomogeneous, else None.

        The zero polynomial reports ZERO_BIDEGREE.
        """
        if not self.terms:
            return ZERO_BIDEGREE
        pairs = {
            (self.x_degree_of(m), self.t_degree_of(m)) for m in self.terms
        }
        if len(pairs) != 1:
            return None
        x, t = pairs.pop()
        return BiDegree(x, t)

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    # -- calculus and substitution-free helpers -------------------------

    def derivative(self, v):
        """Formal partial derivative with respect to variable index v."""
        f = self.field
        items = []
        for m, c in self.terms.items():
            e = m[v]
            if e == 0:
                continue
            factor = f.coerce(e)
            m2 = m[:v] + (e - 1,) + m[v + 1 :]
            items.append((m2, f.mul(c, factor)))
        return Poly.from_terms(self.vars, items, f)

    def divide_by_variable(self, v):
        """Exact division by the variable with index v."""
        terms = {}
        for m, c in self.terms.items():
            if m[v] == 0:
                raise ValueError(f"not divisible by {self.vars.names[v]}")
            terms[m[:v] + (m[v] - 1,) + m[v + 1 :]] = c
        return Poly(self.vars, self.field, terms, _clean=True)

    def map_to(self, vars):
        """Re-express over a VarSet that differs only in auxiliary slots."""
        if (vars.nx, vars.nt, vars.zshape, vars.ny) != (
            self.vars.nx, self.vars.nt, self.vars.zshape, self.vars.ny,
        ):
            raise ValueError("variable blocks differ")
        old, new = self.vars.total, vars.total
        if new >= old:
            pad = (0,) * (new - old)
            terms = {m + pad: c for m, c in self.terms.items()}
        else:
            terms = {}
            for m, c in self.terms.items():
                if any(m[new:]):
                    raise ValueError("polynomial uses a dropped auxiliary variable")
                terms[m[:new]] = c
        return Poly(vars, self.field, terms, _clean=True)

    # -- leading data and printing -------------------------------------

    def leading_monomial(self, order):
        return max(self.terms, key=order.key)

    def sorted_terms(self, order=None):
        order = order or TermOrder.grevlex(self.vars.total)
        return [(m, self.terms[m]) for m in order.sorted(self.terms)]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            factors = [
                f"{self.vars.names[v]}^{e}" if e > 1 else self.vars.names[v]
                for v, e in enumerate(m)
                if e > 0
            ]
            if isinstance(c, Fraction):
                negative = c < 0
                mag = -c if negative else c
                coef = str(mag)
            else:
                negative = False
                coef = str(c)
            if factors and coef == "1":
                body = "*".join(factors)
            elif factors:
                body = coef + "*" + "*".join(factors)
            else:
                body = coef
            if i == 0:
                parts.append("-" + body if negative else body)
            else:
                parts.append((" - " if negative else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self})"
