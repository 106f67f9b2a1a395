"""Buchberger-based Groebner engine: the verification oracle.

Provides reduced Groebner bases, normal forms, elimination, ideal
quotient (colon), saturation with its stabilization index, intersection,
ideal equality, and dimension/height.  Pair selection uses the normal
strategy (minimal lcm) with the coprimality and chain criteria.
Saturation is an iterated colon with an ideal-equality stop test, so the
stabilization index is itself a checkable output.  Intersections use the
classical one-extra-variable construction t*a + (1-t)*b with a block
order eliminating t.

Internally the engine works over the integers (primitive polynomials,
pseudo-division with periodic content stripping) for rational inputs and
with monic polynomials for prime fields; the published basis is always
reduced and monic over the coefficient field.  Resource caps on basis
size and processed pairs turn runaway computations into reported
failures, never wrong answers.
"""

import heapq
from fractions import Fraction
from math import gcd

from .fields import QQ
from .orders import TermOrder
from .poly import Poly, mon_divides, mon_lcm, mon_mul


class ResourceLimitExceeded(RuntimeError):
    def __init__(self, what, limit):
        super().__init__(f"groebner resource cap exceeded: {what} > {limit}")
        self.what = what
        self.limit = limit


class ExactDivisionError(RuntimeError):
    """Division that the surrounding construction guarantees must be
    exact has left a remainder; this signals an internal bug."""


class GroebnerLimits:
    def __init__(self, max_basis=4000, max_pairs=400000):
        self.max_basis = max_basis
        self.max_pairs = max_pairs


DEFAULT_LIMITS = GroebnerLimits()


class IdealGens:
    """A finite generator list for an ideal; zero generators are dropped
    at construction and the empty list denotes the zero ideal."""

    __slots__ = ("vars", "field", "gens", "_hash")

    def __init__(self, vars, gens, field=None):
        kept = []
        for g in gens:
            if g.vars != vars:
                raise ValueError("generator over a different variable set")
            if not g.is_zero():
                kept.append(g)
        self.vars = vars
        self.gens = tuple(kept)
        self.field = self.gens[0].field if self.gens else (field or QQ)
        for g in self.gens:
            if g.field != self.field:
                raise ValueError("generators over different fields")
        self._hash = None

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        return (
            isinstance(other, IdealGens)
            and self.vars == other.vars
            and self.field == other.field
            and self.gens == other.gens
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, self.field, self.gens))
        return self._hash

    def plus(self, extra):
        return IdealGens(self.vars, list(self.gens) + list(extra), self.field)

    def map_to(self, vars):
        return IdealGens(
            vars, [g.map_to(vars) for g in self.gens], self.field
        )

    def __repr__(self):
        return f"IdealGens({len(self.gens)} gens)"


def default_order(vars):
    return TermOrder.grevlex(vars.total)


# -- internal integer / prime-field core --------------------------------
#
# Engine monomials are exponent tuples packed into a single integer, 16
# bits per variable with a guard bit per lane: divisibility of lt into m
# is then one subtraction plus a mask test, and monomial products and
# quotients are integer adds and subtracts.  Exponents stay far below
# the 15-bit lane capacity at this package's scale.

_SHIFT = 16
_LANE_GUARD = 1 << (_SHIFT - 1)


class _Packer:
    def __init__(self, nvars):
        self.nvars = nvars
        self.guard = 0
        for i in range(nvars):
            self.guard |= _LANE_GUARD << (_SHIFT * i)

    def pack(self, mon):
        out = 0
        for i, e in enumerate(mon):
            out |= e << (_SHIFT * i)
        return out

    def unpack(self, packed):
        mask = (1 << _SHIFT) - 1
        return tuple(
            (packed >> (_SHIFT * i)) & mask for i in range(self.nvars)
        )


def _content(d):
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _neg_nested(k):
    return tuple(
        _neg_nested(x) if isinstance(x, tuple) else -x for x in k
    )


class _Engine:
    def __init__(self, order, field, limits, nvars):
        self.order = order
        self.field = field
        self.p = getattr(field, "p", None)
        self.limits = limits
        self.packer = _Packer(nvars)
        self.guard = self.packer.guard
        self._keys = {}
        self._nkeys = {}

    def from_polys(self, gens):
        """Convert field polynomials to packed engine dicts."""
        pack = self.packer.pack
        out = []
        for g in gens:
            if self.p is None:
                den = 1
                for c in g.terms.values():
                    den = den * c.denominator // gcd(den, c.denominator)
                d = {pack(m): int(c * den) for m, c in g.terms.items()}
            else:
                d = {pack(m): c % self.p for m, c in g.terms.items()}
            out.append(d)
        return out

    def key(self, packed):
        k = self._keys.get(packed)
        if k is None:
            k = self.order.key(self.packer.unpack(packed))
            self._keys[packed] = k
        return k

    def nkey(self, packed):
        k = self._nkeys.get(packed)
        if k is None:
            k = _neg_nested(self.key(packed))
            self._nkeys[packed] = k
        return k

    def lead(self, d):
        return max(d, key=self.key)

    def normalize(self, d):
        """Primitive with positive leading coefficient (Z mode) or monic
        (prime-field mode); mutates and returns d, or None if zero."""
        if not d:
            return None
        if self.p is not None:
            lc = d[self.lead(d)]
            if lc != 1:
                inv = pow(lc, self.p - 2, self.p)
                for k in d:
                    d[k] = d[k] * inv % self.p
            return d
        g = _content(d)
        if d[self.lead(d)] < 0:
            g = -g
        if g != 1:
            for k in d:
                d[k] //= g
        return d

    def item(self, d):
        """Prepared basis entry: (lt, lc, tail pairs, full dict)."""
        lt = self.lead(d)
        tail = [(m, c) for m, c in d.items() if m != lt]
        return (lt, d[lt], tail, d)

    def reduce(self, d, items):
        """Full remainder of d on division by the prepared items."""
        nkey = self.nkey
        guard = self.guard
        modulus = self.p
        p = dict(d)
        r = {}
        heap = [(nkey(m), m) for m in p]
        heapq.heapify(heap)
        strip = 64
        while heap:
            m = heapq.heappop(heap)[1]
            c = p.pop(m, None)
            if c is None:
                continue
            hit = None
            for it in items:
                if (m - it[0]) & guard == 0:
                    hit = it
                    break
            if hit is None:
                r[m] = c
                continue
            lt, lc, tail, _ = hit
            shift = m - lt
            if modulus is not None:
                for mm, cc in tail:
                    mk = mm + shift
                    old = p.get(mk)
                    if old is None:
                        val = (-c * cc) % modulus
                        if val:
                            p[mk] = val
                            heapq.heappush(heap, (nkey(mk), mk))
                    else:
                        val = (old - c * cc) % modulus
                        if val:
                            p[mk] = val
                        else:
                            del p[mk]
                continue
            g = gcd(c, lc)
            a = lc // g
            b = c // g
            if a != 1:
                for k in p:
                    p[k] *= a
                for k in r:
                    r[k] *= a
                strip -= 1
            for mm, cc in tail:
                mk = mm + shift
                old = p.get(mk)
                if old is None:
                    val = -b * cc
                    if val:
                        p[mk] = val
                        heapq.heappush(heap, (nkey(mk), mk))
                else:
                    val = old - b * cc
                    if val:
                        p[mk] = val
                    else:
                        del p[mk]
            if strip <= 0:
                g = gcd(_content(p), _content(r))
                if g > 1:
                    for k in p:
                        p[k] //= g
                    for k in r:
                        r[k] //= g
                strip = 64
        return self.normalize(r) or {}

    def mon_lcm(self, a, b):
        ua, ub = self.packer.unpack(a), self.packer.unpack(b)
        return self.packer.pack(tuple(map(max, ua, ub)))

    def mon_coprime(self, a, b):
        ua, ub = self.packer.unpack(a), self.packer.unpack(b)
        return all(i == 0 or j == 0 for i, j in zip(ua, ub))

    def spoly(self, itf, itg):
        ltf, lcf, _, ff = itf
        ltg, lcg, _, gg = itg
        lcm = self.mon_lcm(ltf, ltg)
        sf = lcm - ltf
        sg = lcm - ltg
        s = {}
        if self.p is not None:
            a, b = 1, 1
        else:
            g = gcd(lcf, lcg)
            a, b = lcg // g, lcf // g
        for m, c in ff.items():
            mk = m + sf
            s[mk] = s.get(mk, 0) + a * c
        for m, c in gg.items():
            mk = m + sg
            acc = s.get(mk, 0) - b * c
            if acc:
                s[mk] = acc
            else:
                s.pop(mk, None)
        if self.p is not None:
            s = {m: c % self.p for m, c in s.items() if c % self.p}
        return s

    def autoreduce(self, dicts):
        """Interreduce a list of engine dicts until stable.  Updates are
        visible within a sweep, so duplicates collapse to one copy."""
        polys = [self.normalize(dict(d)) for d in dicts if d]
        seen = set()
        unique = []
        for d in polys:
            if d is None:
                continue
            k = frozenset(d.items())
            if k not in seen:
                seen.add(k)
                unique.append(d)
        polys = unique
        changed = True
        sweeps = 0
        while changed and sweeps < 64:
            changed = False
            sweeps += 1
            for i in range(len(polys)):
                d = polys[i]
                if d is None:
                    continue
                others = [
                    self.item(e)
                    for j, e in enumerate(polys)
                    if j != i and e is not None
                ]
                if not others:
                    continue
                r = self.reduce(d, others)
                if r != d:
                    changed = True
                    polys[i] = r if r else None
            polys = [d for d in polys if d is not None]
        return polys

    def buchberger(self, dicts):
        G = []
        items = []
        for d in self.autoreduce(dicts):
            G.append(d)
            items.append(self.item(d))
        pending = set()
        heap = []
        for j in range(len(G)):
            for i in range(j):
                self._push_pair(heap, pending, items, i, j)
        processed = 0
        while heap:
            _, i, j, lcm = heapq.heappop(heap)
            if (i, j) not in pending:
                continue
            pending.discard((i, j))
            processed += 1
            if processed > self.limits.max_pairs:
                raise ResourceLimitExceeded("pairs processed", self.limits.max_pairs)
            if self.mon_coprime(items[i][0], items[j][0]):
                continue
            if self._chain_criterion(items, pending, i, j, lcm):
                continue
            s = self.spoly(items[i], items[j])
            if not s:
                continue
            r = self.reduce(s, items)
            if not r:
                continue
            G.append(r)
            items.append(self.item(r))
            if len(G) > self.limits.max_basis:
                raise ResourceLimitExceeded("basis size", self.limits.max_basis)
            t = len(G) - 1
            for i2 in range(t):
                self._push_pair(heap, pending, items, i2, t)
        return self._reduced_basis(G)

    def _push_pair(self, heap, pending, items, i, j):
        lcm = self.mon_lcm(items[i][0], items[j][0])
        pending.add((i, j))
        heapq.heappush(heap, (self.key(lcm), i, j, lcm))

    def _chain_criterion(self, items, pending, i, j, lcm):
        guard = self.guard
        for k in range(len(items)):
            if k == i or k == j:
                continue
            if (lcm - items[k][0]) & guard:
                continue
            a = (i, k) if i < k else (k, i)
            b = (j, k) if j < k else (k, j)
            if a not in pending and b not in pending:
                return True
        return False

    def _reduced_basis(self, G):
        guard = self.guard
        enriched = sorted(
            (d for d in G if d), key=lambda d: self.key(self.lead(d))
        )
        minimal = []
        lts = []
        for d in enriched:
            lt = self.lead(d)
            if any((lt - other) & guard == 0 for other in lts):
                continue
            minimal.append(d)
            lts.append(lt)
        reduced = []
        for i, d in enumerate(minimal):
            others = [self.item(e) for j, e in enumerate(minimal) if j != i]
            r = self.reduce(dict(d), others) if others else self.normalize(dict(d))
            reduced.append(r)
        reduced.sort(key=lambda d: self.key(self.lead(d)))
        return reduced

    def to_field_poly(self, d, vars):
        if not d:
            return Poly.zero(vars, self.field)
        unpack = self.packer.unpack
        lc = d[self.lead(d)]
        if self.p is None:
            terms = {unpack(m): Fraction(c, lc) for m, c in d.items()}
        else:
            inv = pow(lc, self.p - 2, self.p)
            terms = {
                unpack(m): c * inv % self.p for m, c in d.items()
            }
        return Poly(vars, self.field, terms, _clean=True)


class GroebnerBasis:
    """A reduced, monic Groebner basis with its term order."""

    def __init__(self, gens, order):
        self.gens = gens
        self.order = order
        self.vars = gens.vars
        self.field = gens.field
        self._items = None

    @property
    def polys(self):
        return self.gens.gens

    def is_trivial(self):
        return any(
            len(g.terms) == 1 and next(iter(g.terms)) == g.vars._zero_mon
            for g in self.polys
        )

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.polys]

    def _field_items(self):
        if self._items is None:
            items = []
            for g in self.polys:
                lt = g.leading_monomial(self.order)
                tail = [(m, c) for m, c in g.terms.items() if m != lt]
                items.append((lt, tail))
            self._items = items
        return self._items

    def normal_form(self, poly):
        """The canonical remainder of poly on division by the basis."""
        if poly.vars != self.vars:
            raise ValueError("polynomial over a different variable set")
        field = self.field
        zero = field.zero
        key = self.order.key
        items = self._field_items()
        p = dict(poly.terms)
        r = {}
        while p:
            m = max(p, key=key)
            c = p.pop(m)
            hit = None
            for lt, tail in items:
                divides = True
                for a, b in zip(lt, m):
                    if a > b:
                        divides = False
                        break
                if divides:
                    hit = (lt, tail)
                    break
            if hit is None:
                r[m] = c
                continue
            lt, tail = hit
            shift = tuple(a - b for a, b in zip(m, lt))
            for mm, cc in tail:
                mk = mon_mul(mm, shift)
                acc = field.sub(p.get(mk, zero), field.mul(c, cc))
                if acc == zero:
                    p.pop(mk, None)
                else:
                    p[mk] = acc
        return Poly(self.vars, field, r, _clean=True)

    def contains(self, poly):
        return self.normal_form(poly).is_zero()

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} elements, {self.order})"


_GB_CACHE = {}
_GB_CACHE_MAX = 512


def groebner(gens, order=None, limits=None):
    """The reduced Groebner basis of the ideal generated by `gens`.

    Deterministic given the generator order and the term order; results
    are cached on the (generators, order) pair.
    """
    order = order or default_order(gens.vars)
    cache_key = (gens, order)
    hit = _GB_CACHE.get(cache_key)
    if hit is not None:
        return hit
    engine = _Engine(order, gens.field, limits or DEFAULT_LIMITS, gens.vars.total)
    reduced = engine.buchberger(engine.from_polys(gens.gens))
    polys = tuple(engine.to_field_poly(d, gens.vars) for d in reduced)
    gb = GroebnerBasis(IdealGens(gens.vars, polys, gens.field), order)
    if len(_GB_CACHE) >= _GB_CACHE_MAX:
        _GB_CACHE.pop(next(iter(_GB_CACHE)))
    _GB_CACHE[cache_key] = gb
    return gb


def normal_form(poly, gb):
    return gb.normal_form(poly)


def ideal_equal(a, b, limits=None):
    """Whether two generator lists generate the same ideal."""
    if a.vars != b.vars or a.field != b.field:
        raise ValueError("ideals live in different rings")
    if a.gens == b.gens:
        return True
    order = default_order(a.vars)
    ga = groebner(a, order, limits)
    gc = groebner(b, order, limits)
    return set(ga.polys) == set(gc.polys)


def ideal_contains(a, b, limits=None):
    """Whether the ideal of `a` contains every generator of `b`."""
    gb = groebner(a, limits=limits)
    return all(gb.contains(g) for g in b.gens)


def divide_exact(h, g, order=None):
    """The quotient h / g when g divides h exactly."""
    order = order or default_order(h.vars)
    field = h.field
    zero = field.zero
    ltg = g.leading_monomial(order)
    lcg = g.terms[ltg]
    p = dict(h.terms)
    q = {}
    while p:
        m = max(p, key=order.key)
        if not mon_divides(ltg, m):
            raise ExactDivisionError(
                "remainder in a division guaranteed exact"
            )
        c = field.div(p.pop(m), lcg)
        shift = tuple(a - b for a, b in zip(m, ltg))
        q[shift] = c
        for mm, cc in g.terms.items():
            if mm == ltg:
                continue
            mk = mon_mul(mm, shift)
            acc = field.sub(p.get(mk, zero), field.mul(c, cc))
            if acc == zero:
                p.pop(mk, None)
            else:
                p[mk] = acc
    return Poly(h.vars, field, q, _clean=True)


def intersect(a, b, limits=None):
    """Generators of the intersection of two ideals, via elimination of
    one fresh auxiliary variable t from t*a + (1-t)*b."""
    if a.vars != b.vars or a.field != b.field:
        raise ValueError("ideals live in different rings")
    vars = a.vars
    ext = vars.extended(1)
    t_index = ext.total - 1
    t = Poly.var(ext, t_index, a.field)
    one = Poly.const(ext, 1, a.field)
    gens = [t * g.map_to(ext) for g in a.gens]
    gens += [(one - t) * g.map_to(ext) for g in b.gens]
    order = TermOrder.eliminate([t_index], ext.total)
    gb = groebner(IdealGens(ext, gens, a.field), order, limits)
    kept = [
        g.map_to(vars)
        for g in gb.polys
        if all(m[t_index] == 0 for m in g.terms)
    ]
    return IdealGens(vars, kept, a.field)


def colon(a, g, limits=None):
    """Generators of the ideal quotient a : (g) for a single nonzero g,
    as (a intersect (g)) divided by g."""
    if g.is_zero():
        raise ValueError("colon by the zero polynomial")
    inter = intersect(a, IdealGens(a.vars, [g], a.field), limits)
    return IdealGens(
        a.vars, [divide_exact(h, g) for h in inter.gens], a.field
    )


def colon_ideal(a, b, limits=None):
    """Generators of a : b, intersecting a : g over the generators g."""
    if len(b) == 0:
        raise ValueError("colon by the zero ideal")
    result = None
    for g in b.gens:
        c = colon(a, g, limits)
        result = c if result is None else intersect(result, c, limits)
    return result


def saturate(a, b, limits=None):
    """The saturation a : b^infinity with its stabilization index.

    Iterates the colon until the chain a : b^i stops growing and returns
    (stable ideal, least i with a : b^i = a : b^{i+1}).
    """
    current = a
    index = 0
    while True:
        nxt = colon_ideal(current, b, limits)
        if ideal_equal(nxt, current, limits):
            gb = groebner(current, default_order(a.vars), limits)
            return gb.gens, index
        current = groebner(nxt, default_order(a.vars), limits).gens
        index += 1


def eliminate(a, keep, limits=None):
    """Generators of the contraction of a to the subring on `keep`."""
    keep = set(keep)
    front = [i for i in range(a.vars.total) if i not in keep]
    if not front:
        return groebner(a, limits=limits).gens
    order = TermOrder.eliminate(front, a.vars.total)
    gb = groebner(a, order, limits)
    kept = [
        g
        for g in gb.polys
        if all(all(m[i] == 0 for i in front) for m in g.terms)
    ]
    return IdealGens(a.vars, kept, a.field)


def _independent_sets_dimension(lead_monomials, nvars):
    """Largest cardinality of a variable subset meeting no leading
    monomial's support; brute force, fine below a dozen variables."""
    from itertools import combinations

    supports = [
        frozenset(i for i, e in enumerate(m) if e > 0) for m in lead_monomials
    ]
    if any(not s for s in supports):
        return -1
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if all(not s <= chosen for s in supports):
                return size
    return -1


def dimension(a, limits=None):
    """Krull dimension of the quotient by a, via independent variable
    sets modulo the leading-term ideal of a grevlex basis.  The zero
    ideal gives the variable count; the unit ideal gives -1."""
    if len(a) == 0:
        return a.vars.total
    gb = groebner(a, default_order(a.vars), limits)
    if gb.is_trivial():
        return -1
    return _independent_sets_dimension(gb.leading_monomials(), a.vars.total)


def height(a, limits=None):
    """Height of a in its polynomial ring: variable count minus the
    dimension of the quotient (unit ideal: the variable count)."""
    dim = dimension(a, limits)
    if dim == -1:
        return a.vars.total
    return a.vars.total - dim


def buchberger_criterion_holds(gb):
    """Every S-polynomial of basis pairs reduces to zero (test hook)."""
    polys = gb.polys
    order = gb.order
    for j in range(len(polys)):
        for i in range(j):
            f, g = polys[i], polys[j]
            ltf = f.leading_monomial(order)
            ltg = g.leading_monomial(order)
            lcm = mon_lcm(ltf, ltg)
            mf = tuple(a - b for a, b in zip(lcm, ltf))
            mg = tuple(a - b for a, b in zip(lcm, ltg))
            s = f.mul_term(mf, f.field.inv(f.terms[ltf])) - g.mul_term(
                mg, g.field.inv(g.terms[ltg])
            )
            if not gb.normal_form(s).is_zero():
                return False
    return True
