"""Monomial orders: grevlex, lex, and block elimination orders.

An order assigns each exponent tuple a sort key; monomial m1 exceeds m2
exactly when key(m1) > key(m2).  All three kinds are total orders
compatible with multiplication and with 1 minimal, as required for
Groebner computations.  Keys are cached per order instance because the
same monomials are compared many times during a basis computation.
"""


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class TermOrder:
    """A monomial order on a fixed number of variables.

    kind:  "grevlex" | "lex" | "block"
    perm:  variable indices listed from most to least significant
    split: for "block", the first `split` entries of perm form the
           elimination block; each block is compared by grevlex.
    """

    def __init__(self, kind, perm, split=0):
        if kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown order kind {kind!r}")
        if kind == "block" and not 0 < split < len(perm):
            raise ValueError("block order needs 0 < split < #vars")
        self.kind = kind
        self.perm = tuple(perm)
        self.split = split if kind == "block" else 0
        self._cache = {}

    @classmethod
    def grevlex(cls, nvars):
        return cls("grevlex", range(nvars))

    @classmethod
    def lex(cls, nvars, perm=None):
        return cls("lex", perm if perm is not None else range(nvars))

    @classmethod
    def eliminate(cls, front, nvars):
        """Block order eliminating the variables listed in `front`."""
        front = tuple(front)
        rest = tuple(i for i in range(nvars) if i not in set(front))
        return cls("block", front + rest, split=len(front))

    def key(self, mon):
        k = self._cache.get(mon)
        if k is None:
            if self.kind == "grevlex":
                k = _grevlex_key([mon[i] for i in self.perm])
            elif self.kind == "lex":
                k = tuple(mon[i] for i in self.perm)
            else:
                head = [mon[i] for i in self.perm[: self.split]]
                tail = [mon[i] for i in self.perm[self.split:]]
                k = (_grevlex_key(head), _grevlex_key(tail))
            self._cache[mon] = k
        return k

    def max_monomial(self, monomials):
        return max(monomials, key=self.key)

    def sorted(self, monomials, reverse=True):
        return sorted(monomials, key=self.key, reverse=reverse)

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and (self.kind, self.perm, self.split)
            == (other.kind, other.perm, other.split)
        )

    def __hash__(self):
        return hash((self.kind, self.perm, self.split))

    def __repr__(self):
        if self.kind == "block":
            return f"TermOrder(block, split={self.split})"
        return f"TermOrder({self.kind})"
