"""Exact coefficient fields: the rationals and prime fields Z/p.

Field elements are plain Python values: ``fractions.Fraction`` for QQ
(always stored reduced with positive denominator, which Fraction
guarantees) and ``int`` in ``[0, p)`` for GF(p).  A field object bundles
the arithmetic so polynomial code never needs to branch on the field.
"""

from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class RationalField:
    """The field of rational numbers with exact Fraction arithmetic."""

    characteristic = 0

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def fraction(self, num, den):
        return Fraction(num, den)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / self.coerce(b) if not isinstance(b, Fraction) else a / b

    def is_unit_int(self, n):
        """Whether the integer n is invertible in the field."""
        return n != 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """The prime field Z/p; elements are ints reduced into [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            return self.fraction(value.numerator, value.denominator)
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def fraction(self, num, den):
        return num * self.inv(den % self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_unit_int(self, n):
        return n % self.p != 0

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def field_from_name(name):
    """Parse a field tag: "Q" for the rationals, "Fp:<p>" for Z/p."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field {name!r} (expected 'Q' or 'Fp:<p>')")
