"""Exact scalar arithmetic: arbitrary-precision rationals and odd prime fields.

Rational scalars are plain ``fractions.Fraction`` values (always normalized,
positive denominator).  Prime-field scalars are :class:`Fp` residues that
carry their modulus, so mixed-field arithmetic fails loudly instead of
coercing.  Plain ``int`` operands are accepted everywhere: the integers embed
canonically in every field.

Text forms: a scalar prints as ``"a/b"`` (rationals, ``/b`` omitted when the
denominator is 1) or as its least nonnegative residue (prime fields).  A field
prints as ``"Q"`` or ``"Fp:<p>"``.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import (
    CharacteristicTwo,
    DivisionByZero,
    FieldMismatch,
    InputError,
    NotPrime,
)

__all__ = [
    "Fp",
    "Rationals",
    "PrimeField",
    "QQ",
    "GF",
    "field_of",
    "parse_field",
    "is_prime",
]

# Witness set making Miller-Rabin deterministic for n < 3.3 * 10**24,
# far beyond the machine-word moduli this package accepts.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for machine-word inputs."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Fp:
    """Residue modulo an odd prime p, with field arithmetic via operators.

    Instances are immutable and hashable.  Arithmetic accepts another
    :class:`Fp` with the same modulus or a plain ``int``; anything else
    (in particular a ``Fraction``) raises :class:`FieldMismatch`.
    """

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        object.__setattr__(self, "v", v % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Fp values are immutable")

    def _lift(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatch(f"F{self.p} element mixed with F{other.p} element")
            return other.v
        if isinstance(other, int):
            return other % self.p
        raise FieldMismatch(
            f"F{self.p} element mixed with {type(other).__name__}"
        )

    def __add__(self, other):
        return Fp(self.v + self._lift(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.v - self._lift(other), self.p)

    def __rsub__(self, other):
        return Fp(self._lift(other) - self.v, self.p)

    def __mul__(self, other):
        return Fp(self.v * self._lift(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._lift(other)
        if w == 0:
            raise DivisionByZero(f"division by zero in F{self.p}")
        return Fp(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, other):
        if self.v == 0:
            raise DivisionByZero(f"division by zero in F{self.p}")
        return Fp(self._lift(other) * pow(self.v, -1, self.p), self.p)

    def __pow__(self, n: int):
        if n < 0:
            if self.v == 0:
                raise DivisionByZero(f"division by zero in F{self.p}")
            return Fp(pow(pow(self.v, -1, self.p), -n, self.p), self.p)
        return Fp(pow(self.v, n, self.p), self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"


class Rationals:
    """The field of rational numbers, elements are ``Fraction`` values."""

    characteristic = 0
    name = "Q"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, x) -> Fraction:
        """Coerce an int, Fraction or text form into this field."""
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fp):
            raise FieldMismatch("prime-field element is not a rational scalar")
        raise InputError(f"cannot interpret {x!r} as a rational scalar")

    def parse(self, s: str) -> Fraction:
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational scalar {s!r}") from exc

    def fmt(self, x) -> str:
        return str(self.of(x))

    def sqrt(self, x):
        """Exact square root, or None when x is not a rational square.

        The canonical root has nonnegative numerator.
        """
        x = self.of(x)
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """The finite field F_p for an odd prime p fitting in a machine word."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2:
            raise NotPrime(f"{p!r} is not a prime")
        if p == 2:
            raise CharacteristicTwo("characteristic 2 is not supported")
        if p.bit_length() > 63:
            raise InputError(f"prime modulus {p} exceeds a machine word")
        if not is_prime(p):
            raise NotPrime(f"{p} is not a prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"Fp:{self.p}"

    def zero(self) -> Fp:
        return Fp(0, self.p)

    def one(self) -> Fp:
        return Fp(1, self.p)

    def of(self, x) -> Fp:
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch(f"F{x.p} element is not in F{self.p}")
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise InputError(
                    f"denominator of {x} vanishes modulo {self.p}"
                )
            return Fp(x.numerator * pow(x.denominator, -1, self.p), self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise InputError(f"cannot interpret {x!r} as an F{self.p} scalar")

    def parse(self, s: str) -> Fp:
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/", 1)
                return self.of(Fraction(int(num), int(den)))
            return Fp(int(s), self.p)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad F{self.p} scalar {s!r}") from exc

    def fmt(self, x) -> str:
        return str(self.of(x).v)

    def sqrt(self, x):
        """Square root in F_p via Tonelli-Shanks, or None for a non-residue.

        The canonical root is the smaller of the two residues.
        """
        a = self.of(x).v
        p = self.p
        if a == 0:
            return Fp(0, p)
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            r = pow(a, (p + 1) // 4, p)
        else:
            q, s = p - 1, 0
            while q % 2 == 0:
                q //= 2
                s += 1
            z = 2
            while pow(z, (p - 1) // 2, p) != p - 1:
                z += 1
            c = pow(z, q, p)
            r = pow(a, (q + 1) // 2, p)
            t = pow(a, q, p)
            m = s
            while t != 1:
                i, t2 = 0, t
                while t2 != 1:
                    t2 = t2 * t2 % p
                    i += 1
                b = pow(c, 1 << (m - i - 1), p)
                r = r * b % p
                c = b * b % p
                t = t * c % p
                m = i
        return Fp(min(r, p - r), p)

    def contains(self, x) -> bool:
        return isinstance(x, Fp) and x.p == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = Rationals()

_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Return the prime field F_p (cached)."""
    fld = _GF_CACHE.get(p)
    if fld is None:
        fld = PrimeField(p)
        _GF_CACHE[p] = fld
    return fld


def field_of(x):
    """Return the field an element belongs to."""
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, Fp):
        return GF(x.p)
    if isinstance(x, int):
        return QQ
    raise InputError(f"{x!r} is not a field element")


def parse_field(spec: str):
    """Parse a field spec: ``"Q"`` or ``"Fp:<p>"``."""
    spec = spec.strip()
    if spec == "Q":
        return QQ
    if spec.startswith("Fp:"):
        try:
            p = int(spec[3:])
        except ValueError as exc:
            raise InputError(f"bad field spec {spec!r}") from exc
        return GF(p)
    raise InputError(f"bad field spec {spec!r} (expected 'Q' or 'Fp:<p>')")
