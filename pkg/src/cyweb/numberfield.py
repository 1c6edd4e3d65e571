"""Exact arithmetic in number fields Q(a) presented by a monic minimal polynomial.

A field is a quotient Q[t]/(m) with m monic and irreducible; its elements are
residue classes stored as coefficient tuples of length deg(m).  Degree 1
encodes the rationals themselves, in which case elements are plain
``fractions.Fraction`` values (no wrapper object), which keeps the common
rational case fast.  Towers of extensions are not supported.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd
from typing import Sequence, Union

Rational = Union[int, Fraction]

_MAX_IRREDUCIBILITY_DEGREE = 8
_MAX_KRONECKER_CANDIDATES = 200_000


class IrreducibilityError(ValueError):
    """Raised when a minimal polynomial is reducible or too big to test."""


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational number, got {type(x).__name__}")


def _poly_trim(coeffs):
    """Drop trailing zero coefficients of a univariate coefficient list."""
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return c


def _poly_divmod(a, b):
    """Exact division with remainder for rational coefficient lists (low first)."""
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b) and _poly_trim(a):
        a = _poly_trim(a)
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        factor = a[-1] * inv_lead
        q[shift] = factor
        for i, bi in enumerate(b):
            a[shift + i] -= factor * bi
        a.pop()
    return q, _poly_trim(a)


def _rational_roots(int_coeffs):
    """All rational roots of a primitive integer polynomial (low first)."""
    coeffs = list(int_coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)  # factor t; root 0 handled by caller via constant term
    if not coeffs:
        return []
    lead, const = coeffs[-1], coeffs[0]

    def divisors(n):
        n = abs(n)
        out = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
        return sorted(set(out + [n // d for d in out]))

    roots = []
    for p in divisors(const):
        for q in divisors(lead):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if sum(c * r**i for i, c in enumerate(int_coeffs)) == 0:
                    roots.append(r)
    return roots


def _is_irreducible(minpoly: Sequence[Fraction]) -> bool:
    """Irreducibility over Q by rational-root test plus Kronecker trial factors.

    Only degrees up to 8 are supported; beyond that the search space of the
    trial factorization is not worth bounding and we refuse instead of
    guessing.
    """
    degree = len(minpoly) - 1
    if degree == 1:
        return True
    if degree > _MAX_IRREDUCIBILITY_DEGREE:
        raise IrreducibilityError(
            f"irreducibility testing is limited to degree {_MAX_IRREDUCIBILITY_DEGREE}"
        )
    # scale to a primitive integer polynomial
    denom = 1
    for c in minpoly:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in minpoly]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]

    if ints[0] == 0:  # t divides
        return False
    if _rational_roots(ints):
        return False
    if degree <= 3:
        return True

    def divisors_signed(n):
        n = abs(n)
        small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
        ds = sorted(set(small + [n // d for d in small]))
        return [s * d for d in ds for s in (1, -1)]

    def eval_int(poly, x):
        acc = 0
        for c in reversed(poly):
            acc = acc * x + c
        return acc

    # Kronecker: a degree-m factor is determined by its values at m+1 integer
    # points, and those values divide the values of the polynomial there.
    for m in range(2, degree // 2 + 1):
        points = list(range(-(m // 2), m // 2 + 2))[: m + 1]
        value_choices = []
        for x in points:
            v = eval_int(ints, x)
            if v == 0:
                return False
            value_choices.append(divisors_signed(v))
        total = 1
        for ch in value_choices:
            total *= len(ch)
        if total > _MAX_KRONECKER_CANDIDATES:
            raise IrreducibilityError(
                "too many trial factors in irreducibility test; "
                "supply a field of smaller height"
            )
        for values in product(*value_choices):
            # Lagrange interpolation through (points, values)
            cand = [Fraction(0)] * (m + 1)
            for xi, vi in zip(points, values):
                basis = [Fraction(1)]
                denom_l = 1
                for xj in points:
                    if xj == xi:
                        continue
                    # multiply basis by (t - xj)
                    basis = [Fraction(0)] + basis
                    for k in range(len(basis) - 1):
                        basis[k] -= xj * basis[k + 1]
                    denom_l *= xi - xj
                for k in range(len(basis)):
                    cand[k] += vi * basis[k] / denom_l
            cand = _poly_trim(cand)
            if len(cand) - 1 != m:
                continue
            _, rem = _poly_divmod([Fraction(c) for c in ints], cand)
            if not rem:
                return False  # found a proper factor
    return True


class NumberField:
    """A number field Q(a) with a = root of a monic irreducible polynomial.

    ``minimal_polynomial`` is given low-degree-first; degree 1 is the
    rationals, whose elements are plain Fractions rather than FieldElement
    wrappers.
    """

    __slots__ = ("name", "minimal_polynomial", "degree", "_reduction", "_hash")

    def __init__(self, name: str, minimal_polynomial: Sequence[Rational]):
        coeffs = [_to_fraction(c) for c in minimal_polynomial]
        coeffs = _poly_trim(coeffs)
        if len(coeffs) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.name = name
        self.minimal_polynomial = tuple(coeffs)
        self.degree = len(coeffs) - 1
        if self.degree > 1 and not _is_irreducible(coeffs):
            raise IrreducibilityError(
                f"{name}: minimal polynomial is reducible over Q"
            )
        # reduction table: a^k for k = d .. 2d-2 as coefficient tuples
        d = self.degree
        table = []
        if d > 1:
            power = [-c for c in coeffs[:-1]]  # a^d
            table.append(tuple(power))
            for _ in range(d - 2):
                # multiply the previous power by a and reduce
                shifted = [Fraction(0)] + list(table[-1])
                if len(shifted) > d:
                    top = shifted.pop()
                    for i in range(d):
                        shifted[i] += top * -coeffs[i]
                table.append(tuple(shifted))
        self._reduction = tuple(table)
        self._hash = hash((self.name, self.minimal_polynomial))

    @classmethod
    def rationals(cls) -> "NumberField":
        return _QQ

    @property
    def is_rationals(self) -> bool:
        return self.degree == 1

    def __eq__(self, other):
        return (
            isinstance(other, NumberField)
            and self.name == other.name
            and self.minimal_polynomial == other.minimal_polynomial
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.is_rationals:
            return "NumberField(Q)"
        return f"NumberField(Q({self.name}))"

    # ---- element constructors -------------------------------------------

    @property
    def zero(self):
        return self.element([0])

    @property
    def one(self):
        return self.element([1])

    def element(self, coeffs: Sequence[Rational]):
        """Element with the given coordinates in the power basis 1, a, a^2, ..."""
        cs = [_to_fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            raise ValueError("too many coordinates for field degree")
        if self.is_rationals:
            return cs[0] if cs else Fraction(0)
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def from_rational(self, q: Rational):
        return self.element([_to_fraction(q)])

    def generator(self):
        """The class of a itself; undefined for the rationals."""
        if self.is_rationals:
            raise ValueError("the rationals have no proper generator")
        return self.element([0, 1])

    def coerce(self, value):
        """Coerce ints, Fractions and same-field elements into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element of a different number field")
            if self.is_rationals:
                raise ValueError("element of a different number field")
            return value
        if isinstance(value, (int, Fraction)):
            return self.from_rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    # ---- internal arithmetic on coefficient tuples -----------------------

    def _mul_coeffs(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            ck = prod[k]
            if ck:
                red = self._reduction[k - d]
                for i in range(d):
                    if red[i]:
                        out[i] += ck * red[i]
        return tuple(out)

    def _inv_coeffs(self, a):
        # extended Euclid in Q[t] against the minimal polynomial
        if not any(a):
            raise ZeroDivisionError("inversion of zero field element")
        r0, r1 = list(self.minimal_polynomial), _poly_trim(a)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            s = list(s0)
            s += [Fraction(0)] * (len(q) + len(s1) - 1 - len(s))
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        s[i + j] -= qi * sj
            r0, r1, s0, s1 = r1, r, s1, _poly_trim(s) or [Fraction(0)]
            if not _poly_trim(r1):
                break
        # r0 is the gcd (a nonzero constant, by irreducibility)
        c = r0[0]
        inv = [si / c for si in s0]
        inv += [Fraction(0)] * (self.degree - len(inv))
        return tuple(inv[: self.degree])


class FieldElement:
    """A residue class in a number field, stored in the power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- predicates --------------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.name, self.coeffs))

    # -- arithmetic ---------------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixing elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.field.zero
            return FieldElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul_coeffs(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv_coeffs(self.coeffs))

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        name = self.field.name
        parts = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*{name}" if c != 1 else name)
            else:
                parts.append(f"{c}*{name}^{i}" if c != 1 else f"{name}^{i}")
        return " + ".join(parts) if parts else "0"


_QQ = NumberField("t", [0, 1])


def cyclotomic_field(name: str, order: int) -> NumberField:
    """Q(zeta) for a prime order; enough for the fifth roots of unity."""
    coeffs = [1] * order
    return NumberField(name, coeffs)
