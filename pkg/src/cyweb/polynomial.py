"""Sparse multivariate polynomials with exact coefficients in a number field.

Terms are stored as a dict from exponent tuple to nonzero coefficient; the
coefficient is a plain Fraction over the rationals and a FieldElement over a
proper number field.  Values are immutable after construction and all
arithmetic is exact.

The text format understood by :func:`parse_polynomial_file` is::

    vars: x,y,z,w
    field: e; minpoly: e^4+e^3+e^2+e+1    (optional; omitted means Q)
    x^2 - y^2 - (z-e*w)*(z+w) + 1/2

``*`` may be omitted, ``^`` denotes powers, coefficients are rationals p/q.
Serialization is canonical (terms sorted by the active monomial order), so
parse/serialize round-trips are bit-exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

from .errors import DomainError
from .numberfield import FieldElement, NumberField
from .ordering import DEGREVLEX, MonomialOrder

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction, FieldElement]


class ParseError(DomainError, ValueError):
    """Malformed polynomial or header text."""


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_weighted_degree(m: Monomial, weights: Sequence[int]) -> int:
    return sum(w * e for w, e in zip(weights, m))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class PolynomialRing:
    """A polynomial ring over Q or over a number field Q(a)."""

    __slots__ = ("variables", "field", "_hash")

    def __init__(self, variables: Sequence[str], field: Optional[NumberField] = None):
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.variables = names
        self.field = field if field is not None else NumberField.rationals()
        if not self.field.is_rationals and self.field.name in names:
            raise ValueError("field generator name collides with a ring variable")
        self._hash = hash((names, self.field))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.variables == other.variables
            and self.field == other.field
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        base = "Q" if self.field.is_rationals else f"Q({self.field.name})"
        return f"PolynomialRing({base}[{', '.join(self.variables)}])"

    # -- element construction ------------------------------------------------

    def coerce_scalar(self, value) -> Scalar:
        if self.field.is_rationals:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, FieldElement):
                raise ValueError("field element in a rational ring")
            raise TypeError(f"cannot use {type(value).__name__} as coefficient")
        return self.field.coerce(value)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value) -> "Polynomial":
        c = self.coerce_scalar(value)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def gen(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise IndexError("variable index out of range")
        m = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {m: self.coerce_scalar(1)})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def polynomial(self, terms: Mapping[Monomial, Scalar]) -> "Polynomial":
        clean: Dict[Monomial, Scalar] = {}
        for m, c in terms.items():
            if len(m) != self.nvars:
                raise ValueError("monomial length does not match variable count")
            c = self.coerce_scalar(c)
            if c:
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def drop_variable(self, i: int) -> "PolynomialRing":
        names = self.variables[:i] + self.variables[i + 1:]
        return PolynomialRing(names, self.field)

    def restrict(self, names: Sequence[str]) -> "PolynomialRing":
        return PolynomialRing(names, self.field)


class Polynomial:
    """Immutable sparse polynomial; do not mutate ``terms`` after creation."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: Dict[Monomial, Scalar]):
        self.ring = ring
        self.terms = terms

    # -- basics ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def constant_coefficient(self) -> Scalar:
        zero_mon = (0,) * self.ring.nvars
        c = self.terms.get(zero_mon)
        if c is None:
            return self.ring.coerce_scalar(0)
        return c

    # -- arithmetic --------------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            if acc is None:
                terms[m] = c
            else:
                s = acc + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            c = self.ring.coerce_scalar(other)
            if not c:
                return self.ring.zero
            return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        terms: Dict[Monomial, Scalar] = {}
        get = terms.get
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                acc = get(m)
                if acc is None:
                    terms[m] = ca * cb
                else:
                    s = acc + ca * cb
                    if s:
                        terms[m] = s
                    else:
                        del terms[m]
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        return self * c

    # -- calculus and structure ---------------------------------------------------

    def partial_derivative(self, var_index: int) -> "Polynomial":
        """Exact partial derivative with respect to the given variable."""
        n = self.ring.nvars
        if not 0 <= var_index < n:
            raise IndexError(f"variable index {var_index} out of range for {n} variables")
        terms: Dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            e = m[var_index]
            if e == 0:
                continue
            dm = m[:var_index] + (e - 1,) + m[var_index + 1:]
            dc = c * e
            acc = terms.get(dm)
            terms[dm] = dc if acc is None else acc + dc
        return Polynomial(self.ring, {m: c for m, c in terms.items() if c})

    def gradient(self) -> Tuple["Polynomial", ...]:
        return tuple(self.partial_derivative(i) for i in range(self.ring.nvars))

    def is_weighted_homogeneous(self, weights: Sequence[int]) -> Optional[int]:
        """Weighted degree if every term has the same one, else None.

        The zero polynomial counts as weighted-homogeneous of degree 0.
        """
        if len(weights) != self.ring.nvars:
            raise ValueError("one weight per variable required")
        if not self.terms:
            return 0
        degrees = {monomial_weighted_degree(m, weights) for m in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> Optional[int]:
        return self.is_weighted_homogeneous((1,) * self.ring.nvars)

    def substitute(self, assignments: Mapping[Union[str, int], object]) -> "Polynomial":
        """Substitute polynomials (or scalars) for variables, exactly.

        Keys are variable names or indices; values must be polynomials of this
        ring or coercible scalars.  Unmentioned variables stay untouched.
        """
        ring = self.ring
        subs: Dict[int, Polynomial] = {}
        for key, value in assignments.items():
            i = ring.var_index(key) if isinstance(key, str) else int(key)
            if not 0 <= i < ring.nvars:
                raise IndexError("substitution index out of range")
            if isinstance(value, Polynomial):
                if value.ring != ring:
                    raise ValueError("substituted polynomial lives in a different ring")
                subs[i] = value
            else:
                subs[i] = ring.constant(value)
        if not subs:
            return self
        powers: Dict[Tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            got = powers.get((i, e))
            if got is None:
                got = subs[i] ** e
                powers[(i, e)] = got
            return got

        result = ring.zero
        for m, c in self.terms.items():
            rest = tuple(0 if i in subs else e for i, e in enumerate(m))
            piece = Polynomial(ring, {rest: c})
            for i in subs:
                if m[i]:
                    piece = piece * power(i, m[i])
            result = result + piece
        return result

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        """Evaluate at a point with coordinates in the coefficient field."""
        ring = self.ring
        if len(point) != ring.nvars:
            raise ValueError("one coordinate per variable required")
        coords = [ring.coerce_scalar(p) for p in point]
        total = ring.coerce_scalar(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(coords, m):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def dehomogenize(self, var_index: int) -> "Polynomial":
        """Set one variable to 1 and drop it from the ring."""
        n = self.ring.nvars
        if not 0 <= var_index < n:
            raise IndexError("variable index out of range")
        target = self.ring.drop_variable(var_index)
        terms: Dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            dm = m[:var_index] + m[var_index + 1:]
            acc = terms.get(dm)
            if acc is None:
                terms[dm] = c
            else:
                s = acc + c
                if s:
                    terms[dm] = s
                else:
                    del terms[dm]
        return Polynomial(target, terms)

    def to_ring(self, ring: PolynomialRing) -> "Polynomial":
        """Re-express in another ring containing the variables actually used."""
        mapping: Dict[int, int] = {}
        for src, name in enumerate(self.ring.variables):
            if any(m[src] for m in self.terms):
                mapping[src] = ring.var_index(name)
        terms: Dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            new = [0] * ring.nvars
            for src, e in enumerate(m):
                if e:
                    new[mapping[src]] = e
            terms[tuple(new)] = ring.coerce_scalar(c)
        return Polynomial(ring, terms)

    # -- leading data -----------------------------------------------------------

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX) -> Scalar:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        inv = 1 / lc if isinstance(lc, Fraction) else lc.inverse()
        return self * inv

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX):
        return [(m, self.terms[m]) for m in order.sorted_descending(self.terms)]


# ---------------------------------------------------------------------------
# univariate helpers (used for eliminants, discriminant-style root counting)
# ---------------------------------------------------------------------------


def univariate_coefficients(f: Polynomial) -> list:
    """Coefficient list (low first) of a polynomial in a one-variable ring."""
    if f.ring.nvars != 1:
        raise ValueError("not a univariate polynomial")
    deg = f.total_degree()
    out = [f.ring.coerce_scalar(0)] * (deg + 1 if deg >= 0 else 0)
    for (e,), c in f.terms.items():
        out[e] = c
    return out


def univariate_from_coefficients(ring: PolynomialRing, coeffs) -> Polynomial:
    if ring.nvars != 1:
        raise ValueError("target ring is not univariate")
    return ring.polynomial({(i,): c for i, c in enumerate(coeffs)})


def univariate_derivative(f: Polynomial) -> Polynomial:
    return f.partial_derivative(0)


def univariate_monic_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd of two univariates over the coefficient field (Euclid)."""
    if f.ring != g.ring or f.ring.nvars != 1:
        raise ValueError("gcd needs two univariates in one ring")
    a, b = f, g
    order = DEGREVLEX
    while b:
        a, b = b, _univariate_mod(a, b)
    if not a:
        return a
    return a.monic(order)


def _univariate_mod(a: Polynomial, b: Polynomial) -> Polynomial:
    ring = a.ring
    bcs = univariate_coefficients(b)
    lead = bcs[-1]
    inv = 1 / lead if isinstance(lead, Fraction) else lead.inverse()
    acs = univariate_coefficients(a)
    db = len(bcs) - 1
    while len(acs) - 1 >= db and acs:
        factor = acs[-1] * inv
        shift = len(acs) - 1 - db
        for i, bc in enumerate(bcs):
            acs[shift + i] = acs[shift + i] - factor * bc
        while acs and not acs[-1]:
            acs.pop()
    return univariate_from_coefficients(ring, acs)


def univariate_quotient(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact quotient of univariates; raises when b does not divide a."""
    ring = a.ring
    bcs = univariate_coefficients(b)
    if not bcs:
        raise ZeroDivisionError("division by the zero polynomial")
    lead = bcs[-1]
    inv = 1 / lead if isinstance(lead, Fraction) else lead.inverse()
    acs = univariate_coefficients(a)
    db = len(bcs) - 1
    out = [ring.coerce_scalar(0)] * max(len(acs) - db, 0)
    while len(acs) - 1 >= db and acs:
        factor = acs[-1] * inv
        shift = len(acs) - 1 - db
        out[shift] = factor
        for i, bc in enumerate(bcs):
            acs[shift + i] = acs[shift + i] - factor * bc
        while acs and not acs[-1]:
            acs.pop()
    if acs:
        raise ValueError("not an exact division")
    return univariate_from_coefficients(ring, out)


def squarefree_part(f: Polynomial) -> Polynomial:
    """f divided by gcd(f, f'): same roots, all simple."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    g = univariate_monic_gcd(f, univariate_derivative(f))
    if g.total_degree() <= 0:
        return f.monic()
    return univariate_quotient(f, g).monic()


def squarefree_part_degree(f: Polynomial) -> int:
    """Number of distinct roots of a nonzero univariate in a splitting field."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    g = univariate_monic_gcd(f, univariate_derivative(f))
    return f.total_degree() - g.total_degree() if g else f.total_degree()


def is_squarefree(f: Polynomial) -> bool:
    g = univariate_monic_gcd(f, univariate_derivative(f))
    return g.total_degree() <= 0


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+/\d+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()]))"
)


class _Parser:
    """Recursive-descent parser for the polynomial body grammar."""

    def __init__(self, text: str, ring: PolynomialRing):
        self.ring = ring
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text):
        tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip():
                    raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}")
                break
            pos = m.end()
            if m.lastgroup == "rat":
                p, q = m.group("rat").split("/")
                tokens.append(("num", Fraction(int(p), int(q))))
            elif m.lastgroup == "int":
                tokens.append(("num", Fraction(int(m.group("int")))))
            elif m.lastgroup == "name":
                tokens.extend(self._split_name(m.group("name")))
            else:
                tokens.append(("op", m.group("op")))
        return tokens

    def _split_name(self, name):
        """Resolve a word into variables / the field generator, greedily."""
        known = list(self.ring.variables)
        if not self.ring.field.is_rationals:
            known.append(self.ring.field.name)
        out = []
        rest = name
        while rest:
            cand = max(
                (v for v in known if rest.startswith(v)), key=len, default=None
            )
            if cand is None:
                raise ParseError(f"unknown variable {rest!r} in {name!r}")
            out.append(("sym", cand))
            rest = rest[len(cand):]
        return out

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def _next(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty polynomial body")
        poly = self._expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input near token {self._peek()!r}")
        return poly

    def _expr(self) -> Polynomial:
        kind, val = self._peek()
        negate = False
        if kind == "op" and val in "+-":
            self._next()
            negate = val == "-"
        acc = self._term()
        if negate:
            acc = -acc
        while True:
            kind, val = self._peek()
            if kind == "op" and val in "+-":
                self._next()
                rhs = self._term()
                acc = acc - rhs if val == "-" else acc + rhs
            else:
                return acc

    def _term(self) -> Polynomial:
        acc = self._power()
        while True:
            kind, val = self._peek()
            if kind == "op" and val == "*":
                self._next()
                acc = acc * self._power()
            elif kind == "op" and val == "/":
                self._next()
                divisor = self._power()
                c = divisor.constant_coefficient()
                if divisor.total_degree() > 0 or not c:
                    raise ParseError("division only by nonzero constants")
                inv = 1 / c if isinstance(c, Fraction) else c.inverse()
                acc = acc * inv
            elif kind in ("num", "sym") or (kind == "op" and val == "("):
                acc = acc * self._power()  # implicit multiplication
            else:
                return acc

    def _power(self) -> Polynomial:
        base = self._atom()
        kind, val = self._peek()
        if kind == "op" and val == "^":
            self._next()
            kind, val = self._next()
            if kind != "num" or val.denominator != 1 or val < 0:
                raise ParseError("exponent must be a nonnegative integer")
            return base ** int(val)
        return base

    def _atom(self) -> Polynomial:
        kind, val = self._next()
        if kind == "num":
            return self.ring.constant(val)
        if kind == "sym":
            if val in self.ring.variables:
                return self.ring.gen(self.ring.var_index(val))
            return self.ring.constant(self.ring.field.generator())
        if kind == "op" and val == "(":
            inner = self._expr()
            kind, val = self._next()
            if (kind, val) != ("op", ")"):
                raise ParseError("unbalanced parentheses")
            return inner
        if kind == "op" and val == "-":
            return -self._atom()
        raise ParseError(f"unexpected token {val!r}")


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    return _Parser(text, ring).parse()


def _format_rational(q: Fraction) -> str:
    return str(q)


def _format_field_element(c: FieldElement) -> str:
    name = c.field.name
    parts = []
    for i in reversed(range(len(c.coeffs))):
        v = c.coeffs[i]
        if not v:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = name
        else:
            mono = f"{name}^{i}"
        if not mono:
            body = _format_rational(abs(v))
        elif abs(v) == 1:
            body = mono
        else:
            body = f"{_format_rational(abs(v))}*{mono}"
        sign = "-" if v < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def format_polynomial(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> str:
    """Canonical text form: terms sorted descending by the active order."""
    if not f.terms:
        return "0"
    names = f.ring.variables
    chunks = []
    for m, c in f.sorted_terms(order):
        mono = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip(names, m) if e
        )
        if isinstance(c, Fraction):
            neg = c < 0
            mag = abs(c)
            if not mono:
                body = _format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_format_rational(mag)}*{mono}"
        else:
            if c.is_rational():
                q = c.as_rational()
                neg = q < 0
                mag = abs(q)
                if not mono:
                    body = _format_rational(mag)
                elif mag == 1:
                    body = mono
                else:
                    body = f"{_format_rational(mag)}*{mono}"
            else:
                neg = False
                wrapped = f"({_format_field_element(c)})"
                body = wrapped if not mono else f"{wrapped}*{mono}"
        chunks.append(("-" if neg else "+", body))
    sign, body = chunks[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# header + body files
# ---------------------------------------------------------------------------


def parse_ring_header(lines) -> PolynomialRing:
    """Build a ring from ``vars:`` and optional ``field:``/``minpoly:`` lines."""
    varnames = None
    field_name = None
    minpoly_text = None
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for piece in line.split(";"):
            piece = piece.strip()
            if not piece:
                continue
            if ":" not in piece:
                raise ParseError(f"malformed header line {raw!r}")
            key, _, value = piece.partition(":")
            key = key.strip().lower()
            value = value.strip()
            if key == "vars":
                varnames = [v.strip() for v in value.split(",") if v.strip()]
            elif key == "field":
                field_name = value
            elif key == "minpoly":
                minpoly_text = value
            else:
                raise ParseError(f"unknown header key {key!r}")
    if not varnames:
        raise ParseError("missing vars: header")
    if (field_name is None) != (minpoly_text is None):
        raise ParseError("field: and minpoly: must be given together")
    if field_name is None:
        return PolynomialRing(varnames)
    gen_ring = PolynomialRing([field_name])
    mp = parse_polynomial(minpoly_text, gen_ring)
    coeffs = univariate_coefficients(mp)
    field = NumberField(field_name, coeffs)
    return PolynomialRing(varnames, field)


def split_headers(text: str):
    """Separate ``key: value`` header lines from polynomial body lines."""
    headers = []
    body = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head = line.split(";")[0]
        if ":" in head and re.match(r"^[A-Za-z_][A-Za-z0-9_]*\s*:", head):
            headers.append(line)
        else:
            body.append(line)
    return headers, body


def parse_polynomial_file(text: str) -> Polynomial:
    """Parse a standalone polynomial file (headers + body)."""
    headers, body = split_headers(text)
    ring_lines = [h for h in headers if h.split(":")[0].strip().lower()
                  in ("vars", "field", "minpoly")]
    ring = parse_ring_header(ring_lines)
    if not body:
        raise ParseError("missing polynomial body")
    return parse_polynomial(" ".join(body), ring)


def format_ring_header(ring: PolynomialRing) -> str:
    lines = [f"vars: {','.join(ring.variables)}"]
    if not ring.field.is_rationals:
        gen_ring = PolynomialRing([ring.field.name])
        mp = univariate_from_coefficients(gen_ring, ring.field.minimal_polynomial)
        lines.append(f"field: {ring.field.name}; minpoly: {format_polynomial(mp)}")
    return "\n".join(lines)


def format_polynomial_file(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> str:
    return f"{format_ring_header(f.ring)}\n{format_polynomial(f, order)}\n"
