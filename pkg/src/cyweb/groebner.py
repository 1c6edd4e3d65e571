"""Buchberger's algorithm with reduced bases and zero-dimensional analytics.

The engine is deliberately plain: normal pair selection, both of Buchberger's
pair-elimination criteria, full tail reduction, leading coefficients
normalized to 1.  Everything in scope has few variables and small degree, so
no F4/F5-style machinery is attempted.  A pair-reduction budget turns runaway
inputs into an explicit error instead of an endless run.

Zero-dimensional analytics on top of a basis: vector-space dimension of the
quotient ring with its staircase of standard monomials, eliminants through
block orders, minimal polynomials of ring elements by linear algebra over the
quotient, and unit-ideal membership tests.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BudgetExceededError, PositiveDimensionalError
from .ordering import DEGREVLEX, MonomialOrder
from .polynomial import (
    Monomial,
    Polynomial,
    PolynomialRing,
    monomial_divides,
    univariate_from_coefficients,
)

DEFAULT_BUDGET = 100_000

_MAX_STAIRCASE_CELLS = 2_000_000


def _inv(c):
    return 1 / c if isinstance(c, Fraction) else c.inverse()


def _neg_key(key):
    if isinstance(key[0], tuple):  # block order keys nest
        return tuple(_neg_key(part) for part in key)
    return tuple(-x for x in key)


class _Reducer:
    """Shared reduction engine over a fixed list of monic divisors."""

    __slots__ = ("order", "rows")

    def __init__(self, order: MonomialOrder, polys: Sequence[Polynomial]):
        self.order = order
        self.rows = []
        for g in polys:
            lm = g.leading_monomial(order)
            scale = _inv(g.terms[lm])  # tails pre-divided by the lead
            tail = [(m, c * scale) for m, c in g.terms.items() if m != lm]
            self.rows.append((lm, tail))

    def reduce_terms(self, terms: Dict[Monomial, object]) -> Dict[Monomial, object]:
        """Full normal form of a term dict; input is consumed."""
        order_key = self.order.key
        rows = self.rows
        remainder: Dict[Monomial, object] = {}
        heap = [(_neg_key(order_key(m)), m) for m in terms]
        heapq.heapify(heap)
        while heap:
            _, m = heapq.heappop(heap)
            c = terms.get(m)
            if c is None:
                continue
            for lm, tail in rows:
                ok = True
                for a, b in zip(lm, m):
                    if a > b:
                        ok = False
                        break
                if not ok:
                    continue
                del terms[m]
                shift = tuple(b - a for a, b in zip(lm, m))
                for tm, tc in tail:
                    nm = tuple(x + y for x, y in zip(shift, tm))
                    acc = terms.get(nm)
                    if acc is None:
                        terms[nm] = -c * tc
                        heapq.heappush(heap, (_neg_key(order_key(nm)), nm))
                    else:
                        s = acc - c * tc
                        if s:
                            terms[nm] = s
                        else:
                            del terms[nm]
                break
            else:
                remainder[m] = c
                del terms[m]
        return remainder


class GroebnerBasis:
    """A reduced, monic Groebner basis together with its monomial order."""

    __slots__ = ("ring", "order", "generators", "_reducer")

    def __init__(self, ring: PolynomialRing, order: MonomialOrder,
                 generators: Sequence[Polynomial]):
        self.ring = ring
        self.order = order
        self.generators = tuple(generators)
        self._reducer = _Reducer(order, self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"GroebnerBasis({len(self.generators)} generators, {self.order!r})"

    @property
    def contains_one(self) -> bool:
        return any(g.total_degree() == 0 for g in self.generators)

    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.generators)

    def normal_form(self, f: Polynomial) -> Polynomial:
        """Remainder of f with no term divisible by any leading monomial."""
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if not self.generators:
            return f
        remainder = self._reducer.reduce_terms(dict(f.terms))
        return Polynomial(self.ring, remainder)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()


def _spolynomial_terms(f: Polynomial, g: Polynomial, order: MonomialOrder):
    lmf = f.leading_monomial(order)
    lmg = g.leading_monomial(order)
    lcm = tuple(max(a, b) for a, b in zip(lmf, lmg))
    sf = tuple(l - a for l, a in zip(lcm, lmf))
    sg = tuple(l - a for l, a in zip(lcm, lmg))
    cf = _inv(f.terms[lmf])
    cg = _inv(g.terms[lmg])
    terms: Dict[Monomial, object] = {}
    for m, c in f.terms.items():
        terms[tuple(x + y for x, y in zip(m, sf))] = c * cf
    for m, c in g.terms.items():
        nm = tuple(x + y for x, y in zip(m, sg))
        acc = terms.get(nm)
        if acc is None:
            terms[nm] = -c * cg
        else:
            s = acc - c * cg
            if s:
                terms[nm] = s
            else:
                del terms[nm]
    return terms


def buchberger(generators: Sequence[Polynomial],
               order: MonomialOrder = DEGREVLEX,
               budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by ``generators``.

    Normal selection strategy (smallest pair lcm first) with the coprime-lead
    and chain criteria.  Raises BudgetExceededError after ``budget`` pair
    reductions.  Every input generator is checked to reduce to zero against
    the final basis.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        ring = generators[0].ring if generators else None
        if ring is None:
            raise ValueError("cannot infer the ring of an empty generator list")
        return GroebnerBasis(ring, order, ())
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")

    basis: List[Polynomial] = []
    lms: List[Monomial] = []
    pending = set()
    heap: List[Tuple[object, int, int]] = []

    def push_with_pairs(p: Polynomial):
        p = p.monic(order)
        j = len(basis)
        lmj = p.leading_monomial(order)
        basis.append(p)
        lms.append(lmj)
        for i in range(j):
            lcm = tuple(max(a, b) for a, b in zip(lms[i], lmj))
            pending.add((i, j))
            heapq.heappush(heap, (order.key(lcm), i, j))

    for g in gens:
        push_with_pairs(g)

    reductions = 0
    reducer_cache: Optional[_Reducer] = None
    cache_size = -1

    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lcm = tuple(max(a, b) for a, b in zip(lms[i], lms[j]))
        # coprime leading monomials: S-polynomial reduces to zero
        if all(a == 0 or b == 0 for a, b in zip(lms[i], lms[j])):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if monomial_divides(lms[k], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        reductions += 1
        if reductions > budget:
            raise BudgetExceededError(
                f"desk-scale exceeded: more than {budget} pair reductions"
            )
        if cache_size != len(basis):
            reducer_cache = _Reducer(order, basis)
            cache_size = len(basis)
        sterm = _spolynomial_terms(basis[i], basis[j], order)
        remainder = reducer_cache.reduce_terms(sterm)
        if remainder:
            push_with_pairs(Polynomial(ring, remainder))

    reduced = _reduce_basis(basis, order)
    gb = GroebnerBasis(ring, order, reduced)
    for g in gens:
        if not gb.contains(g):
            raise AssertionError("input generator fails to reduce to zero")
    return gb


def _reduce_basis(basis: List[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Minimalize and tail-reduce a basis; output is monic and sorted."""
    items = [(g.leading_monomial(order), g) for g in basis if not g.is_zero()]
    # drop elements whose lead is divisible by another lead
    keep: List[Tuple[Monomial, Polynomial]] = []
    for idx, (lm, g) in enumerate(items):
        redundant = False
        for jdx, (lm2, _) in enumerate(items):
            if jdx == idx:
                continue
            if monomial_divides(lm2, lm) and (lm2 != lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append((lm, g))
    # fully reduce each tail against the others; leading monomials are
    # pairwise non-divisible here, so one pass yields the canonical basis
    polys = [g for _, g in keep]
    final: List[Polynomial] = []
    for idx, g in enumerate(polys):
        others = polys[:idx] + polys[idx + 1:]
        reducer = _Reducer(order, others) if others else None
        terms = dict(g.terms)
        reduced = reducer.reduce_terms(terms) if reducer else terms
        p = Polynomial(g.ring, reduced).monic(order)
        if not p.is_zero():
            final.append(p)
    final.sort(key=lambda p: order.key(p.leading_monomial(order)))
    return final


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(f)


class QuotientBasis:
    """Standard monomials of a zero-dimensional ideal (the staircase)."""

    __slots__ = ("monomials",)

    def __init__(self, monomials: Sequence[Monomial]):
        self.monomials = tuple(monomials)

    @property
    def standard_monomials(self) -> Tuple[Monomial, ...]:
        return self.monomials

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def index(self) -> Dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.monomials)}

    def __repr__(self):
        return f"QuotientBasis({len(self.monomials)} monomials)"


def quotient_dimension(gb: GroebnerBasis) -> Optional[Tuple[int, QuotientBasis]]:
    """Dimension of R/I with its monomial basis; None if positive-dimensional."""
    n = gb.ring.nvars
    if gb.contains_one:
        return 0, QuotientBasis(())
    if not gb.generators:
        return None if n > 0 else (1, QuotientBasis(((),)))
    lms = gb.leading_monomials()
    bounds = []
    for i in range(n):
        bound = None
        for lm in lms:
            if lm[i] and all(e == 0 for j, e in enumerate(lm) if j != i):
                bound = lm[i] if bound is None else min(bound, lm[i])
        if bound is None:
            return None
        bounds.append(bound)
    cells = 1
    for b in bounds:
        cells *= b
    if cells > _MAX_STAIRCASE_CELLS:
        raise BudgetExceededError("staircase enumeration too large")
    standard = []
    for mono in product(*(range(b) for b in bounds)):
        if not any(monomial_divides(lm, mono) for lm in lms):
            standard.append(mono)
    standard.sort(key=gb.order.key)
    return len(standard), QuotientBasis(standard)


def eliminant(generators: Sequence[Polynomial], keep_variable: int,
              budget: int = DEFAULT_BUDGET) -> Polynomial:
    """Monic generator of (ideal) ∩ K[x_keep], via a block elimination order.

    The ideal must be zero-dimensional; its eliminant's roots are exactly the
    x_keep coordinates of the solution points.
    """
    if not generators:
        raise ValueError("no generators")
    ring = generators[0].ring
    n = ring.nvars
    if not 0 <= keep_variable < n:
        raise IndexError("kept variable out of range")
    order = MonomialOrder.elimination(n, [keep_variable])
    gb = buchberger(generators, order, budget)
    if quotient_dimension(gb) is None:
        raise PositiveDimensionalError("eliminant of a positive-dimensional ideal")
    target = PolynomialRing([ring.variables[keep_variable]], ring.field)
    for g in gb:
        lm = g.leading_monomial(order)
        if all(e == 0 for i, e in enumerate(lm) if i != keep_variable):
            # reduced basis: tails cannot involve eliminated variables
            coeffs: Dict[Tuple[int, ...], object] = {}
            for m, c in g.terms.items():
                if any(e for i, e in enumerate(m) if i != keep_variable):
                    raise AssertionError("eliminant candidate is not univariate")
                coeffs[(m[keep_variable],)] = c
            return Polynomial(target, coeffs).monic()
    raise PositiveDimensionalError("no univariate generator found")


def minimal_polynomial_modulo(g: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Minimal polynomial of g acting on the quotient ring R/I.

    Equivalently the eliminant of I + (T - g) in the new variable T; computed
    here by exact linear algebra over the staircase basis.  The ideal must be
    zero-dimensional.
    """
    dim_info = quotient_dimension(gb)
    if dim_info is None:
        raise PositiveDimensionalError("minimal polynomial needs a zero-dimensional ideal")
    dim, qbasis = dim_info
    ring = gb.ring
    target = PolynomialRing(["T"], ring.field)
    if dim == 0:
        return target.one
    index = qbasis.index()
    zero = ring.coerce_scalar(0)
    one = ring.coerce_scalar(1)

    # rows in echelon form: pivot column -> (row CONTENT, augmented part)
    pivots: Dict[int, Tuple[list, list]] = {}
    current = gb.normal_form(ring.one)
    power = 0
    while True:
        vec = [zero] * dim
        for m, c in current.terms.items():
            vec[index[m]] = c
        aug = [zero] * (power + 1)
        aug[power] = one
        for col in range(dim):
            c = vec[col]
            if not c:
                continue
            hit = pivots.get(col)
            if hit is None:
                continue
            prow, paug = hit
            vec = [a - c * b for a, b in zip(vec, prow)]
            aug = [a - c * b for a, b in
                   zip(aug + [zero] * (len(paug) - len(aug)),
                       paug + [zero] * (len(aug) - len(paug)))]
        lead_col = next((col for col in range(dim) if vec[col]), None)
        if lead_col is None:
            coeffs = aug
            return univariate_from_coefficients(target, coeffs)
        inv = _inv(vec[lead_col])
        vec = [a * inv for a in vec]
        aug = [a * inv for a in aug]
        pivots[lead_col] = (vec, aug)
        power += 1
        if power > dim:
            raise AssertionError("minimal polynomial exceeded quotient dimension")
        current = gb.normal_form(current * g)


def is_unit_modulo(g: Polynomial, gb: GroebnerBasis) -> bool:
    """True iff the ideal generated by gb together with g is the unit ideal.

    For a zero-dimensional ideal this says g vanishes at no solution point,
    which is read off the constant term of the minimal polynomial of g on the
    quotient ring.
    """
    if gb.contains_one:
        return True
    mp = minimal_polynomial_modulo(g, gb)
    return bool(mp.constant_coefficient())


# ---------------------------------------------------------------------------
# basis text format: polynomial grammar plus an order header
# ---------------------------------------------------------------------------


def _format_order(order: MonomialOrder) -> str:
    head = order.kind if order.kind != "block" else f"block({order.split})"
    if order.permutation is not None:
        head += f" perm {','.join(map(str, order.permutation))}"
    return head


def _parse_order(text: str) -> MonomialOrder:
    text = text.strip()
    perm = None
    if " perm " in text:
        text, _, ptext = text.partition(" perm ")
        perm = tuple(int(x) for x in ptext.split(","))
        text = text.strip()
    if text.startswith("block"):
        split = int(text[len("block"):].strip("() "))
        return MonomialOrder.block(split, permutation=perm)
    if text in ("degrevlex", "lex"):
        return MonomialOrder(text, permutation=perm)
    raise ValueError(f"unknown order {text!r}")


def format_basis(gb: GroebnerBasis) -> str:
    from .polynomial import format_polynomial, format_ring_header

    lines = [format_ring_header(gb.ring), f"order: {_format_order(gb.order)}"]
    lines.extend(format_polynomial(g, gb.order) for g in gb.generators)
    return "\n".join(lines) + "\n"


def parse_basis(text: str) -> GroebnerBasis:
    from .polynomial import parse_polynomial, parse_ring_header, split_headers

    headers, body = split_headers(text)
    order = DEGREVLEX
    ring_lines = []
    for line in headers:
        key = line.split(":", 1)[0].strip().lower()
        if key == "order":
            order = _parse_order(line.split(":", 1)[1])
        else:
            ring_lines.append(line)
    ring = parse_ring_header(ring_lines)
    gens = [parse_polynomial(chunk, ring) for chunk in body]
    return GroebnerBasis(ring, order, gens)
