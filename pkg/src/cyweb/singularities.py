"""Singular loci of hypersurfaces and invariants of isolated local models.

Covers the certification pipeline for node counts (distinct points, total
multiplicity, radicality, Hessian-determinant unit test), Milnor and Tyurina
numbers as quotient-ring dimensions, Hessian coranks, a deliberately narrow
cA_k detector, and cuspidal-fiber counting for degree-6 Weierstrass data.

Projective hypersurfaces are analyzed chart by chart.  A solution is
attributed to the chart of its first nonvanishing coordinate: the chart-i
scheme is cut by the dehomogenized equation and partials together with the
earlier coordinates, so points on chart overlaps are counted exactly once.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    DomainError,
    NonIsolatedSingularityError,
    PositiveDimensionalError,
)
from .groebner import (
    DEFAULT_BUDGET,
    GroebnerBasis,
    buchberger,
    is_unit_modulo,
    minimal_polynomial_modulo,
    quotient_dimension,
)
from .polynomial import (
    Polynomial,
    PolynomialRing,
    format_polynomial,
    is_squarefree,
    parse_polynomial,
    parse_ring_header,
    split_headers,
    squarefree_part_degree,
    univariate_derivative,
    univariate_monic_gcd,
)

RADICALITY_ATTEMPTS = 3


# ---------------------------------------------------------------------------
# geometric carriers
# ---------------------------------------------------------------------------


class Ambient:
    """affine(n), projective(n) or weighted_projective(weights)."""

    __slots__ = ("kind", "dimension", "weights")

    def __init__(self, kind: str, dimension: int, weights: Optional[Tuple[int, ...]] = None):
        if kind not in ("affine", "projective", "weighted_projective"):
            raise ValueError(f"unknown ambient kind {kind!r}")
        self.kind = kind
        self.dimension = dimension
        self.weights = weights

    @classmethod
    def affine(cls, n: int) -> "Ambient":
        return cls("affine", n)

    @classmethod
    def projective(cls, n: int) -> "Ambient":
        return cls("projective", n)

    @classmethod
    def weighted_projective(cls, weights: Sequence[int]) -> "Ambient":
        ws = tuple(int(w) for w in weights)
        if any(w <= 0 for w in ws):
            raise ValueError("weights must be positive")
        return cls("weighted_projective", len(ws) - 1, ws)

    @classmethod
    def parse(cls, text: str, nvars: int) -> "Ambient":
        text = text.strip().lower()
        if text.startswith("weighted_projective"):
            inner = text[len("weighted_projective"):].strip("() ")
            weights = tuple(int(w) for w in inner.split(","))
            if len(weights) != nvars:
                raise DomainError("one weight per variable required")
            return cls.weighted_projective(weights)
        for kind, offset in (("projective", 1), ("affine", 0)):
            if text.startswith(kind):
                inner = text[len(kind):].strip("() ")
                n = int(inner) if inner else nvars - offset
                if n != nvars - offset:
                    raise DomainError(
                        f"{kind}({n}) does not match {nvars} variables"
                    )
                return cls(kind, n)
        raise DomainError(f"cannot parse ambient {text!r}")

    def __eq__(self, other):
        return (
            isinstance(other, Ambient)
            and (self.kind, self.dimension, self.weights)
            == (other.kind, other.dimension, other.weights)
        )

    def __repr__(self):
        if self.kind == "weighted_projective":
            return f"weighted_projective({','.join(map(str, self.weights))})"
        return f"{self.kind}({self.dimension})"


class Hypersurface:
    """A hypersurface cut out by one exact equation in a fixed ambient."""

    __slots__ = ("equation", "ambient", "name")

    def __init__(self, equation: Polynomial, ambient: Ambient, name: str = ""):
        if equation.is_zero():
            raise DomainError("zero equation does not define a hypersurface")
        n = equation.ring.nvars
        if ambient.kind == "affine":
            if ambient.dimension != n:
                raise DomainError("affine dimension must equal the variable count")
        elif ambient.kind == "projective":
            if ambient.dimension != n - 1:
                raise DomainError("projective(n) needs n+1 coordinates")
            if equation.is_homogeneous() is None:
                raise DomainError("projective equations must be homogeneous")
        else:
            if len(ambient.weights) != n:
                raise DomainError("one weight per coordinate required")
            if equation.is_weighted_homogeneous(ambient.weights) is None:
                raise DomainError(
                    "weighted-projective equations must be weighted-homogeneous"
                )
        self.equation = equation
        self.ambient = ambient
        self.name = name

    def __repr__(self):
        return f"Hypersurface({self.name or format_polynomial(self.equation)[:40]}, {self.ambient!r})"


class LocalModel:
    """A germ at the origin: the origin must be a critical point on the germ."""

    __slots__ = ("germ", "name")

    def __init__(self, germ: Polynomial, name: str = ""):
        if germ.is_zero():
            raise DomainError("zero germ")
        if germ.constant_coefficient():
            raise DomainError("germ must vanish at the origin")
        for i in range(germ.ring.nvars):
            if germ.partial_derivative(i).constant_coefficient():
                raise DomainError("origin must be a critical point of the germ")
        self.germ = germ
        self.name = name

    def __repr__(self):
        return f"LocalModel({self.name or format_polynomial(self.germ)[:40]})"


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChartReport:
    chart: Optional[int]          # None for affine ambients
    multiplicity: int
    point_count: int
    radical_certified: bool
    hessian_is_unit: Optional[bool]  # None when the chart holds no points

    @property
    def all_nodes(self) -> bool:
        if self.point_count == 0:
            return True
        return bool(self.radical_certified and self.hessian_is_unit)


@dataclass(frozen=True)
class SingularityReport:
    name: str
    point_count: int
    multiplicity_total: int
    all_nodes: bool
    radical_certified: bool
    charts: Tuple[ChartReport, ...]

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"hypersurface: {self.name}")
        lines.append(
            f"{self.point_count} distinct singular points, "
            f"all nodes: {str(self.all_nodes).lower()}"
        )
        lines.append(f"multiplicity total: {self.multiplicity_total}")
        cert = "certified" if self.radical_certified else \
            "not certified (distinct-root count of seeded eliminants; high probability only)"
        lines.append(f"radical: {cert}")
        affine = len(self.charts) == 1 and self.charts[0].chart is None
        if not affine:
            for ch in self.charts:
                if ch.point_count == 0 and ch.multiplicity == 0:
                    lines.append(f"  chart {ch.chart}: empty")
                else:
                    unit = "n/a" if ch.hessian_is_unit is None else str(ch.hessian_is_unit).lower()
                    lines.append(
                        f"  chart {ch.chart}: {ch.point_count} points, "
                        f"multiplicity {ch.multiplicity}, "
                        f"radical {'yes' if ch.radical_certified else 'no'}, "
                        f"hessian unit: {unit}"
                    )
        return "\n".join(lines)

    def to_csv_row(self) -> str:
        return ",".join(
            [
                self.name or "-",
                str(self.point_count),
                str(self.multiplicity_total),
                str(self.all_nodes).lower(),
                str(self.radical_certified).lower(),
            ]
        )


CSV_HEADER = "name,point_count,multiplicity_total,all_nodes,radical_certified"


@dataclass(frozen=True)
class LocalInvariants:
    milnor: int
    tyurina: int
    hessian_corank: int
    weighted_homogeneous: Optional[Tuple[Tuple[int, ...], int]]
    milnor_orlik: Optional[int]
    ca_index: Optional[int]

    @property
    def classification(self) -> str:
        if self.ca_index is not None:
            return f"cA{self.ca_index}"
        return "cDV, type undetermined"

    def to_text(self, name: str = "") -> str:
        lines = []
        if name:
            lines.append(f"local model: {name}")
        lines.append(f"mu={self.milnor} tau={self.tyurina}")
        lines.append(f"hessian corank: {self.hessian_corank}")
        if self.weighted_homogeneous is not None:
            w, d = self.weighted_homogeneous
            lines.append(
                f"weighted homogeneous: weights ({','.join(map(str, w))}), degree {d}"
            )
            if self.milnor_orlik is not None:
                lines.append(f"milnor-orlik product: {self.milnor_orlik}")
        else:
            lines.append("weighted homogeneous: no")
        lines.append(f"classification: {self.classification}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# point counting over a zero-dimensional scheme
# ---------------------------------------------------------------------------


def _seeded_linear_forms(ring: PolynomialRing, seed: int, count: int):
    rng = random.Random(seed)
    gens = ring.gens()
    forms = []
    for _ in range(count):
        coeffs = [rng.randrange(-997, 998) for _ in gens]
        if not any(coeffs):
            coeffs[0] = 1
        form = ring.zero
        for c, v in zip(coeffs, gens):
            form = form + v * c
        forms.append(form)
    return forms


def count_distinct_points(gb: GroebnerBasis, seed: int = 0) -> Tuple[int, bool]:
    """Distinct-solution count of a zero-dimensional ideal.

    Returns (count, certified).  Certified means a seeded linear form had a
    squarefree minimal polynomial of full quotient dimension, which proves the
    ideal radical and the count exact; otherwise the count is the best
    distinct-root count over the attempted forms (exact with high probability,
    flagged as uncertified).
    """
    info = quotient_dimension(gb)
    if info is None:
        raise PositiveDimensionalError("cannot count points of a positive-dimensional scheme")
    dim, _ = info
    if dim == 0:
        return 0, True
    best = 0
    for ell in _seeded_linear_forms(gb.ring, seed, RADICALITY_ATTEMPTS):
        mp = minimal_polynomial_modulo(ell, gb)
        if mp.total_degree() == dim and is_squarefree(mp):
            return dim, True
        best = max(best, squarefree_part_degree(mp))
    return best, False


# ---------------------------------------------------------------------------
# matrices of polynomials
# ---------------------------------------------------------------------------


def hessian_matrix(f: Polynomial) -> List[List[Polynomial]]:
    n = f.ring.nvars
    grads = [f.partial_derivative(i) for i in range(n)]
    return [[grads[i].partial_derivative(j) for j in range(n)] for i in range(n)]


def _poly_determinant(mat: List[List[Polynomial]]) -> Polynomial:
    k = len(mat)
    if k == 1:
        return mat[0][0]
    total = None
    for j in range(k):
        if mat[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _poly_determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return mat[0][0].ring.zero
    return total


def hessian_determinant(f: Polynomial) -> Polynomial:
    return _poly_determinant(hessian_matrix(f))


def _scalar_rank(rows: List[List[object]]) -> int:
    """Exact rank of a matrix of field scalars by Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        inv = 1 / lead if isinstance(lead, Fraction) else lead.inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [a - c * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# singular schemes of hypersurfaces
# ---------------------------------------------------------------------------


def singular_scheme(h: Hypersurface, chart: Optional[int] = None) -> List[Polynomial]:
    """Generators of the singular-scheme ideal, restricted to a chart.

    For a projective hypersurface the chart sets coordinate ``chart`` to 1;
    generators are the dehomogenized equation and all dehomogenized partials.
    Affine hypersurfaces ignore the chart.
    """
    f = h.equation
    n = f.ring.nvars
    if h.ambient.kind == "affine":
        return [f] + [f.partial_derivative(i) for i in range(n)]
    if h.ambient.kind != "projective":
        raise DomainError("singular-scheme analysis supports affine and projective ambients")
    if chart is None or not 0 <= chart < n:
        raise DomainError("projective hypersurfaces need a valid chart index")
    gens = [f.dehomogenize(chart)]
    for i in range(n):
        gens.append(f.partial_derivative(i).dehomogenize(chart))
    return [g for g in gens if not g.is_zero()] or [f.dehomogenize(chart)]


def _chart_attribution_gens(gens: List[Polynomial], chart: int) -> List[Polynomial]:
    """Append the earlier coordinates: points whose first nonzero coord is ``chart``."""
    ring = gens[0].ring
    extra = [ring.gen(j) for j in range(chart)]  # dropped var keeps earlier indices
    return gens + extra


def _analyze_chart(gens: List[Polynomial], chart: Optional[int],
                   chart_equation: Polynomial, seed: int, budget: int) -> ChartReport:
    gb = buchberger(gens, budget=budget)
    info = quotient_dimension(gb)
    if info is None:
        where = "affine chart" if chart is None else f"chart {chart}"
        raise PositiveDimensionalError(
            f"singular locus is positive-dimensional in {where}"
        )
    dim, _ = info
    if dim == 0:
        return ChartReport(chart, 0, 0, True, None)
    points, certified = count_distinct_points(gb, seed)
    hess_unit = is_unit_modulo(hessian_determinant(chart_equation), gb)
    return ChartReport(chart, dim, points, certified, hess_unit)


def analyze_singular_locus(h: Hypersurface, seed: int = 0,
                           budget: int = DEFAULT_BUDGET) -> SingularityReport:
    """Certified count of distinct singular points with nodal certificates.

    Errors out when the singular scheme is positive-dimensional in any chart.
    Chart analyses are independent; the per-chart schemes are disjoint by the
    first-nonvanishing-coordinate attribution, so counts simply add up.
    """
    f = h.equation
    charts: List[ChartReport] = []
    if h.ambient.kind == "affine":
        gens = singular_scheme(h)
        charts.append(_analyze_chart(gens, None, f, seed, budget))
    elif h.ambient.kind == "projective":
        for chart in range(f.ring.nvars):
            gens = _chart_attribution_gens(singular_scheme(h, chart), chart)
            charts.append(_analyze_chart(gens, chart, f.dehomogenize(chart), seed, budget))
    else:
        raise DomainError("weighted-projective analysis is not supported")
    point_count = sum(c.point_count for c in charts)
    multiplicity = sum(c.multiplicity for c in charts)
    radical = all(c.radical_certified for c in charts)
    all_nodes = all(c.all_nodes for c in charts)
    return SingularityReport(
        name=h.name,
        point_count=point_count,
        multiplicity_total=multiplicity,
        all_nodes=bool(all_nodes and radical),
        radical_certified=radical,
        charts=tuple(charts),
    )


# ---------------------------------------------------------------------------
# invariants of isolated local models
# ---------------------------------------------------------------------------


def _jacobian_basis(m: LocalModel, with_germ: bool, budget: int) -> GroebnerBasis:
    gens = list(m.germ.gradient())
    if with_germ:
        gens.append(m.germ)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise NonIsolatedSingularityError("all partial derivatives vanish identically")
    return buchberger(gens, budget=budget)


def _require_origin_only(m: LocalModel, gb: GroebnerBasis) -> int:
    info = quotient_dimension(gb)
    if info is None:
        raise NonIsolatedSingularityError(
            "critical scheme is positive-dimensional: not an isolated singularity"
        )
    dim, _ = info
    ring = m.germ.ring
    for i in range(ring.nvars):
        mp = minimal_polynomial_modulo(ring.gen(i), gb)
        terms = mp.terms
        if len(terms) != 1:
            raise DomainError(
                f"germ has critical points with {ring.variables[i]} != 0; "
                "localize before computing local invariants"
            )
    return dim


def milnor_number(m: LocalModel, budget: int = DEFAULT_BUDGET) -> int:
    """Dimension of the local algebra modulo the Jacobian ideal of the germ.

    Requires the origin to be the only critical point, which is verified by
    checking that the eliminant in each variable is a pure power.
    """
    gb = _jacobian_basis(m, with_germ=False, budget=budget)
    return _require_origin_only(m, gb)


def tyurina_number(m: LocalModel, budget: int = DEFAULT_BUDGET) -> int:
    """Dimension of the quotient by the germ together with its Jacobian ideal."""
    milnor_number(m, budget)  # validates isolation at the origin
    gb = _jacobian_basis(m, with_germ=True, budget=budget)
    info = quotient_dimension(gb)
    if info is None:
        raise NonIsolatedSingularityError("Tyurina scheme is positive-dimensional")
    return info[0]


def hessian_corank(m: LocalModel) -> int:
    """Variable count minus the exact rank of the Hessian at the origin."""
    germ = m.germ
    ring = germ.ring
    n = ring.nvars
    zero = ring.coerce_scalar(0)
    rows = [[zero for _ in range(n)] for _ in range(n)]
    for mon, c in germ.terms.items():
        if sum(mon) != 2:
            continue
        support = [i for i, e in enumerate(mon) if e]
        if len(support) == 1:
            i = support[0]
            rows[i][i] = rows[i][i] + 2 * c
        else:
            i, j = support
            rows[i][j] = rows[i][j] + c
            rows[j][i] = rows[j][i] + c
    return n - _scalar_rank(rows)


def find_weights(f: Polynomial) -> Optional[Tuple[Tuple[int, ...], int]]:
    """Positive integer weights making f weighted-homogeneous, if any.

    Returns (weights, degree) with the weights primitive; None when no
    positive weight vector exists.
    """
    monos = list(f.terms)
    if not monos:
        return None
    n = f.ring.nvars
    base = monos[0]
    rows = [
        [Fraction(e - b) for e, b in zip(mon, base)] for mon in monos[1:]
    ]
    # row-reduce and extract a nullspace basis
    pivots: Dict[int, List[Fraction]] = {}
    for row in rows:
        row = list(row)
        for col, prow in pivots.items():
            if row[col]:
                c = row[col]
                row = [a - c * b for a, b in zip(row, prow)]
        lead = next((i for i, v in enumerate(row) if v), None)
        if lead is None:
            continue
        inv = 1 / row[lead]
        row = [v * inv for v in row]
        for col, prow in list(pivots.items()):
            if prow[lead]:
                c = prow[lead]
                pivots[col] = [a - c * b for a, b in zip(prow, row)]
        pivots[lead] = row
    free = [i for i in range(n) if i not in pivots]
    if not free:
        return None
    basis = []
    for fv in free:
        vec = [Fraction(0)] * n
        vec[fv] = Fraction(1)
        for col, prow in pivots.items():
            vec[col] = -prow[fv]
        basis.append(vec)

    def normalize(vec) -> Optional[Tuple[int, ...]]:
        if any(v <= 0 for v in vec):
            return None
        denom = 1
        for v in vec:
            denom = denom * v.denominator // gcd(denom, v.denominator)
        ints = [int(v * denom) for v in vec]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return tuple(v // g for v in ints)

    candidates = []
    if len(basis) == 1:
        vec = basis[0]
        if all(v < 0 for v in vec):
            vec = [-v for v in vec]
        candidates.append(vec)
    else:
        for combo in product(range(1, 7), repeat=len(basis)):
            vec = [Fraction(0)] * n
            for c, b in zip(combo, basis):
                vec = [a + c * v for a, v in zip(vec, b)]
            candidates.append(vec)
    for vec in candidates:
        weights = normalize(vec)
        if weights is not None:
            degree = f.is_weighted_homogeneous(weights)
            if degree is not None and degree > 0:
                return weights, degree
    return None


def milnor_orlik_check(m: LocalModel) -> Optional[int]:
    """Independent product-formula value for weighted-homogeneous germs.

    For an isolated weighted-homogeneous germ of degree d with weights w the
    Milnor number is the product of (d/w_i - 1); None when the germ is not
    weighted-homogeneous.  Used to cross-validate the quotient-dimension
    computation.
    """
    found = find_weights(m.germ)
    if found is None:
        return None
    weights, d = found
    value = Fraction(1)
    for w in weights:
        value *= Fraction(d - w, w)
    if value.denominator != 1 or value <= 0:
        raise DomainError(
            "product formula does not yield a positive integer; "
            "the germ is unlikely to be isolated"
        )
    return int(value)


def classify_cA(m: LocalModel, change: Optional[Mapping] = None,
                budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """Narrow cA_k detector; None means undetermined, not a disproof.

    Rule: an isolated germ is reported as cA_k when, after the optional linear
    substitution shipped with the instance, it splits as a nondegenerate
    quadratic form in the first two variables plus a homogeneous binary form
    of degree k+1 in the last two, and the Milnor number matches k^2.  A
    nondegenerate Hessian (a node) is cA_1.
    """
    germ = m.germ if change is None else m.germ.substitute(change)
    model = LocalModel(germ, m.name)
    mu = milnor_number(model, budget)  # also validates isolation
    if hessian_corank(model) == 0:
        return 1 if mu == 1 else None
    if germ.ring.nvars != 4 or hessian_corank(model) != 2:
        return None
    quad_terms: Dict = {}
    binary_terms: Dict = {}
    for mon, c in germ.terms.items():
        head, tail = mon[:2], mon[2:]
        if sum(tail) == 0 and sum(head) == 2:
            quad_terms[mon] = c
        elif sum(head) == 0 and sum(tail) >= 3:
            binary_terms[mon] = c
        else:
            return None
    if not quad_terms or not binary_terms:
        return None
    degrees = {sum(mon) for mon in binary_terms}
    if len(degrees) != 1:
        return None
    k = degrees.pop() - 1
    ring = germ.ring
    quad = Polynomial(ring, quad_terms)
    a = quad.terms.get((2, 0, 0, 0), ring.coerce_scalar(0))
    b = quad.terms.get((1, 1, 0, 0), ring.coerce_scalar(0))
    c = quad.terms.get((0, 2, 0, 0), ring.coerce_scalar(0))
    if not (4 * a * c - b * b):
        return None
    if mu != k * k:
        return None
    return k


def local_invariants(m: LocalModel, budget: int = DEFAULT_BUDGET) -> LocalInvariants:
    """Full invariant bundle of an isolated germ, with built-in cross-checks."""
    mu = milnor_number(m, budget)
    tau = tyurina_number(m, budget)
    if tau > mu:
        raise AssertionError("Tyurina number exceeded Milnor number")
    wh = find_weights(m.germ)
    orlik = milnor_orlik_check(m)
    if orlik is not None and orlik != mu:
        raise AssertionError(
            f"product formula {orlik} disagrees with quotient dimension {mu}"
        )
    if wh is not None and tau != mu:
        raise AssertionError("weighted-homogeneous germ with tau != mu")
    return LocalInvariants(
        milnor=mu,
        tyurina=tau,
        hessian_corank=hessian_corank(m),
        weighted_homogeneous=wh,
        milnor_orlik=orlik,
        ca_index=classify_cA(m, budget=budget),
    )


# ---------------------------------------------------------------------------
# Weierstrass cusp counting
# ---------------------------------------------------------------------------


def count_cuspidal_fibers(b: Polynomial) -> Tuple[int, bool]:
    """Distinct cuspidal fibers cut out by a degree<=6 Weierstrass coefficient.

    ``b`` is a univariate section of a degree-6 bundle on the line: its
    projective zeroes on P^1 mark the cuspidal fibers, with the root at
    infinity counted once whenever deg b < 6.  all_simple is True when b has
    six simple finite roots.
    """
    if b.is_zero():
        raise DomainError("zero Weierstrass coefficient")
    if b.ring.nvars != 1:
        raise DomainError("Weierstrass coefficient must be univariate")
    deg = b.total_degree()
    if deg > 6:
        raise DomainError("Weierstrass coefficient has degree > 6")
    distinct = squarefree_part_degree(b) if deg > 0 else 0
    if deg < 6:
        distinct += 1  # root at infinity
    g = univariate_monic_gcd(b, univariate_derivative(b)) if deg > 0 else b.ring.one
    all_simple = deg == 6 and g.total_degree() <= 0
    return distinct, all_simple


def fiber_product_type_ii_count(b1: Polynomial, b2: Polynomial) -> Tuple[int, bool]:
    """Points of type II x II on a fiber product of two Weierstrass fibrations.

    Pure bookkeeping: a cusp-times-cusp point sits over every common cuspidal
    base point, so the count is the number of distinct common roots of the two
    coefficients on the line (infinity included when both degrees drop).
    Returns (count, all_fibers_simple_on_both_factors).
    """
    for b in (b1, b2):
        if b.is_zero() or b.ring.nvars != 1 or b.total_degree() > 6:
            raise DomainError("Weierstrass coefficients must be univariate of degree <= 6")
    if b1.ring != b2.ring:
        raise DomainError("coefficients must share a base line")
    g = univariate_monic_gcd(b1, b2)
    common = squarefree_part_degree(g) if g.total_degree() > 0 else 0
    if b1.total_degree() < 6 and b2.total_degree() < 6:
        common += 1
    simple = count_cuspidal_fibers(b1)[1] and count_cuspidal_fibers(b2)[1]
    return common, simple


# ---------------------------------------------------------------------------
# file formats (.hsf hypersurfaces, .lm local models)
# ---------------------------------------------------------------------------


def _load_headers_and_body(text: str):
    headers, body = split_headers(text)
    ring_lines = []
    extra: Dict[str, str] = {}
    for line in headers:
        key = line.split(":", 1)[0].strip().lower()
        if key in ("vars", "field", "minpoly"):
            ring_lines.append(line)
        else:
            k, _, v = line.partition(":")
            extra[k.strip().lower()] = v.strip()
    if not body:
        raise DomainError("missing equation body")
    ring = parse_ring_header(ring_lines)
    poly = parse_polynomial(" ".join(body), ring)
    return poly, extra


def load_hypersurface(text: str) -> Hypersurface:
    poly, extra = _load_headers_and_body(text)
    if "ambient" not in extra:
        raise DomainError("hypersurface files need an ambient: header")
    ambient = Ambient.parse(extra["ambient"], poly.ring.nvars)
    return Hypersurface(poly, ambient, name=extra.get("name", ""))


def load_local_model(text: str) -> LocalModel:
    poly, extra = _load_headers_and_body(text)
    if "ambient" in extra and extra["ambient"].strip().lower() not in ("germ", "local"):
        raise DomainError("local-model files must not carry a projective ambient")
    return LocalModel(poly, name=extra.get("name", ""))
