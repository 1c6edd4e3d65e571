"""Invariant bookkeeping for geometric transitions between Calabi-Yau triples.

A transition record names three varieties: the resolution Y, the singular
member Ybar and the smoothing Ytilde.  From the smoothing's invariants plus
the singular/resolution combinatorics (point count, Milnor numbers, ADE
exceptional trees, number k of independent exceptional curve classes) the
derivation model fills in Betti/Euler tables:

    chi(Ybar) = chi(Yt) + sum(mu_i)          chi(Y) = chi(Ybar) + sum(e_i)
    b2(Y) = b2(Yt) + k,  b4(Y) = b2(Y),      b3(Y) = 2 + 2*b2(Y) - chi(Y)
    b2(Ybar) = b2(Yt),   b4(Ybar) = b2(Y),   b3(Ybar) = 2 + b2 + b4 - chi
    b0 = b6 = 1 and b1 = b5 = 0 throughout.

k is stored data, never derived (it needs intersection theory); h1(Theta) is
likewise stored, never derived, and only ever cross-checked with a warning.
Records of divisor-to-point type ship fully supplied fingerprints and skip
the derivation entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DomainError, InconsistentDataError
from .groebner import DEFAULT_BUDGET
from .polynomial import (
    Polynomial,
    PolynomialRing,
    parse_polynomial,
    parse_ring_header,
)
from .singularities import (
    Hypersurface,
    Ambient,
    LocalModel,
    SingularityReport,
    analyze_singular_locus,
    count_cuspidal_fibers,
)

TYPE_TAGS = ("conifold", "small", "typeII", "other")


@dataclass(frozen=True)
class Finding:
    severity: str  # ERROR | WARNING | INFO
    code: str
    message: str

    def __str__(self):
        return f"{self.severity} [{self.code}] {self.message}"


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    """Topological fingerprint of one variety: Betti numbers and friends.

    ``pi1_label`` is an opaque symbol compared by equality; None means the
    fundamental group is not known, and unknown labels never count as equal.
    ``h1_theta`` is the stored dimension of first tangent-sheaf cohomology.
    """

    b: Tuple[int, ...]
    chi: int
    h11: Optional[int] = None
    h21: Optional[int] = None
    h1_theta: Optional[int] = None
    pi1_label: Optional[str] = None
    smooth: bool = True
    kahler: bool = True

    def __post_init__(self):
        if len(self.b) != 7:
            raise InconsistentDataError("a threefold fingerprint needs b0..b6")
        if any(x < 0 for x in self.b):
            raise InconsistentDataError("negative Betti number")

    @classmethod
    def from_betti(cls, b: Sequence[int], **kw) -> "Fingerprint":
        b = tuple(int(x) for x in b)
        chi = sum((-1) ** i * x for i, x in enumerate(b))
        return cls(b=b, chi=chi, **kw)

    @property
    def alternating_sum(self) -> int:
        return sum((-1) ** i * x for i, x in enumerate(self.b))

    @property
    def expected_h21(self) -> Fraction:
        """(b3 - 2)/2, the middle Hodge number a smooth CY threefold must have."""
        return Fraction(self.b[3] - 2, 2)

    def findings(self, context: str = "") -> List[Finding]:
        tag = f"{context}: " if context else ""
        out: List[Finding] = []
        if self.chi != self.alternating_sum:
            out.append(Finding(
                "ERROR", "chi-mismatch",
                f"{tag}chi={self.chi} but alternating Betti sum is {self.alternating_sum}",
            ))
        if self.b[0] != 1 or self.b[6] != 1 or self.b[1] != 0 or self.b[5] != 0:
            out.append(Finding(
                "ERROR", "betti-profile",
                f"{tag}expected b0=b6=1 and b1=b5=0, got {self.b}",
            ))
        if self.smooth:
            if self.b[2] != self.b[4]:
                out.append(Finding(
                    "ERROR", "poincare-duality",
                    f"{tag}smooth variety with b2={self.b[2]} != b4={self.b[4]}",
                ))
            if self.h11 is not None and self.h11 != self.b[2]:
                out.append(Finding(
                    "ERROR", "h11-vs-b2",
                    f"{tag}h11={self.h11} but b2={self.b[2]}",
                ))
            if self.h21 is not None and self.b[3] != 2 + 2 * self.h21:
                out.append(Finding(
                    "ERROR", "h21-vs-b3",
                    f"{tag}h21={self.h21} but b3={self.b[3]} != 2+2*h21",
                ))
            if self.h1_theta is not None:
                expected = self.expected_h21
                if expected != self.h1_theta:
                    out.append(Finding(
                        "WARNING", "h1theta-vs-h21",
                        f"{tag}h1Theta={self.h1_theta} vs expected h21={expected}",
                    ))
        return out

    def merge_key(self):
        return (self.b, self.chi, self.h1_theta)


# ---------------------------------------------------------------------------
# singular / resolution combinatorics
# ---------------------------------------------------------------------------


def ade_curve_count(label: str) -> int:
    """Number of exceptional curves of one ADE tree: the Dynkin subscript."""
    kind, index = label[:1].upper(), label[1:]
    if kind not in "ADE" or not index.isdigit():
        raise DomainError(f"not an ADE label: {label!r}")
    k = int(index)
    if k < 1 or (kind == "D" and k < 4) or (kind == "E" and k not in (6, 7, 8)):
        raise DomainError(f"not a valid ADE label: {label!r}")
    return k


@dataclass(frozen=True)
class SingularDatum:
    count: int
    milnor_each: Tuple[int, ...]
    terminal: bool = False
    cdv_type: Optional[str] = None

    def __post_init__(self):
        if self.count != len(self.milnor_each):
            raise InconsistentDataError("count must equal the number of Milnor numbers")
        if any(mu < 1 for mu in self.milnor_each):
            raise InconsistentDataError("Milnor numbers are positive")

    @property
    def total_milnor(self) -> int:
        return sum(self.milnor_each)

    @property
    def all_nodes(self) -> bool:
        return all(mu == 1 for mu in self.milnor_each)


@dataclass(frozen=True)
class ResolutionDatum:
    trees: Tuple[str, ...] = ()
    divisor_contraction: bool = False
    k: Optional[int] = None          # rank of exceptional curve classes in H2(Y)
    k_provenance: Optional[str] = None

    def __post_init__(self):
        for label in self.trees:
            ade_curve_count(label)
        if self.k is not None and not 0 <= self.k <= self.total_curves:
            raise InconsistentDataError("k must lie between 0 and the curve count")

    @property
    def total_curves(self) -> int:
        return sum(ade_curve_count(t) for t in self.trees)


@dataclass(frozen=True)
class VarietyInfo:
    """Name plus whatever stored data a record carries for one variety."""

    name: str
    fingerprint: Optional[Fingerprint] = None
    h1_theta: Optional[int] = None
    pi1_label: Optional[str] = None

    def stored_h1_theta(self) -> Optional[int]:
        if self.h1_theta is not None:
            return self.h1_theta
        return self.fingerprint.h1_theta if self.fingerprint else None

    def stored_pi1(self) -> Optional[str]:
        if self.pi1_label is not None:
            return self.pi1_label
        return self.fingerprint.pi1_label if self.fingerprint else None


@dataclass(frozen=True)
class SplittingFamily:
    """A parameterized deformation of a local model, with chosen parameters.

    ``deformed`` lives in the model's ring extended by the parameter names;
    at parameter value zero it must reduce to the undeformed germ.
    """

    local_model: LocalModel
    deformed: Polynomial
    parameters: Tuple[str, ...]
    parameter_values: Dict[str, object]
    expected_nodes_per_point: int

    def __post_init__(self):
        base = self.local_model.germ.ring
        ext = self.deformed.ring
        if ext.variables[: base.nvars] != base.variables or \
                ext.variables[base.nvars:] != self.parameters:
            raise InconsistentDataError(
                "deformed polynomial must live in model variables plus parameters"
            )
        zeroed = self.deformed.substitute({p: 0 for p in self.parameters})
        if zeroed.to_ring(base) != self.local_model.germ:
            raise InconsistentDataError(
                "deformation does not specialize to the local model at parameter 0"
            )
        missing = [p for p in self.parameters if p not in self.parameter_values]
        if missing:
            raise InconsistentDataError(f"missing parameter values for {missing}")

    def specialized(self) -> Polynomial:
        """The deformed model at the chosen parameter values, in the base ring."""
        sub = {p: v for p, v in self.parameter_values.items()}
        return self.deformed.substitute(sub).to_ring(self.local_model.germ.ring)


@dataclass(frozen=True)
class TransitionRecord:
    name: str
    type_tag: str
    smoothing: VarietyInfo
    singular: VarietyInfo
    resolution: VarietyInfo
    singular_data: Optional[SingularDatum] = None
    resolution_data: Optional[ResolutionDatum] = None
    witness: Optional[SplittingFamily] = None
    weierstrass: Optional[Polynomial] = None

    def __post_init__(self):
        if self.type_tag not in TYPE_TAGS:
            raise InconsistentDataError(f"unknown transition type {self.type_tag!r}")
        if self.type_tag == "conifold" and self.singular_data is not None:
            if not self.singular_data.all_nodes:
                raise InconsistentDataError("conifold records must carry only nodes")
            if self.resolution_data and any(
                t != "A1" for t in self.resolution_data.trees
            ):
                raise InconsistentDataError("conifold exceptional trees are A1")
        if self.type_tag == "small" and self.singular_data is not None:
            if not self.singular_data.terminal:
                raise InconsistentDataError(
                    "small contractions have terminal (cDV) singular points"
                )
        if self.type_tag == "typeII":
            if self.resolution_data is None or not self.resolution_data.divisor_contraction:
                raise InconsistentDataError(
                    "divisor-to-point records carry a divisor contraction marker"
                )
            if self.resolution_data.trees:
                raise InconsistentDataError(
                    "divisor-to-point records carry no exceptional trees"
                )

    @property
    def h1_theta_pair(self) -> Optional[Tuple[int, int]]:
        bar = self.singular.stored_h1_theta()
        res = self.resolution.stored_h1_theta()
        if bar is None or res is None:
            return None
        return bar, res


# ---------------------------------------------------------------------------
# the derivation model
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    name: str
    fingerprint: Fingerprint


@dataclass(frozen=True)
class InvariantTable:
    resolution: TableRow
    singular: TableRow
    smoothing: TableRow

    @property
    def rows(self) -> Tuple[TableRow, ...]:
        return (self.resolution, self.singular, self.smoothing)


def _require(condition: bool, message: str):
    if not condition:
        raise InconsistentDataError(message)


def compute_table(record: TransitionRecord) -> InvariantTable:
    """Derive (or echo) the invariant fingerprints of Y and Ybar.

    Divisor-to-point records skip derivation and must ship all three
    fingerprints.  Everything else needs the smoothing fingerprint plus
    singular and resolution data including k.
    """
    sm = record.smoothing.fingerprint
    _require(sm is not None, "smoothing fingerprint is required")
    errors = [f for f in sm.findings("smoothing") if f.severity == "ERROR"]
    _require(not errors, "; ".join(str(e) for e in errors) or "bad smoothing fingerprint")
    _require(sm.smooth, "the smoothing must be smooth")

    if record.type_tag == "typeII":
        _require(
            record.resolution.fingerprint is not None
            and record.singular.fingerprint is not None,
            "divisor-to-point records must supply all three fingerprints",
        )
        return InvariantTable(
            TableRow(record.resolution.name, record.resolution.fingerprint),
            TableRow(record.singular.name, record.singular.fingerprint),
            TableRow(record.smoothing.name, sm),
        )

    _require(record.singular_data is not None, "singular data is required")
    _require(record.resolution_data is not None, "resolution data is required")
    _require(
        record.resolution_data.k is not None,
        "resolution data lacks k (independent exceptional classes)",
    )
    mu_total = record.singular_data.total_milnor
    e_total = record.resolution_data.total_curves
    k = record.resolution_data.k

    chi_bar = sm.chi + mu_total
    chi_res = chi_bar + e_total
    b2_res = sm.b[2] + k
    b4_res = b2_res
    b3_res = 2 + 2 * b2_res - chi_res
    b2_bar = sm.b[2]
    b4_bar = b2_res
    b3_bar = 2 + b2_bar + b4_bar - chi_bar
    for value, label in ((b3_res, "b3(Y)"), (b3_bar, "b3(Ybar)")):
        if value < 0:
            raise InconsistentDataError(
                f"derived {label} = {value} < 0: inconsistent input data"
            )

    res_fp = Fingerprint(
        b=(1, 0, b2_res, b3_res, b4_res, 0, 1),
        chi=chi_res,
        h1_theta=record.resolution.stored_h1_theta(),
        pi1_label=record.resolution.stored_pi1(),
        smooth=True,
        kahler=True,
    )
    bar_fp = Fingerprint(
        b=(1, 0, b2_bar, b3_bar, b4_bar, 0, 1),
        chi=chi_bar,
        h1_theta=record.singular.stored_h1_theta(),
        pi1_label=record.singular.stored_pi1(),
        smooth=False,
        kahler=True,
    )
    return InvariantTable(
        TableRow(record.resolution.name, res_fp),
        TableRow(record.singular.name, bar_fp),
        TableRow(record.smoothing.name, sm),
    )


def table_csv(tables: Sequence[InvariantTable]) -> str:
    """Invariant table in the classical column order, one CSV per run.

    Resolution and singular rows come first in record order, smoothing rows
    last; rows with identical invariants merge their variety names, which is
    how the classical table prints a resolution and its deformation on one
    line.  rho is echoed equal to b2 for every shipped record.
    """
    ordered: List[TableRow] = []
    for t in tables:
        ordered.extend([t.resolution, t.singular])
    for t in tables:
        ordered.append(t.smoothing)
    rows: List[Tuple[List[str], Fingerprint]] = []
    for row in ordered:
        for names, fp in rows:
            if fp.merge_key() == row.fingerprint.merge_key():
                if row.name not in names:
                    names.append(row.name)
                break
        else:
            rows.append(([row.name], row.fingerprint))
    lines = ["variety,h1_theta,b2,rho,b3,b4,chi"]
    for names, fp in rows:
        h1 = str(fp.h1_theta) if fp.h1_theta is not None else "-"
        lines.append(
            f"{'/'.join(names)},{h1},{fp.b[2]},{fp.b[2]},{fp.b[3]},{fp.b[4]},{fp.chi}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# consistency checking
# ---------------------------------------------------------------------------


def consistency_check(record: TransitionRecord,
                      table: Optional[InvariantTable] = None) -> List[Finding]:
    """All findings on a record's populated fingerprints, in a stable order."""
    findings: List[Finding] = []
    if table is None:
        try:
            table = compute_table(record)
        except DomainError as exc:
            findings.append(Finding("INFO", "table-underivable", str(exc)))
            table = None
    if table is not None:
        for row in table.rows:
            findings.extend(row.fingerprint.findings(row.name))
        # supplied fingerprints must agree with the derivation
        for info, derived in (
            (record.resolution, table.resolution.fingerprint),
            (record.singular, table.singular.fingerprint),
        ):
            supplied = info.fingerprint
            if record.type_tag != "typeII" and supplied is not None:
                if (supplied.b, supplied.chi) != (derived.b, derived.chi):
                    findings.append(Finding(
                        "ERROR", "supplied-vs-derived",
                        f"{info.name}: supplied fingerprint {supplied.b}, chi="
                        f"{supplied.chi} disagrees with derived {derived.b}, "
                        f"chi={derived.chi}",
                    ))
    else:
        for info in (record.resolution, record.singular, record.smoothing):
            if info.fingerprint is not None:
                findings.extend(info.fingerprint.findings(info.name))
    if record.type_tag == "conifold":
        p_res = record.resolution.stored_pi1()
        p_sm = record.smoothing.stored_pi1()
        if p_res is not None and p_sm is not None and p_res != p_sm:
            findings.append(Finding(
                "ERROR", "conifold-pi1",
                f"conifold transition between pi1={p_res} and pi1={p_sm}: "
                "node surgeries cannot change the fundamental group",
            ))
    pair = record.h1_theta_pair
    if pair is not None and pair[1] - pair[0] < 0:
        findings.append(Finding(
            "ERROR", "lambda-dim-negative",
            f"h1(Theta) pair {pair} implies a negative local-deformation image",
        ))
    if record.weierstrass is not None and record.singular_data is not None:
        cusps, _ = count_cuspidal_fibers(record.weierstrass)
        if cusps != record.singular_data.count:
            findings.append(Finding(
                "ERROR", "weierstrass-count",
                f"{cusps} cuspidal fibers but {record.singular_data.count} "
                "singular points recorded",
            ))
    return findings


# ---------------------------------------------------------------------------
# simplicity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    kind: str       # Simple | NotSimple | Unknown
    rule: str       # R1..R6
    reason: str
    missing: Tuple[str, ...] = ()

    def __str__(self):
        if self.kind == "Unknown" and self.missing:
            return f"Unknown: missing {', '.join(self.missing)}"
        return f"{self.kind}: {self.reason}"


def decide_simplicity(record: TransitionRecord,
                      witness_verified: Optional[bool] = None) -> Verdict:
    """Rule cascade for simplicity; the first matching rule wins.

    R1 conifold records are simple by definition.  R2 divisor-to-point
    transitions are never simple.  R3 differing fundamental groups rule out
    simplicity.  R4 a small transition with h1(Theta_Ybar) >= h1(Theta_Y)
    fails the necessary cohomological condition.  R5 a verified splitting
    family witnesses an explicit deformation to a conifold transition.
    Otherwise the verdict is Unknown, listing the data that could decide.
    """
    if record.type_tag == "conifold":
        return Verdict("Simple", "R1", "conifold is simple by definition")
    if record.type_tag == "typeII":
        return Verdict("NotSimple", "R2", "type II never simple")
    p_res = record.resolution.stored_pi1()
    p_sm = record.smoothing.stored_pi1()
    if p_res is not None and p_sm is not None and p_res != p_sm:
        return Verdict(
            "NotSimple", "R3", "simple transitions preserve fundamental group"
        )
    pair = record.h1_theta_pair
    if record.type_tag == "small" and pair is not None and pair[0] >= pair[1]:
        return Verdict(
            "NotSimple", "R4", "violates necessary cohomological condition"
        )
    if record.witness is not None and witness_verified:
        return Verdict("Simple", "R5", "explicit def-equivalence to conifold")
    missing = []
    if record.witness is not None and witness_verified is None:
        missing.append("witness verification")
    if record.witness is None:
        missing.append("a splitting-family witness")
    if pair is None:
        missing.append("the h1(Theta) pair")
    if p_res is None or p_sm is None:
        missing.append("fundamental group labels")
    return Verdict("Unknown", "R6", "insufficient data", tuple(missing))


# ---------------------------------------------------------------------------
# splitting-family verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplittingVerification:
    verified: bool
    expected_nodes_per_point: int
    report: Optional[SingularityReport]
    failure: Optional[str] = None

    def to_text(self, singular_count: Optional[int] = None) -> str:
        lines = []
        if self.report is not None:
            lines.append(self.report.to_text())
        if self.failure:
            lines.append(f"verification failure: {self.failure}")
        lines.append(
            f"expected nodes per original point: {self.expected_nodes_per_point}"
        )
        lines.append(f"verified: {str(self.verified).lower()}")
        if self.verified and singular_count is not None:
            total = singular_count * self.expected_nodes_per_point
            lines.append(
                f"splitting all {singular_count} singular points: {total} nodes total"
            )
        return "\n".join(lines)


def verify_splitting_family(family: SplittingFamily, seed: int = 0,
                            budget: int = DEFAULT_BUDGET) -> SplittingVerification:
    """Certify that the specialized deformation splits into the expected nodes.

    Runs the full singular-locus analysis on the deformed local model at the
    stored parameter values; verified means the certified distinct-point
    count equals the expectation and every point is a node.  Degenerate
    parameter values are reported, never silently accepted.
    """
    specialized = family.specialized()
    ambient = Ambient.affine(specialized.ring.nvars)
    try:
        hypersurface = Hypersurface(specialized, ambient, "deformed local model")
        report = analyze_singular_locus(hypersurface, seed=seed, budget=budget)
    except DomainError as exc:
        return SplittingVerification(
            verified=False,
            expected_nodes_per_point=family.expected_nodes_per_point,
            report=None,
            failure=str(exc),
        )
    ok = (
        report.point_count == family.expected_nodes_per_point
        and report.all_nodes
        and report.radical_certified
    )
    return SplittingVerification(
        verified=ok,
        expected_nodes_per_point=family.expected_nodes_per_point,
        report=report,
        failure=None if ok else "certificates do not match the expected node count",
    )


def dim_image_lambda(record: TransitionRecord) -> Optional[int]:
    """Exact-sequence bookkeeping: h1(Theta_Y) - h1(Theta_Ybar), when stored.

    None when the pair is absent; a negative difference contradicts
    left-exactness of the localization sequence and raises.
    """
    pair = record.h1_theta_pair
    if pair is None:
        return None
    bar, res = pair
    if res - bar < 0:
        raise InconsistentDataError(
            f"h1(Theta) pair ({bar}, {res}) would make the localization map "
            "non-injective"
        )
    return res - bar


# ---------------------------------------------------------------------------
# record files (.tr)
# ---------------------------------------------------------------------------


def _split_sections(text: str):
    top: List[str] = []
    sections: List[Tuple[str, List[str]]] = []
    current = top
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            sections.append((line[1:-1].strip().lower(), []))
            current = sections[-1][1]
        else:
            current.append(line)
    return top, sections


def _kv(lines: Sequence[str], what: str) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for line in lines:
        key, sep, value = line.partition(":")
        if not sep:
            raise DomainError(f"malformed line in {what}: {line!r}")
        out[key.strip().lower()] = value.strip()
    return out


def _parse_bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "yes", "1"):
        return True
    if t in ("false", "no", "0"):
        return False
    raise DomainError(f"expected a boolean, got {text!r}")


def _parse_int_list(text: str) -> Tuple[int, ...]:
    out: List[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "*" in chunk:
            value, _, times = chunk.partition("*")
            out.extend([int(value.strip())] * int(times.strip()))
        else:
            out.append(int(chunk))
    return tuple(out)


def _parse_trees(text: str) -> Tuple[str, ...]:
    out: List[str] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk or chunk.lower() == "none":
            continue
        if "*" in chunk:
            label, _, times = chunk.partition("*")
            out.extend([label.strip()] * int(times.strip()))
        else:
            out.append(chunk)
    return tuple(out)


def _fingerprint_from_kv(kv: Dict[str, str], default_smooth: bool) -> Optional[Fingerprint]:
    if "b" not in kv:
        return None
    b = _parse_int_list(kv["b"])
    if len(b) != 7:
        raise DomainError("fingerprint needs seven Betti numbers b0..b6")
    if b[1] or b[5]:
        raise DomainError("records with b1 or b5 nonzero are rejected")
    fp = Fingerprint.from_betti(
        b,
        h11=int(kv["h11"]) if "h11" in kv else None,
        h21=int(kv["h21"]) if "h21" in kv else None,
        h1_theta=int(kv["h1_theta"]) if "h1_theta" in kv else None,
        pi1_label=kv.get("pi1"),
        smooth=_parse_bool(kv["smooth"]) if "smooth" in kv else default_smooth,
        kahler=_parse_bool(kv["kahler"]) if "kahler" in kv else True,
    )
    if "chi" in kv and int(kv["chi"]) != fp.chi:
        raise DomainError(
            f"stored chi={kv['chi']} contradicts the alternating Betti sum {fp.chi}"
        )
    return fp


def _variety_info(kv: Dict[str, str], fallback_name: str,
                  default_smooth: bool) -> VarietyInfo:
    return VarietyInfo(
        name=kv.get("name", fallback_name),
        fingerprint=_fingerprint_from_kv(kv, default_smooth),
        h1_theta=int(kv["h1_theta"]) if "h1_theta" in kv else None,
        pi1_label=kv.get("pi1"),
    )


def _parse_witness(lines: Sequence[str]) -> SplittingFamily:
    kv = _kv(lines, "witness section")
    for key in ("vars", "local", "deformed", "expected_nodes_per_point"):
        if key not in kv:
            raise DomainError(f"witness section lacks {key}:")
    ring_lines = [f"vars: {kv['vars']}"]
    if "field" in kv:
        ring_lines.append(f"field: {kv['field']}")
    if "minpoly" in kv:
        ring_lines.append(f"minpoly: {kv['minpoly']}")
    base = parse_ring_header(ring_lines)
    params = tuple(p.strip() for p in kv.get("params", "").split(",") if p.strip())
    ext = PolynomialRing(base.variables + params, base.field)
    local = LocalModel(parse_polynomial(kv["local"], base), "local model")
    deformed = parse_polynomial(kv["deformed"], ext)
    values: Dict[str, object] = {}
    if kv.get("values"):
        for piece in kv["values"].replace(";", ",").split(","):
            piece = piece.strip()
            if not piece:
                continue
            pname, sep, val = piece.partition("=")
            if not sep:
                raise DomainError(f"malformed parameter value {piece!r}")
            parsed = parse_polynomial(val.strip(), ext)
            if parsed.total_degree() > 0:
                raise DomainError("parameter values must be constants")
            values[pname.strip()] = parsed.constant_coefficient()
    return SplittingFamily(
        local_model=local,
        deformed=deformed,
        parameters=params,
        parameter_values=values,
        expected_nodes_per_point=int(kv["expected_nodes_per_point"]),
    )


def _parse_weierstrass(lines: Sequence[str]) -> Polynomial:
    kv = _kv(lines, "weierstrass section")
    var = kv.get("var", "l")
    if "b_coefficient" not in kv:
        raise DomainError("weierstrass section lacks b_coefficient:")
    ring = PolynomialRing([var])
    return parse_polynomial(kv["b_coefficient"], ring)


def load_transition_record(text: str) -> TransitionRecord:
    top, sections = _split_sections(text)
    kv_top = _kv(top, "record header")
    name = kv_top.get("name", "transition")
    type_tag = kv_top.get("type")
    if type_tag is None:
        raise DomainError("record lacks a type: line")
    by_name = {}
    for section, lines in sections:
        by_name.setdefault(section, []).extend(lines)

    smoothing = _variety_info(
        _kv(by_name.get("smoothing", []), "smoothing"), "Ytilde", True
    )
    singular_kv = _kv(by_name.get("singular", []), "singular")
    resolution_kv = _kv(by_name.get("resolution", []), "resolution")
    singular = _variety_info(singular_kv, "Ybar", False)
    resolution = _variety_info(resolution_kv, "Y", True)

    singular_data = None
    if "count" in singular_kv:
        singular_data = SingularDatum(
            count=int(singular_kv["count"]),
            milnor_each=_parse_int_list(singular_kv.get("milnor_each", "")),
            terminal=_parse_bool(singular_kv.get("terminal", "false")),
            cdv_type=singular_kv.get("cdv_type"),
        )
    resolution_data = None
    if by_name.get("resolution"):
        resolution_data = ResolutionDatum(
            trees=_parse_trees(resolution_kv.get("trees", "")),
            divisor_contraction=_parse_bool(
                resolution_kv.get("divisor_contraction", "false")
            ),
            k=int(resolution_kv["k"]) if "k" in resolution_kv else None,
            k_provenance=resolution_kv.get("k_provenance"),
        )
    witness = _parse_witness(by_name["witness"]) if "witness" in by_name else None
    weier = _parse_weierstrass(by_name["weierstrass"]) if "weierstrass" in by_name else None
    return TransitionRecord(
        name=name,
        type_tag=type_tag,
        smoothing=smoothing,
        singular=singular,
        resolution=resolution,
        singular_data=singular_data,
        resolution_data=resolution_data,
        witness=witness,
        weierstrass=weier,
    )
