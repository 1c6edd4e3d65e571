import random
from pathlib import Path

import pytest

from cyweb.errors import DomainError, InconsistentDataError
from cyweb.polynomial import PolynomialRing
from cyweb.singularities import LocalModel
from cyweb.transitions import (
    Fingerprint,
    ResolutionDatum,
    SingularDatum,
    SplittingFamily,
    TransitionRecord,
    VarietyInfo,
    ade_curve_count,
    compute_table,
    consistency_check,
    decide_simplicity,
    dim_image_lambda,
    load_transition_record,
    table_csv,
    verify_splitting_family,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "cyweb" / "data"

QUINTIC = Fingerprint.from_betti(
    [1, 0, 1, 204, 1, 0, 1], h11=1, h21=101, h1_theta=101, pi1_label="trivial"
)


def _record(name="t", type_tag="small", smoothing=QUINTIC, count=10, mu=16,
            trees=("A4",) * 10, k=16, bar_h1=17, res_h1=18, witness=None,
            terminal=True, cdv="cA4", pi1="trivial"):
    return TransitionRecord(
        name=name,
        type_tag=type_tag,
        smoothing=VarietyInfo("Q", smoothing),
        singular=VarietyInfo("Qbar", None, bar_h1, pi1),
        resolution=VarietyInfo("Qhat", None, res_h1, pi1),
        singular_data=SingularDatum(count, (mu,) * count, terminal=terminal, cdv_type=cdv),
        resolution_data=ResolutionDatum(trees, k=k),
        witness=witness,
    )


# ---------------------------------------------------------------------------
# the derivation model against the classical table
# ---------------------------------------------------------------------------


def test_ca4_record_reproduces_table():
    table = compute_table(_record())
    y, ybar, yt = table.rows
    assert y.fingerprint.b == (1, 0, 17, 36, 17, 0, 1)
    assert y.fingerprint.chi == 0
    assert ybar.fingerprint.b == (1, 0, 1, 60, 17, 0, 1)
    assert ybar.fingerprint.chi == -40
    assert yt.fingerprint is QUINTIC


def test_conifold_record_reproduces_table():
    rec = _record(type_tag="conifold", count=100, mu=1, trees=("A1",) * 100,
                  k=16, bar_h1=18, cdv="node")
    table = compute_table(rec)
    y, ybar, _ = table.rows
    assert y.fingerprint.b == (1, 0, 17, 36, 17, 0, 1)
    assert ybar.fingerprint.b == (1, 0, 1, 120, 17, 0, 1)
    assert ybar.fingerprint.chi == -100


def test_sixteen_node_record():
    rec = _record(type_tag="conifold", count=16, mu=1, trees=("A1",) * 16,
                  k=1, bar_h1=None, res_h1=None, cdv="node")
    table = compute_table(rec)
    y, ybar, _ = table.rows
    assert y.fingerprint.b[2] == 2
    assert y.fingerprint.b[3] == 174
    assert ybar.fingerprint.b[3] == 189
    # classical conifold relations
    assert y.fingerprint.b[3] == QUINTIC.b[3] - 2 * (16 - 1)
    assert y.fingerprint.chi == QUINTIC.chi + 2 * 16


def test_trivial_record_is_identity():
    rec = TransitionRecord(
        name="trivial", type_tag="other",
        smoothing=VarietyInfo("Yt", QUINTIC),
        singular=VarietyInfo("Ybar"),
        resolution=VarietyInfo("Y"),
        singular_data=SingularDatum(0, ()),
        resolution_data=ResolutionDatum((), k=0),
    )
    table = compute_table(rec)
    for row in table.rows:
        assert row.fingerprint.b == QUINTIC.b
        assert row.fingerprint.chi == QUINTIC.chi


def test_conifold_classical_relations_on_random_consistent_inputs():
    rng = random.Random(11)
    for _ in range(40):
        h11 = rng.randint(1, 30)
        h21 = rng.randint(1, 120)
        b = (1, 0, h11, 2 + 2 * h21, h11, 0, 1)
        smoothing = Fingerprint.from_betti(b, h11=h11, h21=h21)
        n = rng.randint(1, 60)
        k = rng.randint(0, n)
        rec = TransitionRecord(
            name="r", type_tag="conifold",
            smoothing=VarietyInfo("Yt", smoothing),
            singular=VarietyInfo("Ybar"),
            resolution=VarietyInfo("Y"),
            singular_data=SingularDatum(n, (1,) * n),
            resolution_data=ResolutionDatum(("A1",) * n, k=k),
        )
        try:
            table = compute_table(rec)
        except InconsistentDataError:
            continue  # b3(Y) < 0 happens for tiny h21 with many nodes
        y = table.resolution.fingerprint
        assert y.chi == smoothing.chi + 2 * n
        assert y.b[3] == smoothing.b[3] - 2 * (n - k)


def test_compute_table_is_idempotent():
    rec = _record()
    table = compute_table(rec)
    fed_back = TransitionRecord(
        name=rec.name, type_tag=rec.type_tag,
        smoothing=rec.smoothing,
        singular=VarietyInfo("Qbar", table.singular.fingerprint, 17, "trivial"),
        resolution=VarietyInfo("Qhat", table.resolution.fingerprint, 18, "trivial"),
        singular_data=rec.singular_data,
        resolution_data=rec.resolution_data,
    )
    table2 = compute_table(fed_back)
    assert [r.fingerprint for r in table2.rows] == [r.fingerprint for r in table.rows]
    assert not [f for f in consistency_check(fed_back, table2) if f.severity == "ERROR"]


def test_negative_derived_betti_rejected():
    tiny = Fingerprint.from_betti([1, 0, 1, 4, 1, 0, 1], h11=1, h21=1)
    rec = TransitionRecord(
        name="bad", type_tag="conifold",
        smoothing=VarietyInfo("Yt", tiny),
        singular=VarietyInfo("Ybar"),
        resolution=VarietyInfo("Y"),
        singular_data=SingularDatum(50, (1,) * 50),
        resolution_data=ResolutionDatum(("A1",) * 50, k=0),
    )
    with pytest.raises(InconsistentDataError):
        compute_table(rec)


def test_missing_k_is_an_error():
    rec = _record(k=None)
    with pytest.raises(InconsistentDataError):
        compute_table(rec)


def test_table_csv_matches_classical_layout():
    rec1 = _record(name="quintic_ca4")
    rec2 = _record(name="quintic_conifold", type_tag="conifold", count=100,
                   mu=1, trees=("A1",) * 100, k=16, bar_h1=18, cdv="node")
    rec2 = TransitionRecord(
        name=rec2.name, type_tag=rec2.type_tag,
        smoothing=rec2.smoothing,
        singular=VarietyInfo("Qbar_alpha", None, 18, "trivial"),
        resolution=VarietyInfo("Qhat_alpha", None, 18, "trivial"),
        singular_data=rec2.singular_data,
        resolution_data=rec2.resolution_data,
    )
    csv = table_csv([compute_table(rec1), compute_table(rec2)])
    assert csv.splitlines() == [
        "variety,h1_theta,b2,rho,b3,b4,chi",
        "Qhat/Qhat_alpha,18,17,17,36,17,0",
        "Qbar,17,1,1,60,17,-40",
        "Qbar_alpha,18,1,1,120,17,-100",
        "Q,101,1,1,204,1,-200",
    ]


# ---------------------------------------------------------------------------
# consistency findings
# ---------------------------------------------------------------------------


def test_exactly_one_warning_for_h1theta_tension():
    findings = consistency_check(_record())
    warnings = [f for f in findings if f.severity == "WARNING"]
    errors = [f for f in findings if f.severity == "ERROR"]
    assert len(warnings) == 1
    assert not errors
    assert "18" in warnings[0].message and "17" in warnings[0].message


def test_no_warning_for_consistent_pair():
    rec = _record(bar_h1=3, res_h1=None)
    findings = consistency_check(rec)
    assert not [f for f in findings if f.severity == "WARNING"]


def test_shipped_namikawa_pair_raises_no_warning():
    rec = load_transition_record((DATA / "namikawa.tr").read_text())
    assert rec.h1_theta_pair == (3, 3)
    findings = consistency_check(rec)
    assert not [f for f in findings if f.severity in ("WARNING", "ERROR")]


def test_duality_violation_flagged():
    broken = Fingerprint.from_betti([1, 0, 3, 10, 5, 0, 1], h11=3)
    findings = broken.findings("test")
    assert any(f.code == "poincare-duality" and f.severity == "ERROR"
               for f in findings)


def test_chi_mismatch_flagged():
    fp = Fingerprint(b=(1, 0, 1, 204, 1, 0, 1), chi=0)
    assert any(f.code == "chi-mismatch" for f in fp.findings())


def test_conifold_pi1_mismatch_flagged():
    rec = TransitionRecord(
        name="r", type_tag="conifold",
        smoothing=VarietyInfo("Yt", QUINTIC),  # pi1 trivial
        singular=VarietyInfo("Ybar"),
        resolution=VarietyInfo("Y", None, None, "Z/5"),
        singular_data=SingularDatum(2, (1, 1)),
        resolution_data=ResolutionDatum(("A1", "A1"), k=1),
    )
    findings = consistency_check(rec)
    assert any(f.code == "conifold-pi1" and f.severity == "ERROR"
               for f in findings)


def test_weierstrass_count_cross_checked():
    text = (DATA / "namikawa.tr").read_text()
    rec = load_transition_record(text)
    findings = consistency_check(rec)
    assert not [f for f in findings if f.severity == "ERROR"]
    # breaking the recorded count must surface an error
    broken = text.replace("count: 6", "count: 5").replace("milnor_each: 4*6",
                                                          "milnor_each: 4*5")
    rec2 = load_transition_record(broken)
    findings2 = consistency_check(rec2)
    assert any(f.code == "weierstrass-count" for f in findings2)


# ---------------------------------------------------------------------------
# simplicity verdicts
# ---------------------------------------------------------------------------


def test_verdict_conifold_r1():
    rec = load_transition_record((DATA / "quintic_with_plane.tr").read_text())
    verdict = decide_simplicity(rec)
    assert verdict.kind == "Simple" and verdict.rule == "R1"


def test_verdict_type_ii_r2():
    rec = load_transition_record((DATA / "quintic_triple_point.tr").read_text())
    verdict = decide_simplicity(rec)
    assert verdict.kind == "NotSimple" and verdict.rule == "R2"


def test_verdict_pi1_mismatch_r3():
    rec = TransitionRecord(
        name="r", type_tag="small",
        smoothing=VarietyInfo("Yt", None, None, "Z/5"),
        singular=VarietyInfo("Ybar"),
        resolution=VarietyInfo("Y", None, None, "trivial"),
        singular_data=SingularDatum(1, (1,), terminal=True),
    )
    verdict = decide_simplicity(rec)
    assert verdict.kind == "NotSimple" and verdict.rule == "R3"


def test_verdict_namikawa_r4():
    rec = load_transition_record((DATA / "namikawa.tr").read_text())
    verdict = decide_simplicity(rec)
    assert verdict.kind == "NotSimple" and verdict.rule == "R4"
    assert str(verdict) == "NotSimple: violates necessary cohomological condition"


def test_verdict_witness_r5():
    rec = load_transition_record((DATA / "quintic_ca4.tr").read_text())
    assert rec.witness is not None
    # pair (17, 18) passes R4, so an unverified witness leaves it open
    assert decide_simplicity(rec).kind == "Unknown"
    verdict = decide_simplicity(rec, witness_verified=True)
    assert verdict.kind == "Simple" and verdict.rule == "R5"


def test_verdict_unknown_lists_missing_data():
    rec = load_transition_record((DATA / "octic_double_solid.tr").read_text())
    verdict = decide_simplicity(rec)
    assert verdict.kind == "Unknown"
    assert verdict.missing


def test_verdicts_deterministic():
    rec = load_transition_record((DATA / "namikawa.tr").read_text())
    kinds = {decide_simplicity(rec).kind for _ in range(5)}
    assert kinds == {"NotSimple"}


def test_no_record_triggers_both_simple_and_not_simple():
    # R1-R5 mutual consistency on all shipped records
    for name in ("quintic_with_plane.tr", "quintic_ca4.tr", "namikawa.tr",
                 "quintic_triple_point.tr", "octic_double_solid.tr",
                 "quintic_conifold100.tr"):
        rec = load_transition_record((DATA / name).read_text())
        with_witness = decide_simplicity(rec, witness_verified=True) \
            if rec.witness else decide_simplicity(rec)
        without = decide_simplicity(rec)
        kinds = {with_witness.kind, without.kind}
        assert not ({"Simple", "NotSimple"} <= kinds), name


# ---------------------------------------------------------------------------
# dim im lambda
# ---------------------------------------------------------------------------


def test_dim_image_lambda():
    assert dim_image_lambda(_record(bar_h1=17, res_h1=18)) == 1
    assert dim_image_lambda(_record(bar_h1=3, res_h1=3)) == 0
    assert dim_image_lambda(_record(bar_h1=None, res_h1=None)) is None
    with pytest.raises(InconsistentDataError):
        dim_image_lambda(_record(bar_h1=5, res_h1=3))


# ---------------------------------------------------------------------------
# splitting families
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def ca4_witness():
    return load_transition_record((DATA / "quintic_ca4.tr").read_text()).witness


def test_witness_specializes_to_local_model(ca4_witness):
    zeroed = ca4_witness.deformed.substitute({p: 0 for p in ca4_witness.parameters})
    assert zeroed.to_ring(ca4_witness.local_model.germ.ring) == ca4_witness.local_model.germ


def test_splitting_family_verifies_ten_nodes(ca4_witness):
    result = verify_splitting_family(ca4_witness)
    assert result.verified
    assert result.report.point_count == 10
    assert result.report.all_nodes


def test_degenerate_parameters_reported(ca4_witness):
    degenerate = SplittingFamily(
        local_model=ca4_witness.local_model,
        deformed=ca4_witness.deformed,
        parameters=ca4_witness.parameters,
        parameter_values={"a": 0, "b": 0, "c": 0},
        expected_nodes_per_point=10,
    )
    result = verify_splitting_family(degenerate)
    assert not result.verified
    assert result.report.point_count == 1
    assert result.report.multiplicity_total == 16


def test_trivial_node_witness():
    ring = PolynomialRing(["x", "y", "z", "w"])
    x, y, z, w = ring.gens()
    node = LocalModel(x**2 + y**2 + z**2 + w**2)
    family = SplittingFamily(node, node.germ, (), {}, 1)
    assert verify_splitting_family(family).verified


def test_splitting_family_must_specialize():
    ring = PolynomialRing(["x", "y", "z", "w"])
    ext = PolynomialRing(["x", "y", "z", "w", "t"])
    x, y, z, w, t = ext.gens()
    node = LocalModel(ring.gen(0)**2 + ring.gen(1)**2 + ring.gen(2)**2 + ring.gen(3)**2)
    with pytest.raises(InconsistentDataError):
        SplittingFamily(node, x**2 + y**2 + z**2 + w**3 + t, ("t",), {"t": 1}, 1)


# ---------------------------------------------------------------------------
# record structure
# ---------------------------------------------------------------------------


def test_ade_curve_counts():
    assert ade_curve_count("A1") == 1
    assert ade_curve_count("A4") == 4
    assert ade_curve_count("D5") == 5
    assert ade_curve_count("E8") == 8
    with pytest.raises(DomainError):
        ade_curve_count("B2")
    with pytest.raises(DomainError):
        ade_curve_count("E5")


def test_conifold_record_must_be_nodal():
    with pytest.raises(InconsistentDataError):
        _record(type_tag="conifold")  # mu = 16 is not a node


def test_small_record_must_be_terminal():
    with pytest.raises(InconsistentDataError):
        _record(terminal=False)


def test_type_ii_needs_divisor_marker():
    with pytest.raises(InconsistentDataError):
        TransitionRecord(
            name="t2", type_tag="typeII",
            smoothing=VarietyInfo("Yt", QUINTIC),
            singular=VarietyInfo("Ybar"),
            resolution=VarietyInfo("Y"),
            resolution_data=ResolutionDatum(("A1",), divisor_contraction=True),
        )


def test_record_rejects_nonzero_b1():
    text = (DATA / "quintic_ca4.tr").read_text().replace(
        "b: 1,0,1,204,1,0,1", "b: 1,1,1,204,1,0,1"
    )
    with pytest.raises(DomainError):
        load_transition_record(text)


def test_record_roundtrip_key_fields():
    rec = load_transition_record((DATA / "quintic_ca4.tr").read_text())
    assert rec.name == "quintic_ca4"
    assert rec.type_tag == "small"
    assert rec.h1_theta_pair == (17, 18)
    assert rec.singular_data.count == 10
    assert rec.singular_data.total_milnor == 160
    assert rec.resolution_data.k == 16
    assert rec.resolution_data.total_curves == 40
    assert rec.witness.expected_nodes_per_point == 10
