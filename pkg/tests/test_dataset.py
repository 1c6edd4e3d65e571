"""Coherence of the shipped data files: records must agree with equations."""

from pathlib import Path

from cyweb.singularities import (
    analyze_singular_locus,
    count_cuspidal_fibers,
    load_hypersurface,
    load_local_model,
    milnor_number,
)
from cyweb.transitions import consistency_check, load_transition_record
from cyweb.web import load_web_graph, validate

DATA = Path(__file__).resolve().parent.parent / "src" / "cyweb" / "data"


def test_plane_quintic_record_matches_certified_analysis():
    surface = load_hypersurface((DATA / "quintic_with_plane.hsf").read_text())
    record = load_transition_record((DATA / "quintic_with_plane.tr").read_text())
    report = analyze_singular_locus(surface)
    assert report.point_count == record.singular_data.count
    assert report.all_nodes == record.singular_data.all_nodes
    assert report.multiplicity_total == record.singular_data.total_milnor


def test_ca4_record_matches_global_quintic_analysis():
    surface = load_hypersurface((DATA / "quintic_ca4_global.hsf").read_text())
    record = load_transition_record((DATA / "quintic_ca4.tr").read_text())
    report = analyze_singular_locus(surface)
    assert report.point_count == record.singular_data.count == 10
    assert report.multiplicity_total == record.singular_data.total_milnor == 160
    assert not report.all_nodes


def test_ca4_record_witness_matches_shipped_germ():
    record = load_transition_record((DATA / "quintic_ca4.tr").read_text())
    germ = load_local_model((DATA / "ca4_germ.lm").read_text())
    # the witness lives over Q(e) but its undeformed germ has rational terms
    witness_germ = record.witness.local_model.germ
    rationalized = {m: c.as_rational() for m, c in witness_germ.terms.items()}
    assert rationalized == germ.germ.terms
    # the Milnor number of each recorded point matches the germ
    assert milnor_number(record.witness.local_model) == \
        record.singular_data.milnor_each[0] == milnor_number(germ)


def test_namikawa_record_weierstrass_matches_count():
    record = load_transition_record((DATA / "namikawa.tr").read_text())
    cusps, all_simple = count_cuspidal_fibers(record.weierstrass)
    assert (cusps, all_simple) == (6, True)
    assert record.singular_data.count == 6
    # each recorded Milnor number matches the shipped germ
    germ = load_local_model((DATA / "namikawa_germ.lm").read_text())
    assert set(record.singular_data.milnor_each) == {milnor_number(germ)}


def test_every_shipped_record_is_error_free():
    for name in ("quintic_with_plane.tr", "quintic_ca4.tr",
                 "quintic_conifold100.tr", "quintic_triple_point.tr",
                 "octic_double_solid.tr", "namikawa.tr"):
        record = load_transition_record((DATA / name).read_text())
        errors = [f for f in consistency_check(record) if f.severity == "ERROR"]
        assert not errors, (name, errors)


def test_shipped_web_is_error_free():
    graph = load_web_graph((DATA / "gross_web.web").read_text(), base_dir=DATA)
    errors = [f for f in validate(graph) if f.severity == "ERROR"]
    assert not errors


def test_demo_tour_runs_clean():
    import subprocess
    import sys

    tour = DATA.parent.parent.parent / "demos" / "tour.py"
    proc = subprocess.run(
        [sys.executable, str(tour)], capture_output=True, text=True, timeout=300
    )
    assert proc.returncode == 0, proc.stderr
    assert "16 distinct singular points, all nodes: true" in proc.stdout
    assert "100 nodes total" in proc.stdout
