import random
from pathlib import Path

import pytest

from cyweb.errors import DomainError
from cyweb.transitions import (
    Fingerprint,
    SingularDatum,
    ResolutionDatum,
    TransitionRecord,
    VarietyInfo,
)
from cyweb.web import (
    Arrow,
    WebGraph,
    WebNode,
    export_csv,
    export_dot,
    load_web_graph,
    serialize_web_graph,
    validate,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "cyweb" / "data"


def _fingerprint(h11=1, h21=101, pi1="trivial"):
    b = (1, 0, h11, 2 + 2 * h21, h11, 0, 1)
    return Fingerprint.from_betti(b, h11=h11, h21=h21, pi1_label=pi1)


def _conifold_record(pi1_res="trivial", pi1_sm="trivial", n=16, k=1):
    return TransitionRecord(
        name="syn", type_tag="conifold",
        smoothing=VarietyInfo("Yt", _fingerprint(pi1=pi1_sm)),
        singular=VarietyInfo("Ybar"),
        resolution=VarietyInfo("Y", None, None, pi1_res),
        singular_data=SingularDatum(n, (1,) * n),
        resolution_data=ResolutionDatum(("A1",) * n, k=k),
    )


@pytest.fixture(scope="module")
def shipped():
    return load_web_graph((DATA / "gross_web.web").read_text(), base_dir=DATA)


def test_shipped_web_shape(shipped):
    assert sorted(shipped.nodes) == ["M_D", "M_Q", "M_T"]
    assert sorted(shipped.arrows) == ["T_to_D", "T_to_Q"]
    arrow = shipped.arrows["T_to_Q"]
    assert arrow.source == "M_T" and arrow.target == "M_Q"


def test_shipped_web_validates_without_errors(shipped):
    findings = validate(shipped)
    assert not [f for f in findings if f.severity == "ERROR"]


def test_shipped_web_connected(shipped):
    assert shipped.connected_components() == [["M_D", "M_Q", "M_T"]]


def test_path_through_hub(shipped):
    route = shipped.path("M_Q", "M_D")
    assert route == ["T_to_Q", "T_to_D"]
    assert shipped.path("M_Q", "M_Q") == []
    with pytest.raises(DomainError):
        shipped.path("M_Q", "nowhere")


def test_isolated_node_makes_two_components(shipped):
    bigger = shipped.with_node(WebNode("M_X", _fingerprint(h11=3, h21=60)))
    assert len(bigger.connected_components()) == 2
    assert bigger.path("M_Q", "M_X") is None


def test_duplicate_and_dangling_rejected(shipped):
    with pytest.raises(DomainError):
        shipped.with_node(WebNode("M_Q", _fingerprint()))
    with pytest.raises(DomainError):
        shipped.with_arrow(Arrow("a", "M_Q", "ghost", _conifold_record()))


def test_updates_produce_new_graphs(shipped):
    before = len(shipped.nodes)
    bigger = shipped.with_node(WebNode("M_new", _fingerprint(h11=2, h21=50)))
    assert len(shipped.nodes) == before
    assert len(bigger.nodes) == before + 1


def test_simple_arrow_with_pi1_mismatch_is_error():
    record = _conifold_record(pi1_res="trivial", pi1_sm="trivial")
    graph = WebGraph(
        [WebNode("A", _fingerprint(pi1="trivial")),
         WebNode("B", _fingerprint(pi1="Z/2"))],
        [Arrow("bad", "A", "B", record, simplicity="Simple")],
    )
    findings = validate(graph)
    assert any(f.code == "pi1-mismatch" and f.severity == "ERROR"
               for f in findings)


def test_synthetic_pi1_mismatch_fuzz_always_rejected():
    # every synthetic graph with a Simple arrow across differing labels
    # must produce an error finding
    rng = random.Random(5)
    labels = ["trivial", "Z/2", "Z/5", "S3"]
    rejected = 0
    for _ in range(60):
        l1 = rng.choice(labels)
        l2 = rng.choice([l for l in labels if l != l1])
        nodes = [WebNode("A", _fingerprint(pi1=l1)),
                 WebNode("B", _fingerprint(pi1=l2))]
        extra = [WebNode(f"N{i}", _fingerprint()) for i in range(rng.randint(0, 3))]
        arrows = [Arrow("bad", "A", "B", _conifold_record(), simplicity="Simple")]
        graph = WebGraph(nodes + extra, arrows)
        findings = validate(graph)
        if any(f.code == "pi1-mismatch" and f.severity == "ERROR" for f in findings):
            rejected += 1
    assert rejected == 60


def test_type_ii_pi1_change_is_info_only():
    record = TransitionRecord(
        name="t2", type_tag="typeII",
        smoothing=VarietyInfo("Yt", _fingerprint(pi1="trivial")),
        singular=VarietyInfo("Ybar"),
        resolution=VarietyInfo("Y", _fingerprint(h11=2, h21=90, pi1="Z/2"), None, "Z/2"),
        resolution_data=ResolutionDatum((), divisor_contraction=True),
    )
    graph = WebGraph(
        [WebNode("A", _fingerprint(pi1="Z/2", h11=2, h21=90)),
         WebNode("B", _fingerprint(pi1="trivial"))],
        [Arrow("t", "A", "B", record, simplicity="NotSimple")],
    )
    findings = validate(graph)
    pi1_findings = [f for f in findings if f.code in ("pi1-mismatch", "pi1-change")]
    assert pi1_findings and all(f.severity == "INFO" for f in pi1_findings)


def test_cache_contradiction_is_error():
    record = _conifold_record()  # recomputes to Simple via R1
    graph = WebGraph(
        [WebNode("A", _fingerprint()), WebNode("B", _fingerprint())],
        [Arrow("x", "A", "B", record, simplicity="NotSimple")],
    )
    findings = validate(graph)
    assert any(f.code == "simplicity-cache" for f in findings)


def test_validation_is_pure(shipped):
    first = validate(shipped)
    second = validate(shipped)
    assert [str(f) for f in first] == [str(f) for f in second]


def test_export_dot_styles(shipped):
    dot = export_dot(shipped)
    assert dot.startswith("digraph")
    assert '"M_T" -> "M_Q" [style=dotted, label="NotSimple"];' in dot
    assert '"M_T" -> "M_D" [style=dashed, label="Unknown"];' in dot
    assert dot.count("->") == 2


def test_export_csv(shipped):
    csv = export_csv(shipped)
    lines = csv.splitlines()
    assert lines[0] == "arrow,source,target,type,verdict"
    assert "T_to_Q,M_T,M_Q,typeII,NotSimple" in lines
    assert "T_to_D,M_T,M_D,other,Unknown" in lines


def test_exports_are_byte_stable(shipped):
    assert export_dot(shipped) == export_dot(shipped)
    assert export_csv(shipped) == export_csv(shipped)
    assert serialize_web_graph(shipped) == serialize_web_graph(shipped)


def test_serialize_parse_roundtrip(shipped):
    text = serialize_web_graph(shipped)
    again = load_web_graph(text, base_dir=DATA)
    assert again == shipped
    assert serialize_web_graph(again) == text


def test_empty_graph_exports():
    empty = WebGraph()
    assert export_dot(empty) == "digraph cyweb {\n}\n"
    assert empty.connected_components() == []


def test_add_node_to_empty_graph():
    graph = WebGraph().with_node(WebNode("M_Q", _fingerprint()))
    assert len(graph.nodes) == 1
    assert graph.connected_components() == [["M_Q"]]
