"""Graph model of the Calabi-Yau web: deformation classes and transitions.

Nodes carry the invariant fingerprint of a deformation class; arrows are
directed from the resolution side Y to the smoothing side Ytilde and
reference a transition record.  Connectivity queries are undirected, matching
how the web conjecture is used.  Graph values are immutable; updates return
new versions.  Fundamental-group labels are opaque symbols compared by
equality, and an unknown label never counts as equal to anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DomainError
from .transitions import (
    Finding,
    Fingerprint,
    TransitionRecord,
    consistency_check,
    decide_simplicity,
    load_transition_record,
)


@dataclass(frozen=True)
class WebNode:
    id: str
    fingerprint: Fingerprint
    description: str = ""
    primitive: bool = False


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str  # resolution side Y
    target: str  # smoothing side Ytilde
    record: TransitionRecord
    record_path: str = ""
    simplicity: Optional[str] = None  # cached verdict kind

    def shape(self) -> Tuple[str, str, str, str, Optional[str]]:
        return (self.id, self.source, self.target, self.record_path, self.simplicity)


class WebGraph:
    """Immutable node/arrow collection with validation and exports."""

    __slots__ = ("nodes", "arrows", "validation_state")

    def __init__(self, nodes: Sequence[WebNode] = (), arrows: Sequence[Arrow] = (),
                 validation_state: Optional[Tuple[Finding, ...]] = None):
        self.nodes: Dict[str, WebNode] = {}
        for n in nodes:
            if n.id in self.nodes:
                raise DomainError(f"duplicate node id {n.id!r}")
            self.nodes[n.id] = n
        self.arrows: Dict[str, Arrow] = {}
        for a in arrows:
            if a.id in self.arrows:
                raise DomainError(f"duplicate arrow id {a.id!r}")
            for endpoint in (a.source, a.target):
                if endpoint not in self.nodes:
                    raise DomainError(
                        f"arrow {a.id!r} references missing node {endpoint!r}"
                    )
            self.arrows[a.id] = a
        self.validation_state = validation_state

    def __eq__(self, other):
        if not isinstance(other, WebGraph):
            return NotImplemented
        return (
            set(self.nodes) == set(other.nodes)
            and all(self.nodes[k] == other.nodes[k] for k in self.nodes)
            and set(self.arrows) == set(other.arrows)
            and all(
                self.arrows[k].shape() == other.arrows[k].shape()
                for k in self.arrows
            )
        )

    def with_node(self, node: WebNode) -> "WebGraph":
        return WebGraph(list(self.nodes.values()) + [node], self.arrows.values())

    def with_arrow(self, arrow: Arrow) -> "WebGraph":
        return WebGraph(self.nodes.values(), list(self.arrows.values()) + [arrow])

    def validated(self) -> "WebGraph":
        return WebGraph(
            self.nodes.values(), self.arrows.values(),
            validation_state=tuple(validate(self)),
        )

    # -- queries -------------------------------------------------------------

    def _adjacency(self) -> Dict[str, List[Tuple[str, str]]]:
        adj: Dict[str, List[Tuple[str, str]]] = {n: [] for n in self.nodes}
        for a in self.arrows.values():
            adj[a.source].append((a.target, a.id))
            adj[a.target].append((a.source, a.id))
        for lst in adj.values():
            lst.sort()
        return adj

    def connected_components(self) -> List[List[str]]:
        """Undirected components, each sorted, in sorted order."""
        adj = self._adjacency()
        seen = set()
        components = []
        for start in sorted(self.nodes):
            if start in seen:
                continue
            queue = [start]
            seen.add(start)
            comp = []
            while queue:
                node = queue.pop(0)
                comp.append(node)
                for neighbor, _ in adj[node]:
                    if neighbor not in seen:
                        seen.add(neighbor)
                        queue.append(neighbor)
            components.append(sorted(comp))
        components.sort()
        return components

    def path(self, a: str, b: str) -> Optional[List[str]]:
        """A shortest undirected arrow sequence from a to b; None if none."""
        for node in (a, b):
            if node not in self.nodes:
                raise DomainError(f"unknown node id {node!r}")
        if a == b:
            return []
        adj = self._adjacency()
        previous: Dict[str, Tuple[str, str]] = {}
        seen = {a}
        queue = [a]
        while queue:
            node = queue.pop(0)
            for neighbor, arrow_id in adj[node]:
                if neighbor in seen:
                    continue
                previous[neighbor] = (node, arrow_id)
                if neighbor == b:
                    out = []
                    walk = b
                    while walk != a:
                        walk, via = previous[walk]
                        out.append(via)
                    return list(reversed(out))
                seen.add(neighbor)
                queue.append(neighbor)
        return None


def add_node(graph: WebGraph, node: WebNode) -> WebGraph:
    return graph.with_node(node)


def add_arrow(graph: WebGraph, arrow: Arrow) -> WebGraph:
    return graph.with_arrow(arrow)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _effective_verdict(arrow: Arrow) -> str:
    if arrow.simplicity is not None:
        return arrow.simplicity
    return decide_simplicity(arrow.record).kind


def validate(graph: WebGraph) -> List[Finding]:
    """Deterministic findings for a graph; pure in the graph content.

    A Simple (or conifold) arrow between nodes with differing known
    fundamental-group labels is an error; a divisor-to-point arrow may change
    the label, reported as information only.  Record-level inconsistencies
    propagate with the arrow id as context.
    """
    findings: List[Finding] = []
    for node_id in sorted(graph.nodes):
        node = graph.nodes[node_id]
        findings.extend(node.fingerprint.findings(f"node {node_id}"))
    for arrow_id in sorted(graph.arrows):
        arrow = graph.arrows[arrow_id]
        record = arrow.record
        recomputed = decide_simplicity(record)
        if arrow.simplicity is not None and arrow.simplicity != recomputed.kind:
            refined = recomputed.kind == "Unknown" and arrow.simplicity == "Simple"
            if not refined:
                findings.append(Finding(
                    "ERROR", "simplicity-cache",
                    f"arrow {arrow_id}: cached verdict {arrow.simplicity} "
                    f"contradicts recomputed {recomputed.kind}",
                ))
        verdict = _effective_verdict(arrow)
        src = graph.nodes[arrow.source].fingerprint.pi1_label
        tgt = graph.nodes[arrow.target].fingerprint.pi1_label
        labels_known = src is not None and tgt is not None
        if labels_known and src != tgt:
            if verdict == "Simple" or record.type_tag == "conifold":
                findings.append(Finding(
                    "ERROR", "pi1-mismatch",
                    f"arrow {arrow_id}: simple/conifold transition between "
                    f"pi1={src} and pi1={tgt}",
                ))
            elif record.type_tag == "typeII":
                findings.append(Finding(
                    "INFO", "pi1-change",
                    f"arrow {arrow_id}: divisor-to-point transition changes "
                    f"pi1 from {src} to {tgt}",
                ))
        for f in consistency_check(record):
            findings.append(Finding(f.severity, f.code, f"arrow {arrow_id}: {f.message}"))
    return findings


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

_DOT_STYLE = {"Simple": "solid", "Unknown": "dashed", "NotSimple": "dotted"}


def export_dot(graph: WebGraph) -> str:
    """Byte-stable DOT rendering; arrows styled by simplicity verdict."""
    lines = ["digraph cyweb {"]
    for node_id in sorted(graph.nodes):
        node = graph.nodes[node_id]
        label = node_id if not node.description else f"{node_id}\\n{node.description}"
        lines.append(f'  "{node_id}" [label="{label}"];')
    for arrow_id in sorted(graph.arrows):
        arrow = graph.arrows[arrow_id]
        verdict = _effective_verdict(arrow)
        style = _DOT_STYLE.get(verdict, "dashed")
        lines.append(
            f'  "{arrow.source}" -> "{arrow.target}" '
            f'[style={style}, label="{verdict}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_csv(graph: WebGraph) -> str:
    lines = ["arrow,source,target,type,verdict"]
    for arrow_id in sorted(graph.arrows):
        a = graph.arrows[arrow_id]
        lines.append(
            f"{arrow_id},{a.source},{a.target},{a.record.type_tag},"
            f"{_effective_verdict(a)}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# the .web text format
# ---------------------------------------------------------------------------


def _blocks(text: str):
    blocks: List[Tuple[str, Dict[str, str]]] = []
    current: Optional[Dict[str, str]] = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = {}
            blocks.append((line[1:-1].strip().lower(), current))
            continue
        if current is None:
            raise DomainError(f"content outside of a block: {line!r}")
        key, sep, value = line.partition(":")
        if not sep:
            raise DomainError(f"malformed line {line!r}")
        current[key.strip().lower()] = value.strip()
    return blocks


def _node_from_block(kv: Dict[str, str]) -> WebNode:
    if "id" not in kv:
        raise DomainError("node block lacks id:")
    if "b" not in kv:
        raise DomainError(f"node {kv['id']!r} lacks Betti numbers b:")
    b = tuple(int(x) for x in kv["b"].split(","))
    if len(b) != 7:
        raise DomainError("node fingerprints need b0..b6")
    if b[1] or b[5]:
        raise DomainError("nodes with b1 or b5 nonzero are rejected")
    fp = Fingerprint.from_betti(
        b,
        h11=int(kv["h11"]) if "h11" in kv else None,
        h21=int(kv["h21"]) if "h21" in kv else None,
        h1_theta=int(kv["h1_theta"]) if "h1_theta" in kv else None,
        pi1_label=kv.get("pi1"),
        smooth=True,
        kahler=True,
    )
    primitive = kv.get("primitive", "false").strip().lower() in ("true", "yes", "1")
    return WebNode(kv["id"], fp, kv.get("description", ""), primitive)


def load_web_graph(text: str, base_dir: Optional[Path] = None) -> WebGraph:
    """Parse a graph file, loading referenced transition records from disk."""
    nodes: List[WebNode] = []
    arrows: List[Arrow] = []
    for kind, kv in _blocks(text):
        if kind == "node":
            nodes.append(_node_from_block(kv))
        elif kind == "arrow":
            for key in ("id", "source", "target", "transition"):
                if key not in kv:
                    raise DomainError(f"arrow block lacks {key}:")
            rel = kv["transition"]
            path = (base_dir / rel) if base_dir is not None else Path(rel)
            try:
                record = load_transition_record(path.read_text())
            except OSError as exc:
                raise DomainError(f"cannot read transition record {rel!r}: {exc}")
            arrows.append(Arrow(
                id=kv["id"],
                source=kv["source"],
                target=kv["target"],
                record=record,
                record_path=rel,
                simplicity=kv.get("simplicity"),
            ))
        else:
            raise DomainError(f"unknown block [{kind}]")
    return WebGraph(nodes, arrows)


def serialize_web_graph(graph: WebGraph) -> str:
    """Canonical text form: nodes then arrows, sorted by id."""
    chunks: List[str] = []
    for node_id in sorted(graph.nodes):
        n = graph.nodes[node_id]
        fp = n.fingerprint
        lines = ["[node]", f"id: {n.id}"]
        if n.description:
            lines.append(f"description: {n.description}")
        lines.append(f"primitive: {str(n.primitive).lower()}")
        lines.append(f"b: {','.join(map(str, fp.b))}")
        for key, value in (("h11", fp.h11), ("h21", fp.h21), ("h1_theta", fp.h1_theta)):
            if value is not None:
                lines.append(f"{key}: {value}")
        if fp.pi1_label is not None:
            lines.append(f"pi1: {fp.pi1_label}")
        chunks.append("\n".join(lines))
    for arrow_id in sorted(graph.arrows):
        a = graph.arrows[arrow_id]
        lines = [
            "[arrow]",
            f"id: {a.id}",
            f"source: {a.source}",
            f"target: {a.target}",
            f"transition: {a.record_path}",
        ]
        if a.simplicity is not None:
            lines.append(f"simplicity: {a.simplicity}")
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + "\n"
