"""Graphviz export of values as DAGs with shared subtrees merged."""

from dataclasses import dataclass, field

from catnum import core
from catnum.errors import SizeGuard

__all__ = ["DagExport", "dag_export", "to_dot"]

# Append the decimal value to a node label only when it is this small.
_LABEL_BITS = 64


@dataclass
class DagExport:
    """Merged DAG of a value: one node per distinct subtree, edges
    labeled with the child position starting at 0."""

    nodes: list = field(default_factory=list)   # (id, label)
    edges: list = field(default_factory=list)   # (parent, child, position)


def dag_export(x, binary=False):
    """Build the merged DAG under the multiway view, or the binary
    pairing view when binary is set (positions are then 0 and 1)."""
    ids = {}
    export = DagExport()

    def node_id(v):
        vid = ids.get(v)
        if vid is None:
            vid = len(export.nodes)
            ids[v] = vid
            export.nodes.append((vid, _label(v)))
        return vid

    pending = [x]
    expanded = set()
    while pending:
        v = pending.pop()
        vid = node_id(v)
        if vid in expanded:
            continue
        expanded.add(vid)
        if binary:
            children = [] if v.is_empty else list(v.unpair())
        else:
            children = core.to_list(v)
        for position, child in enumerate(children):
            export.edges.append((vid, node_id(child), position))
        pending.extend(reversed(children))
    return export


def to_dot(export, name="catnum"):
    """Render a DagExport as Graphviz text; output is deterministic."""
    lines = [f"digraph {name} {{"]
    for vid, label in export.nodes:
        lines.append(f'  n{vid} [label="{label}"];')
    for parent, child, position in export.edges:
        lines.append(f'  n{parent} -> n{child} [label="{position}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _label(v):
    label = core.cat_show(v)
    try:
        return f"{label}\\n{core.to_int(v, _LABEL_BITS)}"
    except SizeGuard:
        return label
