"""Two-mode edge-list files.

One edge per line, ``left<sep>right``. A line containing a tab is split on
tabs, so labels may contain spaces (``Mrs. Evelyn Jefferson<TAB>April 8th``);
otherwise it is split on runs of whitespace. Blank lines and lines starting
with ``#`` are ignored.

Node ids are assigned by first appearance: left labels get ``0..n0-1``,
right labels ``n0..n0+n1-1``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DuplicatePair, LabelInBothParts, MalformedLine
from .extremal import build_extremal_tree
from .graph import A0, A1, BipartiteGraph


@dataclass(frozen=True)
class TwoModeEdgeList:
    rows: tuple[tuple[str, str], ...]
    comments: tuple[str, ...] = ()

    @property
    def left_labels(self) -> list[str]:
        return list(dict.fromkeys(a for a, _ in self.rows))

    @property
    def right_labels(self) -> list[str]:
        return list(dict.fromkeys(b for _, b in self.rows))

    def to_bipartite(self) -> BipartiteGraph:
        left, right = self.left_labels, self.right_labels
        index = {lab: i for i, lab in enumerate(left)}
        index.update({lab: len(left) + j for j, lab in enumerate(right)})
        part = (A0,) * len(left) + (A1,) * len(right)
        edges = [(index[a], index[b]) for a, b in self.rows]
        return BipartiteGraph.from_edges(part, edges, left + right)

    def format(self) -> str:
        """Serialize; tabs are used only when some label contains whitespace."""
        sep = "\t" if any(any(ch.isspace() for ch in a + b) for a, b in self.rows) else " "
        lines = [f"# {c}" for c in self.comments]
        lines += [f"{a}{sep}{b}" for a, b in self.rows]
        return "".join(line + "\n" for line in lines)


def _split(line: str) -> list[str]:
    if "\t" in line:
        return [f.strip() for f in line.split("\t") if f.strip()]
    return line.split()


def parse_two_mode(text: str) -> TwoModeEdgeList:
    """Parse edge-list text.

    >>> parse_two_mode("# toy\\nS0 L0\\nS0 L1\\n").right_labels
    ['L0', 'L1']
    """
    rows, comments, seen = [], [], set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        fields = _split(line)
        if len(fields) != 2:
            raise MalformedLine(lineno, raw)
        pair = (fields[0], fields[1])
        if pair in seen:
            raise DuplicatePair(f"line {lineno}: pair {pair} repeated")
        seen.add(pair)
        rows.append(pair)
    both = {a for a, _ in rows} & {b for _, b in rows}
    if both:
        raise LabelInBothParts(f"labels on both sides: {sorted(both)}")
    return TwoModeEdgeList(tuple(rows), tuple(comments))


def read_two_mode(path: str | os.PathLike) -> TwoModeEdgeList:
    return parse_two_mode(Path(path).read_text(encoding="utf-8"))


def load_bipartite(path: str | os.PathLike) -> BipartiteGraph:
    return read_two_mode(path).to_bipartite()


def extremal_edge_list(n0: int, n1: int) -> TwoModeEdgeList:
    """Edge list of the canonically labelled ``H(0; n0, n1)``: the root is
    ``0``, its neighbours ``1..n1``, the remaining leaves ``n1+1..``."""
    h, root = build_extremal_tree(n0, n1)
    labels = h.graph.labels
    rows = [(labels[a], labels[b]) for a, b in h.edges()]
    # root edges first, then leaves in label order
    rows.sort(key=lambda r: (r[0] != labels[root], int(r[0]), int(r[1])))
    return TwoModeEdgeList(tuple(rows))


def emit_extremal(n0: int, n1: int, path: str | os.PathLike) -> TwoModeEdgeList:
    """Write ``H(0; n0, n1)`` to ``path`` and return the written list."""
    edges = extremal_edge_list(n0, n1)
    Path(path).write_text(edges.format(), encoding="utf-8")
    return edges


FIXTURES = {"figure1": "figure1.tsv", "davis": "davis.tsv"}


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled dataset (``"figure1"`` or ``"davis"``)."""
    return Path(str(resources.files("twomode") / "data" / FIXTURES[name]))


def load_fixture(name: str) -> TwoModeEdgeList:
    return read_two_mode(fixture_path(name))
