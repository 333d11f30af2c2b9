"""Abstract crystal machinery shared by every concrete realization.

A crystal element exposes a weight, string statistics eps(i)/phi(i) valued in
the integers extended by -infinity, and partial raising/lowering operators
e(i)/f(i) that return None where undefined (None models the formal zero
element of the crystal axioms).  On top of that protocol this module builds
the tensor product and dual combinators, breadth-first component enumeration,
rooted graph isomorphism, an axiom checker, and graph export.

Tensor conventions (b1 tensor b2):
    eps_i = max(eps_i(b1), eps_i(b2) - <h_i, wt b1>)
    phi_i = max(phi_i(b2), phi_i(b1) + <h_i, wt b2>)
    e_i acts on the left factor iff phi_i(b1) >= eps_i(b2)  (ties go left)
    f_i acts on the left factor iff phi_i(b1) >  eps_i(b2)  (ties go right)
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional

from .weights import Weight, simple_root

# Extended integer: ordinary ints plus NEG_INF.  Python's float -inf mixes
# with ints correctly under max() and addition, which is all we need.
NEG_INF = float("-inf")

COLORS = (0, 1)


class CrystalElement:
    """Protocol base class; concrete elements override all five methods."""

    def wt(self) -> Weight:
        raise NotImplementedError

    def eps(self, i: int):
        raise NotImplementedError

    def phi(self, i: int):
        raise NotImplementedError

    def e(self, i: int) -> Optional["CrystalElement"]:
        raise NotImplementedError

    def f(self, i: int) -> Optional["CrystalElement"]:
        raise NotImplementedError

    def key(self) -> Hashable:
        """Canonical hashable identity used for BFS dedup and graph nodes."""
        raise NotImplementedError


@dataclass(frozen=True)
class TensorElement(CrystalElement):
    """Tensor product of two crystal elements.

    wt/eps/phi are memoized per instance: deep tensor words evaluate the
    statistics of every prefix, so without the cache the recursion is
    quadratic in the word length."""

    left: CrystalElement
    right: CrystalElement

    def _memo(self) -> dict:
        memo = self.__dict__.get("_m")
        if memo is None:
            memo = {}
            object.__setattr__(self, "_m", memo)
        return memo

    def wt(self) -> Weight:
        memo = self._memo()
        if "wt" not in memo:
            memo["wt"] = self.left.wt() + self.right.wt()
        return memo["wt"]

    def eps(self, i: int):
        memo = self._memo()
        key = ("eps", i)
        if key not in memo:
            memo[key] = max(self.left.eps(i),
                            self.right.eps(i) - self.left.wt().pairing(i))
        return memo[key]

    def phi(self, i: int):
        memo = self._memo()
        key = ("phi", i)
        if key not in memo:
            memo[key] = max(self.right.phi(i),
                            self.left.phi(i) + self.right.wt().pairing(i))
        return memo[key]

    def e(self, i: int):
        if self.left.phi(i) >= self.right.eps(i):
            c = self.left.e(i)
            return None if c is None else TensorElement(c, self.right)
        c = self.right.e(i)
        return None if c is None else TensorElement(self.left, c)

    def f(self, i: int):
        if self.left.phi(i) > self.right.eps(i):
            c = self.left.f(i)
            return None if c is None else TensorElement(c, self.right)
        c = self.right.f(i)
        return None if c is None else TensorElement(self.left, c)

    def key(self):
        return ("tensor", self.left.key(), self.right.key())


@dataclass(frozen=True)
class DualElement(CrystalElement):
    """Dual crystal: weights negate, eps/phi swap, e/f swap."""

    inner: CrystalElement

    def wt(self) -> Weight:
        return -self.inner.wt()

    def eps(self, i: int):
        return self.inner.phi(i)

    def phi(self, i: int):
        return self.inner.eps(i)

    def e(self, i: int):
        c = self.inner.f(i)
        return None if c is None else DualElement(c)

    def f(self, i: int):
        c = self.inner.e(i)
        return None if c is None else DualElement(c)

    def key(self):
        return ("dual", self.inner.key())


def dual_tensor_swap(t: TensorElement) -> TensorElement:
    """(b1 tensor b2)^dual = b2^dual tensor b1^dual."""
    return TensorElement(DualElement(t.right), DualElement(t.left))


def check_axioms(elements: Iterable[CrystalElement]) -> list[str]:
    """Check the crystal axioms on a finite set; returns violation messages.

    Checked per element and color: phi = eps + <h_i, wt> (with both sides
    -infinity together), e/f weight shifts, eps/phi steps, and that e and f
    are mutually inverse where defined.
    """
    problems: list[str] = []
    for b in elements:
        w = b.wt()
        for i in COLORS:
            ep, ph = b.eps(i), b.phi(i)
            if (ep == NEG_INF) != (ph == NEG_INF):
                problems.append(f"{b!r}: eps/phi -inf mismatch for color {i}")
                continue
            if ep != NEG_INF and ph != ep + w.pairing(i):
                problems.append(f"{b!r}: phi_{i} != eps_{i} + <h_{i}, wt>")
            up = b.e(i)
            if up is not None:
                if up.wt() != w + simple_root(i):
                    problems.append(f"{b!r}: wt(e_{i} b) != wt(b) + alpha_{i}")
                if up.eps(i) != ep - 1 or up.phi(i) != ph + 1:
                    problems.append(f"{b!r}: eps/phi step wrong under e_{i}")
                down = up.f(i)
                if down is None or down.key() != b.key():
                    problems.append(f"{b!r}: f_{i} e_{i} b != b")
            down = b.f(i)
            if down is not None:
                if down.wt() != w - simple_root(i):
                    problems.append(f"{b!r}: wt(f_{i} b) != wt(b) - alpha_{i}")
                if down.eps(i) != ep + 1 or down.phi(i) != ph - 1:
                    problems.append(f"{b!r}: eps/phi step wrong under f_{i}")
                up2 = down.e(i)
                if up2 is None or up2.key() != b.key():
                    problems.append(f"{b!r}: e_{i} f_{i} b != b")
    return problems


# ---------------------------------------------------------------------------
# Component graphs

Op = Callable[[CrystalElement, int], Optional[CrystalElement]]


def _plain_moves(b: CrystalElement) -> list[tuple[str, int, Optional[CrystalElement]]]:
    return [("e", i, b.e(i)) for i in COLORS] + [("f", i, b.f(i)) for i in COLORS]


@dataclass
class ComponentGraph:
    """Colored digraph of a truncated crystal component.

    Nodes are keyed by a deterministic id; edges (src, dst, color) point
    along the lowering operators f_i.  depth maps node id -> BFS distance
    from the root.
    """

    root: str
    nodes: dict[str, CrystalElement] = field(default_factory=dict)
    edges: list[tuple[str, str, int]] = field(default_factory=list)
    depth: dict[str, int] = field(default_factory=dict)

    def element(self, node_id: str) -> CrystalElement:
        return self.nodes[node_id]

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  rankdir=TB;"]
        for nid, b in sorted(self.nodes.items()):
            w = b.wt()
            lines.append(
                f'  "{nid}" [label="({w.a0},{w.a1},{w.d})"];'
            )
        for src, dst, i in sorted(self.edges):
            lines.append(f'  "{src}" -> "{dst}" [label="f{i}"];')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> str:
        payload = {
            "root": self.root,
            "nodes": [
                {
                    "id": nid,
                    "wt": {"L0": b.wt().a0, "L1": b.wt().a1, "delta": b.wt().d},
                    "depth": self.depth[nid],
                }
                for nid, b in sorted(self.nodes.items())
            ],
            "edges": [
                {"src": s, "dst": d, "color": i} for s, d, i in sorted(self.edges)
            ],
        }
        return json.dumps(payload, indent=2)


def node_id(b: CrystalElement) -> str:
    raw = repr(b.key()).encode()
    return hashlib.sha1(raw).hexdigest()[:16]


def bfs_component(
    root: CrystalElement,
    max_depth: int,
    moves: Callable[[CrystalElement], list[tuple[str, int, Optional[CrystalElement]]]] = _plain_moves,
) -> ComponentGraph:
    """Enumerate the component of root under the given moves to max_depth.

    Exploration order is deterministic: frontier sorted by node id.  Edges
    are recorded for lowering moves only ("f" labels), which determines the
    raising edges too since crystal graphs have at most one arrow per color
    in each direction at a node.
    """
    rid = node_id(root)
    graph = ComponentGraph(root=rid)
    graph.nodes[rid] = root
    graph.depth[rid] = 0
    frontier = [(rid, root)]
    for d in range(max_depth):
        nxt: list[tuple[str, CrystalElement]] = []
        for nid, b in sorted(frontier, key=lambda t: t[0]):
            for kind, i, c in moves(b):
                if c is None:
                    continue
                cid = node_id(c)
                if cid not in graph.nodes:
                    graph.nodes[cid] = c
                    graph.depth[cid] = d + 1
                    nxt.append((cid, c))
                if kind == "f":
                    graph.edges.append((nid, cid, i))
                elif kind == "e":
                    graph.edges.append((cid, nid, i))
        frontier = nxt
        if not frontier:
            break
    graph.edges = sorted(set(graph.edges))
    return graph


def graphs_isomorphic(g1: ComponentGraph, g2: ComponentGraph) -> bool:
    """Rooted colored-graph isomorphism preserving weights is decidable by
    parallel traversal: each node has at most one in/out arrow per color."""

    def arrows(g: ComponentGraph):
        out: dict[tuple[str, int], str] = {}
        inc: dict[tuple[str, int], str] = {}
        for s, d, i in g.edges:
            if (s, i) in out and out[(s, i)] != d:
                return None  # corrupted: duplicate arrow
            if (d, i) in inc and inc[(d, i)] != s:
                return None
            out[(s, i)] = d
            inc[(d, i)] = s
        return out, inc

    a1, a2 = arrows(g1), arrows(g2)
    if a1 is None or a2 is None:
        return False
    out1, in1 = a1
    out2, in2 = a2
    pair = {g1.root: g2.root}
    back = {g2.root: g1.root}
    queue = [(g1.root, g2.root)]
    while queue:
        n1, n2 = queue.pop()
        if g1.nodes[n1].wt() != g2.nodes[n2].wt():
            return False
        for table1, table2 in ((out1, out2), (in1, in2)):
            for i in COLORS:
                c1 = table1.get((n1, i))
                c2 = table2.get((n2, i))
                if (c1 is None) != (c2 is None):
                    return False
                if c1 is None:
                    continue
                if c1 in pair or c2 in back:
                    if pair.get(c1) != c2 or back.get(c2) != c1:
                        return False
                    continue
                pair[c1] = c2
                back[c2] = c1
                queue.append((c1, c2))
    return len(pair) == len(g1.nodes) == len(g2.nodes)
