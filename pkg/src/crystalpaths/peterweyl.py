"""Desk-scale verifier for the Peter-Weyl decomposition of the level-zero
modified-algebra crystal.

The target statement: as a bi-crystal (plain operators acting on the left
factor, starred operators on the right),

    B ~ direct sum over Weyl orbits of lam of  B^max(lam) (x) Bdual(lam),

where Bdual(lam) is the star image of the dual extremal-weight crystal,
realized inside B as the extremal vectors of weight lam with |m| walls and
inter-wall gaps at most 1.  The pairing sends (b, W*(u_lam)) to W*(b) for a
starred word W; everything here verifies truncations of that statement by
exhaustive breadth-first enumeration:

  C1: the component of any extremal vector of weight lam is isomorphic to
      the component of u_lam;
  C2: that component contains a unique vector of weight lam;
  C3: its extremal vectors are exactly the Weyl orbit of u_lam.

decompose() inverts the pairing on a single element: raise/lower the star
image until an extremal vector appears, read off the B^max factor as its
star, and transport the connecting word back as starred operators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import bfs_component, graphs_isomorphic
from .extremal import (bmax_contains, enum_bmax, enum_bminus_star,
                       extremal_screen, is_extremal, weyl_op)
from .levelpath import LevelPath, ModElement, lp_join, u_lambda
from .star import star_mod, starred_e, starred_f
from .weights import Weight, orbit_canonical


@dataclass
class Decomposition:
    lam_canonical: Weight
    bmax_factor: ModElement
    word: list[tuple[str, int]]  # starred ops, applied left to right to bmax_factor

    def replay(self) -> ModElement:
        cur = self.bmax_factor
        for kind, i in self.word:
            cur = starred_e(cur, i) if kind == "e" else starred_f(cur, i)
            if cur is None:
                raise RuntimeError("decomposition word failed to replay")
        return cur


def decompose(e: ModElement, max_depth: int = 8,
              extremal_len: int = 4) -> Optional[Decomposition]:
    """Factor e through the decomposition; None if the bounded search fails.

    Searches the plain component of e* breadth-first for an extremal vector
    x; then b = x* lies in B^max(-wt(x)) and the reversed, inverted search
    word -- transported through star -- lowers/raises b back to e.
    """
    root = star_mod(e)
    seen = {root.key()}
    # each entry: (element, word of (kind, color) applied from root)
    frontier: list[tuple[ModElement, list[tuple[str, int]]]] = [(root, [])]
    for _ in range(max_depth + 1):
        nxt = []
        for x, word in frontier:
            if extremal_screen(lp_join(x)) is not False and is_extremal(x, extremal_len):
                lam = -x.wt()
                canon, _ = orbit_canonical(lam)
                b = star_mod(x)
                inverse = [("f" if kind == "e" else "e", i)
                           for kind, i in reversed(word)]
                result = Decomposition(canon, b, inverse)
                assert result.replay().key() == e.key()
                return result
            for i in (0, 1):
                for kind, c in (("e", x.e(i)), ("f", x.f(i))):
                    if c is not None and c.key() not in seen:
                        seen.add(c.key())
                        nxt.append((c, word + [(kind, i)]))
        frontier = nxt
        if not frontier:
            break
    return None


# -- component-level checks ---------------------------------------------------


def verify_c1(lam: Weight, depth: int = 5, span: int = 2,
              extremal_len: int = 4) -> bool:
    """Components of extremal weight-lam vectors all match the component of
    u_lam as rooted colored graphs."""
    reference = bfs_component(u_lambda(lam), depth)
    for b in enum_bminus_star(lam, span=span, max_len=extremal_len):
        if not graphs_isomorphic(bfs_component(b, depth), reference):
            return False
    return True


def verify_c2(lam: Weight, depth: int = 5) -> bool:
    """The component of u_lam holds exactly one vector of weight lam."""
    graph = bfs_component(u_lambda(lam), depth)
    hits = [n for n, b in graph.nodes.items() if b.wt() == lam]
    return hits == [graph.root]


def verify_c3(lam: Weight, depth: int = 5, word_bound: int = 8,
              extremal_len: int = 4) -> bool:
    """Extremal vectors in the component of u_lam are exactly the images of
    u_lam under alternating Weyl-operator words."""
    orbit = {u_lambda(lam).key()}
    for start in (0, 1):
        cur = u_lambda(lam)
        color = start
        for _ in range(word_bound):
            cur = weyl_op(cur, color)
            if not is_extremal(cur, extremal_len):
                return False
            orbit.add(cur.key())
            color = 1 - color
    graph = bfs_component(u_lambda(lam), depth)
    for _, b in sorted(graph.nodes.items()):
        if is_extremal(b, extremal_len) and b.key() not in orbit:
            return False
    return True


# -- full truncated slice report ----------------------------------------------


@dataclass
class SliceReport:
    lam: Weight
    bmax_size: int = 0
    dual_size: int = 0
    pair_count: int = 0
    product_ok: bool = False
    dual_characterization_ok: bool = False
    decompose_total: int = 0
    decompose_inconclusive: int = 0
    decompose_mismatched: int = 0
    violations: list[str] = field(default_factory=list)
    element_keys: frozenset = frozenset()

    @property
    def ok(self) -> bool:
        return (self.product_ok and self.dual_characterization_ok
                and self.decompose_inconclusive == 0
                and self.decompose_mismatched == 0
                and not self.violations)


def _starred_moves(e: ModElement):
    for i in (0, 1):
        yield ("e", i, starred_e(e, i))
        yield ("f", i, starred_f(e, i))


def _dual_family_ok(r: ModElement, lam: Weight, extremal_len: int) -> bool:
    if r.wt() != lam:
        return False
    p = lp_join(r)
    if p.wall_sign() is None:
        return False
    walls = p.wall_positions()
    if len(walls) != abs(lam.a0):
        return False
    if any(walls[j + 1] - walls[j] > 1 for j in range(len(walls) - 1)):
        return False
    return is_extremal(r, extremal_len)


def pw_report(lam: Weight, c_bound: int = 1, plain_depth: int = 3,
              star_depth: int = 3, extremal_len: int = 4,
              decompose_depth: int = 10, decompose_cap: Optional[int] = None) -> SliceReport:
    """Verify the truncated lam-slice of the decomposition.

    Enumerates the B^max truncation by plain BFS from the seeds and the dual
    family by starred BFS from u_lam, then sweeps starred words over every
    B^max element in parallel with u_lam.  Checks, on the truncation: the
    starred word is defined on b exactly when it is defined on u_lam; the
    resulting element depends only on (b, image from u_lam); the pair map is
    injective, so the slice count is the product of the factor counts; every
    dual-family element matches its wall characterization; and decompose()
    recovers a factorization with the right orbit for every enumerated
    element.
    """
    rep = SliceReport(lam=lam)
    canon, _ = orbit_canonical(lam)
    bmax = enum_bmax(lam, c_bound, plain_depth)
    rep.bmax_size = len(bmax)

    # dual family truncation: starred BFS from u_lam
    root = u_lambda(lam)
    dual: dict = {root.key(): root}
    frontier = [root]
    for _ in range(star_depth):
        nxt = []
        for r in frontier:
            for _, _, c in _starred_moves(r):
                if c is not None and c.key() not in dual:
                    dual[c.key()] = c
                    nxt.append(c)
        frontier = nxt
    rep.dual_size = len(dual)
    rep.dual_characterization_ok = all(
        _dual_family_ok(r, lam, extremal_len) for r in dual.values())

    # parallel starred sweep: (image from b, image from u_lam)
    pair_of: dict = {}  # element key -> (b key, r key)
    elements: dict = {}
    ok = True
    for bkey, b in sorted(bmax.items()):
        visited = {root.key()}
        queue = [(b, root)]
        pair_of[b.key()] = (bkey, root.key())
        elements[b.key()] = b
        for _ in range(star_depth):
            nxt = []
            for ecur, rcur in queue:
                for kind, i, rnew in _starred_moves(rcur):
                    enew = starred_e(ecur, i) if kind == "e" else starred_f(ecur, i)
                    if (enew is None) != (rnew is None):
                        ok = False
                        rep.violations.append(
                            f"starred {kind}{i} defined-ness differs at b={bkey[:2]}")
                        continue
                    if rnew is None or rnew.key() in visited:
                        if rnew is not None and enew is not None:
                            prev = pair_of.get(enew.key())
                            if prev is not None and prev != (bkey, rnew.key()):
                                ok = False
                                rep.violations.append("pair map not well defined")
                        continue
                    visited.add(rnew.key())
                    prev = pair_of.get(enew.key())
                    if prev is not None and prev != (bkey, rnew.key()):
                        ok = False
                        rep.violations.append("pair map collision")
                    pair_of[enew.key()] = (bkey, rnew.key())
                    elements[enew.key()] = enew
                    nxt.append((enew, rnew))
            queue = nxt
    rep.pair_count = len(pair_of)
    rep.product_ok = ok and rep.pair_count == rep.bmax_size * rep.dual_size
    rep.element_keys = frozenset(pair_of)

    # decompose every enumerated element (optionally capped)
    todo = [elements[k] for k in sorted(elements)]
    if decompose_cap is not None:
        todo = todo[:decompose_cap]
    for e in todo:
        rep.decompose_total += 1
        result = decompose(e, decompose_depth, extremal_len)
        if result is None:
            rep.decompose_inconclusive += 1
        elif result.lam_canonical != canon:
            rep.decompose_mismatched += 1
    return rep


def slices_disjoint(r1: SliceReport, r2: SliceReport) -> bool:
    return not (r1.element_keys & r2.element_keys)


def slice_invariant_under_reflection(lam: Weight, i: int, c_bound: int = 1,
                                     depth_small: int = 2, depth_big: int = 4,
                                     extremal_len: int = 4) -> bool:
    """The truncated slice of lam embeds in a deeper truncation of the slice
    of s_i(lam), and vice versa: evidence that the slice depends only on the
    Weyl orbit."""
    lam2 = lam.reflect(i)
    small1 = pw_report(lam, c_bound, depth_small, depth_small, extremal_len,
                       decompose_cap=0)
    small2 = pw_report(lam2, c_bound, depth_small, depth_small, extremal_len,
                       decompose_cap=0)
    big1 = pw_report(lam, c_bound + 1, depth_big, depth_big, extremal_len,
                     decompose_cap=0)
    big2 = pw_report(lam2, c_bound + 1, depth_big, depth_big, extremal_len,
                     decompose_cap=0)
    return (small1.element_keys <= big2.element_keys
            and small2.element_keys <= big1.element_keys)
