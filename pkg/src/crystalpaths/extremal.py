"""Extremal vectors, Weyl orbit operators, and the distinguished families.

S_i applies f_i^n when n = <h_i, wt> >= 0 and e_i^(-n) otherwise; running out
of operator before the full power is a hard error, since on the elements we
apply it to the power is guaranteed by the axioms.

An element is extremal when every image under an alternating S-word is
i-extremal for both colors: raising must be absent when <h_i, wt> >= 0 and
lowering absent when <h_i, wt> <= 0.  is_extremal checks this for all
alternating words up to a cutoff length; on level paths the wall-sign screen
rules out most non-extremal elements instantly, because an extremal path's
walls all carry one sign (and a wall-free path is extremal only when it is
the zero path).

B^max(lam) is the set of elements whose star image is extremal.  It is a
disjoint union of full plain-operator components, one per tuple
c = (c_1, ..., c_{n-1}) of nonnegative integers (n = |classical part of
lam|), each generated by a seed path: reading left to right, a length-2*c_j
domain of letters -+j for each j < n followed by the ground tail, with every
domain starting at an odd position and the tail starting at position 1.
The seed is fixed by star at the level of entries; its delta label may
shift, since star negates the delta coordinate of the weight.

The star image of the dual extremal-weight crystal B(-lam) consists of the
extremal elements of weight exactly lam; they are uniform-wall paths with
|m| walls whose inter-wall gaps are 0 or 1, spread over all ambient
families by shifting the wall block.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .core import CrystalElement
from .levelpath import LevelPath, ModElement, _alt, lp_join, lp_split, u_lambda
from .star import star_mod
from .weights import Weight


def weyl_op(e: CrystalElement, i: int) -> CrystalElement:
    """S_i: the full string of f_i or e_i prescribed by <h_i, wt>."""
    n = e.wt().pairing(i)
    cur = e
    for _ in range(abs(n)):
        cur = cur.f(i) if n >= 0 else cur.e(i)
        if cur is None:
            raise RuntimeError(f"S_{i} ran out of operator (power {n})")
    return cur


def starred_weyl_op(e: ModElement, i: int) -> ModElement:
    return star_mod(weyl_op(star_mod(e), i))


def _locally_extremal(e: CrystalElement) -> bool:
    for i in (0, 1):
        n = e.wt().pairing(i)
        if n >= 0 and e.e(i) is not None:
            return False
        if n <= 0 and e.f(i) is not None:
            return False
    return True


def is_extremal(e: CrystalElement, max_len: int = 6) -> bool:
    """Bounded extremality check via alternating S-words of both phases."""
    return extremal_cert(e, max_len).extremal


@dataclass
class ExtremalCert:
    """Verdict of the bounded extremality check.

    When not extremal, witness is the alternating color word whose S-image
    fails to be i-extremal (empty word: the element itself fails)."""

    element: CrystalElement
    max_len: int
    extremal: bool
    witness: Optional[list[int]] = None


def extremal_cert(e: CrystalElement, max_len: int = 6) -> ExtremalCert:
    if not _locally_extremal(e):
        return ExtremalCert(e, max_len, False, [])
    for start in (0, 1):
        cur = e
        color = start
        word: list[int] = []
        for _ in range(max_len):
            word.append(color)
            try:
                cur = weyl_op(cur, color)
            except RuntimeError:
                return ExtremalCert(e, max_len, False, word)
            if not _locally_extremal(cur):
                return ExtremalCert(e, max_len, False, word)
            color = 1 - color
    return ExtremalCert(e, max_len, True)


def extremal_screen(p: LevelPath) -> Optional[bool]:
    """Fast necessary test on a level path: False means definitely not
    extremal (mixed wall signs, or walls on a weight-zero classical part);
    None means the bounded check is still needed."""
    sign = p.wall_sign()
    if sign is None:
        return False
    if sign == 0:
        return None  # the wall-free path; extremal
    return None


def is_extremal_path(p: LevelPath, max_len: int = 6) -> bool:
    if extremal_screen(p) is False:
        return False
    return is_extremal(lp_split(p), max_len)


# -- uniform-wall path construction -----------------------------------------


def uniform_wall_path(wall_positions: Iterable[int], sign: int,
                      wt_delta: int = 0) -> LevelPath:
    """Build the path with the given expanded wall positions, all walls of
    the given sign, zero left of the first wall.  The entries follow from
    the wall recurrence i_k = sign * mult(k) - i_{k-1}; the ambient family
    is read off the resulting tail and its delta label is chosen to make
    the path weight's delta coordinate equal wt_delta.
    """
    walls = sorted(wall_positions)
    if not walls:
        return LevelPath(0, wt_delta, ())
    lo = min(walls[0], 0)
    hi = max(walls[-1], 0) + 2
    mult = {k: walls.count(k) for k in set(walls)}
    entries: dict[int, int] = {}
    prev = 0
    for k in range(walls[0], hi + 1):
        val = sign * mult.get(k, 0) - prev
        entries[k] = val
        prev = val
    m_amb = _alt(hi) * entries[hi]
    for k in range(lo, walls[0]):
        entries[k] = 0
    probe = LevelPath(m_amb, 0, tuple(entries.items()))
    return LevelPath(m_amb, wt_delta - probe.wt().d, tuple(entries.items()))


# -- B^max(lam) ---------------------------------------------------------------


def bmax_seed(lam: Weight, cvec: tuple[int, ...]) -> LevelPath:
    """The star-fixed seed of B^max(lam) indexed by c = (c_1, ..., c_{n-1})."""
    if lam.level != 0:
        raise ValueError("lam must have level zero")
    m = lam.a0
    if m == 0:
        if cvec:
            raise ValueError("classical part zero admits only the empty index")
        return LevelPath(0, lam.d, ())
    n = abs(m)
    if len(cvec) != n - 1 or any(c < 0 for c in cvec):
        raise ValueError(f"need {n - 1} nonnegative block sizes, got {cvec}")
    sgn = 1 if m > 0 else -1
    # tail starts at position 1; domain j ends where domain j+1 begins
    starts = [0] * (n + 1)
    starts[n] = 1
    for j in range(n - 1, 0, -1):
        starts[j] = starts[j + 1] - 2 * cvec[j - 1]
    entries: dict[int, int] = {}
    for j in range(1, n):
        for q in range(starts[j], starts[j + 1]):
            entries[q] = sgn * _alt(q) * j
    for q in range(min(starts[1], 0), 1):
        if q < starts[1]:
            entries[q] = 0
    return LevelPath(m, lam.d, tuple(entries.items()))


def same_entries(p: LevelPath, q: LevelPath) -> bool:
    """Equality of two level paths as bare paths: same ambient classical
    part and the same entry function, ignoring the delta labels."""
    if p.m != q.m:
        return False
    a = min(p.window()[0], q.window()[0])
    b = max(p.window()[1], q.window()[1])
    return all(p.entry(k) == q.entry(k) for k in range(a, b + 1))


def bmax_contains(lam: Weight, e: ModElement, max_len: int = 5) -> bool:
    """Whether e lies in B^max(lam): marker weight lam and star image extremal."""
    if e.lam != lam:
        return False
    starred = star_mod(e)
    if extremal_screen(lp_join(starred)) is False:
        return False
    return is_extremal(starred, max_len)


def enum_bmax(lam: Weight, c_bound: int, depth: int = 4) -> dict:
    """Enumerate a truncation of B^max(lam): it is a union of full plain
    components, one per block-size tuple, generated by the seeds.  Returns
    the BFS truncation (to the given depth) of the components with block
    sizes up to c_bound, keyed by element key."""
    n = abs(lam.a0)
    out: dict = {}
    shapes = product(range(c_bound + 1), repeat=max(n - 1, 0))
    for cvec in shapes:
        seed = lp_split(bmax_seed(lam, tuple(cvec)))
        frontier = [seed]
        out.setdefault(seed.key(), seed)
        for _ in range(depth):
            nxt = []
            for e in frontier:
                for i in (0, 1):
                    for c in (e.e(i), e.f(i)):
                        if c is not None and c.key() not in out:
                            out[c.key()] = c
                            nxt.append(c)
            frontier = nxt
    return out


# -- star image of the dual extremal-weight crystal ---------------------------


def enum_bminus_star(lam: Weight, span: int = 4, max_len: int = 5) -> list[ModElement]:
    """Truncated star image of the dual extremal-weight crystal of -lam.

    Its elements are exactly the extremal vectors of weight lam with |m|
    same-sign walls and inter-wall gaps 0 or 1, across all ambient path
    families; the truncation ranges the base wall position over
    [-span, span] (the generator u_lam appears at base position 0 with all
    walls stacked).
    """
    if lam.level != 0:
        raise ValueError("lam must have level zero")
    m = lam.a0
    if m == 0:
        return [u_lambda(lam)]
    n = abs(m)
    sgn = 1 if m > 0 else -1
    out: list[ModElement] = []
    seen = set()
    for gaps in product((0, 1), repeat=n - 1):
        for t in range(-span, span + 1):
            walls = [t]
            for g in gaps:
                walls.append(walls[-1] + g)
            p = uniform_wall_path(walls, sgn, lam.d)
            if p.wt() != lam:
                continue
            if not is_extremal_path(p, max_len):
                continue
            e = lp_split(p)
            if e.key() not in seen:
                seen.add(e.key())
                out.append(e)
    return out
