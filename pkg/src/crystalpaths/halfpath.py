"""Half-infinite path realizations of the limit crystals.

A left half-path is a sequence of integers (i_k) over positions k <= -1 with
i_k = 0 far to the left; these realize the direct-limit crystal generated by
raising every highest-weight realization (the path with all entries zero is
the generator u).  A right half-path lives on positions k >= 0 with zero tail
to the right and realizes the dual (lowest-weight) limit crystal; its
structure is defined by flipping to a left path, so flip conjugates e and f.

Operators on a left path b act through the signature values

    A_k(i) = sgn(i) * ( i_k + 2 * sum_{j<k} i_j ),   sgn(1) = +1, sgn(0) = -1,

for k <= -1; A_k vanishes left of the support.  With M = max_k A_k (always
>= 0): e_i is undefined iff M = 0, otherwise it raises the letter at the
leftmost position attaining M; f_i always lowers the letter at the rightmost
position attaining M.  These are exactly the tensor-product rules applied to
the path read as an infinite word of letters, with position index increasing
to the left.

The weight of a left path is the classical 2*(sum of entries)*(L0 - L1) plus
delta * sum_{k<=-1} k * max(i_{k-1}, -i_k); the delta term counts walls with
positional weights and makes wt(f_i b) = wt(b) - alpha_i exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .core import CrystalElement
from .weights import Weight, classical

LEFT = "left"
RIGHT = "right"


def _canon(entries: Mapping[int, int] | Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    items = entries.items() if isinstance(entries, Mapping) else entries
    return tuple(sorted((k, v) for k, v in items if v != 0))


@dataclass(frozen=True)
class HalfPath(CrystalElement):
    side: str
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        object.__setattr__(self, "entries", _canon(self.entries))
        for k, _ in self.entries:
            if self.side == LEFT and k > -1:
                raise ValueError(f"left path entry at nonnegative position {k}")
            if self.side == RIGHT and k < 0:
                raise ValueError(f"right path entry at negative position {k}")

    # -- basic access -----------------------------------------------------

    def entry(self, k: int) -> int:
        for pos, val in self.entries:
            if pos == k:
                return val
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def support(self) -> list[int]:
        return [k for k, _ in self.entries]

    def flip(self) -> "HalfPath":
        """Exchange sides: j_k = -i_{-k-1}.  An involution conjugating e/f."""
        side = RIGHT if self.side == LEFT else LEFT
        return HalfPath(side, tuple((-k - 1, -v) for k, v in self.entries))

    def key(self):
        return ("hp", self.side, self.entries)

    def __repr__(self) -> str:
        return f"HalfPath({self.side}, {dict(self.entries)})"

    # -- signature values (left side) -------------------------------------

    def _window(self) -> range:
        # positions where an operator could act: support padded by one zero
        lo = self.entries[0][0] - 1 if self.entries else -1
        return range(lo, 0)

    def _signature(self, i: int) -> dict[int, int]:
        assert self.side == LEFT
        sgn = 1 if i == 1 else -1
        vals: dict[int, int] = {}
        running = 0  # sum of entries at positions < k
        stored = dict(self.entries)
        for k in self._window():
            vals[k] = sgn * (stored.get(k, 0) + 2 * running)
            running += stored.get(k, 0)
        return vals

    def _bump(self, k: int, dv: int) -> "HalfPath":
        d = self.as_dict()
        d[k] = d.get(k, 0) + dv
        return HalfPath(self.side, tuple(d.items()))

    # -- crystal structure -------------------------------------------------

    def wt(self) -> Weight:
        if self.side == RIGHT:
            return -self.flip().wt()
        total = sum(v for _, v in self.entries)
        stored = dict(self.entries)
        lo = self.entries[0][0] if self.entries else 0
        d = 0
        for k in range(lo, 0):
            d += k * max(stored.get(k - 1, 0), -stored.get(k, 0))
        return classical(2 * total, 0) + Weight(0, 0, d)

    def eps(self, i: int):
        if self.side == RIGHT:
            return self.flip().phi(i)
        return max(self._signature(i).values())

    def phi(self, i: int):
        if self.side == RIGHT:
            return self.flip().eps(i)
        return self.eps(i) + self.wt().pairing(i)

    def e(self, i: int) -> Optional["HalfPath"]:
        if self.side == RIGHT:
            return self.flip().f(i).flip()
        sig = self._signature(i)
        top = max(sig.values())
        if top == 0:
            return None
        k = min(p for p, v in sig.items() if v == top)
        return self._bump(k, -1 if i == 1 else 1)

    def f(self, i: int) -> Optional["HalfPath"]:
        if self.side == RIGHT:
            up = self.flip().e(i)
            return None if up is None else up.flip()
        sig = self._signature(i)
        top = max(sig.values())
        k = max(p for p, v in sig.items() if v == top)
        return self._bump(k, 1 if i == 1 else -1)

    # -- walls and domains --------------------------------------------------

    def walls(self) -> list[tuple[int, int]]:
        """Positions k with i_{k-1} + i_k != 0, with the signed sum.

        The wall at k sits between letters k-1 and k and carries multiplicity
        |i_{k-1} + i_k|; its sign is the sign of that sum.  For a left path k
        ranges over k <= -1 (a wall at position 0 belongs to neither half).
        """
        if self.side == RIGHT:
            return [(-k, -s) for k, s in reversed(self.flip().walls()) if True]
        stored = dict(self.entries)
        out = []
        for k in self._window():
            s = stored.get(k - 1, 0) + stored.get(k, 0)
            if s != 0:
                out.append((k, s))
        return out

    def wall_positions(self) -> list[int]:
        """Wall positions repeated with multiplicity, in increasing order."""
        out: list[int] = []
        for k, s in self.walls():
            out.extend([k] * abs(s))
        return out

    def wall_sign(self) -> Optional[int]:
        """+1 / -1 if every wall has that sign, 0 if no walls, else None."""
        signs = {1 if s > 0 else -1 for _, s in self.walls()}
        if not signs:
            return 0
        if len(signs) == 1:
            return signs.pop()
        return None

    def domains(self) -> list[tuple[int, int]]:
        """Finite domains (start, length) between consecutive walls.

        With expanded wall positions W_1 <= ... <= W_n, domain j (1-based)
        starts at W_j and runs to W_{j+1} - 1 (length zero for stacked
        walls); the last domain runs to position -1.  The infinite all-zero
        domain to the left is not listed.
        """
        walls = self.wall_positions()
        out = []
        for j, w in enumerate(walls):
            end = walls[j + 1] if j + 1 < len(walls) else 0
            out.append((w, end - w))
        return out

    def path_length(self) -> int:
        """Total finite-domain length; the support length when walls exist."""
        walls = self.wall_positions()
        return -walls[0] if walls else 0


def u_inf() -> HalfPath:
    """The all-zero left path: the limit-crystal generator."""
    return HalfPath(LEFT, ())


def u_minus_inf() -> HalfPath:
    """The all-zero right path: the dual generator."""
    return HalfPath(RIGHT, ())


def left_path(entries: Mapping[int, int] | Iterable[tuple[int, int]]) -> HalfPath:
    return HalfPath(LEFT, _canon(entries))


def right_path(entries: Mapping[int, int] | Iterable[tuple[int, int]]) -> HalfPath:
    return HalfPath(RIGHT, _canon(entries))


def from_word(values: Iterable[int]) -> HalfPath:
    """Left path from entries listed left to right, ending at position -1."""
    vals = list(values)
    n = len(vals)
    return left_path({k - n: v for k, v in enumerate(vals)})


def string_factorization(b: HalfPath) -> list[tuple[int, int]]:
    """Lowering word reaching b from the generator, for uniform-wall paths.

    Requires every wall of b to carry the same sign.  Returns a list of
    (color, power) pairs; applying f_color^power in list order to the
    all-zero path reproduces b.  Slot k (1-based, length = path_length)
    carries power m when k lies in the m-th domain block by cumulative
    length; colors alternate and are anchored at the final slot, color 1 for
    positive walls and color 0 for negative walls.
    """
    if b.side != LEFT:
        raise ValueError("string_factorization is defined for left paths")
    sign = b.wall_sign()
    if sign is None:
        raise ValueError("string_factorization needs walls of a single sign")
    if sign == 0:
        return []
    lengths = [length for _, length in b.domains()]
    total = sum(lengths)
    cum = []
    acc = 0
    for length in lengths:
        acc += length
        cum.append(acc)
    last_color = 1 if sign > 0 else 0
    word = []
    for k in range(1, total + 1):
        power = next(m for m, c in enumerate(cum, start=1) if k <= c)
        color = last_color if (total - k) % 2 == 0 else 1 - last_color
        word.append((color, power))
    return word


def apply_word(b: HalfPath, word: Iterable[tuple[int, int]]) -> Optional[HalfPath]:
    """Apply f_color^power pairs in order; None if any lowering is undefined."""
    cur: Optional[HalfPath] = b
    for color, power in word:
        for _ in range(power):
            if cur is None:
                return None
            cur = cur.f(color)
    return cur
