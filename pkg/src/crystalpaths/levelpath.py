"""Two-sided level-zero paths and the modified-algebra crystal elements.

A level path in the family P_{m,l} is a two-sided integer sequence (i_k),
k in Z, equal to 0 far to the left and to the ground pattern (-1)^k * m far
to the right.  The ground path g has g_k = 0 for k < 0 and g_k = (-1)^k * m
for k >= 0; it is the extremal generator of its component and has weight
m*(L0-L1) + l*delta, where l is an overall delta offset carried by the
family label.

The crystal structure on P_{m,l} is computed by splitting a path at position
zero into a left half-path b1 (positions < 0), a central weight marker, and
a right half-path b2 (positions >= 0 with the ground pattern subtracted),
then applying the tensor rules to b1 (x) t (x) b2.  The marker weight lam is
the same for every path in P_{m,l}; operators never change it.  ModElement
is that three-factor form and serves as the canonical element type for the
crystal of the modified algebra: the union over lam of the components
containing u_lam = u (x) t_lam (x) u^dual.

Weights: wt(p) = (sum_k (i_{k-1} + i_k)) * (L0 - L1)
               + delta * ( l + sum_k k * (max(i_{k-1}, -i_k) - max(g_{k-1}, -g_k)) ).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .core import CrystalElement, TensorElement
from .elementary import TElement
from .halfpath import HalfPath, left_path, right_path, u_inf, u_minus_inf
from .weights import Weight, classical


def _alt(k: int) -> int:
    """(-1)**k as an int, safe for negative k."""
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class LevelPath:
    """A path in P_{m,l}, stored sparsely as differences from the defaults
    (0 to the left of position 0, the ground pattern from position 0 on)."""

    m: int
    l: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        items = self.entries.items() if isinstance(self.entries, Mapping) else self.entries
        canon = tuple(sorted((k, v) for k, v in items if v != self.default(k)))
        object.__setattr__(self, "entries", canon)

    def default(self, k: int) -> int:
        return 0 if k < 0 else _alt(k) * self.m

    def entry(self, k: int) -> int:
        for pos, val in self.entries:
            if pos == k:
                return val
        return self.default(k)

    def window(self) -> tuple[int, int]:
        """Smallest [a, b] containing 0 and every non-default position."""
        positions = [k for k, _ in self.entries]
        a = min([0] + positions)
        b = max([0] + positions)
        return a, b

    def key(self):
        return ("lp", self.m, self.l, self.entries)

    def __repr__(self) -> str:
        a, b = self.window()
        vals = [self.entry(k) for k in range(a, b + 1)]
        return f"LevelPath(m={self.m}, l={self.l}, [{a}..{b}]={vals})"

    # -- weight -------------------------------------------------------------

    def wt(self) -> Weight:
        a, b = self.window()
        lo, hi = a - 1, b + 2
        cl = 0
        dcorr = 0
        for k in range(lo, hi + 1):
            ik1, ik = self.entry(k - 1), self.entry(k)
            gk1, gk = self.default(k - 1), self.default(k)
            cl += ik1 + ik
            dcorr += k * (max(ik1, -ik) - max(gk1, -gk))
        return classical(cl, self.l + dcorr)

    # -- walls --------------------------------------------------------------

    def walls(self) -> list[tuple[int, int]]:
        a, b = self.window()
        out = []
        for k in range(a - 1, b + 3):
            s = self.entry(k - 1) + self.entry(k)
            if s != 0:
                out.append((k, s))
        return out

    def wall_positions(self) -> list[int]:
        out: list[int] = []
        for k, s in self.walls():
            out.extend([k] * abs(s))
        return out

    def wall_sign(self) -> Optional[int]:
        signs = {1 if s > 0 else -1 for _, s in self.walls()}
        if not signs:
            return 0
        if len(signs) == 1:
            return signs.pop()
        return None


def ground_path(m: int, l: int = 0) -> LevelPath:
    return LevelPath(m, l, ())


def level_path(m: int, l: int, values: Mapping[int, int]) -> LevelPath:
    return LevelPath(m, l, tuple(values.items()))


def path_from_window(m: int, l: int, window_start: int, values: Iterable[int]) -> LevelPath:
    return level_path(m, l, {window_start + j: v for j, v in enumerate(values)})


# -- the three-factor form ---------------------------------------------------


@dataclass(frozen=True)
class ModElement(CrystalElement):
    """b1 (x) t_lam (x) b2 with b1 a left and b2 a right half-path."""

    b1: HalfPath
    lam: Weight
    b2: HalfPath

    def _tensor(self) -> TensorElement:
        return TensorElement(TensorElement(self.b1, TElement(self.lam)), self.b2)

    @staticmethod
    def _untensor(t: TensorElement) -> "ModElement":
        inner = t.left
        return ModElement(inner.left, inner.right.lam, t.right)

    def wt(self) -> Weight:
        return self.b1.wt() + self.lam + self.b2.wt()

    def eps(self, i: int):
        return self._tensor().eps(i)

    def phi(self, i: int):
        return self._tensor().phi(i)

    def e(self, i: int) -> Optional["ModElement"]:
        c = self._tensor().e(i)
        return None if c is None else self._untensor(c)

    def f(self, i: int) -> Optional["ModElement"]:
        c = self._tensor().f(i)
        return None if c is None else self._untensor(c)

    def key(self):
        return ("mod", self.b1.key(), (self.lam.a0, self.lam.a1, self.lam.d), self.b2.key())

    def __repr__(self) -> str:
        return f"ModElement({self.b1!r}, {self.lam!r}, {self.b2!r})"


def u_lambda(lam: Weight) -> ModElement:
    """The canonical generator u (x) t_lam (x) u^dual."""
    return ModElement(u_inf(), lam, u_minus_inf())


def lp_split(p: LevelPath) -> ModElement:
    """Split a level path at position zero into its three-factor form.

    The left letters become b1; the right letters have the ground pattern
    subtracted to become b2; the marker weight is forced by
    wt(p) = wt(b1) + lam + wt(b2) and depends only on (m, l).
    """
    a, b = p.window()
    b1 = left_path({k: p.entry(k) for k in range(a, 0)})
    b2 = right_path({k: p.entry(k) - p.default(k) for k in range(0, b + 1)})
    lam = p.wt() - b1.wt() - b2.wt()
    return ModElement(b1, lam, b2)


def lp_join(e: ModElement) -> LevelPath:
    """Inverse of lp_split; the family label (m, l) is read off lam."""
    if e.lam.level != 0:
        raise ValueError(f"marker weight must have level zero, got {e.lam!r}")
    m = e.lam.a0
    entries = dict(e.b1.entries)
    for k, v in e.b2.entries:
        entries[k] = v + (0 if k < 0 else _alt(k) * m)
    # pick l so the path weight reproduces wt(e)
    probe = LevelPath(m, 0, tuple(entries.items()))
    l = e.wt().d - probe.wt().d
    return LevelPath(m, l, tuple(entries.items()))
