"""Sequence realization of the limit crystal.

An element is a finitely supported list (a_1, a_2, ...) of nonnegative
integers together with a color convention: position p carries first_color
when p is odd and the other color when p is even.  The element encodes the
lowering word f_{c_1}^{a_1} applied last, i.e. reading positions from high
to low gives a reduced peeling of the element back to the generator.

Operators use the signature values, for a position p of color i,

    Ahat_p = a_p + 2 * ( sum_{q>p, color q = i} a_q - sum_{q>p, color q != i} a_q ).

Position index increases toward the "deep" end of the word, so with
M = max Ahat over positions of color i (padded by zero positions past the
support, where Ahat = 0): e_i is undefined iff M = 0 and otherwise
decrements a_p at the largest attaining position; f_i increments a_p at the
smallest attaining position.

The realization embeds the limit crystal; the image is cut out by
(n-1)*a_{n+1} <= n*a_n for n >= 2.  Monotone sequences (a_{p+1} <= a_p)
form a distinguished subfamily that maps onto uniform-wall half-paths via a
block transform (block_transform).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import CrystalElement
from .halfpath import HalfPath, left_path, u_inf
from .weights import Weight, simple_root


def _trim(a: Iterable[int]) -> tuple[int, ...]:
    vals = list(a)
    while vals and vals[-1] == 0:
        vals.pop()
    return tuple(vals)


@dataclass(frozen=True)
class SeqElement(CrystalElement):
    first_color: int
    a: tuple[int, ...]

    def __post_init__(self):
        if self.first_color not in (0, 1):
            raise ValueError("first_color must be 0 or 1")
        object.__setattr__(self, "a", _trim(self.a))
        if any(v < 0 for v in self.a):
            raise ValueError("sequence entries must be nonnegative")

    def color(self, p: int) -> int:
        return self.first_color if p % 2 == 1 else 1 - self.first_color

    def value(self, p: int) -> int:
        return self.a[p - 1] if 1 <= p <= len(self.a) else 0

    def key(self):
        return ("seq", self.first_color, self.a)

    def __repr__(self) -> str:
        return f"SeqElement(c{self.first_color}, {list(self.a)})"

    # -- signature values ---------------------------------------------------

    def _positions(self, i: int) -> list[int]:
        # all positions of color i up to one zero position past the support
        top = len(self.a) + 2
        return [p for p in range(1, top + 1) if self.color(p) == i]

    def _signature(self, i: int) -> dict[int, int]:
        sig: dict[int, int] = {}
        for p in self._positions(i):
            same = sum(self.value(q) for q in range(p + 1, len(self.a) + 1)
                       if self.color(q) == i)
            other = sum(self.value(q) for q in range(p + 1, len(self.a) + 1)
                        if self.color(q) != i)
            sig[p] = self.value(p) + 2 * (same - other)
        return sig

    # -- crystal structure --------------------------------------------------

    def wt(self) -> Weight:
        w = Weight(0, 0, 0)
        for p in range(1, len(self.a) + 1):
            w = w - self.value(p) * simple_root(self.color(p))
        return w

    def eps(self, i: int):
        return max(self._signature(i).values())

    def phi(self, i: int):
        return self.eps(i) + self.wt().pairing(i)

    def _set(self, p: int, val: int) -> "SeqElement":
        vals = list(self.a) + [0] * max(0, p - len(self.a))
        vals[p - 1] = val
        return SeqElement(self.first_color, tuple(vals))

    def e(self, i: int) -> Optional["SeqElement"]:
        sig = self._signature(i)
        top = max(sig.values())
        if top == 0:
            return None
        p = max(q for q, v in sig.items() if v == top)
        assert self.value(p) >= 1
        return self._set(p, self.value(p) - 1)

    def f(self, i: int) -> Optional["SeqElement"]:
        sig = self._signature(i)
        top = max(sig.values())
        p = min(q for q, v in sig.items() if v == top)
        return self._set(p, self.value(p) + 1)


def seq_generator(first_color: int = 0) -> SeqElement:
    return SeqElement(first_color, ())


def image_check(s: SeqElement) -> bool:
    """Whether s lies in the embedded copy of the limit crystal.

    The condition is (n-1)*a_{n+1} <= n*a_n for every n >= 2; there is no
    constraint between a_1 and a_2.
    """
    for n in range(2, len(s.a) + 1):
        if (n - 1) * s.value(n + 1) > n * s.value(n):
            return False
    return True


def is_monotone(s: SeqElement) -> bool:
    """a_{p+1} <= a_p for all p (the block-structured subfamily)."""
    return all(s.a[p + 1] <= s.a[p] for p in range(len(s.a) - 1))


def block_transform(s: SeqElement) -> HalfPath:
    """Block transform from a monotone sequence to a uniform-wall left path.

    Writing the sequence in blocks (positions p with a_p = m form block m),
    block m contributes the letters sgn(c)*m where c runs over the colors of
    its positions read from the highest position down, sgn(1) = +1 and
    sgn(0) = -1.  The letters of blocks 1, 2, ..., a_1 are concatenated and
    laid out ending at position -1.
    """
    if not is_monotone(s):
        raise ValueError("block_transform needs a monotone sequence")
    letters: list[int] = []
    top = s.value(1)
    for m in range(1, top + 1):
        block = [p for p in range(1, len(s.a) + 1) if s.value(p) == m]
        for p in sorted(block, reverse=True):
            sgn = 1 if s.color(p) == 1 else -1
            letters.append(sgn * m)
    n = len(letters)
    return left_path({k - n: v for k, v in enumerate(letters)})


def seq_length(s: SeqElement) -> int:
    """Largest index with a nonzero entry."""
    return len(s.a)


# -- conversion between realizations ---------------------------------------


def _reduction_word(b: CrystalElement) -> list[int]:
    """Greedy raising word to the generator, preferring color 0 on ties."""
    word: list[int] = []
    cur = b
    while True:
        for i in (0, 1):
            up = cur.e(i)
            if up is not None:
                word.append(i)
                cur = up
                break
        else:
            return word


def seq_to_path(s: SeqElement) -> HalfPath:
    """The left path corresponding to s (same lowering word from the generator)."""
    word = _reduction_word(s)
    cur = u_inf()
    for i in reversed(word):
        cur = cur.f(i)
    return cur


def path_to_seq(b: HalfPath, first_color: int = 0) -> SeqElement:
    """The sequence element corresponding to a left path."""
    word = _reduction_word(b)
    cur = seq_generator(first_color)
    for i in reversed(word):
        cur = cur.f(i)
    return cur
