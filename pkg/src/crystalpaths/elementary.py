"""The elementary crystals: T_lambda, B_i, and the rank-one limit crystal.

T_lambda is a single element of weight lambda with eps = phi = -infinity and
no operators; tensoring with it shifts weights without touching the graph.

B_i is { (n)_i : n in Z } with wt (n)_i = n*alpha_i, eps_i = -n, phi_i = n,
e_i (n) = (n+1), f_i (n) = (n-1); the other color has eps = phi = -infinity
and undefined operators.

LimitEntry models a single letter of the limit path crystal, identified with
Z: e_1 and f_0 decrement, e_0 and f_1 increment, eps_1(n) = phi_0(n) = n,
eps_0(n) = phi_1(n) = -n, and the weight is the classical 2n*(L0 - L1).
EndMarker is a truncation stub (all string statistics zero, no operators)
standing in for the untouched infinite tail when a path is modeled as a
finite tensor word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import NEG_INF, CrystalElement
from .weights import Weight, classical, simple_root


@dataclass(frozen=True)
class TElement(CrystalElement):
    lam: Weight

    def wt(self) -> Weight:
        return self.lam

    def eps(self, i: int):
        return NEG_INF

    def phi(self, i: int):
        return NEG_INF

    def e(self, i: int):
        return None

    def f(self, i: int):
        return None

    def key(self):
        return ("t", self.lam.a0, self.lam.a1, self.lam.d)


@dataclass(frozen=True)
class BiElement(CrystalElement):
    color: int
    n: int

    def wt(self) -> Weight:
        return self.n * simple_root(self.color)

    def eps(self, i: int):
        return -self.n if i == self.color else NEG_INF

    def phi(self, i: int):
        return self.n if i == self.color else NEG_INF

    def e(self, i: int):
        return BiElement(self.color, self.n + 1) if i == self.color else None

    def f(self, i: int):
        return BiElement(self.color, self.n - 1) if i == self.color else None

    def key(self):
        return ("bi", self.color, self.n)


@dataclass(frozen=True)
class LimitEntry(CrystalElement):
    n: int

    def wt(self) -> Weight:
        return classical(2 * self.n)

    def eps(self, i: int):
        return -self.n if i == 0 else self.n

    def phi(self, i: int):
        return self.n if i == 0 else -self.n

    def e(self, i: int):
        return LimitEntry(self.n - 1 if i == 1 else self.n + 1)

    def f(self, i: int):
        return LimitEntry(self.n + 1 if i == 1 else self.n - 1)

    def key(self):
        return ("z", self.n)


@dataclass(frozen=True)
class EndMarker(CrystalElement):
    """Truncation stub for an infinite tail of a path tensor word.

    Statistics eps = phi = 0 of weight zero: raising and lowering are left
    undefined, which is correct whenever the word keeps enough slack that no
    operator would act beyond the truncation window.
    """

    side: str = "left"

    def wt(self) -> Weight:
        return Weight(0, 0, 0)

    def eps(self, i: int):
        return 0

    def phi(self, i: int):
        return 0

    def e(self, i: int):
        return None

    def f(self, i: int):
        return None

    def key(self):
        return ("end", self.side)
