"""Shared helpers for the test suite.

The tensor-chain oracle re-builds a left path as an explicit iterated tensor
product of single-letter crystals behind an inert end marker, so that the
closed-form operators on paths can be checked against the raw tensor rules
with no shared code path.
"""

import random

from crystalpaths import HalfPath, left_path, u_inf
from crystalpaths.cli import _oracle_letters, _tensor_oracle


def oracle_for(b: HalfPath, width: int = 10):
    return _tensor_oracle(b.as_dict(), width)


def oracle_entries(t) -> dict[int, int]:
    return {k: v for k, v in _oracle_letters(t).items() if v != 0}


def agree_with_oracle(b: HalfPath, width: int = 10) -> bool:
    t = oracle_for(b, width)
    for i in (0, 1):
        if b.eps(i) != t.eps(i) or b.phi(i) != t.phi(i):
            return False
        for kind in ("e", "f"):
            bb = b.e(i) if kind == "e" else b.f(i)
            tt = t.e(i) if kind == "e" else t.f(i)
            if (bb is None) != (tt is None):
                return False
            if bb is not None and bb.as_dict() != oracle_entries(tt):
                return False
    return True


def random_walk(start, steps: int, rng: random.Random):
    """Random lowering/raising walk from a crystal element."""
    cur = start
    for _ in range(steps):
        i = rng.randrange(2)
        nxt = cur.f(i) if rng.random() < 0.7 else cur.e(i)
        if nxt is not None:
            cur = nxt
    return cur


def random_binf_elements(count: int, max_steps: int, seed: int = 0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(random_walk(u_inf(), rng.randrange(max_steps + 1), rng))
    return out
