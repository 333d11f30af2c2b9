"""The star involution on the limit crystals and the modified-algebra crystal.

On the limit crystal, b* is computed by peeling: walk an alternating color
sequence i_1, i_2, ... and record a_k = eps_{i_k} of the element obtained by
fully raising along i_{k-1}, ..., i_1.  The recorded list, read as a
sequence-realization element with first color i_1, is exactly the sequence
form of b*; converting it back to a path gives b*.  Either starting color
yields the same element.

On three-factor elements, (b1, lam, b2)* = (b1*, -lam - wt(b1) - wt(b2), b2*)
with b2 starred through the side flip.  Star is an involution; it negates
the relation between the marker weight and the element weight:
wt(e*) = -lam(e) and lam(e*) = -wt(e).

Starred operators are the star conjugates X*(e) = (X(e*))*; they commute
with the plain operators and preserve the element weight while shifting the
marker weight.

For an extremal uniform-wall level path of weight -lam there is a closed
form for the star image: wall positions and multiplicities are kept, the
letters of the j-th finite inter-wall domain become +-j alternating, and the
tail from the last wall follows the ambient ground pattern of the full wall
count.  star_extremal_closed implements that description directly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .halfpath import HalfPath, LEFT, RIGHT, u_inf
from .levelpath import LevelPath, ModElement, _alt
from .seqreal import SeqElement, seq_to_path


@lru_cache(maxsize=1 << 18)
def star_binf(b: HalfPath, start_color: int = 1) -> HalfPath:
    """Star on the limit crystal of left paths, by peeling."""
    if b.side != LEFT:
        raise ValueError("star_binf expects a left path")
    a_list: list[int] = []
    cur = b
    color = start_color
    while cur != u_inf():
        k = cur.eps(color)
        a_list.append(k)
        for _ in range(k):
            cur = cur.e(color)
        color = 1 - color
    return seq_to_path(SeqElement(start_color, tuple(a_list)))


def star_bminf(b: HalfPath, start_color: int = 1) -> HalfPath:
    """Star on the dual limit crystal of right paths: flip-conjugated."""
    if b.side != RIGHT:
        raise ValueError("star_bminf expects a right path")
    return star_binf(b.flip(), start_color).flip()


def star_mod(e: ModElement) -> ModElement:
    """Star on the modified-algebra crystal."""
    return ModElement(
        star_binf(e.b1),
        -e.lam - e.b1.wt() - e.b2.wt(),
        star_bminf(e.b2),
    )


def starred_e(e: ModElement, i: int) -> Optional[ModElement]:
    c = star_mod(e).e(i)
    return None if c is None else star_mod(c)


def starred_f(e: ModElement, i: int) -> Optional[ModElement]:
    c = star_mod(e).f(i)
    return None if c is None else star_mod(c)


def starred_eps(e: ModElement, i: int):
    return star_mod(e).eps(i)


def starred_phi(e: ModElement, i: int):
    return star_mod(e).phi(i)


def star_half_closed(b: HalfPath) -> HalfPath:
    """Closed-form star image of a uniform-wall half-path.

    For a left path with n same-sign walls, the image keeps the wall
    positions and replaces the letters of the j-th finite domain by +-j with
    alternation (-1)^q * j at position q for negative walls and its negation
    for positive walls.  Right paths go through the side flip, which
    exchanges wall signs and reverses the domain order.  Raises ValueError
    on mixed wall signs.
    """
    if b.side == RIGHT:
        return star_half_closed(b.flip()).flip()
    sign = b.wall_sign()
    if sign is None:
        raise ValueError("star_half_closed needs walls of a single sign")
    if sign == 0:
        return u_inf()
    entries: dict[int, int] = {}
    for j, (start, length) in enumerate(b.domains(), start=1):
        for q in range(start, start + length):
            letter = _alt(q) * j
            entries[q] = letter if sign < 0 else -letter
    return HalfPath(LEFT, tuple(entries.items()))


def star_extremal_closed(p: LevelPath) -> LevelPath:
    """Closed-form star image of an extremal uniform-wall level path.

    Preconditions: every wall of p carries the same sign (raises ValueError
    otherwise).  For a path with n walls at expanded positions
    W_1 <= ... <= W_n the image keeps those positions; the letters of the
    j-th finite domain [W_j, W_{j+1}) become j in absolute value with the
    alternation (-1)^q * j (negative walls) or (-1)^(q+1) * j (positive
    walls), and from W_n on the path follows the ground pattern of
    m_out = n (negative walls) or -n (positive walls).  The wall-free path
    is its own image up to the delta label.
    """
    sign = p.wall_sign()
    if sign is None:
        raise ValueError("star_extremal_closed needs walls of a single sign")
    l_out = -p.wt().d
    if sign == 0:
        return LevelPath(0, l_out, ())
    walls = p.wall_positions()
    m_out = len(walls) if sign < 0 else -len(walls)
    entries: dict[int, int] = {}
    for j in range(1, len(walls)):
        for q in range(walls[j - 1], walls[j]):
            letter = _alt(q) * j
            entries[q] = letter if sign < 0 else -letter
    tail_start = walls[-1]
    out = LevelPath(m_out, l_out, tuple(entries.items()))
    # positions left of the first wall and from the last wall on must agree
    # with the defaults of the output family; record any that do not
    fixups = dict(out.entries)
    for q in range(min(walls[0], 0), max(tail_start, 0) + 1):
        if q < walls[0]:
            fixups[q] = 0
        elif q >= tail_start:
            fixups[q] = _alt(q) * m_out
    return LevelPath(m_out, l_out, tuple(fixups.items()))
