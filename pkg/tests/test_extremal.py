from itertools import product

from crystalpaths import (bmax_contains, bmax_seed, enum_bmax,
                          enum_bminus_star, extremal_cert, ground_path,
                          is_extremal, is_extremal_path, lp_join, lp_split,
                          path_from_window, star_mod, u_lambda, weyl_op)
from crystalpaths.extremal import (extremal_screen, same_entries,
                                   starred_weyl_op, uniform_wall_path)
from crystalpaths.weights import classical


def test_weyl_op_on_ground_paths():
    # S_i on an extremal element stays in the Weyl orbit of its weight
    u = lp_split(ground_path(1, 0))
    # <h_1, wt> = -1, so S_1 = e_1 here
    s1 = weyl_op(u, 1)
    assert s1.wt() == u.wt().reflect(1)
    back = weyl_op(s1, 1)
    assert back == u
    # explicit image: the wall moves one slot right
    assert lp_join(s1).entry(0) == 0 and lp_join(s1).entry(1) == -1


def test_weyl_op_identity_at_zero_pairing():
    u = u_lambda(classical(0, 0))
    assert weyl_op(u, 0) == u and weyl_op(u, 1) == u


def test_ground_paths_are_extremal():
    for m in (-3, -1, 0, 1, 2, 3):
        for l in (0, 2):
            assert is_extremal_path(ground_path(m, l))


def test_lowering_off_extremal_position_is_not_extremal():
    u = lp_split(ground_path(2, 0))
    # a single f_0 step leaves the Weyl orbit: the result sits at weight
    # zero but still has both color-0 operators defined
    moved = u.f(0)
    assert moved is not None
    assert not is_extremal(moved)
    cert = extremal_cert(moved)
    assert cert.witness is not None


def test_extremal_cert_witness_replays():
    u = lp_split(ground_path(2, 0))
    moved = u.f(0)
    cert = extremal_cert(moved)
    assert not cert.extremal
    cur = moved
    ok = True
    for i in cert.witness:
        cur = weyl_op(cur, i)
    # the endpoint (or the element itself) fails local extremality
    n0, n1 = cur.wt().pairing(0), cur.wt().pairing(1)
    fails = ((n0 >= 0 and cur.e(0) is not None) or (n0 <= 0 and cur.f(0) is not None)
             or (n1 >= 0 and cur.e(1) is not None) or (n1 <= 0 and cur.f(1) is not None))
    assert fails or cert.witness == []


def test_extremal_screen_rules_out_mixed_walls():
    p = path_from_window(0, 0, -2, [1, 1, -1, -1])
    assert extremal_screen(p) is False
    assert not is_extremal_path(p)


def test_starred_weyl_op_preserves_weight():
    u = u_lambda(classical(2, 0))
    s = starred_weyl_op(u, 1)
    assert s.wt() == u.wt()
    assert star_mod(s).wt() == star_mod(u).wt().reflect(1)


def test_uniform_wall_path_reproduces_grounds():
    # m stacked walls at 0 give the ground path of P_{m,l}
    for m in (1, 2, 3):
        for l in (0, 2):
            p = uniform_wall_path([0] * m, 1, l)
            assert p == ground_path(m, l)
            q = uniform_wall_path([0] * m, -1, l)
            assert q == ground_path(-m, l)


def test_uniform_wall_path_properties():
    for walls in ([0, 0], [0, 1], [-2, -2], [-1, 1], [0, 1, 1]):
        for sign in (1, -1):
            p = uniform_wall_path(walls, sign, 0)
            assert p.wall_positions() == sorted(walls)
            assert p.wall_sign() == sign
            assert p.wt().d == 0


def test_seed_entries_star_fixed():
    lam = classical(2, 0)
    for c1 in range(4):
        seed = bmax_seed(lam, (c1,))
        starred = lp_join(star_mod(lp_split(seed)))
        assert same_entries(seed, starred)
        assert bmax_contains(lam, lp_split(seed))


def test_seed_rejects_bad_shapes():
    for bad in ((-1,), (0, 0)):
        try:
            bmax_seed(classical(2, 0), bad)
        except ValueError:
            continue
        raise AssertionError(f"shape {bad} must be rejected")


def test_bmax_membership_boundary():
    lam = classical(1, 0)
    u = u_lambda(lam)
    assert bmax_contains(lam, u)
    # wrong marker weight: not in this B^max
    assert not bmax_contains(classical(2, 0), u)
    # plain moves stay inside
    e = u.f(0)
    assert e is not None and bmax_contains(lam, e)
    # starred moves leave the slice
    from crystalpaths.star import starred_f
    s = starred_f(u, 1)
    assert s is not None and not bmax_contains(lam, s)


def test_enum_bmax_closed_under_membership():
    lam = classical(2, 0)
    members = enum_bmax(lam, c_bound=1, depth=3)
    assert len(members) > 5
    for e in members.values():
        assert bmax_contains(lam, e)


def test_enum_bminus_star_counts_and_contents():
    lam = classical(2, 0)
    out = enum_bminus_star(lam, span=3)
    # (2*span + 1) base positions x 2^(n-1) gap patterns
    assert len(out) == 7 * 2
    keys = {e.key() for e in out}
    assert u_lambda(lam).key() in keys
    for e in out:
        assert e.wt() == lam
        assert is_extremal(e)


def test_enum_bminus_star_zero_weight():
    lam = classical(0, 1)
    out = enum_bminus_star(lam)
    assert len(out) == 1 and out[0] == u_lambda(lam)
