import functools

import pytest

from cycleset import cycle_set as cs
from cycleset import perm, ybe

from support import C4, SWAP, TRIVIAL2, involutive_pairs

# r(x, y) = (y, x)
SWAP_BRAID = ybe.BraidMap(n=2, lam=((0, 1), (0, 1)), tau=((0, 1), (0, 1)))
# r(x, y) = (1-y, 1-x)
REFLECT_BRAID = ybe.BraidMap(n=2, lam=((1, 0), (1, 0)), tau=((1, 0), (1, 0)))
# r(x, y) = (x, y); degenerate but a braid map
IDENTITY_BRAID = ybe.BraidMap(n=2, lam=((0, 0), (1, 1)), tau=((0, 0), (1, 1)))
# involutive, passes the lambda-composition condition, fails the equation
LOPSIDED_BRAID = ybe.BraidMap(n=2, lam=((0, 0), (1, 1)), tau=((1, 0), (0, 1)))

# R(x, y) = (x, y)
IDENTITY_QYBE = ybe.QybeMap(n=2, a=((0, 0), (1, 1)), b=((0, 1), (0, 1)))
# R(x, y) = (1-x, 1-y)
REFLECT_QYBE = ybe.QybeMap(n=2, a=((1, 1), (0, 0)), b=((1, 0), (1, 0)))
# R(x, y) = (x+1 mod 2, y): quantum equation holds, unitarity fails
SHIFT_QYBE = ybe.QybeMap(n=2, a=((1, 1), (0, 0)), b=((0, 1), (0, 1)))


@functools.lru_cache(maxsize=None)
def involutive3():
    return tuple(involutive_pairs(3))


def test_apply_conventions():
    assert SWAP_BRAID.apply(0, 1) == (1, 0)
    assert REFLECT_BRAID.apply(0, 0) == (1, 1)
    assert IDENTITY_QYBE.apply(1, 0) == (1, 0)
    r = ybe.BraidMap(n=2, lam=((1, 0), (0, 1)), tau=((0, 1), (1, 0)))
    # first slot reads lam by row x, second reads tau by row y
    assert r.apply(0, 1) == (r.lam[0][1], r.tau[1][0])


def test_table_shape_guard():
    with pytest.raises(ybe.ValidationError):
        ybe.BraidMap(n=3, lam=((0, 1), (0, 1)), tau=((0, 1), (0, 1)))
    with pytest.raises(ybe.ValidationError):
        ybe.QybeMap(n=2, a=((0, 1),), b=((0, 1), (0, 1)))


def test_braid_examples():
    assert ybe.check_braid(SWAP_BRAID)
    assert ybe.check_braid(REFLECT_BRAID)
    assert ybe.check_braid(IDENTITY_BRAID)
    assert not ybe.check_braid(LOPSIDED_BRAID)
    bad = ybe.braid_violation(LOPSIDED_BRAID)
    assert bad is not None
    f = LOPSIDED_BRAID.apply

    def r1(t):
        u, v = f(t[0], t[1])
        return (u, v, t[2])

    def r2(t):
        u, v = f(t[1], t[2])
        return (t[0], u, v)

    t = (bad.x, bad.y, bad.z)
    assert r1(r2(r1(t))) == bad.lhs
    assert r2(r1(r2(t))) == bad.rhs
    assert bad.lhs != bad.rhs


def test_qybe_examples():
    assert ybe.check_qybe(IDENTITY_QYBE)
    assert ybe.check_qybe(REFLECT_QYBE)
    assert ybe.check_qybe(SHIFT_QYBE)
    bad = ybe.QybeMap(n=2, a=((0, 1), (1, 0)), b=((1, 0), (0, 0)))
    report = ybe.qybe_violation(bad)
    assert report is not None
    assert report.component in (1, 2, 3)
    assert report.lhs != report.rhs


def test_unitary_examples():
    assert ybe.check_unitary(IDENTITY_QYBE)
    assert ybe.check_unitary(REFLECT_QYBE)
    report = ybe.unitary_violation(SHIFT_QYBE)
    assert report == ybe.PairViolation(0, 0)


def test_involutive_examples():
    assert ybe.check_involutive(SWAP_BRAID)
    assert ybe.check_involutive(IDENTITY_BRAID)
    assert ybe.check_involutive(LOPSIDED_BRAID)
    not_involutive = ybe.BraidMap(n=3, lam=((1, 2, 0),) * 3, tau=((0, 1, 2),) * 3)
    assert ybe.involutive_violation(not_involutive) == ybe.PairViolation(0, 0)


def test_nondegeneracy_conventions():
    assert ybe.nondegeneracy(SWAP_BRAID) == ybe.Nondegeneracy(True, True)
    assert ybe.nondegeneracy(IDENTITY_BRAID) == ybe.Nondegeneracy(False, False)
    # r(x, y) = (0, x)
    collapse = ybe.BraidMap(n=2, lam=((0, 0), (0, 0)), tau=((0, 1), (0, 1)))
    assert ybe.nondegeneracy(collapse) == ybe.Nondegeneracy(False, True)
    assert ybe.nondegeneracy(IDENTITY_QYBE) == ybe.Nondegeneracy(True, True)
    # left side of a quantum map reads columns of a, not rows
    cols_bad = ybe.QybeMap(n=2, a=((0, 1), (0, 1)), b=((0, 1), (0, 1)))
    assert ybe.nondegeneracy(cols_bad) == ybe.Nondegeneracy(False, True)


def test_flip_pr_toggles_form():
    flipped = ybe.flip_compose("pR", IDENTITY_QYBE)
    assert isinstance(flipped, ybe.BraidMap)
    assert flipped.lam == SWAP_BRAID.lam and flipped.tau == SWAP_BRAID.tau
    assert ybe.check_braid(flipped)
    back = ybe.flip_compose("Rp", flipped)
    assert isinstance(back, ybe.QybeMap)


def test_flip_rp_example():
    flipped = ybe.flip_compose("Rp", REFLECT_QYBE)
    assert isinstance(flipped, ybe.BraidMap)
    assert flipped.lam == REFLECT_BRAID.lam
    assert flipped.tau == REFLECT_BRAID.tau


def test_flip_prp_keeps_form():
    dual = ybe.flip_compose("pRp", REFLECT_QYBE)
    assert isinstance(dual, ybe.QybeMap)
    assert dual.a == REFLECT_QYBE.a and dual.b == REFLECT_QYBE.b
    with pytest.raises(ybe.ValidationError):
        ybe.flip_compose("RpR", REFLECT_QYBE)


def test_flip_round_trips():
    # each flip kind is an involution on maps
    for m in (SWAP_BRAID, REFLECT_BRAID, LOPSIDED_BRAID, IDENTITY_QYBE, SHIFT_QYBE):
        for kind in ("pR", "Rp", "pRp"):
            assert ybe.flip_compose(kind, ybe.flip_compose(kind, m)) == m


def test_involutivity_transports_along_pr():
    # p o r is unitary in quantum form exactly when r is involutive
    for m in involutive_pairs(2):
        q = ybe.flip_compose("pR", m)
        assert isinstance(q, ybe.QybeMap)
        assert ybe.check_unitary(q)


def test_from_cycle_set_examples():
    assert ybe.from_cycle_set(cs.validate(TRIVIAL2)) == IDENTITY_QYBE
    assert ybe.from_cycle_set(cs.validate(SWAP)) == REFLECT_QYBE


def test_from_cycle_set_properties():
    for n in range(1, 5):
        for x in cs.enumerate_cycle_sets(n):
            q = ybe.from_cycle_set(x)
            assert ybe.check_qybe(q)
            assert ybe.check_unitary(q)
            assert ybe.nondegeneracy(q).left
            assert ybe.to_cycle_set(q).table == x.table


def test_to_cycle_set_error_order():
    squash = ybe.QybeMap(n=2, a=((0, 0), (0, 0)), b=((0, 0), (0, 0)))
    with pytest.raises(ybe.NotLeftNondegenerate):
        ybe.to_cycle_set(squash)
    with pytest.raises(ybe.NotUnitary):
        ybe.to_cycle_set(SHIFT_QYBE)
    not_quantum = ybe.flip_compose("pR", LOPSIDED_BRAID)
    assert ybe.check_unitary(not_quantum)
    with pytest.raises(ybe.NotQybe):
        ybe.to_cycle_set(not_quantum)


def test_dual_map_matches_dual_cycle_set():
    for n in range(1, 5):
        for x in cs.enumerate_cycle_sets(n):
            dual_map = ybe.flip_compose("pRp", ybe.from_cycle_set(x))
            assert ybe.to_cycle_set(dual_map).table == cs.dual(x).table


def test_tau_is_determined_by_lambda_when_involutive():
    # tau_y(x) = lambda^{-1}_{lambda_x(y)}(x) for involutive non-degenerate maps
    for m in list(involutive_pairs(2)) + list(involutive3()):
        for x in range(m.n):
            for y in range(m.n):
                lam_inv = perm.invert(m.lam[m.lam[x][y]])
                assert m.tau[y][x] == lam_inv[x]


def test_shortcut_agrees_with_full_check_on_permutation_tables():
    for m in list(involutive_pairs(2)) + list(involutive3()):
        full = ybe.check_braid(m)
        for which in (1, 2, 3):
            assert ybe.involutive_shortcut_check(m, which) == full


def test_shortcut_guards():
    not_involutive = ybe.BraidMap(n=3, lam=((1, 2, 0),) * 3, tau=((0, 1, 2),) * 3)
    with pytest.raises(ybe.NotInvolutive):
        ybe.involutive_shortcut_check(not_involutive, 1)
    with pytest.raises(ybe.ValidationError):
        ybe.involutive_shortcut_check(SWAP_BRAID, 4)


def test_shortcut_domain_needs_bijective_rows():
    # outside the bijective-row domain a single component can pass while
    # the equation fails, so the shortcut must not be trusted there
    assert ybe.check_involutive(LOPSIDED_BRAID)
    assert ybe.involutive_shortcut_check(LOPSIDED_BRAID, 3)
    assert not ybe.check_braid(LOPSIDED_BRAID)
    assert not ybe.nondegeneracy(LOPSIDED_BRAID).left


def test_involutive_pair_counts():
    assert len(list(involutive_pairs(1))) == 1
    assert len(list(involutive_pairs(2))) == 2
    pairs3 = involutive3()
    assert len(pairs3) == 24
    braid3 = [m for m in pairs3 if ybe.check_braid(m)]
    assert len(braid3) == 12
    images = set()
    for x in cs.enumerate_cycle_sets(3):
        r = ybe.flip_compose("pR", ybe.from_cycle_set(x))
        images.add((r.lam, r.tau))
    assert images == {(m.lam, m.tau) for m in braid3}


def test_c4_quantum_map_values():
    x = cs.validate(C4)
    q = ybe.from_cycle_set(x)
    assert ybe.check_qybe(q) and ybe.check_unitary(q)
    # a[u][v] = u^v reads the inverse table, b pairs it with v
    assert q.a == x.inv
    assert q.a[1][0] == 0
    assert q.b[1][0] == C4[0][0] == 1
    for u in range(4):
        for v in range(4):
            assert q.b[u][v] == x.table[q.a[u][v]][v]
