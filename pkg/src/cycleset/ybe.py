"""Set maps on X x X: braid form and quantum form, with all the checks.

Two table encodings are used, one per convention:

  BraidMap r(x, y) = (lam[x][y], tau[y][x]).  Row x of lam is the map
  lambda_x, row y of tau is tau_y.  The braid equation is
  r1 r2 r1 = r2 r1 r2 on triples, with r1 = r x id and r2 = id x r.

  QybeMap R(x, y) = (a[x][y], b[x][y]), written x^y and xy with a left
  superscript.  The quantum equation is R12 R13 R23 = R23 R13 R12.

Non-degeneracy follows the moving argument of each family: for braid
maps both lam and tau rows must be bijections; for quantum maps the
columns of a (x -> x^y) and the rows of b (x -> the left action of y
on x) must be bijections.

The flip p(x, y) = (y, x) converts between the two conventions: p o m
and m o p toggle braid and quantum form, p o m o p keeps the form and
gives the dual map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

from . import perm
from .cycle_set import CycleSet, validate as validate_cycle_set
from .tables import Table, ValidationError, check_square


class NotInvolutive(ValidationError):
    def __init__(self):
        super().__init__("map is not involutive")


class NotLeftNondegenerate(ValidationError):
    def __init__(self):
        super().__init__("map is not left non-degenerate")


class NotUnitary(ValidationError):
    def __init__(self):
        super().__init__("map is not unitary")


class NotQybe(ValidationError):
    def __init__(self):
        super().__init__("map does not satisfy the quantum equation")


@dataclass(frozen=True)
class BraidMap:
    n: int
    lam: Table
    tau: Table

    def __post_init__(self):
        object.__setattr__(self, "lam", check_square(self.lam))
        object.__setattr__(self, "tau", check_square(self.tau))
        if len(self.lam) != self.n or len(self.tau) != self.n:
            raise ValidationError("table size does not match n")

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return (self.lam[x][y], self.tau[y][x])


@dataclass(frozen=True)
class QybeMap:
    n: int
    a: Table
    b: Table

    def __post_init__(self):
        object.__setattr__(self, "a", check_square(self.a))
        object.__setattr__(self, "b", check_square(self.b))
        if len(self.a) != self.n or len(self.b) != self.n:
            raise ValidationError("table size does not match n")

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return (self.a[x][y], self.b[x][y])


AnyMap = Union[BraidMap, QybeMap]


class BraidViolation(NamedTuple):
    x: int
    y: int
    z: int
    lhs: tuple[int, int, int]
    rhs: tuple[int, int, int]


class QybeViolation(NamedTuple):
    component: int  # 1, 2 or 3: which slot of the composite triples differs
    x: int
    y: int
    z: int
    lhs: int
    rhs: int


class PairViolation(NamedTuple):
    x: int
    y: int


def _triple_composites(f: Callable[[int, int], tuple[int, int]], x: int, y: int, z: int):
    """(f1 f2 f1)(x,y,z) and (f2 f1 f2)(x,y,z), rightmost applied first."""

    def f1(t):
        u, v = f(t[0], t[1])
        return (u, v, t[2])

    def f2(t):
        u, v = f(t[1], t[2])
        return (t[0], u, v)

    t = (x, y, z)
    return f1(f2(f1(t))), f2(f1(f2(t)))


def braid_violation(r: BraidMap) -> BraidViolation | None:
    """First triple, in lexicographic order, where r1 r2 r1 != r2 r1 r2."""
    for x in range(r.n):
        for y in range(r.n):
            for z in range(r.n):
                lhs, rhs = _triple_composites(r.apply, x, y, z)
                if lhs != rhs:
                    return BraidViolation(x, y, z, lhs, rhs)
    return None


def check_braid(r: BraidMap) -> bool:
    return braid_violation(r) is None


def qybe_violation(m: QybeMap) -> QybeViolation | None:
    """First failing component equation over triples in lexicographic order.

    The quantum equation splits into three componentwise identities, one
    per slot of the composite triple; the report names the first slot
    that disagrees at the first bad triple.
    """
    a, b = m.a, m.b
    for x in range(m.n):
        for y in range(m.n):
            for z in range(m.n):
                byz = b[y][z]
                ayz = a[y][z]
                axy = a[x][y]
                bxy = b[x][y]
                lhs1 = a[a[x][byz]][ayz]
                rhs1 = a[axy][z]
                if lhs1 != rhs1:
                    return QybeViolation(1, x, y, z, lhs1, rhs1)
                lhs2 = b[a[x][byz]][ayz]
                rhs2 = a[bxy][b[axy][z]]
                if lhs2 != rhs2:
                    return QybeViolation(2, x, y, z, lhs2, rhs2)
                lhs3 = b[x][byz]
                rhs3 = b[bxy][b[axy][z]]
                if lhs3 != rhs3:
                    return QybeViolation(3, x, y, z, lhs3, rhs3)
    return None


def check_qybe(m: QybeMap) -> bool:
    return qybe_violation(m) is None


def unitary_violation(m: QybeMap) -> PairViolation | None:
    """First pair where p o R o p o R is not the identity, componentwise."""
    for x in range(m.n):
        for y in range(m.n):
            u = m.a[x][y]
            v = m.b[x][y]
            if m.b[v][u] != x or m.a[v][u] != y:
                return PairViolation(x, y)
    return None


def check_unitary(m: QybeMap) -> bool:
    return unitary_violation(m) is None


def involutive_violation(r: BraidMap) -> PairViolation | None:
    for x in range(r.n):
        for y in range(r.n):
            u, v = r.apply(x, y)
            if r.apply(u, v) != (x, y):
                return PairViolation(x, y)
    return None


def check_involutive(r: BraidMap) -> bool:
    return involutive_violation(r) is None


class Nondegeneracy(NamedTuple):
    left: bool
    right: bool


def nondegeneracy(m: AnyMap) -> Nondegeneracy:
    """Bijectivity of the two coordinate families, per the form's convention."""
    n = m.n
    if isinstance(m, BraidMap):
        left = all(perm.is_permutation(row) for row in m.lam)
        right = all(perm.is_permutation(row) for row in m.tau)
    else:
        left = all(
            perm.is_permutation(tuple(m.a[x][y] for x in range(n))) for y in range(n)
        )
        right = all(perm.is_permutation(row) for row in m.b)
    return Nondegeneracy(left=left, right=right)


def _pointwise(m: AnyMap) -> Callable[[int, int], tuple[int, int]]:
    return m.apply


def _braid_from_pointwise(n: int, f) -> BraidMap:
    lam = [[0] * n for _ in range(n)]
    tau = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            u, v = f(x, y)
            lam[x][y] = u
            tau[y][x] = v
    return BraidMap(n=n, lam=tuple(map(tuple, lam)), tau=tuple(map(tuple, tau)))


def _qybe_from_pointwise(n: int, f) -> QybeMap:
    a = [[0] * n for _ in range(n)]
    b = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            u, v = f(x, y)
            a[x][y] = u
            b[x][y] = v
    return QybeMap(n=n, a=tuple(map(tuple, a)), b=tuple(map(tuple, b)))


def flip_compose(kind: str, m: AnyMap) -> AnyMap:
    """Compose with the flip p(x,y) = (y,x).

    kind "pR" gives p o m, kind "Rp" gives m o p; both toggle the form
    (braid to quantum and back).  kind "pRp" gives p o m o p, keeps the
    form, and is the dual map.
    """
    f = _pointwise(m)
    if kind == "pR":
        g = lambda x, y: tuple(reversed(f(x, y)))
        toggle = True
    elif kind == "Rp":
        g = lambda x, y: f(y, x)
        toggle = True
    elif kind == "pRp":
        g = lambda x, y: tuple(reversed(f(y, x)))
        toggle = False
    else:
        raise ValidationError(f"unknown flip kind {kind!r}")
    to_braid = isinstance(m, QybeMap) if toggle else isinstance(m, BraidMap)
    builder = _braid_from_pointwise if to_braid else _qybe_from_pointwise
    return builder(m.n, g)


def from_cycle_set(x: CycleSet) -> QybeMap:
    """The quantum map R(u, v) = (u^v, (u^v)*v) attached to a cycle set."""
    n = x.n
    a = x.inv
    b = tuple(tuple(x.table[a[u][v]][v] for v in range(n)) for u in range(n))
    return QybeMap(n=n, a=a, b=b)


def to_cycle_set(m: QybeMap) -> CycleSet:
    """Recover the cycle set whose attached quantum map is m.

    Requires left non-degeneracy, unitarity and the quantum equation, in
    that order of checking.  Row y of the result is the inverse of the
    column map x -> a[x][y].
    """
    n = m.n
    cols = [tuple(m.a[x][y] for x in range(n)) for y in range(n)]
    if not all(perm.is_permutation(c) for c in cols):
        raise NotLeftNondegenerate()
    if not check_unitary(m):
        raise NotUnitary()
    if not check_qybe(m):
        raise NotQybe()
    return validate_cycle_set([perm.invert(c) for c in cols])


def involutive_shortcut_check(r: BraidMap, which: int) -> bool:
    """Decide the braid equation for an involutive map via one condition.

    For involutive maps any one of the three componentwise conditions of
    the equation suffices.  which selects the component: 1 is the tau
    composition rule, 3 is the lambda composition rule, 2 is the mixed
    rule.  Requires r involutive; intended for maps whose lam and tau
    rows are bijections.
    """
    if not check_involutive(r):
        raise NotInvolutive()
    n = r.n
    lam, tau = r.lam, r.tau
    if which == 1:
        for x in range(n):
            for y in range(n):
                lhs_row = tau[x]
                t_xy = tau[x][y]
                l_yx = lam[y][x]
                for z in range(n):
                    if lhs_row[tau[y][z]] != tau[t_xy][tau[l_yx][z]]:
                        return False
        return True
    if which == 2:
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    lhs = lam[tau[lam[y][z]][x]][tau[z][y]]
                    rhs = tau[lam[tau[y][x]][z]][lam[x][y]]
                    if lhs != rhs:
                        return False
        return True
    if which == 3:
        for x in range(n):
            for y in range(n):
                l_xy = lam[x][y]
                t_yx = tau[y][x]
                for z in range(n):
                    if lam[x][lam[y][z]] != lam[l_xy][lam[t_yx][z]]:
                        return False
        return True
    raise ValidationError(f"which must be 1, 2 or 3, got {which!r}")
