"""Finite braces, radical rings, and their ties to linear cycle sets.

A brace here is an abelian group (carrier {0..n-1}, identity pinned at
index 0) with a second group operation "circle" sharing the identity,
related by one of two laws:

  left brace    a o (b + c) + a = a o b + a o c
  right brace   (a + b) o c + c = a o c + b o c

The attached ring multiplication is a * b = a o b - a - b.  Socle and
quotient machinery follow the right-brace conventions; a left brace is
routed through its opposite first.

Linear cycle sets are cycle sets on an abelian group satisfying

  a * (b + c) = a*b + a*c        (the operation is additive on the right)
  (a + b) * c = (a*b) * (a*c)    (sums act by composition)

and correspond to right braces via a o b = a^b + b.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import cycle_set as cs
from . import perm
from .perm import Perm
from .tables import Table, ValidationError, check_square, transpose
from .ybe import BraidMap


class IdentityMismatch(ValidationError):
    def __init__(self, which: str):
        super().__init__(f"{which} table does not have its identity at index 0")
        self.which = which


class AddNotAbelianGroup(ValidationError):
    def __init__(self, axiom: str, witness: tuple):
        super().__init__(f"ADD is not an abelian group: {axiom} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class CircleNotGroup(ValidationError):
    def __init__(self, axiom: str, witness: tuple):
        super().__init__(f"CIRCLE is not a group: {axiom} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class BraceLawViolation(ValidationError):
    def __init__(self, side: str, a: int, b: int, c: int):
        super().__init__(f"{side} brace law fails at ({a},{b},{c})")
        self.side = side
        self.a = a
        self.b = b
        self.c = c


class SideMismatch(ValidationError):
    def __init__(self, needed: str, got: str):
        super().__init__(f"operation needs a {needed} brace, got a {got} brace")
        self.needed = needed
        self.got = got


class NotAnIdeal(ValidationError):
    def __init__(self, reason: str):
        super().__init__(f"subset is not an ideal: {reason}")
        self.reason = reason


class NotARing(ValidationError):
    def __init__(self, axiom: str, witness: tuple):
        super().__init__(f"not a ring: {axiom} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class NotJacobsonRadical(ValidationError):
    def __init__(self):
        super().__init__("adjoint operation a o b = a + b + a*b is not a group")


def _group_defect(table: Table, abelian: bool) -> tuple[str, tuple] | None:
    """First failed group-table axiom, or None.

    Identity must sit at index 0.  Checks: identity, cancellation (rows
    and columns bijective), associativity, and commutativity if asked.
    """
    n = len(table)
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            return ("identity", (a,))
    for a in range(n):
        if not perm.is_permutation(table[a]):
            return ("cancellation", ("row", a))
    for b in range(n):
        if not perm.is_permutation(tuple(table[a][b] for a in range(n))):
            return ("cancellation", ("column", b))
    for a in range(n):
        for b in range(n):
            tab = table[a][b]
            for c in range(n):
                if table[tab][c] != table[a][table[b][c]]:
                    return ("associativity", (a, b, c))
    if abelian:
        for a in range(n):
            for b in range(a + 1, n):
                if table[a][b] != table[b][a]:
                    return ("commutativity", (a, b))
    return None


def _negatives(add: Table) -> tuple[int, ...]:
    n = len(add)
    neg = [0] * n
    for a in range(n):
        neg[a] = add[a].index(0)
    return tuple(neg)


def check_abelian_group(table) -> Table:
    """Validate an addition table: abelian group with identity at 0."""
    frozen = check_square(table)
    defect = _group_defect(frozen, abelian=True)
    if defect is not None:
        axiom, witness = defect
        if axiom == "identity":
            raise IdentityMismatch("ADD")
        raise AddNotAbelianGroup(axiom, witness)
    return frozen


@dataclass(frozen=True)
class FiniteBrace:
    n: int
    add: Table
    circle: Table
    side: str
    neg: tuple[int, ...]
    circle_inv: tuple[int, ...]

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]


def validate_brace(add, circle, side: str) -> FiniteBrace:
    """Check both group structures and the brace law for the given side."""
    if side not in ("left", "right"):
        raise ValidationError(f"side must be 'left' or 'right', got {side!r}")
    add_t = check_abelian_group(add)
    circle_t = check_square(circle)
    if len(circle_t) != len(add_t):
        raise ValidationError("ADD and CIRCLE tables have different sizes")
    defect = _group_defect(circle_t, abelian=False)
    if defect is not None:
        axiom, witness = defect
        if axiom == "identity":
            raise IdentityMismatch("CIRCLE")
        raise CircleNotGroup(axiom, witness)
    n = len(add_t)
    neg = _negatives(add_t)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if side == "left":
                    lhs = add_t[circle_t[a][add_t[b][c]]][a]
                    rhs = add_t[circle_t[a][b]][circle_t[a][c]]
                else:
                    lhs = add_t[circle_t[add_t[a][b]][c]][c]
                    rhs = add_t[circle_t[a][c]][circle_t[b][c]]
                if lhs != rhs:
                    raise BraceLawViolation(side, a, b, c)
    circle_inv = tuple(circle_t[a].index(0) for a in range(n))
    return FiniteBrace(
        n=n, add=add_t, circle=circle_t, side=side, neg=neg, circle_inv=circle_inv
    )


def is_two_sided(brace: FiniteBrace) -> bool:
    """Check the law of the other side on the same pair of tables."""
    other = "right" if brace.side == "left" else "left"
    try:
        validate_brace(brace.add, brace.circle, other)
    except ValidationError:
        return False
    return True


def lambda_map(brace: FiniteBrace, a: int) -> Perm:
    """For a left brace, the automorphism lambda_a(b) = a o b - a."""
    if brace.side != "left":
        raise SideMismatch("left", brace.side)
    return tuple(brace.sub(brace.circle[a][b], a) for b in range(brace.n))


def ring_mult(brace: FiniteBrace) -> Table:
    """The table of a * b = a o b - a - b."""
    n = brace.n
    return tuple(
        tuple(brace.sub(brace.sub(brace.circle[a][b], a), b) for b in range(n))
        for a in range(n)
    )


def opposite(brace: FiniteBrace) -> FiniteBrace:
    """Same addition, transposed circle; swaps left and right."""
    other = "right" if brace.side == "left" else "left"
    return validate_brace(brace.add, transpose(brace.circle), other)


def solution_from_left_brace(brace: FiniteBrace) -> BraidMap:
    """The braid map r(a, b) = (lambda_a(b), lambda^{-1}_{lambda_a(b)}(a))."""
    if brace.side != "left":
        raise SideMismatch("left", brace.side)
    n = brace.n
    lam = tuple(lambda_map(brace, a) for a in range(n))
    lam_inv = [perm.invert(p) for p in lam]
    tau = tuple(
        tuple(lam_inv[lam[a][b]][a] for a in range(n)) for b in range(n)
    )
    return BraidMap(n=n, lam=lam, tau=tau)


class LcsViolation(NamedTuple):
    law: str  # "unit", "distributivity" or "sum_action"
    where: tuple[int, ...]
    lhs: int
    rhs: int


def lcs_violation(add, table) -> LcsViolation | None:
    """First failure of the linear cycle set laws over a given addition.

    Preconditions raise: add must be an abelian group with identity at 0
    and table a valid cycle set.  The unit laws a*0 = 0 and 0*a = a are
    scanned first as a fast reject, then triples in lexicographic order
    check distributivity a*(b+c) = a*b + a*c and the sum action
    (a+b)*c = (a*b)*(a*c).
    """
    add_t = check_abelian_group(add)
    x = cs.validate(table)
    if x.n != len(add_t):
        raise ValidationError("ADD and cycle tables have different sizes")
    n = x.n
    t = x.table
    for a in range(n):
        if t[a][0] != 0:
            return LcsViolation("unit", (a, 0), t[a][0], 0)
        if t[0][a] != a:
            return LcsViolation("unit", (0, a), t[0][a], a)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = t[a][add_t[b][c]]
                rhs = add_t[t[a][b]][t[a][c]]
                if lhs != rhs:
                    return LcsViolation("distributivity", (a, b, c), lhs, rhs)
                lhs = t[add_t[a][b]][c]
                rhs = t[t[a][b]][t[a][c]]
                if lhs != rhs:
                    return LcsViolation("sum_action", (a, b, c), lhs, rhs)
    return None


def check_linear_cycle_set(add, table) -> bool:
    return lcs_violation(add, table) is None


class LinearCycleSet(NamedTuple):
    add: Table
    cycle: cs.CycleSet


def lcs_to_brace(add, table) -> FiniteBrace:
    """Right brace with a o b = a^b + b, from a linear cycle set."""
    bad = lcs_violation(add, table)
    if bad is not None:
        raise ValidationError(f"not a linear cycle set: {bad}")
    add_t = check_abelian_group(add)
    x = cs.validate(table)
    n = x.n
    circle = tuple(
        tuple(add_t[x.inv[a][b]][b] for b in range(n)) for a in range(n)
    )
    return validate_brace(add_t, circle, "right")


def brace_to_lcs(brace: FiniteBrace) -> LinearCycleSet:
    """Linear cycle set of a right brace: row a inverts b -> b o a - a."""
    if brace.side != "right":
        raise SideMismatch("right", brace.side)
    n = brace.n
    rows = []
    for a in range(n):
        lam_op = tuple(brace.sub(brace.circle[b][a], a) for b in range(n))
        rows.append(perm.invert(lam_op))
    bad = lcs_violation(brace.add, rows)
    if bad is not None:
        raise AssertionError(f"right brace produced a non-linear table: {bad}")
    return LinearCycleSet(brace.add, cs.validate(rows))


def _routed_right(brace: FiniteBrace) -> FiniteBrace:
    return opposite(brace) if brace.side == "left" else brace


def socle(brace: FiniteBrace) -> frozenset[int]:
    """{x : a * x = 0 for all a}, in the right-brace ring multiplication.

    Left braces are routed through their opposite first.  The membership
    criterion "a o (b + x) = a o b + x for all a, b" is cross-checked.
    """
    b = _routed_right(brace)
    star = ring_mult(b)
    n = b.n
    members = frozenset(x for x in range(n) if all(star[a][x] == 0 for a in range(n)))
    for c in range(n):
        alt = all(
            star[a][b.add[bb][c]] == star[a][bb] for a in range(n) for bb in range(n)
        )
        if alt != (c in members):
            raise AssertionError("socle membership criteria disagree; this is a bug")
    return members


def socle_series(brace: FiniteBrace) -> tuple[frozenset[int], ...]:
    """Ascending chain {0} = S_0 <= S_1 <= ... up to its stabilisation point."""
    b = _routed_right(brace)
    star = ring_mult(b)
    n = b.n
    series = [frozenset([0])]
    while True:
        last = series[-1]
        nxt = frozenset(
            x for x in range(n) if all(star[a][x] in last for a in range(n))
        )
        if nxt == last:
            return tuple(series)
        series.append(nxt)


def is_ideal(brace: FiniteBrace, subset) -> bool:
    """Subgroup of both structures, absorbing the ring product on both sides."""
    s = frozenset(subset)
    if not s or not all(0 <= x < brace.n for x in s):
        return False
    if 0 not in s:
        return False
    star = ring_mult(brace)
    for x in s:
        for y in s:
            if brace.add[x][y] not in s or brace.circle[x][y] not in s:
                return False
    for a in range(brace.n):
        for x in s:
            if star[a][x] not in s or star[x][a] not in s:
                return False
    return True


def quotient(brace: FiniteBrace, ideal) -> FiniteBrace:
    """Quotient brace by an ideal; classes labelled by least representative."""
    if not is_ideal(brace, ideal):
        raise NotAnIdeal("fails the subgroup or absorption checks")
    s = frozenset(ideal)
    n = brace.n
    proj = [-1] * n
    reps = []
    for x in range(n):
        if proj[x] >= 0:
            continue
        label = len(reps)
        reps.append(x)
        for i in s:
            proj[brace.add[x][i]] = label
    m = len(reps)
    add_q = tuple(
        tuple(proj[brace.add[reps[a]][reps[b]]] for b in range(m)) for a in range(m)
    )
    circle_q = tuple(
        tuple(proj[brace.circle[reps[a]][reps[b]]] for b in range(m)) for a in range(m)
    )
    return validate_brace(add_q, circle_q, brace.side)


def brace_congruence_classes(brace: FiniteBrace, ideal) -> tuple[tuple[int, ...], ...]:
    """Cosets x + ideal as sorted tuples, ordered by least element."""
    s = frozenset(ideal)
    seen = set()
    classes = []
    for x in range(brace.n):
        if x in seen:
            continue
        coset = tuple(sorted(brace.add[x][i] for i in s))
        seen.update(coset)
        classes.append(coset)
    return tuple(classes)


@dataclass(frozen=True)
class FiniteRing:
    n: int
    add: Table
    mul: Table
    neg: tuple[int, ...]


def validate_ring(add, mul) -> FiniteRing:
    """Abelian addition with identity at 0, associative multiplication,
    and two-sided distributivity."""
    add_t = check_square(add)
    defect = _group_defect(add_t, abelian=True)
    if defect is not None:
        axiom, witness = defect
        raise NotARing("add_" + axiom, witness)
    mul_t = check_square(mul)
    if len(mul_t) != len(add_t):
        raise ValidationError("ADD and MUL tables have different sizes")
    n = len(add_t)
    for a in range(n):
        for b in range(n):
            mab = mul_t[a][b]
            for c in range(n):
                if mul_t[mab][c] != mul_t[a][mul_t[b][c]]:
                    raise NotARing("mul_associativity", (a, b, c))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul_t[a][add_t[b][c]] != add_t[mul_t[a][b]][mul_t[a][c]]:
                    raise NotARing("left_distributivity", (a, b, c))
                if mul_t[add_t[a][b]][c] != add_t[mul_t[a][c]][mul_t[b][c]]:
                    raise NotARing("right_distributivity", (a, b, c))
    return FiniteRing(n=n, add=add_t, mul=mul_t, neg=_negatives(add_t))


def is_nil(ring: FiniteRing) -> bool:
    """Every element has some power equal to 0."""
    for a in range(ring.n):
        x = a
        seen = set()
        while x != 0 and x not in seen:
            seen.add(x)
            x = ring.mul[x][a]
        if x != 0:
            return False
    return True


def nilpotency_index(ring: FiniteRing) -> int | None:
    """Least k such that every product of k factors is 0, or None.

    Product sets saturate: S_1 is the carrier and S_{k+1} = {a * s}.  A
    repeated set other than {0} means no power of the ring vanishes.
    """
    carrier = frozenset(range(ring.n))
    current = carrier
    k = 1
    seen = {current}
    zero = frozenset([0])
    while current != zero:
        current = frozenset(
            ring.mul[a][s] for a in range(ring.n) for s in current
        )
        k += 1
        if current in seen:
            return None
        seen.add(current)
    return k


def is_nilpotent(ring: FiniteRing) -> bool:
    return nilpotency_index(ring) is not None


def adjoint_circle(ring: FiniteRing) -> Table:
    """Table of a o b = a + b + a*b."""
    n = ring.n
    return tuple(
        tuple(ring.add[ring.add[a][b]][ring.mul[a][b]] for b in range(n))
        for a in range(n)
    )


def is_jacobson_radical(ring: FiniteRing) -> bool:
    """True iff the adjoint operation makes the carrier a group."""
    return _group_defect(adjoint_circle(ring), abelian=False) is None


def brace_from_ring(ring: FiniteRing) -> FiniteBrace:
    """Two-sided brace of a Jacobson radical ring (returned with side left)."""
    if not is_jacobson_radical(ring):
        raise NotJacobsonRadical()
    circle = adjoint_circle(ring)
    brace = validate_brace(ring.add, circle, "left")
    validate_brace(ring.add, circle, "right")
    return brace


# ---------------------------------------------------------------------------
# Exhaustive oracles for small orders.  These scan raw assignment spaces and
# exist so tests can quantify over every brace of a given additive group.
# ---------------------------------------------------------------------------


def abelian_group_table(factors: tuple[int, ...]) -> Table:
    """Componentwise addition on a product of cyclic groups, indexed mixed-radix.

    The empty factor list gives the one-element group.
    """
    if not factors:
        return ((0,),)
    ranges = [range(f) for f in factors]
    points = list(itertools.product(*ranges))
    index = {p: i for i, p in enumerate(points)}
    n = len(points)
    return tuple(
        tuple(
            index[tuple((a + b) % f for a, b, f in zip(points[i], points[j], factors))]
            for j in range(n)
        )
        for i in range(n)
    )


def abelian_factor_lists(order: int) -> tuple[tuple[int, ...], ...]:
    """Primary decompositions of every abelian group of a given order."""
    if order == 1:
        return ((),)
    factorisation = []
    m = order
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            factorisation.append((p, e))
        p += 1
    if m > 1:
        factorisation.append((m, 1))

    def partitions(k: int, most: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for first in range(min(k, most), 0, -1):
            for rest in partitions(k - first, first):
                yield (first,) + rest

    per_prime = [
        [tuple(p**e for e in part) for part in partitions(exp, exp)]
        for p, exp in factorisation
    ]
    out = []
    for combo in itertools.product(*per_prime):
        out.append(tuple(itertools.chain.from_iterable(combo)))
    return tuple(out)


def additive_automorphisms(add: Table) -> tuple[Perm, ...]:
    """All automorphisms of an abelian group table, sorted."""
    n = len(add)
    out = []
    for rest in itertools.permutations(range(1, n)):
        p = (0,) + rest
        if all(
            p[add[a][b]] == add[p[a]][p[b]] for a in range(n) for b in range(a, n)
        ):
            out.append(p)
    return tuple(sorted(out))


def enumerate_left_braces(add) -> Iterator[FiniteBrace]:
    """Every left brace over a fixed addition table, in deterministic order.

    A left brace with this addition is exactly an assignment a -> lambda_a
    into Aut(add) with lambda_0 = id and lambda_{a + lambda_a(b)} =
    lambda_a lambda_b; the scan assigns the least undecided element, then
    propagates that closure rule to a fixed point.
    """
    add_t = check_abelian_group(add)
    n = len(add_t)
    auts = additive_automorphisms(add_t)
    aidx = {p: i for i, p in enumerate(auts)}
    m = len(auts)
    acomp = [
        [aidx[perm.compose(auts[i], auts[j])] for j in range(m)] for i in range(m)
    ]
    id_idx = aidx[perm.identity(n)]

    def close(lam: list[int | None]) -> bool:
        changed = True
        while changed:
            changed = False
            assigned = [a for a in range(n) if lam[a] is not None]
            for a in assigned:
                la = lam[a]
                image = auts[la]
                for b in assigned:
                    lb = lam[b]
                    if lb is None:
                        continue
                    c = add_t[a][image[b]]
                    req = acomp[la][lb]
                    if lam[c] is None:
                        lam[c] = req
                        changed = True
                    elif lam[c] != req:
                        return False
        return True

    def rec(lam: list[int | None]) -> Iterator[FiniteBrace]:
        try:
            a = lam.index(None)
        except ValueError:
            circle = tuple(
                tuple(add_t[x][auts[lam[x]][y]] for y in range(n)) for x in range(n)
            )
            yield validate_brace(add_t, circle, "left")
            return
        for i in range(m):
            lam2 = list(lam)
            lam2[a] = i
            if close(lam2):
                yield from rec(lam2)

    start: list[int | None] = [None] * n
    start[0] = id_idx
    if close(start):
        yield from rec(start)


def enumerate_right_braces(add) -> Iterator[FiniteBrace]:
    """Opposites of the left-brace enumeration over the same addition."""
    for brace in enumerate_left_braces(add):
        yield opposite(brace)
