"""Finite cycle sets.

A cycle set is a finite set {0..n-1} with a binary operation x*y whose
left translations sigma_x: y -> x*y are bijections and which satisfies

    (x*y)*(x*z) = (y*x)*(y*z)   for all x, y, z.

Tables store table[x][y] = x*y.  The cached inverse table stores
inv[y][x] = sigma_x^{-1}(y), written y^x, so that x*(y^x) = (x*y)^x = y.

The defining law is equivalent to the permutation identity
sigma_{x*y} o sigma_x = sigma_{y*x} o sigma_y for all pairs x, y, which
is what the fast scanning paths check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import perm
from .perm import Perm, compose, invert
from .tables import Table, ValidationError, check_square

ENUMERATION_CAP = 5


class NonBijectiveRow(ValidationError):
    def __init__(self, row: int):
        super().__init__(f"row {row} is not a permutation")
        self.row = row


class LawViolation(ValidationError):
    def __init__(self, x: int, y: int, z: int, lhs: int, rhs: int):
        super().__init__(
            f"cycle set law fails at ({x},{y},{z}): "
            f"(x*y)*(x*z) = {lhs} but (y*x)*(y*z) = {rhs}"
        )
        self.x = x
        self.y = y
        self.z = z
        self.lhs = lhs
        self.rhs = rhs


class NotNondegenerate(ValidationError):
    def __init__(self):
        super().__init__("cycle set is degenerate: x -> x*x is not a bijection")


class CapExceeded(ValidationError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"enumeration size {n} exceeds the cap {cap}")
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class CycleSet:
    n: int
    table: Table
    inv: Table

    def op(self, x: int, y: int) -> int:
        """x*y."""
        return self.table[x][y]

    def inv_op(self, y: int, x: int) -> int:
        """y^x = sigma_x^{-1}(y)."""
        return self.inv[y][x]

    def sigma(self, x: int) -> Perm:
        return self.table[x]

    def sigma_inv(self, x: int) -> Perm:
        return invert(self.table[x])


def validate(table) -> CycleSet:
    """Check the table and return the cycle set, or raise the first failure.

    Checks run in a fixed order: shape, then row bijectivity by ascending
    row index, then the law over triples (x, y, z) in lexicographic order.
    """
    frozen = check_square(table)
    n = len(frozen)
    for x, row in enumerate(frozen):
        if not perm.is_permutation(row):
            raise NonBijectiveRow(x)
    for x in range(n):
        row_x = frozen[x]
        for y in range(n):
            row_y = frozen[y]
            row_xy = frozen[row_x[y]]
            row_yx = frozen[row_y[x]]
            for z in range(n):
                lhs = row_xy[row_x[z]]
                rhs = row_yx[row_y[z]]
                if lhs != rhs:
                    raise LawViolation(x, y, z, lhs, rhs)
    inv_rows = [invert(row) for row in frozen]
    inv = tuple(tuple(inv_rows[x][y] for x in range(n)) for y in range(n))
    return CycleSet(n=n, table=frozen, inv=inv)


def is_valid_table(table) -> bool:
    """Validity as a predicate, for scans that do not need a report."""
    try:
        validate(table)
    except ValidationError:
        return False
    return True


def is_nondegenerate(x: CycleSet) -> bool:
    """True iff the diagonal map i -> i*i is a bijection."""
    return perm.is_permutation(tuple(x.table[i][i] for i in range(x.n)))


def dual(x: CycleSet) -> CycleSet:
    """The dual cycle set (X, o), defined by inverting i -> y^i * i.

    Writing m_y(i) = (y^i)*i, the dual operation has y o i = m_y^{-1}(i).
    It exists exactly when X is non-degenerate, satisfies
    (x*y) o (y*x) = x and (x o y)*(y o x) = x, and dualising twice gives
    back the original operation.
    """
    if not is_nondegenerate(x):
        raise NotNondegenerate()
    n = x.n
    rows = []
    for y in range(n):
        m = tuple(x.table[x.inv[y][i]][i] for i in range(n))
        if not perm.is_permutation(m):
            raise NotNondegenerate()
        rows.append(invert(m))
    return validate(rows)


def permutation_group(x: CycleSet, budget: int = perm.DEFAULT_CLOSURE_BUDGET) -> perm.PermGroup:
    """The group generated by the left translations sigma_0, ..., sigma_{n-1}."""
    return perm.closure(x.n, x.table, budget=budget)


class Retraction(NamedTuple):
    quotient: CycleSet
    projection: tuple[int, ...]


def retraction(x: CycleSet) -> Retraction:
    """Identify elements with equal sigma rows.

    Classes are labelled by ascending least representative, so class 0
    contains element 0.  Equal rows form a congruence, hence the quotient
    table is well defined; this is re-checked element by element.
    """
    labels: dict[Perm, int] = {}
    projection = []
    reps = []
    for i, row in enumerate(x.table):
        if row not in labels:
            labels[row] = len(reps)
            reps.append(i)
        projection.append(labels[row])
    m = len(reps)
    table = tuple(
        tuple(projection[x.table[reps[a]][reps[b]]] for b in range(m)) for a in range(m)
    )
    for a in range(x.n):
        for b in range(x.n):
            if projection[x.table[a][b]] != table[projection[a]][projection[b]]:
                raise AssertionError("retraction congruence broke; this is a bug")
    return Retraction(validate(table), tuple(projection))


def multipermutation_level(x: CycleSet) -> int | None:
    """Length of the retraction tower down to one point, or None if it stalls."""
    level = 0
    current = x
    while current.n > 1:
        quotient = retraction(current).quotient
        if quotient.n == current.n:
            return None
        current = quotient
        level += 1
    return level


def retraction_tower_sizes(x: CycleSet) -> tuple[int, ...]:
    """Sizes of the iterated retracts, ending at 1 or at the first stall."""
    sizes = [x.n]
    current = x
    while current.n > 1:
        quotient = retraction(current).quotient
        if quotient.n == current.n:
            break
        current = quotient
        sizes.append(current.n)
    return tuple(sizes)


def is_indecomposable(x: CycleSet) -> bool:
    """True iff the permutation group acts transitively."""
    return perm.group_properties(permutation_group(x)).is_transitive


def is_irretractable(x: CycleSet) -> bool:
    """True iff n > 1 and no two sigma rows coincide."""
    return x.n > 1 and len(set(x.table)) == x.n


def relabel(x: CycleSet, g: Perm) -> CycleSet:
    """Transport the structure along g: new[g[a]][g[b]] = g[old[a][b]]."""
    table = [[0] * x.n for _ in range(x.n)]
    for a in range(x.n):
        for b in range(x.n):
            table[g[a]][g[b]] = g[x.table[a][b]]
    return validate(table)


def canonical_form(x: CycleSet) -> Table:
    """Least table obtainable by simultaneous relabeling."""
    best = x.table
    for g in itertools.permutations(range(x.n)):
        cand = [[0] * x.n for _ in range(x.n)]
        for a in range(x.n):
            ga = g[a]
            row = x.table[a]
            for b in range(x.n):
                cand[ga][g[b]] = g[row[b]]
        frozen = tuple(tuple(r) for r in cand)
        if frozen < best:
            best = frozen
    return best


def is_canonical(x: CycleSet) -> bool:
    return canonical_form(x) == x.table


FILTERS = {
    "all": lambda x: True,
    "nondegenerate": is_nondegenerate,
    "indecomposable": is_indecomposable,
    "irretractable": is_irretractable,
}


def enumerate_cycle_sets(
    n: int,
    filter: str = "all",
    canonical: bool = False,
    cap: int = ENUMERATION_CAP,
) -> Iterator[CycleSet]:
    """Yield every cycle set on {0..n-1} in lexicographic table order.

    The candidate space is all tables whose rows are permutations.  The
    search assigns rows depth first in lexicographic order and prunes via
    the pair form of the law: once rows x and y and the rows they point at
    are known, sigma_{x*y} o sigma_x = sigma_{y*x} o sigma_y either fails,
    or determines a not yet assigned row outright.  Every yielded table is
    re-checked with validate, so the output equals the filtered full scan.
    """
    if filter not in FILTERS:
        raise ValidationError(f"unknown filter {filter!r}")
    if n > cap:
        raise CapExceeded(n, cap)
    keep = FILTERS[filter]
    for table in _scan_tables(n):
        x = validate(table)
        if keep(x) and (not canonical or is_canonical(x)):
            yield x


def _scan_tables(n: int) -> Iterator[Table]:
    """Depth-first row assignment with forward forcing; yields valid tables."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    m = len(perms)
    comp = [[index[compose(perms[a], perms[b])] for b in range(m)] for a in range(m)]
    inv_of = [index[invert(p)] for p in perms]

    def propagate(rows: list[int], forced: dict[int, int]) -> dict[int, int] | None:
        """Re-check known pairs until stable; None signals a contradiction."""
        forced = dict(forced)

        def known(i: int) -> int | None:
            if i < len(rows):
                return rows[i]
            return forced.get(i)

        changed = True
        while changed:
            changed = False
            known_idx = [i for i in range(n) if known(i) is not None]
            for xi in known_idx:
                rx = known(xi)
                px = perms[rx]
                for yi in known_idx:
                    if yi <= xi:
                        continue
                    ry = known(yi)
                    u = px[yi]
                    v = perms[ry][xi]
                    su = known(u)
                    sv = known(v)
                    if su is not None and sv is not None:
                        if comp[su][rx] != comp[sv][ry]:
                            return None
                    elif su is not None:
                        req = comp[comp[su][rx]][inv_of[ry]]
                        forced[v] = req
                        changed = True
                    elif sv is not None:
                        req = comp[comp[sv][ry]][inv_of[rx]]
                        forced[u] = req
                        changed = True
                    elif u == v and rx != ry:
                        return None
        return forced

    def rec(rows: list[int], forced: dict[int, int]) -> Iterator[Table]:
        k = len(rows)
        if k == n:
            yield tuple(perms[i] for i in rows)
            return
        options = (forced[k],) if k in forced else range(m)
        for cand in options:
            rows.append(cand)
            after = propagate(rows, forced)
            if after is not None:
                yield from rec(rows, after)
            rows.pop()

    yield from rec([], {})


def plain_scan(n: int) -> Iterator[Table]:
    """Reference scan over all permutation-rowed tables, no pruning.

    Used as an oracle against _scan_tables for small n.
    """
    perms = sorted(itertools.permutations(range(n)))
    for rows in itertools.product(perms, repeat=n):
        if _pairs_ok(rows):
            yield rows


def _pairs_ok(rows: tuple[Perm, ...]) -> bool:
    n = len(rows)
    for x in range(n):
        row_x = rows[x]
        for y in range(x + 1, n):
            row_y = rows[y]
            ru = rows[row_x[y]]
            rv = rows[row_y[x]]
            for z in range(n):
                if ru[row_x[z]] != rv[row_y[z]]:
                    return False
    return True
