"""Permutations of {0..n-1} as plain tuples, plus group closures.

A permutation p is the tuple of its images: p[i] is where i goes.
Integer vectors are tuples too; a permutation acts on a vector by
transporting coefficients, so the coefficient sitting at index i moves
to index p[i].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .tables import ValidationError

Perm = tuple[int, ...]
IntVector = tuple[int, ...]

DEFAULT_CLOSURE_BUDGET = 10**6


class NotAPermutation(ValidationError):
    def __init__(self, value: object, n: int | None = None):
        expect = f" of 0..{n - 1}" if n is not None else ""
        super().__init__(f"{value!r} is not a permutation{expect}")
        self.value = value


class ClosureBudgetExceeded(ValidationError):
    def __init__(self, budget: int):
        super().__init__(f"closure exceeded the element budget of {budget}")
        self.budget = budget


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


def check_permutation(p, n: int | None = None) -> Perm:
    q = tuple(p)
    if (n is not None and len(q) != n) or not is_permutation(q):
        raise NotAPermutation(q, n)
    return q


def compose(p: Perm, q: Perm) -> Perm:
    """Composite applying q first: compose(p, q)[i] = p[q[i]]."""
    return tuple(p[i] for i in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def cycle_lengths(p: Perm) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        j, size = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            size += 1
        lengths.append(size)
    return tuple(lengths)


def perm_order(p: Perm) -> int:
    return math.lcm(*cycle_lengths(p)) if p else 1


def act_on_vector(p: Perm, t: IntVector) -> IntVector:
    """Transport coefficients along p: result[p[i]] = t[i]."""
    if len(t) != len(p):
        raise ValidationError(f"vector length {len(t)} does not match degree {len(p)}")
    out = [0] * len(p)
    for i, c in enumerate(t):
        out[p[i]] = c
    return tuple(out)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group snapshot: generators plus the full element list.

    Elements are listed in breadth-first order from the identity, where
    each frontier element g spawns compose(g, s) for the generators s in
    their given order.  The order is therefore reproducible.
    """

    n: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __contains__(self, p) -> bool:
        return tuple(p) in self._members

    def __len__(self) -> int:
        return len(self.elements)


def closure(n: int, generators, budget: int = DEFAULT_CLOSURE_BUDGET) -> PermGroup:
    """Close the generators under composition, breadth first from the identity."""
    gens = tuple(check_permutation(g, n) for g in generators)
    start = identity(n)
    seen = {start}
    elements = [start]
    frontier = [start]
    while frontier:
        new_frontier = []
        for g in frontier:
            for s in gens:
                h = compose(g, s)
                if h not in seen:
                    if len(seen) >= budget:
                        raise ClosureBudgetExceeded(budget)
                    seen.add(h)
                    elements.append(h)
                    new_frontier.append(h)
        frontier = new_frontier
    return PermGroup(n=n, generators=gens, elements=tuple(elements))


@dataclass(frozen=True)
class GroupProperties:
    order: int
    is_abelian: bool
    is_cyclic: bool
    is_transitive: bool
    orbits: tuple[tuple[int, ...], ...]


def group_properties(group: PermGroup) -> GroupProperties:
    """Order, abelianness, cyclicity, transitivity and sorted orbits.

    Cyclicity is decided by testing each element as a sole generator, via
    its order.  Orbits are listed by ascending least element, each orbit
    sorted ascending.
    """
    order = len(group.elements)
    abelian = all(
        compose(a, b) == compose(b, a)
        for i, a in enumerate(group.generators)
        for b in group.generators[i + 1 :]
    )
    cyclic = any(perm_order(g) == order for g in group.elements)
    orbits = []
    placed = [False] * group.n
    for i in range(group.n):
        if placed[i]:
            continue
        orbit = sorted({g[i] for g in group.elements})
        for j in orbit:
            placed[j] = True
        orbits.append(tuple(orbit))
    return GroupProperties(
        order=order,
        is_abelian=abelian,
        is_cyclic=cyclic,
        is_transitive=len(orbits) == 1,
        orbits=tuple(orbits),
    )
