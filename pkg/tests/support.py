"""Shared fixtures: named tables and small exhaustive generators."""

from __future__ import annotations

import itertools
from typing import Iterator

from cycleset import brace as br
from cycleset import cycle_set as cs
from cycleset import ybe

# x . y = y, every sigma is the identity
TRIVIAL1 = ((0,),)
TRIVIAL2 = ((0, 1), (0, 1))
TRIVIAL3 = ((0, 1, 2), (0, 1, 2), (0, 1, 2))

# both rows swap; the smallest non-trivial cycle set
SWAP = ((1, 0), (1, 0))

# sigma_x = phi^(1,3,1,3) over the 4-cycle phi
C4 = ((1, 2, 3, 0), (3, 0, 1, 2), (1, 2, 3, 0), (3, 0, 1, 2))

# bijective rows but the law fails at (0,1,0)
NOT_A_CYCLE_SET = ((0, 1), (1, 0))

Z4_ADD = tuple(tuple((a + b) % 4 for b in range(4)) for a in range(4))
# adjoint circle of the ring (Z/4, +, a*b = 2ab)
Z4_CIRCLE = tuple(tuple((a + b + 2 * a * b) % 4 for b in range(4)) for a in range(4))
Z4_STAR = tuple(tuple((2 * a * b) % 4 for b in range(4)) for a in range(4))

Z2_ADD = ((0, 1), (1, 0))


def ut3_f2_ring() -> tuple[tuple, tuple]:
    """The 8-element strictly upper triangular ring over the field with 2
    elements: triples (a, b, c) with product (0, 0, a * b') and entrywise
    addition, indexed as 4a + 2b + c."""
    triples = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    idx = {t: i for i, t in enumerate(triples)}
    add = tuple(
        tuple(idx[(a ^ a2, b ^ b2, c ^ c2)] for (a2, b2, c2) in triples)
        for (a, b, c) in triples
    )
    mul = tuple(
        tuple(idx[(0, 0, a & b2)] for (a2, b2, c2) in triples)
        for (a, b, c) in triples
    )
    return add, mul


def left_braces_up_to(max_order: int) -> Iterator[br.FiniteBrace]:
    """Every left brace over every labeled abelian addition table."""
    for order in range(1, max_order + 1):
        for factors in br.abelian_factor_lists(order):
            add = br.abelian_group_table(factors)
            yield from br.enumerate_left_braces(add)


def right_braces_up_to(max_order: int) -> Iterator[br.FiniteBrace]:
    for left in left_braces_up_to(max_order):
        yield br.opposite(left)


def involutive_pairs(n: int) -> Iterator[ybe.BraidMap]:
    """All involutive maps on n points whose lam and tau rows are bijections."""
    perms = sorted(itertools.permutations(range(n)))
    for lam in itertools.product(perms, repeat=n):
        for tau in itertools.product(perms, repeat=n):
            m = ybe.BraidMap(n=n, lam=lam, tau=tau)
            if ybe.involutive_violation(m) is None:
                yield m


def all_cycle_sets(max_n: int) -> Iterator[cs.CycleSet]:
    for n in range(1, max_n + 1):
        yield from cs.enumerate_cycle_sets(n)
