"""The extension of a non-degenerate cycle set to integer vectors.

Vectors t in Z^n stand for formal sums of carrier elements.  Each one
gets a permutation sigma_t by folding single steps from the identity:

  plus step:   (pi + x)(y) = pi(x) . pi(y)
  minus step:  (pi - x)(y) = pi(y) ^ (pi(x) dual pi(x))

The fold is order-independent, which tests verify by shuffling.  With

  a o b = a^b + b,      a^b = sigma_b^{-1} applied coordinatewise,

the vectors form a group realizing the structure group of the solution,
and collapsing vectors with equal sigma yields a finite right brace of
order |G(X)|.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from . import cycle_set as cs
from . import perm
from .brace import FiniteBrace, validate_brace
from .perm import IntVector, Perm, PermGroup
from .tables import ValidationError


class CosetInconsistency(ValidationError):
    """Two vectors landed in one coset without an identity difference.

    This can only happen through an implementation bug; it is never
    suppressed or downgraded.
    """

    def __init__(self, detail: str):
        super().__init__(f"coset inconsistency: {detail}")
        self.detail = detail


@dataclass(frozen=True)
class ExtensionContext:
    x: cs.CycleSet
    dual: cs.CycleSet
    group: PermGroup
    rows: tuple[Perm, ...]
    inv_rows: tuple[Perm, ...]
    dual_diag: tuple[int, ...]
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.x.n


def extension_context(
    x: cs.CycleSet, budget: int = perm.DEFAULT_CLOSURE_BUDGET
) -> ExtensionContext:
    """Cache the dual and the permutation group; degenerate input fails here."""
    d = cs.dual(x)
    g = cs.permutation_group(x, budget=budget)
    return ExtensionContext(
        x=x,
        dual=d,
        group=g,
        rows=x.table,
        inv_rows=tuple(perm.invert(row) for row in x.table),
        dual_diag=tuple(d.table[i][i] for i in range(x.n)),
    )


def plus_step(ctx: ExtensionContext, pi: Perm, x: int) -> Perm:
    """pi + x, one positive unit in coordinate x."""
    return perm.compose(ctx.rows[pi[x]], pi)


def minus_step(ctx: ExtensionContext, pi: Perm, x: int) -> Perm:
    """pi - x, one negative unit in coordinate x."""
    return perm.compose(ctx.inv_rows[ctx.dual_diag[pi[x]]], pi)


def _check_vector(ctx: ExtensionContext, t) -> IntVector:
    v = tuple(t)
    if len(v) != ctx.n or not all(isinstance(c, int) for c in v):
        raise ValidationError(f"expected an integer vector of length {ctx.n}")
    return v


def sigma_of_vector(ctx: ExtensionContext, t) -> Perm:
    """Fold t into a permutation: ascending index, full multiplicity each."""
    v = _check_vector(ctx, t)
    cached = ctx._memo.get(v)
    if cached is not None:
        return cached
    pi = perm.identity(ctx.n)
    for i, c in enumerate(v):
        for _ in range(c, 0, -1):
            pi = plus_step(ctx, pi, i)
        for _ in range(-c, 0, -1):
            pi = minus_step(ctx, pi, i)
    ctx._memo[v] = pi
    return pi


def sigma_of_vector_shuffled(ctx: ExtensionContext, t, rng: random.Random) -> Perm:
    """Debug evaluation of sigma_of_vector in a shuffled step order.

    Always equals the canonical fold; tests quantify over many shuffles.
    """
    v = _check_vector(ctx, t)
    steps = []
    for i, c in enumerate(v):
        steps.extend([(i, 1)] * max(c, 0))
        steps.extend([(i, -1)] * max(-c, 0))
    rng.shuffle(steps)
    pi = perm.identity(ctx.n)
    for i, sign in steps:
        pi = plus_step(ctx, pi, i) if sign > 0 else minus_step(ctx, pi, i)
    return pi


def zero_vector(ctx: ExtensionContext) -> IntVector:
    return (0,) * ctx.n


def basis_vector(ctx: ExtensionContext, i: int) -> IntVector:
    if not 0 <= i < ctx.n:
        raise ValidationError(f"basis index {i} out of range")
    return tuple(1 if j == i else 0 for j in range(ctx.n))


def vector_add(a: IntVector, b: IntVector) -> IntVector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vector_neg(a: IntVector) -> IntVector:
    return tuple(-x for x in a)


def vector_sub(a: IntVector, b: IntVector) -> IntVector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vector_pow(ctx: ExtensionContext, a, b) -> IntVector:
    """a^b: sigma_b^{-1} moving coordinates of a."""
    av = _check_vector(ctx, a)
    s = sigma_of_vector(ctx, _check_vector(ctx, b))
    return perm.act_on_vector(perm.invert(s), av)


def adjoint_mult(ctx: ExtensionContext, a, b) -> IntVector:
    """a o b = a^b + b; associative with the zero vector as identity."""
    return vector_add(vector_pow(ctx, a, b), _check_vector(ctx, b))


def adjoint_inverse(ctx: ExtensionContext, a) -> IntVector:
    """-(a . a), the two-sided inverse for the adjoint multiplication."""
    av = _check_vector(ctx, a)
    return vector_neg(perm.act_on_vector(sigma_of_vector(ctx, av), av))


def generator_relation_violation(ctx: ExtensionContext) -> tuple[int, int] | None:
    """First basis pair breaking e_a o e_b = e_{a^b . b} o e_{a^b}, else None.

    The pair relation is the defining relation of the structure group read
    inside the vector model.
    """
    x = ctx.x
    for a in range(ctx.n):
        ea = basis_vector(ctx, a)
        for b in range(ctx.n):
            eb = basis_vector(ctx, b)
            u = x.inv[a][b]
            w = x.table[u][b]
            lhs = adjoint_mult(ctx, ea, eb)
            rhs = adjoint_mult(ctx, basis_vector(ctx, w), basis_vector(ctx, u))
            if lhs != rhs:
                return (a, b)
    return None


def check_generator_relations(ctx: ExtensionContext) -> bool:
    return generator_relation_violation(ctx) is None


class SampleViolation(NamedTuple):
    law: str  # "right_distributivity", "power_additive" or "power_composition"
    a: IntVector
    b: IntVector
    c: IntVector
    lhs: IntVector
    rhs: IntVector


def sampled_brace_violation(
    ctx: ExtensionContext, bound: int = 3, trials: int = 1000, seed: int = 42
) -> SampleViolation | None:
    """Seeded random triples against the right-brace and power laws.

    Checks (a+b) o c + c = a o c + b o c, then (a+b)^c = a^c + b^c, then
    (a^b)^c = a^(b o c).  Any hit is an implementation bug.
    """
    rng = random.Random(seed)
    n = ctx.n

    def draw() -> IntVector:
        return tuple(rng.randint(-bound, bound) for _ in range(n))

    for _ in range(trials):
        a, b, c = draw(), draw(), draw()
        lhs = vector_add(adjoint_mult(ctx, vector_add(a, b), c), c)
        rhs = vector_add(adjoint_mult(ctx, a, c), adjoint_mult(ctx, b, c))
        if lhs != rhs:
            return SampleViolation("right_distributivity", a, b, c, lhs, rhs)
        lhs = vector_pow(ctx, vector_add(a, b), c)
        rhs = vector_add(vector_pow(ctx, a, c), vector_pow(ctx, b, c))
        if lhs != rhs:
            return SampleViolation("power_additive", a, b, c, lhs, rhs)
        lhs = vector_pow(ctx, vector_pow(ctx, a, b), c)
        rhs = vector_pow(ctx, a, adjoint_mult(ctx, b, c))
        if lhs != rhs:
            return SampleViolation("power_composition", a, b, c, lhs, rhs)
    return None


def check_right_brace_sampled(
    ctx: ExtensionContext, bound: int = 3, trials: int = 1000, seed: int = 42
) -> bool:
    return sampled_brace_violation(ctx, bound=bound, trials=trials, seed=seed) is None


def retracted_extension(ctx: ExtensionContext) -> FiniteBrace:
    """The finite right brace on vectors modulo the kernel of sigma.

    Breadth-first from the zero vector along unit steps, one coset per
    sigma value; membership is double-checked through identity-sigma
    differences, so a keying bug raises instead of mislabelling.
    """
    n = ctx.n
    ident = perm.identity(n)
    zero = zero_vector(ctx)
    reps: list[IntVector] = [zero]
    label_of: dict[Perm, int] = {sigma_of_vector(ctx, zero): 0}

    def verify_same_coset(v: IntVector, rep: IntVector) -> None:
        if sigma_of_vector(ctx, vector_sub(v, rep)) != ident:
            raise CosetInconsistency(
                f"{v} keyed with {rep} but their difference moves points"
            )

    queue = deque([zero])
    while queue:
        v = queue.popleft()
        for i in range(n):
            for sign in (1, -1):
                w = tuple(
                    c + sign if j == i else c for j, c in enumerate(v)
                )
                s = sigma_of_vector(ctx, w)
                label = label_of.get(s)
                if label is None:
                    label_of[s] = len(reps)
                    reps.append(w)
                    queue.append(w)
                else:
                    verify_same_coset(w, reps[label])
    m = len(reps)
    if m != len(ctx.group):
        raise CosetInconsistency(
            f"{m} cosets found, permutation group has order {len(ctx.group)}"
        )

    def class_of(v: IntVector) -> int:
        label = label_of.get(sigma_of_vector(ctx, v))
        if label is None:
            raise CosetInconsistency(f"{v} has a sigma outside the found cosets")
        verify_same_coset(v, reps[label])
        return label

    add = tuple(
        tuple(class_of(vector_add(reps[a], reps[b])) for b in range(m))
        for a in range(m)
    )
    circle = tuple(
        tuple(class_of(adjoint_mult(ctx, reps[a], reps[b])) for b in range(m))
        for a in range(m)
    )
    return validate_brace(add, circle, "right")
