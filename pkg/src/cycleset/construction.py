"""Indecomposable cycle sets of prime power size with cyclic group.

Parameters: a prime power p^k, a strictly decreasing chain
k = j_0 > j_1 > ... > j_level = 0, and value tables f_i on Z/p^{j_i}
taking values below p^{j_{i-1} - j_i} with f_i(0) = 0.  They induce

  psi_i(x) = 1 + sum over m >= i of p^{j_m} f_m(x mod p^{j_m})

and the table T[x][y] = (y + psi_1(x)) mod p^k, i.e. sigma_x = phi^{psi_1(x)}
for the full cycle phi.

Two validation modes exist because they genuinely disagree:

  paper   x + 2 psi_1(y) = y + 2 psi_1(x)  (mod p^k) for all x, y
  direct  psi_1(y + psi_1(x)) + psi_1(x) = psi_1(x + psi_1(y)) + psi_1(y)
          (mod p^k) for all x, y, which is exactly the cycle-set law
          specialised to tables of this shape

At (p,k,level) = (2,2,2) with f_1 = (0,1) the paper mode rejects while the
built table is a valid indecomposable cycle set; both verdicts are
reported, never merged.  The direct mode is the trusted semantics since
build re-validates every table against the general law anyway.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import cycle_set as cs
from . import perm
from .cycle_set import CapExceeded, CycleSet
from .tables import ValidationError


class NotPrime(ValidationError):
    def __init__(self, p: int):
        super().__init__(f"p = {p} is not prime")
        self.p = p


class BadChain(ValidationError):
    def __init__(self, detail: str):
        super().__init__(f"bad exponent chain: {detail}")
        self.detail = detail


class BadFTable(ValidationError):
    def __init__(self, i: int, detail: str):
        super().__init__(f"bad value table f{i}: {detail}")
        self.i = i
        self.detail = detail


class IndexOutOfRange(ValidationError):
    def __init__(self, i: int, level: int):
        super().__init__(f"psi index {i} outside 1..{level - 1}")
        self.i = i


class PsiNotInjective(ValidationError):
    def __init__(self, i: int):
        super().__init__(f"psi_{i} is not injective on its residue domain")
        self.i = i


class SymmetryConditionViolation(ValidationError):
    """x + 2 psi_1(y) and y + 2 psi_1(x) differ mod p^k (paper mode)."""

    def __init__(self, x: int, y: int, lhs: int, rhs: int):
        super().__init__(
            f"symmetry condition fails at ({x},{y}): {lhs} != {rhs} mod p^k"
        )
        self.x = x
        self.y = y
        self.lhs = lhs
        self.rhs = rhs


class ClosureViolation(ValidationError):
    """The psi_1 closure identity fails mod p^k (direct mode)."""

    def __init__(self, x: int, y: int, lhs: int, rhs: int):
        super().__init__(f"closure condition fails at ({x},{y}): {lhs} != {rhs}")
        self.x = x
        self.y = y
        self.lhs = lhs
        self.rhs = rhs


class BuiltTableInvalid(ValidationError):
    def __init__(self, cause: ValidationError):
        super().__init__(f"built table is not a cycle set: {cause}")
        self.cause = cause


class NotCyclicTransitive(ValidationError):
    def __init__(self, detail: str):
        super().__init__(f"permutation group is not cyclic transitive: {detail}")
        self.detail = detail


class NoGeneratorElement(ValidationError):
    def __init__(self):
        super().__init__("no single row generates the permutation group")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


MODES = ("paper", "direct")


@dataclass(frozen=True)
class ConsParams:
    p: int
    k: int
    level: int
    chain: tuple[int, ...]
    f: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.p**self.k


def make_params(p: int, k: int, level: int, chain, f) -> ConsParams:
    """Structural validation: primality, chain shape, f domains and ranges."""
    if not _is_prime(p):
        raise NotPrime(p)
    if k < 1:
        raise BadChain(f"k = {k} must be positive")
    if level < 2:
        raise BadChain(f"level = {level} must be at least 2")
    chain_t = tuple(chain)
    if len(chain_t) != level + 1:
        raise BadChain(f"need {level + 1} entries, got {len(chain_t)}")
    if chain_t[0] != k or chain_t[-1] != 0:
        raise BadChain(f"chain must run from {k} down to 0, got {chain_t}")
    if any(chain_t[i] <= chain_t[i + 1] for i in range(level)):
        raise BadChain(f"chain must be strictly decreasing, got {chain_t}")
    f_t = tuple(tuple(table) for table in f)
    if len(f_t) != level - 1:
        raise BadFTable(0, f"need {level - 1} tables, got {len(f_t)}")
    for i in range(1, level):
        table = f_t[i - 1]
        domain = p ** chain_t[i]
        span = p ** (chain_t[i - 1] - chain_t[i])
        if len(table) != domain:
            raise BadFTable(i, f"domain size {len(table)}, expected {domain}")
        if any(not isinstance(v, int) or not 0 <= v < span for v in table):
            raise BadFTable(i, f"values must lie in 0..{span - 1}")
        if table[0] != 0:
            raise BadFTable(i, "f(0) must be 0")
    return ConsParams(p=p, k=k, level=level, chain=chain_t, f=f_t)


def psi(params: ConsParams, i: int, x: int) -> int:
    """1 + sum of p^{j_m} f_m(x mod p^{j_m}) for m = i..level-1, unreduced."""
    if not 1 <= i <= params.level - 1:
        raise IndexOutOfRange(i, params.level)
    total = 1
    for m in range(i, params.level):
        modulus = params.p ** params.chain[m]
        total += modulus * params.f[m - 1][x % modulus]
    return total


def params_violation(params: ConsParams, mode: str) -> ValidationError | None:
    """First failed condition for the given mode, without raising.

    Injectivity of every psi_i comes first; then the mode condition is
    scanned over all pairs (x, y) below p^k in lexicographic order.
    """
    if mode not in MODES:
        raise ValidationError(f"mode must be one of {MODES}, got {mode!r}")
    for i in range(1, params.level):
        domain = params.p ** params.chain[i]
        values = [psi(params, i, x) for x in range(domain)]
        if len(set(values)) != domain:
            return PsiNotInjective(i)
    size = params.size
    if mode == "paper":
        for x in range(size):
            px = psi(params, 1, x)
            for y in range(size):
                lhs = x + 2 * psi(params, 1, y)
                rhs = y + 2 * px
                if (lhs - rhs) % size:
                    return SymmetryConditionViolation(x, y, lhs, rhs)
    else:
        for x in range(size):
            px = psi(params, 1, x)
            for y in range(size):
                py = psi(params, 1, y)
                lhs = psi(params, 1, y + px) + px
                rhs = psi(params, 1, x + py) + py
                if (lhs - rhs) % size:
                    return ClosureViolation(x, y, lhs, rhs)
    return None


def validate_params(params: ConsParams, mode: str) -> None:
    bad = params_violation(params, mode)
    if bad is not None:
        raise bad


def build(params: ConsParams) -> CycleSet:
    """T[x][y] = (y + psi_1(x)) mod p^k, re-validated as a cycle set.

    Callers are expected to have passed validate_params in their chosen
    mode; the law check here runs regardless and fails loudly.
    """
    size = params.size
    shifts = [psi(params, 1, x) for x in range(size)]
    table = tuple(
        tuple((y + shifts[x]) % size for y in range(size)) for x in range(size)
    )
    try:
        return cs.validate(table)
    except ValidationError as err:
        raise BuiltTableInvalid(err) from err


class VerificationReport(NamedTuple):
    indecomposable: bool
    group_cyclic: bool
    group_order: int
    group_order_expected: int
    phi_generates: bool
    tower_sizes: tuple[int, ...]
    tower_expected: tuple[int, ...]
    level: int | None
    level_expected: int

    @property
    def tower_matches(self) -> bool:
        return self.tower_sizes == self.tower_expected

    @property
    def level_matches(self) -> bool:
        return self.level == self.level_expected

    @property
    def ok(self) -> bool:
        return (
            self.indecomposable
            and self.group_cyclic
            and self.group_order == self.group_order_expected
            and self.phi_generates
            and self.tower_matches
            and self.level_matches
        )


def verify_build(x: CycleSet, params: ConsParams) -> VerificationReport:
    """Compare a built table against everything the parameters promise.

    Each comparison is reported on its own; nothing is collapsed into a
    single verdict except the convenience property `ok`.
    """
    size = params.size
    group = cs.permutation_group(x)
    props = perm.group_properties(group)
    phi = tuple((i + 1) % size for i in range(size)) if x.n == size else None
    phi_generates = (
        phi is not None and phi in group and perm.perm_order(phi) == len(group)
    )
    return VerificationReport(
        indecomposable=cs.is_indecomposable(x),
        group_cyclic=props.is_cyclic,
        group_order=len(group),
        group_order_expected=size,
        phi_generates=phi_generates,
        tower_sizes=cs.retraction_tower_sizes(x),
        tower_expected=tuple(params.p**j for j in params.chain),
        level=cs.multipermutation_level(x),
        level_expected=params.level,
    )


def _f_tables(domain: int, span: int) -> Iterator[tuple[int, ...]]:
    """All tables of the given domain with f(0) = 0, lexicographically."""
    for rest in itertools.product(range(span), repeat=domain - 1):
        yield (0,) + rest


def enumerate_params(
    p: int, k: int, level: int, cap: int = 64
) -> Iterator[ConsParams]:
    """All structurally valid parameter sets, chains then families, in
    lexicographic order with f_1 varying slowest."""
    if not _is_prime(p):
        raise NotPrime(p)
    if k < 1:
        raise BadChain(f"k = {k} must be positive")
    if level < 2:
        raise BadChain(f"level = {level} must be at least 2")
    if p**k > cap:
        raise CapExceeded(p**k, cap)
    middles = itertools.combinations(range(1, k), level - 1)
    chains = sorted((k,) + tuple(sorted(mid, reverse=True)) + (0,) for mid in middles)
    for chain in chains:
        spaces = [
            _f_tables(p ** chain[i], p ** (chain[i - 1] - chain[i]))
            for i in range(1, level)
        ]
        for family in itertools.product(*spaces):
            yield make_params(p, k, level, chain, family)


def enumerate_construction(
    p: int, k: int, level: int, mode: str, cap: int = 64
) -> Iterator[tuple[ConsParams, CycleSet]]:
    """Parameter sets passing the chosen mode, with their built tables."""
    if mode not in MODES:
        raise ValidationError(f"mode must be one of {MODES}, got {mode!r}")
    for params in enumerate_params(p, k, level, cap=cap):
        if params_violation(params, mode) is None:
            yield params, build(params)


class CyclicAnalysis(NamedTuple):
    generator_index: int
    n_star: int
    divides: bool
    exponent_table: tuple[int, ...]
    congruence_ok: bool


def analyze_cyclic(x: CycleSet) -> CyclicAnalysis:
    """Cyclic-structure data of a cycle set with cyclic transitive group.

    The carrier is relabelled so 0 is an element whose row generates the
    group and label i is phi^i(0); rows then read off as powers of the
    full cycle.  n_star is the least shift under which rows repeat and
    always equals the retraction size; the exponent congruences
    j_i = j_{i + |tower_s|} (mod |tower_{s-1}|) are checked for every
    tower level s.
    """
    group = cs.permutation_group(x)
    props = perm.group_properties(group)
    if not props.is_cyclic:
        raise NotCyclicTransitive("group is not cyclic")
    if not props.is_transitive:
        raise NotCyclicTransitive("group is not transitive")
    n = x.n
    order = len(group)
    generator = None
    for i in range(n):
        if perm.perm_order(x.table[i]) == order:
            generator = i
            break
    if generator is None:
        raise NoGeneratorElement()
    phi = x.table[generator]
    old_of_new = [generator]
    for _ in range(n - 1):
        old_of_new.append(phi[old_of_new[-1]])
    if sorted(old_of_new) != list(range(n)):
        raise NotCyclicTransitive("generator row is not a full cycle")
    new_of_old = perm.invert(tuple(old_of_new))
    relabelled = cs.relabel(x, new_of_old)
    t = relabelled.table
    exponent_table = tuple(t[i][0] for i in range(n))
    for i in range(n):
        if t[i] != tuple((y + exponent_table[i]) % n for y in range(n)):
            raise AssertionError("relabelled row is not a power of the full cycle")
    n_star = next(
        m
        for m in range(1, n + 1)
        if all(exponent_table[(i + m) % n] == exponent_table[i] for i in range(n))
    )
    if n_star != len(set(t)):
        raise AssertionError("row period differs from the retraction size")
    tower = cs.retraction_tower_sizes(relabelled)
    congruence_ok = True
    for s in range(1, len(tower)):
        step = tower[s]
        modulus = tower[s - 1]
        for i in range(n):
            if (exponent_table[(i + step) % n] - exponent_table[i]) % modulus:
                congruence_ok = False
    return CyclicAnalysis(
        generator_index=generator,
        n_star=n_star,
        divides=n % n_star == 0,
        exponent_table=exponent_table,
        congruence_ok=congruence_ok,
    )
