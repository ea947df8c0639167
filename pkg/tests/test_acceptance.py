"""Acceptance scorecard.

Each test covers one numbered criterion and prints a single verdict
line, so a run of this file reads as a scorecard next to the pytest
summary.  Every check is exhaustive at the stated size or seeded
deterministically; there is no tolerance to tune.
"""

import itertools
import math
import random
import subprocess
import sys
import time

from cycleset import brace as br
from cycleset import construction as con
from cycleset import cycle_set as cs
from cycleset import extension as ext
from cycleset import formats as fmt
from cycleset import ybe

from conftest import ACCEPTANCE_LINES

from support import (
    C4,
    Z4_ADD,
    Z4_CIRCLE,
    all_cycle_sets,
    involutive_pairs,
    left_braces_up_to,
    right_braces_up_to,
    ut3_f2_ring,
)

FULLY_NONDEGENERATE = ybe.Nondegeneracy(True, True)


def report(num: int, ok: bool, desc: str) -> bool:
    verdict = "pass" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {num:2d}: {verdict}  {desc}")
    return ok


def test_criterion_01_table_solution_bijection():
    start = time.perf_counter()
    candidates = 0
    valid = 0
    bad = None
    for n in range(1, 5):
        perms = sorted(itertools.permutations(range(n)))
        for table in itertools.product(perms, repeat=n):
            candidates += 1
            try:
                x = cs.validate(table)
            except cs.ValidationError:
                continue
            valid += 1
            q = ybe.from_cycle_set(x)
            if (
                ybe.qybe_violation(q) is not None
                or ybe.unitary_violation(q) is not None
                or ybe.nondegeneracy(q) != FULLY_NONDEGENERATE
                or ybe.to_cycle_set(q).table != x.table
            ):
                bad = table
    elapsed = time.perf_counter() - start
    counts_ok = valid == 183 and candidates == sum(
        math.factorial(n) ** n for n in range(1, 5)
    )
    ok = bad is None and counts_ok and elapsed < 60.0
    assert report(
        1,
        ok,
        f"round trip and unitary quantum map on all {candidates} "
        f"bijective-row tables, n <= 4 ({valid} valid, {elapsed:.1f}s)",
    ), bad


def test_criterion_02_involutive_shortcut_agreement():
    cases = 0
    disagreements = 0
    for n in range(1, 4):
        for m in involutive_pairs(n):
            full = ybe.braid_violation(m) is None
            for which in (1, 2, 3):
                cases += 1
                if ybe.involutive_shortcut_check(m, which) != full:
                    disagreements += 1
    ok = disagreements == 0 and cases == 3 * (1 + 2 + 24)
    assert report(
        2,
        ok,
        f"single-condition braid shortcut agrees with the full check in "
        f"{cases} involutive cases, n <= 3 ({disagreements} disagreements)",
    )


def test_criterion_03_every_valid_table_is_nondegenerate():
    counts = {}
    degenerate = 0
    for n in range(1, 6):
        counts[n] = 0
        for x in cs.enumerate_cycle_sets(n):
            counts[n] += 1
            if not cs.is_nondegenerate(x):
                degenerate += 1
    ok = degenerate == 0 and counts == {1: 1, 2: 2, 3: 12, 4: 168, 5: 2640}
    assert report(
        3,
        ok,
        f"all {sum(counts.values())} cycle sets with n <= 5 have a "
        f"bijective diagonal ({degenerate} exceptions)",
    ), counts


def test_criterion_04_left_braces_yield_involutive_solutions():
    per_order = dict.fromkeys(range(1, 9), 0)
    failures = 0
    for b in left_braces_up_to(8):
        per_order[b.n] += 1
        r = br.solution_from_left_brace(b)
        if (
            ybe.braid_violation(r) is not None
            or ybe.involutive_violation(r) is not None
            or ybe.nondegeneracy(r) != FULLY_NONDEGENERATE
        ):
            failures += 1
    counts_ok = per_order == {1: 1, 2: 1, 3: 1, 4: 6, 5: 1, 6: 2, 7: 1, 8: 266}
    total = sum(per_order.values())
    ok = failures == 0 and counts_ok
    assert report(
        4,
        ok,
        f"all {total} left braces of order <= 8 give involutive "
        f"nondegenerate braid maps ({failures} failures)",
    ), per_order


def test_criterion_05_right_brace_lcs_round_trip():
    total = 0
    failures = 0
    for b in right_braces_up_to(8):
        total += 1
        lcs = br.brace_to_lcs(b)
        if br.lcs_violation(lcs.add, lcs.cycle.table) is not None:
            failures += 1
            continue
        again = br.lcs_to_brace(lcs.add, lcs.cycle.table)
        if again.add != b.add or again.circle != b.circle:
            failures += 1
    ok = failures == 0 and total == 279
    assert report(
        5,
        ok,
        f"linear cycle set round trip and both linearity laws on all "
        f"{total} right braces of order <= 8 ({failures} failures)",
    )


def test_criterion_06_nilpotent_ring_pipeline():
    add, mul = ut3_f2_ring()
    ring = br.validate_ring(add, mul)
    triples_vanish = all(
        mul[mul[a][b]][c] == 0
        for a in range(8)
        for b in range(8)
        for c in range(8)
    )
    some_pair = any(mul[a][b] != 0 for a in range(8) for b in range(8))
    b = br.brace_from_ring(ring)
    r = br.solution_from_left_brace(b)
    ok = (
        triples_vanish
        and some_pair
        and br.is_nil(ring)
        and br.nilpotency_index(ring) == 3
        and br.is_jacobson_radical(ring)
        and br.is_two_sided(b)
        and ybe.braid_violation(r) is None
        and ybe.involutive_violation(r) is None
        and ybe.nondegeneracy(r) == FULLY_NONDEGENERATE
    )
    assert report(
        6,
        ok,
        "strictly-upper-triangular mod-2 ring: nilpotency index exactly 3, "
        "Jacobson radical, two-sided brace, valid involutive solution",
    )


def test_criterion_07_socle_quotient_matches_retraction():
    total = 0
    mismatches = 0
    for b in right_braces_up_to(8):
        total += 1
        classes = br.brace_congruence_classes(b, br.socle(b))
        projection = cs.retraction(br.brace_to_lcs(b).cycle).projection
        groups: dict[int, list[int]] = {}
        for element, label in enumerate(projection):
            groups.setdefault(label, []).append(element)
        retraction_classes = tuple(
            tuple(members) for _, members in sorted(groups.items())
        )
        if classes != retraction_classes:
            mismatches += 1
    ok = mismatches == 0 and total == 279
    assert report(
        7,
        ok,
        f"socle congruence classes equal retraction classes element for "
        f"element on all {total} right braces of order <= 8 "
        f"({mismatches} mismatches)",
    )


def test_criterion_08_extension_laws_hold():
    total = 0
    failures = 0
    for x in all_cycle_sets(4):
        total += 1
        ctx = ext.extension_context(x)
        if not ext.check_generator_relations(ctx):
            failures += 1
            continue
        if not ext.check_right_brace_sampled(ctx, bound=3, trials=1000, seed=42):
            failures += 1
            continue
        rng = random.Random(7)
        vectors = (
            (1,) * x.n,
            tuple((i % 7) - 3 for i in range(x.n)),
            tuple(rng.randint(-3, 3) for _ in range(x.n)),
        )
        for v in vectors:
            expected = ext.sigma_of_vector(ctx, v)
            if any(
                ext.sigma_of_vector_shuffled(ctx, v, rng) != expected
                for _ in range(100)
            ):
                failures += 1
                break
    ok = failures == 0 and total == 183
    assert report(
        8,
        ok,
        f"generator relations, 1000 seeded vector triples, and 100-shuffle "
        f"order independence on all {total} cycle sets, n <= 4 "
        f"({failures} failures)",
    )


def test_criterion_09_retracted_extension_is_a_group_sized_brace():
    total = 0
    failures = 0
    for x in all_cycle_sets(4):
        if not cs.is_nondegenerate(x):
            continue
        total += 1
        b = ext.retracted_extension(ext.extension_context(x))
        try:
            br.validate_brace(b.add, b.circle, "right")
        except br.ValidationError:
            failures += 1
            continue
        if b.n != len(cs.permutation_group(x)):
            failures += 1
    ok = failures == 0 and total == 183
    assert report(
        9,
        ok,
        f"linear-extension retraction is a valid right brace of order "
        f"|G(X)| for all {total} cycle sets, n <= 4 ({failures} failures)",
    )


def test_criterion_10_construction_mode_split():
    params = con.make_params(2, 2, 2, (2, 1, 0), ((0, 1),))
    psi_ok = [con.psi(params, 1, x) for x in range(4)] == [1, 3, 1, 3]
    bad = con.params_violation(params, "paper")
    witness_ok = (
        isinstance(bad, con.SymmetryConditionViolation)
        and (bad.x, bad.y, bad.lhs, bad.rhs) == (0, 1, 6, 3)
        and con.params_violation(params, "direct") is None
    )
    paper_empty = list(con.enumerate_construction(2, 2, 2, "paper")) == []
    four_cycle_direct_only = any(
        x.table == C4 for _, x in con.enumerate_construction(2, 2, 2, "direct")
    )
    direct_total = 0
    direct_failures = 0
    for p, k in ((2, 2), (2, 3), (2, 4), (3, 2)):
        for level in range(2, min(k, 3) + 1):
            for hit_params, x in con.enumerate_construction(p, k, level, "direct"):
                direct_total += 1
                if not con.verify_build(cs.validate(x.table), hit_params).ok:
                    direct_failures += 1
    ok = (
        psi_ok
        and witness_ok
        and paper_empty
        and four_cycle_direct_only
        and direct_total == 7
        and direct_failures == 0
    )
    assert report(
        10,
        ok,
        "mode=paper is empty at (2,2,2) with the 6-vs-3 witness, the "
        "4-cycle table is accepted by mode=direct only, and all "
        f"{direct_total} direct hits over p^k <= 16 verify in full",
    )


def test_criterion_11_cli_determinism(tmp_path):
    add, mul = ut3_f2_ring()
    files = {
        "x.bop": fmt.emit(fmt.BopDoc(n=4, table=C4)),
        "x.sol": "sol v1\nn 2\nLAMBDA\n1 0\n1 0\nTAU\n1 0\n1 0\n",
        "x.qsol": "qsol v1\nn 2\nA\n1 1\n0 0\nB\n1 0\n1 0\n",
        "x.brace": fmt.emit(fmt.BraceDoc(n=4, add=Z4_ADD, circle=Z4_CIRCLE)),
        "x.ring": fmt.emit(fmt.RingDoc(n=8, add=add, mul=mul)),
        "x.cons": "cons v1\np 2\nk 2\nlevel 2\nchain 2 1 0\nf1 0 1\n",
    }
    for name, text in files.items():
        (tmp_path / name).write_text(text)
    path = lambda name: str(tmp_path / name)
    invocations = [
        ("check", path("x.bop")),
        ("check", path("x.sol")),
        ("check", path("x.qsol")),
        ("check", path("x.brace")),
        ("check", path("x.ring")),
        ("check", path("x.cons")),
        ("convert", path("x.bop"), "--to", "qsol"),
        ("convert", path("x.brace"), "--to", "ring"),
        ("dual", path("x.bop")),
        ("retract", path("x.bop")),
        ("sgp", path("x.bop")),
        ("construct", path("x.cons")),
        ("enumerate", "cycles", "-n", "3"),
        ("enumerate", "construct", "-p", "2", "-k", "3", "-n", "2"),
    ]
    differing = 0
    for argv in invocations:
        runs = [
            subprocess.run(
                [sys.executable, "-m", "cycleset", *argv],
                capture_output=True,
                text=True,
            )
            for _ in range(2)
        ]
        if (
            runs[0].stdout != runs[1].stdout
            or runs[0].returncode != runs[1].returncode
        ):
            differing += 1
    ok = differing == 0
    assert report(
        11,
        ok,
        f"{len(invocations)} CLI invocations byte-identical across two "
        f"consecutive runs ({differing} differing)",
    )
