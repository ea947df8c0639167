"""Command-line front end.

Machine mode (the default) prints stable `key: value` lines and document
text, byte-identical across runs; --human only adds a timestamp comment.
Exit codes: 0 all checks passed, 1 a validation or check failed, 2 usage
or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import brace as br
from . import construction as cons
from . import cycle_set as cs
from . import extension as ext
from . import formats, perm, ybe
from .tables import ValidationError

SAMPLE_TRIALS = 1000


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit_report(rows: list[tuple[str, object]], human: bool) -> None:
    if human:
        stamp = datetime.now(timezone.utc).isoformat()
        print(f"# generated: {stamp}")
    for key, value in rows:
        print(f"{key}: {value}")


def _emit_document(doc: formats.Document, human: bool) -> None:
    if human:
        stamp = datetime.now(timezone.utc).isoformat()
        print(f"# generated: {stamp}")
    sys.stdout.write(formats.emit(doc))


def _load(path: str) -> formats.Document:
    return formats.parse(Path(path).read_text(encoding="utf-8"))


def _triple(t: tuple[int, ...]) -> str:
    return " ".join(str(v) for v in t)


def _cons_params(doc: formats.ConsDoc) -> cons.ConsParams:
    return cons.make_params(doc.p, doc.k, doc.level, doc.chain, doc.f)


# -- check -------------------------------------------------------------------


def _check_bop(doc: formats.BopDoc) -> tuple[list[tuple[str, object]], int]:
    rows: list[tuple[str, object]] = [("kind", "bop"), ("n", doc.n)]
    try:
        x = cs.validate(doc.table)
    except ValidationError as err:
        rows += [("cycle_set", "FAIL"), ("error", str(err))]
        return rows, 1
    rows.append(("cycle_set", "ok"))
    rows.append(("nondegenerate", _yn(cs.is_nondegenerate(x))))
    rows.append(("indecomposable", _yn(cs.is_indecomposable(x))))
    rows.append(("irretractable", _yn(cs.is_irretractable(x))))
    mpl = cs.multipermutation_level(x)
    rows.append(("mpl", "none" if mpl is None else mpl))
    rows.append(("group_order", len(cs.permutation_group(x))))
    return rows, 0


def _check_sol(doc: formats.SolDoc) -> tuple[list[tuple[str, object]], int]:
    rows: list[tuple[str, object]] = [("kind", "sol"), ("n", doc.n)]
    m = ybe.BraidMap(n=doc.n, lam=doc.lam, tau=doc.tau)
    bad = ybe.braid_violation(m)
    code = 0
    if bad is None:
        rows.append(("braid", "ok"))
    else:
        rows.append(("braid", "FAIL"))
        rows.append(
            ("braid_violation",
             f"{_triple((bad.x, bad.y, bad.z))} -> {_triple(bad.lhs)} != {_triple(bad.rhs)}")
        )
        code = 1
    rows.append(("involutive", _yn(ybe.involutive_violation(m) is None)))
    nd = ybe.nondegeneracy(m)
    rows.append(("left_nondegenerate", _yn(nd.left)))
    rows.append(("right_nondegenerate", _yn(nd.right)))
    return rows, code


def _check_qsol(doc: formats.QsolDoc) -> tuple[list[tuple[str, object]], int]:
    rows: list[tuple[str, object]] = [("kind", "qsol"), ("n", doc.n)]
    m = ybe.QybeMap(n=doc.n, a=doc.a, b=doc.b)
    bad = ybe.qybe_violation(m)
    code = 0
    if bad is None:
        rows.append(("qybe", "ok"))
    else:
        rows.append(("qybe", "FAIL"))
        rows.append(
            ("qybe_violation",
             f"component {bad.component} at {_triple((bad.x, bad.y, bad.z))}")
        )
        code = 1
    rows.append(("unitary", _yn(ybe.unitary_violation(m) is None)))
    nd = ybe.nondegeneracy(m)
    rows.append(("left_nondegenerate", _yn(nd.left)))
    rows.append(("right_nondegenerate", _yn(nd.right)))
    return rows, code


def _check_brace(doc: formats.BraceDoc) -> tuple[list[tuple[str, object]], int]:
    rows: list[tuple[str, object]] = [("kind", "brace"), ("n", doc.n)]
    left = right = None
    try:
        left = br.validate_brace(doc.add, doc.circle, "left")
        rows.append(("left_brace", "yes"))
    except ValidationError as err:
        rows.append(("left_brace", "no"))
        rows.append(("error_left", str(err)))
    try:
        right = br.validate_brace(doc.add, doc.circle, "right")
        rows.append(("right_brace", "yes"))
    except ValidationError as err:
        rows.append(("right_brace", "no"))
        rows.append(("error_right", str(err)))
    rows.append(("two_sided", _yn(left is not None and right is not None)))
    some = left if left is not None else right
    if some is None:
        return rows, 1
    soc = sorted(br.socle(some))
    rows.append(("socle_size", len(soc)))
    rows.append(("socle", " ".join(str(v) for v in soc)))
    rows.append(("socle_series_length", len(br.socle_series(some))))
    return rows, 0


def _check_ring(doc: formats.RingDoc) -> tuple[list[tuple[str, object]], int]:
    rows: list[tuple[str, object]] = [("kind", "ring"), ("n", doc.n)]
    try:
        ring = br.validate_ring(doc.add, doc.mul)
    except ValidationError as err:
        rows += [("ring", "FAIL"), ("error", str(err))]
        return rows, 1
    rows.append(("ring", "ok"))
    rows.append(("nil", _yn(br.is_nil(ring))))
    index = br.nilpotency_index(ring)
    rows.append(("nilpotency_index", "none" if index is None else index))
    rows.append(("jacobson_radical", _yn(br.is_jacobson_radical(ring))))
    return rows, 0


def _check_cons(
    doc: formats.ConsDoc, mode: str | None
) -> tuple[list[tuple[str, object]], int]:
    rows: list[tuple[str, object]] = [
        ("kind", "cons"),
        ("p", doc.p),
        ("k", doc.k),
        ("level", doc.level),
        ("chain", _triple(doc.chain)),
    ]
    try:
        params = _cons_params(doc)
    except ValidationError as err:
        rows += [("params", "FAIL"), ("error", str(err))]
        return rows, 1
    rows.append(("params", "ok"))
    verdicts = {}
    for m in cons.MODES:
        bad = cons.params_violation(params, m)
        verdicts[m] = bad
        rows.append((f"mode_{m}", "ok" if bad is None else "fail"))
        if bad is not None:
            rows.append((f"{m}_detail", str(bad)))
    decisive = mode if mode is not None else "direct"
    return rows, 0 if verdicts[decisive] is None else 1


def cmd_check(args) -> int:
    doc = _load(args.file)
    if isinstance(doc, formats.BopDoc):
        rows, code = _check_bop(doc)
    elif isinstance(doc, formats.SolDoc):
        rows, code = _check_sol(doc)
    elif isinstance(doc, formats.QsolDoc):
        rows, code = _check_qsol(doc)
    elif isinstance(doc, formats.BraceDoc):
        rows, code = _check_brace(doc)
    elif isinstance(doc, formats.RingDoc):
        rows, code = _check_ring(doc)
    else:
        rows, code = _check_cons(doc, args.mode)
    _emit_report(rows, args.human)
    return code


# -- convert and dual --------------------------------------------------------


def _braid_of(doc: formats.SolDoc) -> ybe.BraidMap:
    return ybe.BraidMap(n=doc.n, lam=doc.lam, tau=doc.tau)


def _qybe_of(doc: formats.QsolDoc) -> ybe.QybeMap:
    return ybe.QybeMap(n=doc.n, a=doc.a, b=doc.b)


def _sol_doc(m: ybe.BraidMap) -> formats.SolDoc:
    return formats.SolDoc(n=m.n, lam=m.lam, tau=m.tau)


def _qsol_doc(m: ybe.QybeMap) -> formats.QsolDoc:
    return formats.QsolDoc(n=m.n, a=m.a, b=m.b)


def _some_brace(doc: formats.BraceDoc) -> br.FiniteBrace:
    try:
        return br.validate_brace(doc.add, doc.circle, "left")
    except ValidationError as left_err:
        try:
            return br.validate_brace(doc.add, doc.circle, "right")
        except ValidationError as right_err:
            raise ValidationError(
                f"not a brace on either side (left: {left_err}; right: {right_err})"
            )


def cmd_convert(args) -> int:
    doc = _load(args.file)
    to = args.to
    out: formats.Document | None = None
    if isinstance(doc, formats.BopDoc):
        x = cs.validate(doc.table)
        if to == "qsol":
            out = _qsol_doc(ybe.from_cycle_set(x))
        elif to == "sol":
            quantum = ybe.from_cycle_set(x)
            out = _sol_doc(ybe.flip_compose("pR", quantum))
    elif isinstance(doc, formats.QsolDoc):
        m = _qybe_of(doc)
        if to == "bop":
            out = formats.BopDoc(n=m.n, table=ybe.to_cycle_set(m).table)
        elif to == "sol":
            out = _sol_doc(ybe.flip_compose("pR", m))
    elif isinstance(doc, formats.SolDoc):
        m = _braid_of(doc)
        if to == "qsol":
            out = _qsol_doc(ybe.flip_compose("pR", m))
        elif to == "bop":
            quantum = ybe.flip_compose("pR", m)
            out = formats.BopDoc(n=m.n, table=ybe.to_cycle_set(quantum).table)
    elif isinstance(doc, formats.BraceDoc):
        if to == "sol":
            left = br.validate_brace(doc.add, doc.circle, "left")
            out = _sol_doc(br.solution_from_left_brace(left))
        elif to == "bop":
            right = br.validate_brace(doc.add, doc.circle, "right")
            out = formats.BopDoc(n=right.n, table=br.brace_to_lcs(right).cycle.table)
        elif to == "ring":
            some = _some_brace(doc)
            ring = br.validate_ring(some.add, br.ring_mult(some))
            out = formats.RingDoc(n=ring.n, add=ring.add, mul=ring.mul)
    elif isinstance(doc, formats.RingDoc):
        if to == "brace":
            ring = br.validate_ring(doc.add, doc.mul)
            b = br.brace_from_ring(ring)
            out = formats.BraceDoc(n=b.n, add=b.add, circle=b.circle)
    elif isinstance(doc, formats.ConsDoc):
        if to == "bop":
            params = _cons_params(doc)
            cons.validate_params(params, args.mode or "direct")
            out = formats.BopDoc(n=params.size, table=cons.build(params).table)
    if out is None:
        print(f"error: cannot convert {doc.kind} to {to}", file=sys.stderr)
        return 2
    _emit_document(out, args.human)
    return 0


def cmd_dual(args) -> int:
    doc = _load(args.file)
    if isinstance(doc, formats.BopDoc):
        x = cs.validate(doc.table)
        out: formats.Document = formats.BopDoc(n=x.n, table=cs.dual(x).table)
    elif isinstance(doc, formats.SolDoc):
        out = _sol_doc(ybe.flip_compose("pRp", _braid_of(doc)))
    elif isinstance(doc, formats.QsolDoc):
        out = _qsol_doc(ybe.flip_compose("pRp", _qybe_of(doc)))
    else:
        print(f"error: no dual for kind {doc.kind}", file=sys.stderr)
        return 2
    _emit_document(out, args.human)
    return 0


# -- retract, sgp, construct, enumerate ---------------------------------------


def cmd_retract(args) -> int:
    doc = _load(args.file)
    if not isinstance(doc, formats.BopDoc):
        print("error: retract expects a bop document", file=sys.stderr)
        return 2
    rows: list[tuple[str, object]] = [("kind", "bop"), ("n", doc.n)]
    try:
        x = cs.validate(doc.table)
    except ValidationError as err:
        rows += [("cycle_set", "FAIL"), ("error", str(err))]
        _emit_report(rows, args.human)
        return 1
    rows.append(("cycle_set", "ok"))
    rows.append(("tower", _triple(cs.retraction_tower_sizes(x))))
    mpl = cs.multipermutation_level(x)
    rows.append(("mpl", "none" if mpl is None else mpl))
    _emit_report(rows, args.human)
    return 0


def cmd_sgp(args) -> int:
    doc = _load(args.file)
    if not isinstance(doc, formats.BopDoc):
        print("error: sgp expects a bop document", file=sys.stderr)
        return 2
    rows: list[tuple[str, object]] = [("kind", "bop"), ("n", doc.n)]
    code = 0
    try:
        x = cs.validate(doc.table)
        ctx = ext.extension_context(x)
    except ValidationError as err:
        rows += [("extension", "FAIL"), ("error", str(err))]
        _emit_report(rows, args.human)
        return 1
    pair = ext.generator_relation_violation(ctx)
    if pair is None:
        rows.append(("generator_relations", "ok"))
    else:
        rows.append(("generator_relations", "FAIL"))
        rows.append(("relation_pair", _triple(pair)))
        code = 1
    rows.append(("sampled_trials", SAMPLE_TRIALS))
    rows.append(("sampled_bound", args.bound))
    rows.append(("sampled_seed", args.seed))
    bad = ext.sampled_brace_violation(
        ctx, bound=args.bound, trials=SAMPLE_TRIALS, seed=args.seed
    )
    if bad is None:
        rows.append(("sampled_brace", "ok"))
    else:
        rows.append(("sampled_brace", "FAIL"))
        rows.append(("sample_law", bad.law))
        code = 1
    ax = ext.retracted_extension(ctx)
    rows.append(("extension_order", ax.n))
    rows.append(("extension_brace", "ok"))
    _emit_report(rows, args.human)
    return code


def cmd_construct(args) -> int:
    doc = _load(args.file)
    if not isinstance(doc, formats.ConsDoc):
        print("error: construct expects a cons document", file=sys.stderr)
        return 2
    mode = args.mode or "direct"
    rows: list[tuple[str, object]] = [
        ("kind", "cons"),
        ("p", doc.p),
        ("k", doc.k),
        ("level", doc.level),
        ("chain", _triple(doc.chain)),
        ("mode", mode),
    ]
    try:
        params = _cons_params(doc)
        cons.validate_params(params, mode)
    except ValidationError as err:
        rows += [("params", "FAIL"), ("error", str(err))]
        _emit_report(rows, args.human)
        return 1
    rows.append(("params", "ok"))
    try:
        x = cons.build(params)
    except ValidationError as err:
        rows += [("built", "FAIL"), ("error", str(err))]
        _emit_report(rows, args.human)
        return 1
    rows.append(("n", x.n))
    for i, row in enumerate(x.table):
        rows.append((f"row{i}", _triple(row)))
    report = cons.verify_build(x, params)
    rows.append(("indecomposable", _yn(report.indecomposable)))
    rows.append(("group_cyclic", _yn(report.group_cyclic)))
    rows.append(("group_order", report.group_order))
    rows.append(("group_order_expected", report.group_order_expected))
    rows.append(("phi_generates", _yn(report.phi_generates)))
    rows.append(("tower", _triple(report.tower_sizes)))
    rows.append(("tower_expected", _triple(report.tower_expected)))
    rows.append(("mpl", "none" if report.level is None else report.level))
    rows.append(("mpl_expected", report.level_expected))
    rows.append(("verify", "ok" if report.ok else "fail"))
    _emit_report(rows, args.human)
    return 0


def cmd_enumerate_cycles(args) -> int:
    rows: list[tuple[str, object]] = [
        ("command", "enumerate_cycles"),
        ("n", args.n),
        ("filter", args.filter),
        ("canonical", _yn(args.canonical)),
    ]
    found = 0
    try:
        for x in cs.enumerate_cycle_sets(
            args.n, filter=args.filter, canonical=args.canonical
        ):
            rows.append(("result", " / ".join(_triple(row) for row in x.table)))
            found += 1
    except ValidationError as err:
        rows.append(("error", str(err)))
        _emit_report(rows, args.human)
        return 1
    rows.append(("results", found))
    _emit_report(rows, args.human)
    return 0


def cmd_enumerate_construct(args) -> int:
    mode = args.mode or "direct"
    rows: list[tuple[str, object]] = [
        ("command", "enumerate_construct"),
        ("p", args.p),
        ("k", args.k),
        ("level", args.n),
        ("mode", mode),
    ]
    found = 0
    try:
        for params, _x in cons.enumerate_construction(args.p, args.k, args.n, mode):
            desc = "chain=" + ",".join(str(j) for j in params.chain)
            for i, table in enumerate(params.f, start=1):
                desc += f" f{i}=" + ",".join(str(v) for v in table)
            rows.append(("result", desc))
            found += 1
    except ValidationError as err:
        rows.append(("error", str(err)))
        _emit_report(rows, args.human)
        return 1
    rows.append(("results", found))
    _emit_report(rows, args.human)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--human", action="store_true", help="prose output with a timestamp")
    common.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker threads (accepted for compatibility; runs single-threaded)")

    parser = argparse.ArgumentParser(
        prog="cycleset",
        description="Check, convert, and search cycle sets, braces, rings, and their solutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", parents=[common], help="validate a document")
    p_check.add_argument("file")
    p_check.add_argument("--mode", choices=cons.MODES, default=None)
    p_check.set_defaults(handler=cmd_check)

    p_convert = sub.add_parser("convert", parents=[common], help="convert between kinds")
    p_convert.add_argument("file")
    p_convert.add_argument("--to", required=True, choices=formats.KINDS)
    p_convert.add_argument("--mode", choices=cons.MODES, default=None)
    p_convert.set_defaults(handler=cmd_convert)

    p_retract = sub.add_parser("retract", parents=[common], help="retraction tower of a cycle set")
    p_retract.add_argument("file")
    p_retract.set_defaults(handler=cmd_retract)

    p_dual = sub.add_parser("dual", parents=[common], help="dual cycle set or dual solution")
    p_dual.add_argument("file")
    p_dual.set_defaults(handler=cmd_dual)

    p_sgp = sub.add_parser("sgp", parents=[common], help="structure-group checks and the finite quotient brace")
    p_sgp.add_argument("file")
    p_sgp.add_argument("--bound", type=int, default=3)
    p_sgp.add_argument("--seed", type=int, default=42)
    p_sgp.set_defaults(handler=cmd_sgp)

    p_cons = sub.add_parser("construct", parents=[common], help="build and verify from parameters")
    p_cons.add_argument("file")
    p_cons.add_argument("--mode", choices=cons.MODES, default=None)
    p_cons.set_defaults(handler=cmd_construct)

    p_enum = sub.add_parser("enumerate", help="exhaustive searches")
    enum_sub = p_enum.add_subparsers(dest="what", required=True)
    p_cycles = enum_sub.add_parser("cycles", parents=[common], help="all cycle sets of one size")
    p_cycles.add_argument("-n", type=int, required=True)
    p_cycles.add_argument("--filter", choices=sorted(cs.FILTERS), default="all")
    p_cycles.add_argument("--canonical", action="store_true")
    p_cycles.set_defaults(handler=cmd_enumerate_cycles)
    p_cons_search = enum_sub.add_parser("construct", parents=[common],
                                        help="parameter search at one prime power")
    p_cons_search.add_argument("-p", type=int, required=True)
    p_cons_search.add_argument("-k", type=int, required=True)
    p_cons_search.add_argument("-n", type=int, required=True, help="level")
    p_cons_search.add_argument("--mode", choices=cons.MODES, default=None)
    p_cons_search.set_defaults(handler=cmd_enumerate_construct)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except formats.ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
