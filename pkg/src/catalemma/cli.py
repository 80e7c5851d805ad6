"""Command-line front end: identity sweeps, involution tools, certificates.

Exit codes: 0 all checks pass, 1 a counterexample or verification failure
was found (the first one is printed), 2 usage errors.  All numeric output
is exact integer/rational text; there is no floating point anywhere.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from . import certrecords as cr
from . import summation as sm
from . import termparse as tp
from . import trees
from .identities import (
    IdentityReport,
    a_recurrence_table,
    catalan,
    f_value,
    lhs_identity1,
    lhs_identity2prime,
    lhs_identity3,
    rhs_identity3,
)

USAGE_ERROR = 2


def _parse_range(text: str) -> range:
    """'A..B' (inclusive) or a single integer 'A'."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _parse_params(text: str | None) -> tuple[str, ...]:
    if not text:
        return ()
    return tuple(p.strip() for p in text.split(",") if p.strip())


def _parse_samples(entries: Iterable[str]) -> dict[str, list[int]]:
    out: dict[str, list[int]] = {}
    for entry in entries:
        if "=" not in entry:
            raise argparse.ArgumentTypeError(f"expected NAME=v1,v2,... got {entry!r}")
        name, values = entry.split("=", 1)
        out[name.strip()] = [int(v) for v in values.split(",")]
    return out


class _Report:
    """Collects per-instance results and renders text or json."""

    def __init__(self, command: str, fmt: str):
        self.command = command
        self.fmt = fmt
        self.checked = 0
        self.passed = 0
        self.failures: list[str] = []
        self.notes: list[str] = []
        self.lines: list[str] = []

    def check(self, ok: bool, line: str) -> bool:
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(line)
        if self.fmt == "json":
            self.lines.append(line)
        return ok

    def note(self, text: str) -> None:
        self.notes.append(text)

    def finish(self) -> int:
        ok = not self.failures
        if self.fmt == "json":
            payload = {
                "command": self.command,
                "checked": self.checked,
                "passed": self.passed,
                "failures": self.failures,
                "notes": self.notes,
                "lines": self.lines,
                "ok": ok,
            }
            print(json.dumps(payload, indent=2))
        else:
            for note in self.notes:
                print(note)
            if ok:
                print(f"OK {self.passed}/{self.checked}")
            else:
                print(self.failures[0])
                print(f"FAIL {self.passed}/{self.checked}")
        return 0 if ok else 1


# ---------------------------------------------------------------------------
# verify subcommands
# ---------------------------------------------------------------------------


def _verify_identity1(args) -> int:
    report = _Report("identity1", args.format)
    for s in args.s:
        value = lhs_identity1(s)
        if s == 0:
            ok = value == 1
            report.check(ok, f"s=0: value={value} (documented exception, expected 1)")
            if ok:
                report.note("note: s=0 evaluates to 1 (documented exception)")
        else:
            report.check(value == 0, f"FAIL identity1 s={s}: value={value}, expected 0")
    return report.finish()


def _verify_identity2prime(args) -> int:
    report = _Report("identity2prime", args.format)
    m_range = args.m if args.m is not None else range(1, args.l.stop)
    for l in args.l:
        for m in m_range:
            if not 1 <= m <= l:
                continue
            lhs = lhs_identity2prime(l, m)
            rhs = (-1) ** (m & 1) * catalan(m - 1)
            rep = IdentityReport("identity2prime", (("l", l), ("m", m)), lhs, rhs)
            report.check(rep.ok, rep.line())
    return report.finish()


def _verify_identity3(args) -> int:
    report = _Report("identity3", args.format)
    for m in args.m:
        for offset in args.l_offset:
            l = m + offset
            rep = IdentityReport(
                "identity3",
                (("l", l), ("m", m)),
                lhs_identity3(l, m),
                rhs_identity3(l, m),
            )
            report.check(rep.ok, rep.line())
    return report.finish()


def _verify_recurrence_a(args) -> int:
    report = _Report("recurrenceA", args.format)
    for l in args.l:
        table = a_recurrence_table(l, l)
        for m in range(1, l + 1):
            rep = IdentityReport(
                "recurrenceA", (("l", l), ("m", m)), table[m], lhs_identity2prime(l, m)
            )
            report.check(rep.ok, rep.line())
    return report.finish()


def _verify_f_induction(args) -> int:
    report = _Report("f-induction", args.format)
    for m in args.m:
        for extra in args.l_extra:
            l = 2 * m + 1 + extra
            base = f_value(l, 1)
            report.check(base == 1, f"FAIL f(1) at l={l}: {base}")
            # replay the induction step: -(u+1) f(u) + (u+2) f(u+1) = 1
            for u in range(1, m):
                step = -(u + 1) * f_value(l, u) + (u + 2) * f_value(l, u + 1)
                report.check(
                    step == 1, f"FAIL induction step u={u}, l={l}: {step} != 1"
                )
            final = f_value(l, m)
            report.check(final == 1, f"FAIL f({m}) at l={l}: {final}")
    return report.finish()


# ---------------------------------------------------------------------------
# involution subcommands
# ---------------------------------------------------------------------------


def _involution_census(args) -> int:
    if args.s is None and (args.l is None or args.m is None):
        print("census needs either --s or both --l and --m", file=sys.stderr)
        return USAGE_ERROR
    fmt = args.format
    if args.s is not None:
        report = _Report("involution-census", fmt)
        for s in args.s:
            rep = trees.census1(s)
            expected_fixed = 1 if s == 0 else 0
            ok = (
                rep.total == trees.creatures1_count(s)
                and rep.fixed_points == expected_fixed
                and (s == 0 or rep.even_leaves == rep.odd_leaves)
            )
            report.check(
                ok,
                f"s={s}: total={rep.total} even={rep.even_leaves} "
                f"odd={rep.odd_leaves} fixed={rep.fixed_points}",
            )
        return report.finish()
    report = _Report("involution-census", fmt)
    for l in args.l:
        for m in args.m:
            if l <= m:
                continue
            rep = trees.census3(l, m)
            ok = (
                rep.fixed_points == trees.survivor_count(l, m)
                and rep.signed == rhs_identity3(l, m)
            )
            report.check(
                ok,
                f"l={l} m={m}: total={rep.total} odd={rep.odd_leaves} "
                f"even={rep.even_leaves} survivors={rep.fixed_points} "
                f"signed={rep.signed}",
            )
    return report.finish()


def _involution_trace(args) -> int:
    if args.creature is not None:
        if args.s is None:
            print("trace --creature needs --s", file=sys.stderr)
            return USAGE_ERROR
        creature = trees.parse_labeled(args.creature)
        if creature.weight != args.s + 1:
            print(
                f"creature weight {creature.weight} does not match s={args.s} "
                f"(expected weight {args.s + 1})",
                file=sys.stderr,
            )
            return USAGE_ERROR
        for line in trees.orbit_trace(creature):
            print(line)
        return 0
    if args.pair is not None:
        if args.l is None or args.m is None:
            print("trace --pair needs --l and --m", file=sys.stderr)
            return USAGE_ERROR
        pair = trees.parse_pair(args.pair, args.l, args.m)
        print(trees.serialize_pair(pair))
        image = trees.involution3(pair)
        if image is trees.SURVIVOR:
            print("survivor")
        else:
            print(trees.serialize_pair(image))
        return 0
    print("trace needs --creature or --pair", file=sys.stderr)
    return USAGE_ERROR


# ---------------------------------------------------------------------------
# certificate subcommands
# ---------------------------------------------------------------------------


def _emit_record(record: cr.CertificateRecord, args) -> None:
    text = cr.to_json(record) if args.format == "json" else cr.to_text(record)
    if args.emit:
        cr.save(record, args.emit, args.format)
    print(text, end="")


def _gosper_cmd(args) -> int:
    term = tp.parse_term(args.expr, args.var, _parse_params(args.params))
    hyper = sm.hyperterm(term)
    result = sm.gosper(hyper)
    if isinstance(result, sm.NotGosperSummable):
        print(f"not Gosper-summable (stage: {result.stage}; {result.detail})")
        return 1
    record = cr.record_from_gosper(args.id, term, result)
    _emit_record(record, args)
    return 0 if record.verdict == "verified" else 1


def _zeilberger_cmd(args) -> int:
    params = _parse_params(args.params)
    term = tp.parse_term(args.expr, args.sumvar, (args.recvar, *params))
    bi = sm.bivariate_hyperterm(term, args.recvar)
    if not bi.check_compatibility():
        print("mixed-shift compatibility check failed", file=sys.stderr)
        return 1
    samples = _parse_samples(args.param_samples or [])
    result = sm.zeilberger(
        bi, args.max_order, rhs_param_samples=samples or None
    )
    if isinstance(result, sm.NoRecurrenceFound):
        stages = ", ".join(f"order {j}: {stage}" for j, stage in result.stages)
        print(f"no recurrence up to order {result.max_order} ({stages})")
        return 1
    record = cr.record_from_zeilberger(args.id, term, args.recvar, result, samples)
    _emit_record(record, args)
    return 0 if record.verdict == "verified" else 1


def _recheck_cmd(args) -> int:
    record = cr.load(args.file)
    print(f"{record.identity} [{record.kind}]: {record.verdict}")
    return 0 if record.verdict == "verified" else 1


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalemma",
        description="Exact verification workbench for Catalan-number identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="sweep an identity over a parameter range")
    vsub = verify.add_subparsers(dest="identity", required=True)

    p = vsub.add_parser("identity1", help="alternating Catalan sum is zero")
    p.add_argument("--s", type=_parse_range, required=True, metavar="A..B")
    _add_format(p)
    p.set_defaults(func=_verify_identity1)

    p = vsub.add_parser("identity2prime", help="composition sum equals signed Catalan")
    p.add_argument("--l", type=_parse_range, required=True, metavar="A..B")
    p.add_argument("--m", type=_parse_range, default=None, metavar="A..B")
    _add_format(p)
    p.set_defaults(func=_verify_identity2prime)

    p = vsub.add_parser("identity3", help="shifted alternating sum equals binomial")
    p.add_argument("--m", type=_parse_range, required=True, metavar="A..B")
    p.add_argument(
        "--l-offset", dest="l_offset", type=_parse_range, required=True, metavar="A..B",
        help="offsets d checked at l = m + d",
    )
    _add_format(p)
    p.set_defaults(func=_verify_identity3)

    p = vsub.add_parser("recurrenceA", help="recurrence table matches brute force")
    p.add_argument("--l", type=_parse_range, required=True, metavar="A..B")
    _add_format(p)
    p.set_defaults(func=_verify_recurrence_a)

    p = vsub.add_parser("f-induction", help="normalized sum is 1 by induction replay")
    p.add_argument("--m", type=_parse_range, required=True, metavar="A..B")
    p.add_argument(
        "--l-extra", dest="l_extra", type=_parse_range, default=range(0, 1),
        metavar="A..B", help="offsets e checked at l = 2m + 1 + e",
    )
    _add_format(p)
    p.set_defaults(func=_verify_f_induction)

    involution = sub.add_parser("involution", help="censuses and orbit traces")
    isub = involution.add_subparsers(dest="action", required=True)

    p = isub.add_parser("census", help="count creatures by leaf parity")
    p.add_argument("--s", type=_parse_range, default=None, metavar="A..B")
    p.add_argument("--l", type=_parse_range, default=None, metavar="A..B")
    p.add_argument("--m", type=_parse_range, default=None, metavar="A..B")
    _add_format(p)
    p.set_defaults(func=_involution_census)

    p = isub.add_parser("trace", help="print one involution orbit")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--creature", default=None, help='labeled tree text, e.g. "(1,2)"')
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--pair", default=None, help='pair text, e.g. "(1,1)|2"')
    _add_format(p)
    p.set_defaults(func=_involution_trace)

    p = sub.add_parser("gosper", help="indefinite summability certificate")
    p.add_argument("expr")
    p.add_argument("--var", required=True, help="summation variable")
    p.add_argument("--params", default=None, help="comma-separated parameter symbols")
    p.add_argument("--id", default="adhoc", help="identity id recorded in the output")
    p.add_argument("--emit", default=None, metavar="FILE", help="write the record here")
    _add_format(p)
    p.set_defaults(func=_gosper_cmd)

    p = sub.add_parser("zeilberger", help="creative-telescoping recurrence")
    p.add_argument("expr")
    p.add_argument("--sumvar", required=True)
    p.add_argument("--recvar", required=True)
    p.add_argument("--params", default=None, help="extra parameters beyond the recvar")
    p.add_argument("--max-order", dest="max_order", type=int, default=2)
    p.add_argument(
        "--param-samples", dest="param_samples", action="append", metavar="NAME=v1,v2",
        help="parameter values used for boundary sampling and replay",
    )
    p.add_argument("--id", default="adhoc")
    p.add_argument("--emit", default=None, metavar="FILE")
    _add_format(p)
    p.set_defaults(func=_zeilberger_cmd)

    p = sub.add_parser("recheck", help="reload a certificate and recompute its verdict")
    p.add_argument("file")
    _add_format(p)
    p.set_defaults(func=_recheck_cmd)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (tp.ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
