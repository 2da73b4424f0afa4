"""Command-line front end.

Every operation is exposed as a subcommand with machine-readable output:
--format json wraps the result in a document {command, config, result,
timing} with sorted keys; --format text prints the bare result (for
`enumerate` this is the exact line notation, suitable for golden-file
comparison); --format csv emits flat rows.

Exit codes: 0 success/verified, 2 counterexample found (a discovery, not
an error), 1 usage or resource problems.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from laver import __version__, conjectures, ordinals, words
from laver.crit import act_on_gamma, crit, in_range, least_range_witness
from laver.errors import LaverError
from laver.kernels import BACKEND
from laver.table import DEFAULT_ENTRY_CAP, TableStack

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COUNTEREXAMPLE = 2

# frozen regression vectors for `selftest`
_SELFTEST_PREFIX = (
    "γ_0",
    "γ_1",
    '1"γ_1',
    "γ_2",
    '3"γ_1',
    "γ_3",
    '7"γ_1',
    '4"γ_3',
    '3"γ_2',
    '2"γ_2',
    '1"γ_2',
    "γ_4",
    '15"γ_1',
    '12"γ_3',
    '3"γ_3',
)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract reserves 2 for
    counterexamples, so remap to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_ERROR)


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--cache-dir",
        default=None,
        help="table cache directory (default $LAVER_CACHE_DIR or ./laver-cache)",
    )
    common.add_argument("--no-cache", action="store_true", help="run without a table cache")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--workers", type=int, default=1, help="parallel sweep workers")
    common.add_argument(
        "--max-entries",
        type=int,
        default=DEFAULT_ENTRY_CAP,
        help="hard cap on stored table entries per build",
    )

    parser = _Parser(prog="laver", description=__doc__)
    parser.add_argument("--version", action="version", version=f"laver {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("build", parents=[common], help="build (and cache) A_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dump", action="store_true", help="include the full rows")

    for name, args_ in (
        ("apply", ("a", "b")),
        ("period", ("a",)),
        ("threshold", ("a",)),
        ("compose", ("a", "b")),
    ):
        p = sub.add_parser(name, parents=[common], help=f"{name} in A_n")
        p.add_argument("--n", type=int, required=True)
        for arg in args_:
            p.add_argument(f"--{arg}", type=int, required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a word in A_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True, help="e.g. '(1*1)*(1*1)' or '2*3'")

    p = sub.add_parser("crit", parents=[common], help="critical-point index")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--a", type=int)
    g.add_argument("--word")
    p.add_argument("--bound", type=int, default=12, help="rank bound for word searches")

    p = sub.add_parser("act", parents=[common], help="index of a . gamma_k")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)

    p = sub.add_parser("range", parents=[common], help="is gamma_G in range(a)?")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run a conjecture sweep")
    p.add_argument("which", choices=conjectures.VERIFIER_IDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--upto", action="store_true", help="sweep every applicable rank <= n")
    p.add_argument(
        "--max-counterexamples",
        type=int,
        default=conjectures.DEFAULT_MAX_COUNTEREXAMPLES,
        help="report cap; 0 keeps every violation",
    )
    g = p.add_mutually_exclusive_group()
    g.add_argument("--wide", dest="wide", action="store_true", default=None,
                   help="sweep a < 2^n (wth forms)")
    g.add_argument("--narrow", dest="wide", action="store_false",
                   help="sweep a < 2^(n-1) (wth forms)")

    p = sub.add_parser("enumerate", parents=[common], help="ordinals below gamma_N")
    p.add_argument("--below", type=int, required=True)

    sub.add_parser("selftest", parents=[common], help="run the frozen regression vectors")
    return parser


def _resolve_cache_dir(args):
    if args.no_cache:
        return None
    return args.cache_dir or os.environ.get("LAVER_CACHE_DIR") or "./laver-cache"


def _stack(args) -> TableStack:
    return TableStack(cache_dir=_resolve_cache_dir(args), max_entries=args.max_entries)


def _document(argv, args, result, elapsed) -> dict:
    return {
        "command": list(argv),
        "config": {
            "cache_dir": _resolve_cache_dir(args),
            "workers": args.workers,
            "max_entries": args.max_entries,
        },
        "result": result,
        "timing": {"seconds": round(elapsed, 6)},
    }


def _emit_json(doc):
    print(json.dumps(doc, sort_keys=True, indent=2))


def _emit_csv(rows, header):
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


# ---------------------------------------------------------------------------
# subcommand bodies: each returns (result, text_renderer, csv_layout, exit_code)
# ---------------------------------------------------------------------------


def _scalar_result(value):
    return {"value": value}, lambda r: print(r["value"]), (("value",), [(value,)]), EXIT_OK


def _run_build(args, stack):
    t = stack.table(args.n)
    result = {
        "rank": t.n,
        "size": t.size,
        "entries": t.total_entries,
        "backend": BACKEND,
        "cache_dir": _resolve_cache_dir(args),
    }
    rows = None
    if args.dump:
        result["rows"] = [[int(v) for v in t.row(a)] for a in range(t.size)]
        rows = [
            (a, b + 1, v)
            for a in range(t.size)
            for b, v in enumerate(t.row(a))
        ]

    def text(r):
        print(f"A_{r['rank']}: {r['entries']} stored entries ({r['backend']} backend)")
        if args.dump:
            for a in range(t.size):
                print(f"{a}: {' '.join(str(int(v)) for v in t.row(a))}")

    csv_layout = (("element", "column", "value"), rows) if rows else (
        ("rank", "size", "entries"),
        [(t.n, t.size, t.total_entries)],
    )
    return result, text, csv_layout, EXIT_OK


def _run_verify(args, stack):
    which = args.which
    max_cx = args.max_counterexamples if args.max_counterexamples > 0 else None
    if args.upto:
        if which == "twin":
            ranks = range(1, args.n + 1, 2)
        elif which == "lemma59":
            ranks = range(2, args.n + 1, 2)
        elif which in ("uh", "wuh", "lemma53"):
            ranks = range(2, args.n + 1)
        else:
            ranks = range(1, args.n + 1)
    else:
        ranks = [args.n]
    reports = [
        conjectures.run_verifier(
            which, n, stack, workers=args.workers, max_counterexamples=max_cx, wide=args.wide
        )
        for n in ranks
    ]
    result = [r.payload() for r in reports]

    def text(_):
        for r in reports:
            line = (
                f"{r.conjecture} n={r.n}: {r.status}"
                f" ({r.checked} checked, {len(r.counterexamples)} counterexamples)"
            )
            print(line)
            for cx in r.counterexamples:
                print(f"  {json.dumps(cx, sort_keys=True)}")

    rows = [
        (r.conjecture, r.n, r.status, r.checked, len(r.counterexamples))
        for r in reports
    ]
    code = EXIT_OK
    if any(r.status == "resource-limited" for r in reports):
        code = EXIT_ERROR
    if any(r.status == "counterexample" for r in reports):
        code = EXIT_COUNTEREXAMPLE
    return result, text, (("conjecture", "n", "status", "checked", "counterexamples"), rows), code


def _run_enumerate(args, stack):
    reps = ordinals.enumerate_below(args.below, stack)
    result = ordinals.render_json(reps)

    def text(_):
        sys.stdout.write(ordinals.render_text(reps))

    rows = [
        (d["kind"], d.get("coeff", ""), d.get("gamma", d.get("index")), d.get("interval", ""))
        for d in result
    ]
    return result, text, (("kind", "coeff", "gamma", "interval"), rows), EXIT_OK


def _run_selftest(args, stack):
    checks = []

    def check(name, fn):
        try:
            ok = bool(fn())
            note = ""
        except Exception as e:  # a crash is a failed check, not a crash of the suite
            ok = False
            note = f"{type(e).__name__}: {e}"
        checks.append({"name": name, "ok": ok, "note": note})

    check("apply_5(5,1) == 6", lambda: stack.apply_in(5, 5, 1) == 6)
    check("threshold_5(5) == 2", lambda: stack.threshold_in(5, 5) == 2)
    check("gamma_5 not in range(6)", lambda: not in_range(6, 5, stack))
    check("threshold_10(34) == 5", lambda: stack.threshold_in(10, 34) == 5)
    check("compose_9(34,4) == 242", lambda: stack.compose_in(9, 34, 4) == 242)
    check("gamma_9 not in range(242)", lambda: not in_range(242, 9, stack))
    check("apply_9(48,51) == 243", lambda: stack.apply_in(9, 48, 51) == 243)
    check("apply_9(192,51) == 243", lambda: stack.apply_in(9, 192, 51) == 243)
    check(
        "48 and 192 both send gamma_7 to gamma_9",
        lambda: act_on_gamma(48, 7, stack, 10).expect_certified() == 9
        and act_on_gamma(192, 7, stack, 10).expect_certified() == 9,
    )
    check("51 sends gamma_3 to gamma_7", lambda: act_on_gamma(51, 3, stack, 8).expect_certified() == 7)
    check("least range witness of gamma_7 is 15, not 51", lambda: least_range_witness(7, stack) == 15)
    check(
        "least witness separates 48 and 192",
        lambda: stack.apply_in(9, 48, 15) != stack.apply_in(9, 192, 15),
    )
    check(
        "enumeration prefix below gamma_5",
        lambda: ordinals.render_text(ordinals.enumerate_below(5, stack))
        == "".join(line + "\n" for line in _SELFTEST_PREFIX),
    )
    ok = all(c["ok"] for c in checks)
    result = {"ok": ok, "checks": checks}

    def text(_):
        for c in checks:
            mark = "ok" if c["ok"] else "FAIL"
            suffix = f" ({c['note']})" if c["note"] else ""
            print(f"{mark:4s} {c['name']}{suffix}")
        print(f"selftest: {'ok' if ok else 'FAILED'}")

    rows = [(c["name"], c["ok"]) for c in checks]
    return result, text, (("check", "ok"), rows), EXIT_OK if ok else EXIT_ERROR


def _dispatch(args, stack):
    if args.cmd == "build":
        return _run_build(args, stack)
    if args.cmd == "apply":
        return _scalar_result(stack.table(args.n).apply(args.a, args.b))
    if args.cmd == "period":
        return _scalar_result(stack.table(args.n).period(args.a))
    if args.cmd == "threshold":
        return _scalar_result(stack.table(args.n).threshold(args.a))
    if args.cmd == "compose":
        return _scalar_result(stack.table(args.n).compose(args.a, args.b))
    if args.cmd == "eval":
        w = words.parse_word(args.word)
        return _scalar_result(words.eval_word(w, stack.table(args.n)))
    if args.cmd == "crit":
        if args.a is not None:
            res = crit(args.a)
        else:
            res = crit(words.parse_word(args.word), stack, args.bound)
        result = {"index": res.value, "certified": res.certified, "bound": res.bound}
        status = "certified" if res.certified else "uncertified"

        def text(r):
            print(f"gamma_{r['index']} ({status}, bound {r['bound']})")

        return result, text, (("index", "certified", "bound"), [(res.value, res.certified, res.bound)]), EXIT_OK
    if args.cmd == "act":
        res = act_on_gamma(args.a, args.k, stack, args.bound)
        result = {"index": res.value, "certified": res.certified, "bound": res.bound}
        status = "certified" if res.certified else "uncertified"

        def text(r):
            print(f"gamma_{r['index']} ({status}, bound {r['bound']})")

        return result, text, (("index", "certified", "bound"), [(res.value, res.certified, res.bound)]), EXIT_OK
    if args.cmd == "range":
        member = in_range(args.a, args.gamma, stack)
        result = {"member": member}
        return result, lambda r: print("true" if r["member"] else "false"), (
            ("member",),
            [(member,)],
        ), EXIT_OK
    if args.cmd == "verify":
        return _run_verify(args, stack)
    if args.cmd == "enumerate":
        return _run_enumerate(args, stack)
    if args.cmd == "selftest":
        return _run_selftest(args, stack)
    raise AssertionError(f"unhandled command {args.cmd!r}")


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    t0 = time.perf_counter()
    try:
        stack = _stack(args)
        result, text_renderer, (header, rows), code = _dispatch(args, stack)
    except LaverError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        _emit_json(_document(argv, args, result, elapsed))
    elif args.format == "csv":
        _emit_csv(rows or [], header)
    else:
        text_renderer(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
