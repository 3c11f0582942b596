"""Command-line front end: ``pavoid <verb> ...``.

Exit codes: 0 success (for ``contains``: true), 1 domain error or a false
``contains``/failing ``table``, 2 usage error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from . import asymptotics as asy
from .containment import contains, contains_oracle, witness
from .enumeration import ENUM_CAP, av_count, d_series
from .equivalence import rook_equivalent, strict_representative, wilf_check
from .errors import CapExceeded, EmptyPartition, PavoidError
from .gf import gf_avoid
from .partition import Partition, is_super_strict, parse_partition

SCHEMA_VERSION = "1"


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except PavoidError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("values must be positive integers")
    return out


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _fmt_float(x: float) -> str:
    return repr(float(x))


def _emit(args, doc: dict, text_lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=2))
    else:
        for line in text_lines:
            print(line)


def _sweep(fn: Callable[[int], int], ns: list[int], jobs: int) -> list[int]:
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, ns))
    return [fn(n) for n in ns]


class _AvCount:
    # picklable for process pools
    def __init__(self, mu: Partition):
        self.mu = mu

    def __call__(self, n: int) -> int:
        return av_count(self.mu, n, ENUM_CAP)


def _series_doc(args, mu: Partition, counts: list[int]) -> None:
    rows = [(n, c) for n, c in enumerate(counts, start=1)]
    if args.with_empty:
        rows.insert(0, (0, 1))
    doc = {"pattern": str(mu), "counts": [{"n": str(n), "count": str(c)} for n, c in rows]}
    _emit(args, doc, [f"{n} {c}" for n, c in rows])


# -- verbs ----------------------------------------------------------------------

def cmd_contains(args) -> int:
    alpha, mu = args.alpha, args.mu
    result = contains_oracle(alpha, mu) if args.oracle else contains(alpha, mu)
    doc: dict = {"alpha": str(alpha), "mu": str(mu), "contains": result}
    lines = ["true" if result else "false"]
    if args.witness and result:
        w = witness(alpha, mu).as_dict()
        doc["witness"] = {"rows": [str(i) for i in w["rows"]], "cols": [str(j) for j in w["cols"]]}
        lines.append("delete rows: " + (" ".join(map(str, w["rows"])) or "-"))
        lines.append("delete cols: " + (" ".join(map(str, w["cols"])) or "-"))
    _emit(args, doc, lines)
    return 0 if result else 1


def cmd_count(args) -> int:
    mu, n_max = args.mu, args.n_max
    ns = list(range(1, n_max + 1))
    if args.method == "brute":
        if not mu.parts:
            raise EmptyPartition("every partition contains the empty pattern")
        if n_max > ENUM_CAP:
            raise CapExceeded("n", n_max, ENUM_CAP)
        counts = _sweep(_AvCount(mu), ns, args.jobs)
    else:
        # D_n(mu): avoiders with exactly mu_1 - 1 part sizes
        counts = d_series(mu, n_max)[1:]
    _series_doc(args, mu, counts)
    return 0


def cmd_series(args) -> int:
    mu, n_max = args.mu, args.n_max
    if mu.parts and is_super_strict(mu):
        counts = [int(c) for c in gf_avoid(mu).series(n_max)[1:]]
    else:
        print(f"note: {mu} is not super-strict; counting by enumeration", file=sys.stderr)
        args.method = "brute"
        return cmd_count(args)
    _series_doc(args, mu, counts)
    return 0


def cmd_gf(args) -> int:
    f = gf_avoid(args.mu)
    if args.with_empty:
        f = f + 1
    _emit(args, {"pattern": str(args.mu), "gf": f.to_json(), "text": str(f)}, [str(f)])
    return 0


def cmd_equiv(args) -> int:
    p, q, n_max = args.p, args.q, args.n_max
    rook = rook_equivalent(p, q)
    wilf = wilf_check(p, q, n_max)
    rep_p, rep_q = strict_representative(p), strict_representative(q)
    doc = {"p": str(p), "q": str(q), "rook_equivalent": rook,
           "wilf_checked_to_N": wilf, "N": str(n_max),
           "strict_rep_p": str(rep_p), "strict_rep_q": str(rep_q)}
    lines = [f"rook_equivalent {str(rook).lower()}",
             f"wilf_checked_to_{n_max} {str(wilf).lower()}",
             f"strict_rep_p {rep_p}", f"strict_rep_q {rep_q}"]
    _emit(args, doc, lines)
    return 0


def cmd_asymptotics(args) -> int:
    mu = args.mu
    preds = asy.predictions(mu)
    rows = asy.ratio_report(mu, args.n)
    out_rows, lines = [], []
    lines.append("leading term: " + preds[0].describe())
    for alt in preds[1:]:
        lines.append(f"{alt.tag}: " + alt.describe())
    lines.append("n observed predicted ratio source")
    for r in rows:
        rec = {"n": str(r.n), "observed": str(r.observed),
               "predicted": _fmt_float(r.predicted), "ratio": _fmt_float(r.ratio), "source": r.source}
        for alt in preds[1:]:
            rec[alt.tag] = _fmt_float(alt.value(r.n))
        out_rows.append(rec)
        lines.append(f"{r.n} {r.observed} {r.predicted:.6g} {r.ratio:.6f} {r.source}")
    doc = {"pattern": str(mu), "leading_term": preds[0].describe(),
           "variants": {alt.tag: alt.describe() for alt in preds[1:]}, "rows": out_rows}
    _emit(args, doc, lines)
    return 0


def _table_row(mu: Partition, n_max: int) -> bool:
    return all(asy.closed_form(mu, n) == av_count(mu, n) for n in range(1, n_max + 1))


class _TableRow:
    def __init__(self, n_max: int):
        self.n_max = n_max

    def __call__(self, mu: Partition) -> bool:
        return _table_row(mu, self.n_max)


def cmd_table(args) -> int:
    if args.n_max > ENUM_CAP:
        raise CapExceeded("n", args.n_max, ENUM_CAP)
    mus = list(asy.SUPPORTED_CLOSED_FORMS)
    fn = _TableRow(args.n_max)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(fn, mus))
    else:
        results = [fn(mu) for mu in mus]
    doc = {"n_max": str(args.n_max),
           "rows": [{"pattern": str(m), "pass": ok} for m, ok in zip(mus, results)]}
    _emit(args, doc, [f"({m}) {'PASS' if ok else 'FAIL'}" for m, ok in zip(mus, results)])
    return 0 if all(results) else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes for sweeps")

    parser = argparse.ArgumentParser(prog="pavoid", description="Pattern avoidance in integer partitions.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("contains", parents=[common], help="does alpha contain mu")
    p.add_argument("alpha", type=_partition_arg)
    p.add_argument("mu", type=_partition_arg)
    p.add_argument("--witness", action="store_true", help="print rows and columns to delete")
    p.add_argument("--oracle", action="store_true", help="use the exhaustive decider")
    p.set_defaults(func=cmd_contains)

    for name, func, help_ in (("count", cmd_count, "avoidance counts n = 1..N"),
                              ("series", cmd_series, "counts from the generating function")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("mu", type=_partition_arg)
        p.add_argument("--n-max", type=_positive, default=20)
        p.add_argument("--with-empty", action="store_true", help="include n = 0")
        if name == "count":
            p.add_argument("--method", choices=("brute", "decomp"), default="brute",
                           help="decomp counts only D_n(mu), strict mu")
        p.set_defaults(func=func)

    p = sub.add_parser("gf", parents=[common], help="rational generating function")
    p.add_argument("mu", type=_partition_arg)
    p.add_argument("--with-empty", action="store_true", help="add the constant term 1")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("equiv", parents=[common], help="rook and Wilf equivalence")
    p.add_argument("p", type=_partition_arg)
    p.add_argument("q", type=_partition_arg)
    p.add_argument("--n-max", type=_positive, default=20)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("asymptotics", parents=[common], help="observed vs predicted growth")
    p.add_argument("mu", type=_partition_arg)
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated n values (each >= 2)")
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("table", parents=[common], help="check tabulated closed forms")
    p.add_argument("--n-max", type=_positive, default=25)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "asymptotics" and min(args.n) < 2:
        parser.error("asymptotics needs every n >= 2")
    try:
        return args.func(args)
    except PavoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
