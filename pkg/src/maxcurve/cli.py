"""Command-line front end.

    maxcurve verify hurwitz --n 3 --p 13 --k 1
    maxcurve search --family hurwitz --n 2 --p-max 13 --k-max 3
    maxcurve tables cor33
    maxcurve bounds-table --q-min 8 --q-max 64
    maxcurve covering-check --domain hermitian::13:1 --target fermat:7:13:1
    maxcurve semigroup --n 5 --l 2

Exit codes: 0 success, 1 usage or parameter error, 2 when a criterion and
a brute-force count disagree (or a covering check fails).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from ._intmath import is_prime, prime_power
from .bounds import Interval, QuadraticSurdBound, ladder
from .budget import fits_budget, resolve_budget
from .covering import verify_covering
from .criteria import (
    admissible_exponent_residues,
    fermat_criterion,
    generalized_report,
    hurwitz_criterion,
    hurwitz_modulus,
)
from .curves import PlaneCurve, make_curve
from .errors import MaxCurveError
from .finite_field import field_create
from .point_count import verdict
from .semigroup import generalized_semigroup, hurwitz_generators, hurwitz_semigroup

log = logging.getLogger("maxcurve")

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    p_min: int = 2
    p_max: int = 13
    k_min: int = 1
    k_max: int = 3
    budget: int = field(default_factory=resolve_budget)
    format: str = "json"
    out: Optional[str] = None

    def __post_init__(self):
        if self.p_min > self.p_max or self.k_min > self.k_max or self.k_min < 1:
            raise UsageError("parameter ranges must be nonempty (p-min <= p-max, 1 <= k-min <= k-max)")
        if self.budget <= 0:
            raise UsageError("budget must be positive")


# -- rendering -----------------------------------------------------------------

def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, QuadraticSurdBound):
        return {"a": str(value.a), "b": str(value.b), "r": str(value.r), "approx": value.approx()}
    if isinstance(value, Interval):
        return {"lo": str(value.lo), "hi": str(value.hi)}
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _flat_cell(value):
    if value is None:
        return "NA"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, QuadraticSurdBound):
        return f"({value.a}, {value.b}, {value.r})"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(_plain(value), sort_keys=True)
    return str(value)


def _flatten(row):
    out = {}
    for key, value in row.items():
        out[key] = _flat_cell(value)
        if isinstance(value, QuadraticSurdBound) and f"{key}_approx" not in row:
            out[f"{key}_approx"] = value.approx()
    return out


def render(rows, fmt):
    """A dict renders as one JSON object, a list as a JSON array (even of one row)."""
    if fmt == "json":
        return json.dumps(_plain(rows), indent=2, sort_keys=True) + "\n"
    if isinstance(rows, dict):
        rows = [rows]
    flat = [_flatten(r) for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        fields = list(flat[0]) if flat else []
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(flat)
        return buf.getvalue()
    lines = []
    for r in flat:
        lines.append("  ".join(f"{k}={v}" for k, v in r.items()))
    return "\n".join(lines) + "\n"


def _emit(rows, cfg):
    text = render(rows, cfg.format)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------------

def _family_params(family, n=None, l=None, m=None):
    need = {"hermitian": (), "hurwitz": ("n",), "generalized": ("n", "l"), "fermat": ("m",)}
    if family not in need:
        raise UsageError(f"unknown family {family!r}")
    given = {"n": n, "l": l, "m": m}
    missing = [k for k in need[family] if given[k] is None]
    if missing:
        raise UsageError(f"family {family} needs --{' --'.join(missing)}")
    return {k: given[k] for k in need[family]}


def cmd_verify(args, cfg):
    params = _family_params(args.family, args.n, args.l, args.m)
    curve = make_curve(args.family, field_create(args.p, args.k), **params)
    v = verdict(curve, budget=cfg.budget, workers=args.workers)
    _emit(v.to_dict(), cfg)
    return EXIT_OK if v.consistent else EXIT_DISAGREE


def _criterion_row(family, params, p, k):
    """Criterion value and extra columns for one (p, k); raises on excluded characteristics."""
    if family == "hurwitz":
        return hurwitz_criterion(params["n"], p, k), {}
    if family == "generalized":
        rep = generalized_report(params["n"], params["l"], p, k)
        return rep.criterion, {"Q_prime": rep.Q_is_prime, "literal_reading": rep.q_plus_1_divides_Q}
    if family == "fermat":
        return fermat_criterion(params["m"], p, k), {}
    raise UsageError(f"search does not support family {family!r}")


def cmd_search(args, cfg):
    params = _family_params(args.family, args.n, args.l, args.m)
    rows = []
    disagreements = 0
    for p in range(cfg.p_min, cfg.p_max + 1):
        if not is_prime(p):
            continue
        for k in range(cfg.k_min, cfg.k_max + 1):
            q = p**k
            row = {"family": args.family, **params, "p": p, "k": k, "q": q}
            try:
                crit, extra = _criterion_row(args.family, params, p, k)
            except MaxCurveError as exc:
                rows.append({**row, "criterion": None, "brute_force": "excluded", "agree": None,
                             "note": str(exc)})
                continue
            row.update({"criterion": crit, **extra})
            if fits_budget(q, cfg.budget) and q * q <= 2**20:
                curve = make_curve(args.family, field_create(p, k), **params)
                v = verdict(curve, budget=cfg.budget, workers=args.workers)
                row.update({"brute_force": v.is_maximal, "agree": v.consistent, "note": ""})
                disagreements += not v.consistent
            else:
                row.update({"brute_force": "unverified", "agree": None, "note": "beyond budget"})
            rows.append(row)
    _emit(rows, cfg)
    return EXIT_DISAGREE if disagreements else EXIT_OK


def cor33_rows():
    rows = []
    for n in (2, 3, 4):
        m = hurwitz_modulus(n)
        for sol in admissible_exponent_residues(m):
            rows.append({"n": n, "m": m, "w": sol.w, "residues": list(sol.residues)})
    return rows


def _prime_powers(lo, hi):
    return [q for q in range(max(lo, 2), hi + 1) if prime_power(q)]


_SURD_KEYS = ("d1", "d4", "d4pq", "d5", "G")


def bounds_rows(q_min, q_max):
    rows = []
    for q in _prime_powers(q_min, q_max):
        row = {}
        for key, value in ladder(q).items():
            row[key] = value
            if key in _SURD_KEYS:
                row[f"{key}_approx"] = value.approx() if value is not None else None
        rows.append(row)
    return rows


def semigroup_rows(n_min, n_max):
    rows = []
    for n in range(n_min, n_max + 1):
        sg = hurwitz_semigroup(n)
        rows.append({"n": n, "generators": list(hurwitz_generators(n)), "gaps": sg.gaps,
                     "frobenius": sg.frobenius_number, "genus": sg.genus})
    return rows


def cmd_tables(args, cfg):
    if args.which == "cor33":
        rows = cor33_rows()
    elif args.which == "bounds":
        rows = bounds_rows(args.q_min, args.q_max)
    else:
        rows = semigroup_rows(args.n_min, args.n_max)
    _emit(rows, cfg)
    return EXIT_OK


def cmd_bounds_table(args, cfg):
    # the ladder is tabular by nature; CSV unless a format was asked for
    if args.format is None:
        cfg.format = "csv"
    _emit(bounds_rows(args.q_min, args.q_max), cfg)
    return EXIT_OK


def _load_curve(spec):
    path = Path(spec)
    if spec.endswith(".json") and path.exists():
        return PlaneCurve.from_json(path.read_text())
    if spec.lstrip().startswith("{"):
        return PlaneCurve.from_json(spec)
    return PlaneCurve.from_text(spec)


def cmd_covering(args, cfg):
    domain, target = _load_curve(args.domain), _load_curve(args.target)
    report = verify_covering(domain, args.map, target, budget=cfg.budget)
    _emit(report.to_dict(), cfg)
    return EXIT_OK if report.ok else EXIT_DISAGREE


def cmd_semigroup(args, cfg):
    if args.l is None:
        sg = hurwitz_semigroup(args.n)
        report = {"kind": "hurwitz", "n": args.n, **sg.to_dict()}
    else:
        sg = generalized_semigroup(args.n, args.l)
        report = {"kind": "generalized", "n": args.n, "l": args.l, **sg.to_dict()}
    if cfg.format == "text":
        text = sg.gaps_text() + "\n"
        if cfg.out:
            Path(cfg.out).write_text(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(report, cfg)
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def _common(sub):
    sub.add_argument("--budget", type=int, default=None,
                     help="max q^4 point evaluations (env MAXCURVE_BUDGET overrides the default 2^32)")
    sub.add_argument("--format", choices=("json", "csv", "text"), default=None)
    sub.add_argument("--out", default=None, help="write output to this file instead of stdout")
    sub.add_argument("--workers", type=int, default=None, help="threads for point counting")
    sub.add_argument("-v", "--verbose", action="store_true")


def _curve_params(sub):
    sub.add_argument("--n", type=int)
    sub.add_argument("--l", type=int)
    sub.add_argument("--m", type=int)


def build_parser():
    parser = _Parser(prog="maxcurve", description="Maximality of plane curves over F_{q^2}.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = subs.add_parser("verify", help="count points and compare with the criterion")
    s.add_argument("family", choices=("hermitian", "hurwitz", "generalized", "fermat"))
    _curve_params(s)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--k", type=int, default=1)
    _common(s)
    s.set_defaults(func=cmd_verify)

    s = subs.add_parser("search", help="scan (p, k) for maximal curves of a family")
    s.add_argument("--family", required=True, choices=("hurwitz", "generalized", "fermat"))
    _curve_params(s)
    s.add_argument("--p-min", type=int, default=2)
    s.add_argument("--p-max", type=int, default=13)
    s.add_argument("--k-min", type=int, default=1)
    s.add_argument("--k-max", type=int, default=3)
    _common(s)
    s.set_defaults(func=cmd_search)

    s = subs.add_parser("tables", help="regenerate a reference table")
    s.add_argument("which", choices=("cor33", "bounds", "semigroup"))
    s.add_argument("--q-min", type=int, default=8)
    s.add_argument("--q-max", type=int, default=64)
    s.add_argument("--n-min", type=int, default=2)
    s.add_argument("--n-max", type=int, default=10)
    _common(s)
    s.set_defaults(func=cmd_tables)

    s = subs.add_parser("bounds-table", help="degree-bound ladder per prime power q, as CSV")
    s.add_argument("--q-min", type=int, default=8)
    s.add_argument("--q-max", type=int, default=64)
    _common(s)
    s.set_defaults(func=cmd_bounds_table)

    s = subs.add_parser("covering-check", help="verify a covering map point by point")
    s.add_argument("--domain", required=True, help="curve as family:params:p:k, JSON, or a .json file")
    s.add_argument("--target", required=True)
    s.add_argument("--map", default=None, help="map identifier (inferred from the families if omitted)")
    _common(s)
    s.set_defaults(func=cmd_covering)

    s = subs.add_parser("semigroup", help="Weierstrass semigroup report")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--l", type=int, default=None)
    _common(s)
    s.set_defaults(func=cmd_semigroup)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = RunConfig(
            command=args.command,
            p_min=getattr(args, "p_min", 2),
            p_max=getattr(args, "p_max", 13),
            k_min=getattr(args, "k_min", 1),
            k_max=getattr(args, "k_max", 3),
            budget=resolve_budget(args.budget),
            format=args.format or "json",
            out=args.out,
        )
        return args.func(args, cfg)
    except (UsageError, MaxCurveError, ValueError) as exc:
        print(f"maxcurve {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
