"""Command-line front end: verify identities, print series, counts, tables.

Exit codes: 0 success (verify: every case passed or was skipped), 1 at least
one identity mismatch, 2 usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .genfun import CATALOG, build_series, resolve_theorem
from .oracles import (
    colored_t11_witnesses,
    count_colored_thm11,
    count_colored_thm13,
    count_fixed_by_hook,
    count_fixed_by_part,
    count_hooks_of_size,
    count_restricted_thm12,
    fixed_hook_witnesses,
)
from .partitions import Family, Partition
from .verify import (
    GridSpec,
    build_grid,
    render_csv,
    render_jsonl,
    render_text,
    run_cases,
    variant_notes,
)


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, ...]:
    """'3' -> (3,); '1..4' -> (1, 2, 3, 4); '-3..2' inclusive on both ends."""
    text = text.strip()
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise UsageError(f"bad range {text!r}") from None
        return tuple(range(lo, hi + 1))
    try:
        return (int(text),)
    except ValueError:
        raise UsageError(f"bad integer or range {text!r}") from None


def read_config(path: str) -> dict[str, str]:
    """Simple key = value lines; '#' starts a comment."""
    values: dict[str, str] = {}
    try:
        with open(path) as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"bad config line {raw.rstrip()!r} in {path}")
                key, _, val = line.partition("=")
                values[key.strip()] = val.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    return values


def render_colored(first: Partition, second: Partition) -> str:
    """(2^4, 1r^2)-style rendering: sizes descending, second color marked 'r'
    and listed before first-color parts of the same size."""
    groups: list[tuple[int, int, int]] = []  # (size, second?, multiplicity)
    for parts, is_second in ((first.parts, 0), (second.parts, 1)):
        for size in sorted(set(parts), reverse=True):
            groups.append((size, is_second, parts.count(size)))
    groups.sort(key=lambda g: (-g[0], -g[1]))
    bits = []
    for size, is_second, mult in groups:
        token = f"{size}r" if is_second else f"{size}"
        if mult > 1:
            token += f"^{mult}"
        bits.append(token)
    return "(" + ", ".join(bits) + ")"


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    cfg = read_config(args.config) if args.config else {}

    def setting(name, flag_value):
        return flag_value if flag_value is not None else cfg.get(name)

    theorems = None
    thm_arg = setting("thms", args.thm)
    if thm_arg and thm_arg != "all":
        theorems = tuple(resolve_theorem(t) for t in str(thm_arg).split(","))
    if args.all:
        theorems = None
    families = None
    fam_arg = setting("family", args.family)
    if fam_arg:
        families = tuple(Family(f) for f in str(fam_arg).split(","))
    variant = setting("variant", args.variant)
    if variant in (None, "both", "auto"):
        variant = None
    order = setting("order", args.order)
    jobs = int(setting("jobs", args.jobs) or 1)
    fmt = setting("format", args.format) or "text"

    spec = GridSpec(
        theorems=theorems,
        order=int(order) if order is not None else None,
        m_values=parse_range(str(setting("m", args.m))) if setting("m", args.m) is not None else None,
        k_values=parse_range(str(setting("k", args.k))) if setting("k", args.k) is not None else None,
        h_values=parse_range(str(setting("h", args.h))) if setting("h", args.h) is not None else None,
        families=families,
        variant=variant,
    )
    cases = build_grid(spec)
    if not cases:
        raise UsageError("grid is empty: no theorem matches the given filters")
    reports = run_cases(cases, jobs=jobs)
    notes = variant_notes(reports)
    if fmt == "text":
        _write(render_text(reports, notes), args.out)
    elif fmt == "csv":
        _write(render_csv(reports), args.out)
        for note in notes:
            print(note, file=sys.stderr)
    elif fmt == "json":
        _write(render_jsonl(reports), args.out)
        for note in notes:
            print(note, file=sys.stderr)
    else:
        raise UsageError(f"unknown format {fmt!r}")
    return 1 if any(r.status == "fail" for r in reports) else 0


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


def _series_rows(args):
    theorem = resolve_theorem(args.thm)
    series = build_series(
        theorem, args.order, m=args.m, k=args.k, h=args.h, variant=args.variant
    )
    lo = min(0, series.min_exp)
    rows = []
    for n in range(lo, args.order):
        rows.append(
            {
                "theorem": theorem.value,
                "m": args.m,
                "k": args.k,
                "h": args.h,
                "n": n,
                "coefficient": series.coefficient(n),
            }
        )
    return rows


def cmd_series(args) -> int:
    if args.thm is None:
        raise UsageError("series requires --thm")
    rows = _series_rows(args)
    if args.format == "text":
        text = "".join(f"{r['n']}\t{r['coefficient']}\n" for r in rows)
    elif args.format == "csv":
        text = "n,coefficient\n" + "".join(f"{r['n']},{r['coefficient']}\n" for r in rows)
    elif args.format == "json":
        text = json.dumps(rows, indent=2) + "\n" if rows else "[]\n"
    else:
        raise UsageError(f"unknown format {args.format!r}")
    _write(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------


_ORACLES = ("fixed-by-part", "fixed-by-hook", "hooks", "colored-t11",
            "restricted-t12", "colored-t13")


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"count {args.oracle} requires --{name}")


def cmd_count(args) -> int:
    fam = Family(args.family) if args.family else Family.ALL
    witnesses: list[str] | None = None
    if args.oracle == "fixed-by-part":
        _require(args, "n", "m", "h")
        if args.sum_k:
            ks = [k for k in range(max(1, args.m), args.n + 1)]
            value = sum(count_fixed_by_part(args.n, args.m, args.h, k, fam) for k in ks)
            if args.list:
                witnesses = [str(p) for p in fixed_hook_witnesses(args.n, args.m, args.h, family=fam)]
        else:
            _require(args, "k")
            value = count_fixed_by_part(args.n, args.m, args.h, args.k, fam)
            if args.list:
                witnesses = [
                    str(p)
                    for p in fixed_hook_witnesses(args.n, args.m, args.h, args.k, fam, by="part")
                ]
    elif args.oracle == "fixed-by-hook":
        _require(args, "n", "m", "h")
        if args.sum_k:
            value = sum(
                count_fixed_by_hook(args.n, args.m, args.h, k, fam)
                for k in range(1, args.n + 1)
            )
            if args.list:
                witnesses = [str(p) for p in fixed_hook_witnesses(args.n, args.m, args.h, family=fam)]
        else:
            _require(args, "k")
            value = count_fixed_by_hook(args.n, args.m, args.h, args.k, fam)
            if args.list:
                witnesses = [
                    str(p)
                    for p in fixed_hook_witnesses(args.n, args.m, args.h, args.k, fam, by="hook")
                ]
    elif args.oracle == "hooks":
        _require(args, "n", "k")
        value = count_hooks_of_size(args.n, args.k, args.m, fam)
    elif args.oracle == "colored-t11":
        _require(args, "n", "m")
        value = count_colored_thm11(args.n, args.m)
        if args.list:
            witnesses = [
                render_colored(first, second)
                for first, second, _ in colored_t11_witnesses(args.n, args.m)
            ]
    elif args.oracle == "restricted-t12":
        _require(args, "n", "m", "h")
        value = count_restricted_thm12(args.n, args.m, args.h)
    elif args.oracle == "colored-t13":
        _require(args, "n", "m", "k")
        value = count_colored_thm13(
            args.n, args.m, args.k, args.h or 0, variant=args.variant or "stated"
        )
    else:
        raise UsageError(f"unknown oracle {args.oracle!r}; choose from {', '.join(_ORACLES)}")

    if args.format == "json":
        payload = {
            "oracle": args.oracle, "n": args.n, "m": args.m, "k": args.k,
            "h": args.h, "family": fam.value, "count": value,
        }
        if witnesses is not None:
            payload["witnesses"] = witnesses
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        lines = ["oracle,n,m,k,h,family,count"]
        lines.append(
            ",".join(
                "" if v is None else str(v)
                for v in (args.oracle, args.n, args.m, args.k, args.h, fam.value, value)
            )
        )
        if witnesses is not None:
            lines.extend(witnesses)
        text = "\n".join(lines) + "\n"
    else:
        lines = witnesses[:] if witnesses is not None else []
        lines.append(f"count: {value}")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def cmd_table(args) -> int:
    if args.thm is None:
        raise UsageError("table requires --thm")
    theorem = resolve_theorem(args.thm)
    params = CATALOG[theorem].params
    if CATALOG[theorem].build is None:
        raise UsageError(f"{theorem.value} has no series to tabulate")

    ranges: dict[str, tuple[int, ...]] = {}
    for name in ("m", "k", "h"):
        raw = getattr(args, name)
        if raw is None:
            continue
        if name not in params:
            raise UsageError(f"{theorem.value} does not take --{name}")
        ranges[name] = parse_range(raw)
    for name in params:
        if name not in ranges:
            raise UsageError(f"{theorem.value} requires --{name}")
    varying = [name for name, vals in ranges.items() if len(vals) != 1]
    if len(varying) > 1:
        raise UsageError("table can vary at most one of --m/--k/--h")
    axis = varying[0] if varying else params[-1]

    columns = []
    for value in ranges[axis]:
        kwargs = {name: vals[0] for name, vals in ranges.items() if name != axis}
        kwargs[axis] = value
        series = build_series(theorem, args.order, variant=args.variant, **kwargs)
        columns.append((value, kwargs, series))

    if args.format == "json":
        rows = []
        for value, kwargs, series in columns:
            for n in range(min(0, series.min_exp), args.order):
                rows.append(
                    {
                        "theorem": theorem.value,
                        "m": kwargs.get("m"),
                        "k": kwargs.get("k"),
                        "h": kwargs.get("h"),
                        "n": n,
                        "coefficient": series.coefficient(n),
                    }
                )
        text = json.dumps(rows, indent=2) + "\n" if rows else "[]\n"
    else:
        header = ["n"] + [f"{axis}={value}" for value, _, _ in columns]
        lines = [",".join(header)]
        if columns:
            lo = min(0, *(s.min_exp for _, _, s in columns))
            for n in range(lo, args.order):
                row = [str(n)] + [str(s.coefficient(n)) for _, _, s in columns]
                lines.append(",".join(row))
        if args.format == "text":
            text = "\n".join(line.replace(",", "\t") for line in lines) + "\n"
        elif args.format == "csv":
            text = "\n".join(lines) + "\n"
        else:
            raise UsageError(f"unknown format {args.format!r}")
    _write(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def _add_common(sub, with_params=True):
    sub.add_argument("-N", "--order", type=int, default=30,
                     help="truncation order: coefficients are reported for exponents below N")
    if with_params:
        sub.add_argument("--m", help="column index (integer or a..b range where allowed)")
        sub.add_argument("--k", help="part or hook size (integer or range)")
        sub.add_argument("--h", help="fixedness offset (integer or range)")
    sub.add_argument("--family", help="partition family filter: all,odd,distinct,odd-distinct")
    sub.add_argument("--format", default="text", choices=("text", "csv", "json"))
    sub.add_argument("--out", help="write output to this file instead of stdout")
    sub.add_argument("--jobs", type=int, default=1, help="parallel worker processes (verify)")
    sub.add_argument("--config", help="key = value file overriding verify grid defaults")
    sub.add_argument("--variant", choices=("stated", "derived", "both"),
                     help="pin a closed-form variant where a theorem has two")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fixedhooks",
        description="Verify fixed-hook partition identities by exact q-series expansion "
        "against brute-force enumeration.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", help="run identity checks over a parameter grid")
    p.add_argument("--thm", help="comma-separated theorem tags (default: full grid)")
    p.add_argument("--all", action="store_true", help="run the full default grid")
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = subs.add_parser("series", help="print coefficients of one builder")
    p.add_argument("--thm", help="theorem tag")
    _add_common(p)
    p.set_defaults(fn=cmd_series, _scalar_params=True)

    p = subs.add_parser("count", help="evaluate a brute-force oracle")
    p.add_argument("oracle", help="one of: " + ", ".join(_ORACLES))
    p.add_argument("--n", type=int, help="partition weight")
    p.add_argument("--sum-k", action="store_true", help="sum the count over all sizes k")
    p.add_argument("--list", action="store_true", help="print the witnessing objects")
    _add_common(p)
    p.set_defaults(fn=cmd_count, _scalar_params=True)

    p = subs.add_parser("table", help="coefficient table over one varying parameter")
    p.add_argument("--thm", help="theorem tag")
    _add_common(p)
    p.set_defaults(fn=cmd_table)

    return parser


def _coerce_scalars(args):
    """series and count take plain integers for --m/--k/--h."""
    for name in ("m", "k", "h"):
        raw = getattr(args, name, None)
        if raw is None:
            continue
        values = parse_range(raw)
        if len(values) != 1:
            raise UsageError(f"--{name} must be a single integer here, got {raw!r}")
        setattr(args, name, values[0])


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "_scalar_params", False):
            _coerce_scalars(args)
        if getattr(args, "variant", None) == "both":
            args.variant = None
        return args.fn(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
