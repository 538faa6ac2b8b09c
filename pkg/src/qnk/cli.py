"""
Command-line interface for qnk.

Usage:
    qnk spectrum --n 3 --k 2 --laplacian     # closed-form Laplacian spectrum
    qnk kf --n 4 --k 2                       # exact Kirchhoff index
    qnk table --max-n 10 --compare-paper     # Kf table against the published values
    qnk verify --max-n-oracle 8              # every identity and oracle check
    qnk asymptotics 3 10 100                 # squeeze sequences and ratios
    qnk report --n 4 --k 3 --edges-out e.txt # brute-force graph report

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import click

from . import kirchhoff as kfm
from . import oracle
from .group_core import MAX_DIMENSION, EnhancedParams, ParameterError
from .render import (
    DEFAULT_SIG_DIGITS,
    PUBLISHED_KF_TABLE,
    format_decimal,
    matches_printed,
    rational_json,
    significant_digits,
)
from .spectrum import adjacency_spectrum, laplacian_spectrum
from .verification import run_verification

FORMATS = click.Choice(["human", "json", "csv"])
PARAM_RULE = "1 <= k <= n-1, n >= 2"


def _params(n: int, k: int) -> EnhancedParams:
    try:
        return EnhancedParams(n, k)
    except ParameterError:
        raise click.UsageError(f"invalid parameters n={n}, k={k}: require {PARAM_RULE}")


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


@click.group()
def cli():
    """Spectra and Kirchhoff indices of enhanced hypercubes Q_{n,k}."""


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--laplacian/--adjacency", default=False, help="Laplacian instead of adjacency spectrum.")
@click.option("--format", "fmt", type=FORMATS, default="human")
def spectrum(n, k, laplacian, fmt):
    """Closed-form spectrum of Q_{n,k}."""
    p = _params(n, k)
    spec = laplacian_spectrum(p) if laplacian else adjacency_spectrum(p)
    if fmt == "json":
        click.echo(spec.to_json())
    elif fmt == "csv":
        click.echo(spec.to_csv(), nl=False)
    else:
        click.echo(f"{spec.kind} spectrum of Q({n},{k})")
        width = max(len(str(lam)) for lam, _ in spec.entries)
        for lam, m in spec.entries:
            click.echo(f"  {lam:>{width}}  x {m}")


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--format", "fmt", type=FORMATS, default="human")
@click.option("--sig", type=click.IntRange(1, 100), default=DEFAULT_SIG_DIGITS, help="Significant digits of the decimal.")
def kf(n, k, fmt, sig):
    """Exact Kirchhoff index of Q_{n,k}."""
    value = kfm.kf_closed_form(_params(n, k))
    if fmt == "json":
        click.echo(json.dumps({"n": n, "k": k, "kf": rational_json(value, sig)}))
    elif fmt == "csv":
        click.echo(_csv([["n", "k", "num", "den", "decimal"], [n, k, value.numerator, value.denominator, format_decimal(value, sig)]]), nl=False)
    else:
        click.echo(f"{value.numerator}/{value.denominator} ({format_decimal(value, sig)})")


def _table_cell(nk: tuple[int, int]):
    return kfm.kf_closed_form(EnhancedParams(*nk))


@cli.command()
@click.option("--max-n", type=click.IntRange(2, MAX_DIMENSION), required=True)
@click.option("--format", "fmt", type=FORMATS, default="human")
@click.option("--compare-paper", is_flag=True, help="Compare against the published table (n <= 10).")
@click.option("--workers", type=click.IntRange(1, None), default=1)
def table(max_n, fmt, compare_paper, workers):
    """Triangular table of Kf(Q_{n,k}) for 2 <= n <= max-n."""
    cells = [(n, k) for n in range(2, max_n + 1) for k in range(1, n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = dict(zip(cells, pool.map(_table_cell, cells, chunksize=8)))
    else:
        values = {nk: _table_cell(nk) for nk in cells}

    records = []
    for n, k in cells:
        value = values[n, k]
        rec = {"n": n, "k": k, "kf": rational_json(value)}
        if compare_paper and n in PUBLISHED_KF_TABLE:
            ref = PUBLISHED_KF_TABLE[n][k - 1]
            rec["published"] = ref
            rec["rounded"] = format_decimal(value, significant_digits(ref), trim=False)
            rec["match"] = matches_printed(value, ref)
        records.append(rec)
    mismatches = [r for r in records if r.get("match") is False]

    if fmt == "json":
        click.echo(json.dumps({"cells": records, "mismatches": len(mismatches)}))
    elif fmt == "csv":
        head = ["n", "k", "num", "den", "decimal"] + (["published", "rounded", "match"] if compare_paper else [])
        rows = [head]
        for r in records:
            row = [r["n"], r["k"], r["kf"]["num"], r["kf"]["den"], r["kf"]["decimal"]]
            if compare_paper:
                row += [r.get("published", ""), r.get("rounded", ""), r.get("match", "")]
            rows.append(row)
        click.echo(_csv(rows), nl=False)
    else:
        for n in range(2, max_n + 1):
            row = [r for r in records if r["n"] == n]
            shown = []
            for r in row:
                text = r["kf"]["decimal"]
                if "match" in r:
                    text += "" if r["match"] else f" [MISMATCH vs {r['published']}: {r['kf']['num']}/{r['kf']['den']}]"
                shown.append(text)
            click.echo(f"n={n:<3} " + "  ".join(shown))
        if compare_paper:
            compared = sum("match" in r for r in records)
            click.echo(f"compared {compared} published cells, {len(mismatches)} mismatch(es)")
    if mismatches:
        sys.exit(1)


@cli.command()
@click.option("--max-n-closed", type=click.IntRange(2, MAX_DIMENSION), default=20)
@click.option("--max-n-oracle", type=click.IntRange(2, 16), default=8)
@click.option("--seed", type=int, default=0)
@click.option("--workers", type=click.IntRange(1, None), default=1)
@click.option("--inject-fault", is_flag=True, help="Corrupt one multiplicity to test that failures are caught.")
@click.option("--allow-large", is_flag=True, help="Permit oracle sizes above the default caps.")
@click.option("--format", "fmt", type=click.Choice(["human", "json"]), default="json")
def verify(max_n_closed, max_n_oracle, seed, workers, inject_fault, allow_large, fmt):
    """Run every identity, closed-form and brute-force cross-check."""
    cap = oracle.resistance_cap()
    if max_n_oracle > cap:
        if not allow_large:
            raise click.UsageError(f"--max-n-oracle {max_n_oracle} exceeds the cap {cap}; add --allow-large")
        click.echo(f"warning: oracle up to n={max_n_oracle} is expensive (cap {cap})", err=True)
        os.environ[oracle.ENV_ORACLE_CAP] = str(max_n_oracle)
    report = run_verification(max_n_closed, max_n_oracle, seed, inject_fault, workers)
    if fmt == "json":
        click.echo(json.dumps(report, indent=2))
    else:
        for c in report["checks"]:
            click.echo(f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']:<30} {c['cases']} cases")
            for f in c["failures"]:
                click.echo(f"      {f}")
    if not report["passed"]:
        sys.exit(1)


@cli.command()
@click.argument("n_list", nargs=-1, type=click.IntRange(3, None), required=True)
@click.option("--format", "fmt", type=FORMATS, default="human")
@click.option("--sig", type=click.IntRange(1, 100), default=DEFAULT_SIG_DIGITS)
def asymptotics(n_list, fmt, sig):
    """Lower/upper squeeze sequences and Kf (n+1) / 4^n for k in {1, n//2, n-1}."""
    rows = []
    for n in n_list:
        a, b = kfm.asymptotic_sequences(n)
        for k in sorted({1, n // 2, n - 1}):
            r = kfm.limit_ratio(n, k)
            rows.append({"n": n, "k": k, "A": a, "B": b, "ratio": r, "within": a <= r <= b})
    if fmt == "json":
        out = [
            {"n": r["n"], "k": r["k"], "A": rational_json(r["A"], sig), "B": rational_json(r["B"], sig),
             "ratio": rational_json(r["ratio"], sig), "within": r["within"]}
            for r in rows
        ]
        click.echo(json.dumps(out))
    elif fmt == "csv":
        data = [["n", "k", "A", "B", "ratio", "within"]]
        data += [[r["n"], r["k"], format_decimal(r["A"], sig), format_decimal(r["B"], sig),
                  format_decimal(r["ratio"], sig), r["within"]] for r in rows]
        click.echo(_csv(data), nl=False)
    else:
        for r in rows:
            click.echo(
                f"n={r['n']:<4} k={r['k']:<4} A={format_decimal(r['A'], sig):<10} "
                f"ratio={format_decimal(r['ratio'], sig):<10} B={format_decimal(r['B'], sig)}"
            )
    if not all(r["within"] for r in rows):
        sys.exit(1)


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["human", "json"]), default="human")
@click.option("--edges-out", type=click.Path(dir_okay=False, writable=True), default=None)
@click.option("--allow-large", is_flag=True)
def report(n, k, fmt, edges_out, allow_large):
    """Brute-force graph report: exact resistance Kf, Wiener index, diameter, bipartiteness."""
    p = _params(n, k)
    if n > oracle.resistance_cap():
        if not allow_large:
            raise click.UsageError(f"n={n} exceeds the oracle cap {oracle.resistance_cap()}; add --allow-large")
        click.echo(f"warning: exact resistances for n={n} are expensive", err=True)
    if edges_out:
        oracle.build_graph(p, allow_large=allow_large).write_edge_list(edges_out)
    rep = oracle.graph_report(p, allow_large=allow_large)
    if fmt == "json":
        click.echo(rep.to_json())
    else:
        click.echo(f"Q({n},{k}): {1 << n} vertices, degree ok: {rep.degree_ok}")
        click.echo(f"  Kf        {rep.kf.numerator}/{rep.kf.denominator} ({format_decimal(rep.kf)})")
        click.echo(f"  Wiener    {rep.wiener}")
        click.echo(f"  diameter  {rep.diameter}")
        click.echo(f"  bipartite {rep.bipartite}")
        click.echo(f"  trace ok  {rep.trace_ok}, second moment ok {rep.trace2_ok}")
    ok = rep.degree_ok and rep.trace_ok and rep.trace2_ok and rep.kf == kfm.kf_closed_form(p)
    if not ok:
        sys.exit(1)


def main():
    cli()


if __name__ == "__main__":
    main()
