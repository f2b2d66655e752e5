"""Command-line surface.

Every subcommand prints a ReportDocument (JSON) on standard output:
tool name and version, a digest of the exact inputs, and the results
with all rationals serialized exactly as "num/den" strings.  Identical
invocations yield byte-identical documents.  `--report-dir` additionally
writes CSV tables and matplotlib figures into the given directory.

Exit codes: 0 success; 1 input error; 2 when `--strict` is set and the
only results are indeterminate.
"""

from __future__ import annotations

import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import __version__
from .arith import dedekind_sum, dedekind_sum_cf, reduce_slope
from .classical import SurgeryPresentation, casson_gordon, casson_walker
from .cone import d_surgery_signed, hf_red, hf_red_total_rank
from .cosmetic import check_knot, enumerate_candidate_pairs
from .knotfile import KnotFileError, bundled_knots, knot_by_name, parse_knot_file
from .knots import NearSingularError
from .lens import LensSpace, d_lens_all, lambda_lens, tau_lens
from . import plots

_INDETERMINATE_ONLY = 2


def _rat(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _digest(command: str, params: dict, knot_path=None) -> str:
    payload = {"command": command, "params": params}
    if knot_path is not None:
        payload["knots_sha256"] = hashlib.sha256(
            Path(knot_path).read_bytes()
        ).hexdigest()
    blob = json.dumps(payload, sort_keys=True, default=str)
    return hashlib.sha256(blob.encode()).hexdigest()


def _emit(command: str, params: dict, results, knot_path=None, artifacts=()):
    doc = {
        "tool": "surgerygate",
        "version": __version__,
        "command": command,
        "input_digest": _digest(command, params, knot_path),
        "results": results,
    }
    if artifacts:
        doc["artifacts"] = [str(a) for a in artifacts]
    click.echo(json.dumps(doc, sort_keys=True, indent=2))


def _load_knot(knots_path, name):
    knots = parse_knot_file(knots_path) if knots_path else bundled_knots()
    return knot_by_name(knots, name)


knots_option = click.option(
    "--knots",
    "knots_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Knot file (JSON); defaults to the bundled table.",
)
name_option = click.option("--name", required=True, help="Knot name in the table.")
report_dir_option = click.option(
    "--report-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Write CSV tables and figures into this directory.",
)


@click.group()
@click.version_option(__version__, prog_name="surgerygate")
def cli():
    """Correction terms, Dedekind sums, and cosmetic-surgery obstructions."""


@cli.command("lens")
@click.option("--p", required=True, type=int)
@click.option("--q", required=True, type=int)
@report_dir_option
def lens_cmd(p, q, report_dir):
    """d-invariants, lambda, and tau of the lens space L(p,q)."""
    space = LensSpace(p, q)
    ds = d_lens_all(space)
    results = [
        {
            "space": str(space),
            "d": [_rat(d) for d in ds],
            "lambda": _rat(lambda_lens(space)),
            "tau": _rat(tau_lens(space)),
        }
    ]
    artifacts = []
    if report_dir:
        stem = f"lens_p{p}_q{q}"
        artifacts.append(
            plots.write_csv(
                report_dir / f"{stem}.csv",
                ["i", "d"],
                [[i, _rat(d)] for i, d in enumerate(ds)],
            )
        )
        artifacts.append(
            plots.correction_term_figure(
                report_dir / f"{stem}.png", ds, f"d({space}, i)"
            )
        )
    _emit("lens", {"p": p, "q": q}, results, artifacts=artifacts)


@cli.command("dedekind")
@click.option("--q", required=True, type=int)
@click.option("--p", required=True, type=int)
@click.option(
    "--route", type=click.Choice(["direct", "cf", "both"]), default="direct"
)
def dedekind_cmd(q, p, route):
    """Dedekind sum s(q, p), by either or both routes."""
    result = {}
    if route in ("direct", "both"):
        result["direct"] = _rat(dedekind_sum(q, p))
    if route in ("cf", "both"):
        result["cf"] = _rat(dedekind_sum_cf(q, p))
    if route == "both":
        result["agreement"] = result["direct"] == result["cf"]
    _emit("dedekind", {"q": q, "p": p, "route": route}, [result])


@cli.command("surgery-d")
@knots_option
@name_option
@click.option("--p", required=True, type=int)
@click.option("--q", required=True, type=int)
@click.option("--strict", is_flag=True)
@report_dir_option
def surgery_d_cmd(knots_path, name, p, q, strict, report_dir):
    """Correction terms of p/q surgery on a knot from the table."""
    knot = _load_knot(knots_path, name)
    slope = reduce_slope(p, q)
    ds = [d_surgery_signed(knot, slope, i) for i in range(abs(slope.p))]
    results = [
        {
            "knot": name,
            "slope": str(slope),
            "d": [_rat(d) if d is not None else "indeterminate" for d in ds],
        }
    ]
    artifacts = []
    if report_dir and all(d is not None for d in ds):
        stem = f"surgery_d_{name}_p{slope.p}_q{slope.q}"
        artifacts.append(
            plots.write_csv(
                report_dir / f"{stem}.csv",
                ["i", "d"],
                [[i, _rat(d)] for i, d in enumerate(ds)],
            )
        )
        artifacts.append(
            plots.correction_term_figure(
                report_dir / f"{stem}.png", ds, f"d(S^3_{{{slope}}}({name}), i)"
            )
        )
    _emit(
        "surgery-d",
        {"name": name, "p": p, "q": q},
        results,
        knot_path=knots_path,
        artifacts=artifacts,
    )
    if strict and all(d is None for d in ds):
        sys.exit(_INDETERMINATE_ONLY)


@cli.command("hfred")
@knots_option
@name_option
@click.option("--p", required=True, type=int)
@click.option("--q", required=True, type=int)
@report_dir_option
def hfred_cmd(knots_path, name, p, q, report_dir):
    """Reduced Floer homology of p/q surgery (V_0 = 0 knots)."""
    knot = _load_knot(knots_path, name)
    slope = reduce_slope(p, q)
    per_i = []
    points = []
    for i in range(abs(slope.p)):
        module = hf_red(knot, slope, i)
        per_i.append(
            {
                "i": i,
                "reduced": [
                    {"grading": _rat(g), "rank": r} for g, r in module.reduced
                ],
            }
        )
        points.extend(module.reduced)
    results = [
        {
            "knot": name,
            "slope": str(slope),
            "total_rank": hf_red_total_rank(knot, slope),
            "per_spinc": per_i,
        }
    ]
    artifacts = []
    if report_dir:
        stem = f"hfred_{name}_p{slope.p}_q{slope.q}"
        artifacts.append(
            plots.write_csv(
                report_dir / f"{stem}.csv",
                ["i", "grading", "rank"],
                [
                    [entry["i"], row["grading"], row["rank"]]
                    for entry in per_i
                    for row in entry["reduced"]
                ],
            )
        )
        merged: dict[Fraction, int] = {}
        for g, r in points:
            merged[g] = merged.get(g, 0) + r
        artifacts.append(
            plots.reduced_rank_figure(
                report_dir / f"{stem}.png",
                sorted(merged.items()),
                f"HF_red(S^3_{{{slope}}}({name}))",
            )
        )
    _emit(
        "hfred",
        {"name": name, "p": p, "q": q},
        results,
        knot_path=knots_path,
        artifacts=artifacts,
    )


@cli.command("casson-walker")
@knots_option
@name_option
@click.option("--p", required=True, type=int)
@click.option("--q", required=True, type=int)
def casson_walker_cmd(knots_path, name, p, q):
    """Casson-Walker invariant of p/q surgery on a knot."""
    knot = _load_knot(knots_path, name)
    value = casson_walker(SurgeryPresentation(knot, reduce_slope(p, q)))
    _emit(
        "casson-walker",
        {"name": name, "p": p, "q": q},
        [{"knot": name, "slope": f"{p}/{q}", "lambda": _rat(value)}],
        knot_path=knots_path,
    )


@cli.command("casson-gordon")
@knots_option
@name_option
@click.option("--p", required=True, type=int)
@click.option("--q", required=True, type=int)
def casson_gordon_cmd(knots_path, name, p, q):
    """Total Casson-Gordon invariant of p/q surgery (p >= 1)."""
    knot = _load_knot(knots_path, name)
    value = casson_gordon(SurgeryPresentation(knot, reduce_slope(p, q)))
    _emit(
        "casson-gordon",
        {"name": name, "p": p, "q": q},
        [{"knot": name, "slope": f"{p}/{q}", "tau": _rat(value)}],
        knot_path=knots_path,
    )


@cli.command("cosmetic-check")
@knots_option
@name_option
@click.option("--pmax", required=True, type=int)
@click.option("--qmax", required=True, type=int)
@click.option("--strict", is_flag=True)
@report_dir_option
def cosmetic_check_cmd(knots_path, name, pmax, qmax, strict, report_dir):
    """Run the purely-cosmetic-surgery obstruction pipeline on one knot."""
    knot = _load_knot(knots_path, name)
    report = check_knot(knot, pmax, qmax)
    results = [
        {
            "knot": report.knot_name,
            "verdict": report.verdict,
            "reason": report.reason,
            "candidates": [[c.p, c.q] for c in report.candidates],
            "missing_inputs": list(report.missing_inputs),
            "checks": [
                {"name": c.name, "status": c.status, "witness": c.witness}
                for c in report.checks
            ],
            "nu_gate": {
                "applied": report.nu.applied,
                "consistent": report.nu.consistent,
                "detail": report.nu.detail,
            },
        }
    ]
    artifacts = []
    if report_dir:
        stem = f"cosmetic_{name}"
        artifacts.append(
            plots.write_csv(
                report_dir / f"{stem}.csv",
                ["check", "status", "witness"],
                [[c.name, c.status, c.witness] for c in report.checks],
            )
        )
        artifacts.append(
            plots.slope_pair_figure(
                report_dir / f"{stem}.png",
                [(c.p, c.q) for c in report.candidates],
                f"{name}: surviving candidate slopes ({report.verdict})",
            )
        )
    _emit(
        "cosmetic-check",
        {"name": name, "pmax": pmax, "qmax": qmax},
        results,
        knot_path=knots_path,
        artifacts=artifacts,
    )
    if strict and report.verdict == "Indeterminate":
        sys.exit(_INDETERMINATE_ONLY)


@cli.command("enumerate-slopes")
@click.option("--pmax", required=True, type=int)
@click.option("--qmax", required=True, type=int)
@report_dir_option
def enumerate_slopes_cmd(pmax, qmax, report_dir):
    """Candidate slope pairs (p/q, -p/q) with q^2 = -1 (mod p)."""
    pairs = enumerate_candidate_pairs(pmax, qmax)
    results = [{"pairs": [[c.p, c.q] for c in pairs]}]
    artifacts = []
    if report_dir:
        stem = f"slopes_p{pmax}_q{qmax}"
        artifacts.append(
            plots.write_csv(
                report_dir / f"{stem}.csv",
                ["p", "q"],
                [[c.p, c.q] for c in pairs],
            )
        )
        artifacts.append(
            plots.slope_pair_figure(
                report_dir / f"{stem}.png",
                [(c.p, c.q) for c in pairs],
                f"candidate pairs, p <= {pmax}, q <= {qmax}",
            )
        )
    _emit("enumerate-slopes", {"pmax": pmax, "qmax": qmax}, results, artifacts=artifacts)


def main(argv=None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except SystemExit as exc:
        return exc.code or 0
    except click.UsageError as exc:
        click.echo(exc.format_message(), err=True)
        if exc.ctx is not None:
            click.echo(exc.ctx.get_usage(), err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except (KnotFileError, NearSingularError, ValueError, ArithmeticError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
