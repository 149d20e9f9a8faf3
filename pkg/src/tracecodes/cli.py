"""Command-line front end: construction, analysis, and the verification harness.

Exit codes: 0 success, 1 verification mismatch, 2 invalid parameters.
"""

from __future__ import annotations

import json
import sys
import warnings
from typing import Optional

import click
import numpy as np

from .bounds import BoundError, bound_verdict
from .charsums import CharSumError, lemma_sweep
from .codes import CodeError, LinearCode, build_family_code
from .duals import DualSearchError, dual_code, dual_min_distance, verify_dual_theorems
from .field import FieldError, make_field
from .harness import run_verification
from .weights import WeightError, predicted_distribution, weight_distribution

_FAMILIES = ("d1", "d1bar", "d2")


def _echo_json(obj) -> None:
    click.echo(json.dumps(obj, sort_keys=True))


def _build(family: str, p: int, m: int, e: Optional[int]):
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return build_family_code(family, p, m, e)
    except (CodeError, FieldError, ValueError) as exc:
        raise click.UsageError(str(exc)) from exc


def _load_code_spec(spec: str) -> LinearCode:
    """Either ``family:p:m[:e]`` or a path to a JSON file from ``construct``."""
    parts = spec.split(":")
    if parts[0].lower() in _FAMILIES and len(parts) in (3, 4):
        try:
            p, m = int(parts[1]), int(parts[2])
            e = int(parts[3]) if len(parts) == 4 else None
        except ValueError as exc:
            raise click.UsageError(f"malformed code spec {spec!r}") from exc
        return _build(parts[0], p, m, e)
    try:
        with open(spec) as fh:
            data = json.load(fh)
        return LinearCode(
            p=int(data["p"]),
            n=int(data["n"]),
            k=int(data["k"]),
            gen=np.array(data["gen"], dtype=np.int64),
            provenance=data.get("provenance", {}),
        )
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read code spec {spec!r}: {exc}") from exc


@click.group()
def main() -> None:
    """Trace-defined few-weight code toolkit."""


@main.command()
@click.option("--p", "p", type=int, required=True, help="field characteristic")
@click.option("--m", "m", type=int, required=True, help="half-field degree (s = 2m)")
@click.option("--e", "e", type=int, default=None, help="trace subfield degree (e | m)")
@click.option("--family", type=click.Choice(_FAMILIES), required=True)
@click.option("--out", type=click.Choice(("json", "csv")), default="json")
def construct(p: int, m: int, e: Optional[int], family: str, out: str) -> None:
    """Build a code and emit its generator matrix and provenance."""
    code = _build(family, p, m, e)
    if out == "json":
        _echo_json(code.to_json_dict())
    else:
        for row in code.gen:
            click.echo(",".join(str(int(v)) for v in row))


@main.command()
@click.argument("code_spec")
@click.option("--out", type=click.Choice(("json", "csv")), default="json")
def weights(code_spec: str, out: str) -> None:
    """Enumerated weight distribution, closed-form prediction, and match flag."""
    code = _load_code_spec(code_spec)
    try:
        dist = weight_distribution(code)
    except WeightError as exc:
        raise click.UsageError(str(exc)) from exc
    if out == "csv":
        click.echo(dist.to_csv(), nl=False)
        return
    prov = code.provenance or {}
    params = prov.get("params", {})
    predicted = None
    if prov.get("family") in ("D1", "D1BAR", "D2"):
        try:
            predicted = predicted_distribution(
                prov["family"], params["p"], params["m"], params.get("e")
            )
        except (WeightError, KeyError):
            predicted = None
    result = {
        "enumerated": dist.to_json_dict(),
        "predicted": predicted.to_json_dict() if predicted else None,
        "match": predicted is not None and predicted.counts == dist.counts,
    }
    _echo_json(result)


@main.command()
@click.argument("code_spec")
@click.option("--cap", type=int, default=5, help="largest dependency size searched")
def dual(code_spec: str, cap: int) -> None:
    """Dual dimension, capped minimum-distance search, and theorem verdicts."""
    code = _load_code_spec(code_spec)
    try:
        report = dual_min_distance(code, cap=cap)
    except (DualSearchError, ValueError) as exc:
        raise click.UsageError(str(exc)) from exc
    out = report.to_json_dict()
    out["k_dual"] = dual_code(code).k
    if (code.provenance or {}).get("family") in ("D1", "D1BAR", "D2"):
        out["theorem_verdicts"] = verify_dual_theorems(code, report)
    _echo_json(out)


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--q", "q", type=int, required=True, help="alphabet size")
def bounds(n: int, k: int, d: int, q: int) -> None:
    """Griesmer and sphere-packing classification of [n, k, d] over GF(q)."""
    try:
        verdict = bound_verdict(n, k, d, q)
    except BoundError as exc:
        raise click.UsageError(str(exc)) from exc
    _echo_json(verdict.to_json_dict())


@main.command()
@click.option("--p", "p", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--e", "e", type=int, required=True)
@click.option("--beta-log", type=int, default=None,
              help="restrict the per-beta rows to one discrete log")
def charsums(p: int, m: int, e: int, beta_log: Optional[int]) -> None:
    """Character-sum verification rows for every beta (or one beta)."""
    try:
        field = make_field(p, 2 * m)
        sweep = lemma_sweep(field, e)
    except (FieldError, CharSumError, ValueError) as exc:
        raise click.UsageError(str(exc)) from exc
    header = {
        "p": sweep.p,
        "m": sweep.m,
        "e": sweep.e,
        "A": sweep.A,
        "n1": sweep.n1,
        "lemma31_ok": sweep.lemma31_ok,
        "all_ok": sweep.all_ok,
    }
    _echo_json(header)
    rows = sweep.rows
    if beta_log is not None:
        if not 0 <= beta_log < len(rows):
            raise click.UsageError(f"beta log must be in [0, {len(rows) - 1}]")
        rows = [rows[beta_log]]
    for row in rows:
        _echo_json(row)


@main.command("verify-paper")
@click.option("--sweep", is_flag=True, help="widen to the full parameter grid")
def verify_paper(sweep: bool) -> None:
    """Recompute every published claim; exit 1 on any mismatch."""
    report = run_verification(sweep=sweep)
    click.echo(report.to_json_lines(), nl=False)
    if report.has_mismatch():
        sys.exit(1)


if __name__ == "__main__":
    main()
