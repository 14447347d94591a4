"""Command-line front end.

Exit status: 0 when every check passes, 1 on a mathematical failure, 2 on
usage or configuration errors.
"""

from __future__ import annotations

import json
import sys

import click

from . import cyclotomy
from .construction import ParameterError, build_denniston, expected_params
from .export import ExportError, load, to_json, to_text
from .gf_tower import DEFAULT_SIZE_CAP, FieldError, build_field
from .verify import verify_pds

COST_LIMIT = 10**9


class ConfigError(click.ClickException):
    exit_code = 2


def _int_list(value: str | None) -> list[int] | None:
    if value is None:
        return None
    try:
        return [int(x) for x in value.replace(" ", "").split(",") if x]
    except ValueError:
        raise ConfigError(f"expected a comma separated list of integers, got {value!r}") from None


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _build(p, s, m, r, modulus, basis, seed, size_cap):
    if basis is not None and seed is not None:
        raise ConfigError("--basis and --seed are mutually exclusive")
    try:
        t = build_field(p, s, m, modulus=_int_list(modulus), size_cap=size_cap)
        if basis is not None:
            R = cyclotomy.make_subspace(t, _int_list(basis))
        elif seed is not None:
            R = cyclotomy.random_subspace(t, r, seed)
        else:
            R = cyclotomy.default_subspace(t, r)
        return build_denniston(t, r, R)
    except (FieldError, ParameterError, ValueError) as exc:
        raise ConfigError(str(exc)) from None


def field_options(f):
    for opt in reversed(
        [
            click.option("--p", "p", type=int, required=True, help="Characteristic."),
            click.option("--s", "s", type=int, default=1, show_default=True, help="q = p^s."),
            click.option("--m", "m", type=int, required=True, help="Tower parameter, m >= 2."),
            click.option("--modulus", default=None, help="Primitive modulus, constant term first."),
            click.option("--size-cap", type=int, default=DEFAULT_SIZE_CAP, show_default=True),
        ]
    ):
        f = opt(f)
    return f


def subspace_options(f):
    for opt in reversed(
        [
            click.option("--r", "r", type=int, required=True, help="Subspace dimension, 1 <= r < m."),
            click.option("--basis", default=None, help="Basis of R as element logs (comma separated)."),
            click.option("--seed", type=int, default=None, help="Seed for a random subspace R."),
        ]
    ):
        f = opt(f)
    return f


@click.group()
def main():
    """Construct and verify partial difference sets with Denniston parameters."""


@main.command()
@field_options
@subspace_options
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
@click.option("-o", "--output", default=None, help="Write to a file instead of stdout.")
def construct(p, s, m, modulus, size_cap, r, basis, seed, fmt, output):
    """Build the set D for (p, s, m, r) and export it."""
    pds = _build(p, s, m, r, modulus, basis, seed, size_cap)
    _emit(to_json(pds) if fmt == "json" else to_text(pds), output)


def _report_out(report, fmt, timings):
    if fmt == "json":
        return json.dumps(report.as_dict(with_timings=timings), indent=2) + "\n"
    text = report.to_text()
    if not timings:
        text = "\n".join(ln for ln in text.splitlines() if not ln.startswith("time "))
    return text + "\n"


@main.command()
@click.option("--input", "input_path", default=None, help="JSON export to verify.")
@click.option("--p", "p", type=int, default=None)
@click.option("--s", "s", type=int, default=1)
@click.option("--m", "m", type=int, default=None)
@click.option("--r", "r", type=int, default=None)
@click.option("--modulus", default=None)
@click.option("--basis", default=None)
@click.option("--seed", type=int, default=None)
@click.option("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
@click.option("--check-level", type=click.Choice(["counts", "chars", "all"]), default="all", show_default=True)
@click.option("--fast-transform", is_flag=True, help="Use the additive transform for characters.")
@click.option("--invariance/--no-invariance", default=True, show_default=True)
@click.option("--timings", is_flag=True, help="Include wall times (output no longer reproducible).")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
@click.option("-o", "--output", default=None)
def verify(input_path, p, s, m, r, modulus, basis, seed, size_cap, check_level,
           fast_transform, invariance, timings, fmt, output):
    """Verify a saved set (--input) or a freshly constructed one (--p/--m/--r)."""
    if input_path is not None:
        if p is not None or m is not None or r is not None:
            raise ConfigError("give either --input or construction parameters, not both")
        try:
            pds = load(input_path, size_cap=size_cap)
        except (OSError, ExportError, FieldError) as exc:
            raise ConfigError(str(exc)) from None
    else:
        if p is None or m is None or r is None:
            raise ConfigError("--p, --m and --r are required without --input")
        pds = _build(p, s, m, r, modulus, basis, seed, size_cap)
    report = verify_pds(pds, check_level=check_level, fast=fast_transform, invariance=invariance)
    _emit(_report_out(report, fmt, timings), output)
    sys.exit(0 if report.is_pds else 1)


@main.command()
@click.option("--p", "p", type=int, required=True)
@click.option("--s", "s", type=int, default=1, show_default=True)
@click.option("--max-m", type=int, required=True)
@click.option("--size-cap", type=int, default=DEFAULT_SIZE_CAP, show_default=True)
@click.option("--check-level", type=click.Choice(["counts", "chars", "all"]), default="all", show_default=True)
@click.option("--fast-transform", is_flag=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True)
def sweep(p, s, max_m, size_cap, check_level, fast_transform, fmt):
    """Construct and verify every (m, r) with 2 <= m <= max-m, 1 <= r < m."""
    rows = []
    for m in range(2, max_m + 1):
        for r in range(1, m):
            row = {"p": p, "s": s, "m": m, "r": r}
            try:
                t = build_field(p, s, m, size_cap=size_cap)
            except FieldError as exc:
                if "size cap" not in str(exc):
                    raise ConfigError(str(exc)) from None
                row["status"] = "skipped: size cap"
                rows.append(row)
                continue
            params = expected_params(t.q, m, r)
            level = check_level
            if level != "counts" and params.v * params.k > COST_LIMIT:
                level = "counts"
                row["downgraded"] = "chars skipped: v*k exceeds 1e9"
            pds = build_denniston(t, r)
            report = verify_pds(pds, check_level=level, fast=fast_transform)
            row.update({"v": params.v, "k": params.k, "lambda": params.lam, "mu": params.mu,
                        "check_level": level,
                        "status": "PDS: pass" if report.is_pds else "PDS: FAIL"})
            rows.append(row)
    if fmt == "json":
        click.echo(json.dumps({"schema": 1, "rows": rows}, indent=2))
    else:
        for row in rows:
            head = f"q={p ** s} m={row['m']} r={row['r']}"
            if "v" in row:
                head += f" ({row['v']},{row['k']},{row['lambda']},{row['mu']}) [{row['check_level']}]"
            line = f"{head}  {row['status']}"
            if "downgraded" in row:
                line += f"  ({row['downgraded']})"
            click.echo(line)
    sys.exit(0 if all(r["status"] != "PDS: FAIL" for r in rows) else 1)


@main.command("field-info")
@field_options
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
def field_info(p, s, m, modulus, size_cap, fmt):
    """Describe the tower field and its cyclotomic data."""
    try:
        t = build_field(p, s, m, modulus=_int_list(modulus), size_cap=size_cap)
    except FieldError as exc:
        raise ConfigError(str(exc)) from None
    sub = t.subfield(t.qm)
    info = {
        "schema": 1,
        "field": t.spec.as_dict(),
        "order": t.order,
        "q": t.q,
        "subfield_orders": list(t.subfield_orders),
        "omega_log": t.omega,
        "N": t.N,
        "subfield_qm_basis": sub.basis.tolist(),
        "subfield_qm_pivots": list(sub.pivots),
        "I": cyclotomy.trace_zero_index_set(t).as_dict(),
    }
    if fmt == "json":
        click.echo(json.dumps(info, indent=2))
    else:
        for key, val in info.items():
            click.echo(f"{key}: {val}")


@main.command()
@click.option("--input", "input_path", required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
@click.option("--toggle", type=int, default=None, help="Flip membership of one group index (mutation).")
@click.option("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
@click.option("-o", "--output", default=None)
def export(input_path, fmt, toggle, size_cap, output):
    """Re-serialize a saved set, optionally with one element toggled."""
    try:
        pds = load(input_path, size_cap=size_cap)
        if toggle is not None:
            if not 0 <= toggle < pds.group.v:
                raise ExportError(f"toggle index {toggle} out of range")
            pds = pds.toggled(toggle)
    except (OSError, ExportError, FieldError) as exc:
        raise ConfigError(str(exc)) from None
    _emit(to_json(pds) if fmt == "json" else to_text(pds), output)


if __name__ == "__main__":  # pragma: no cover
    main()
