"""Command-line front end: a thin client over the core package.

Subcommands build the same payloads the HTTP service serves and render them
as human text, JSON, or CSV.  Exit codes: 0 for success (including
verification agreement), 1 for a verification disagreement or lemma-sweep
violations, 2 for usage or domain errors.
"""

import sys

import click

from . import __version__, optimizer, oracle
from .construction import build_construction
from .errors import DomainError
from .profiles import design_profile
from .serialize import (
    design_payload,
    tables_payload,
    to_json,
    value_payload,
    verify_payload,
)
from .tables import table_rows, tables_csv

_AT_MOST_TWO_NOTE = (
    "note: with gcd >= 3 the candidate pair is only guaranteed to contain "
    "every optimum; neither member is individually proven optimal, though "
    "exhaustive checks on small instances have always found both optimal "
    "(run 'verify' to test an instance)."
)


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _parse_profile(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        _fail(f"profile must be comma-separated integers, got {text!r}")


def _csv_rows(pairs) -> str:
    lines = ["profile,B"]
    lines.extend(f'"{label}",{value}' for label, value in pairs)
    return "\n".join(lines)


def _euclid_line(trace) -> str:
    steps = [
        f"{trace.r(i - 2)} = {trace.quotients[i - 1]}*{trace.r(i - 1)} + {trace.r(i)}"
        for i in range(1, trace.depth + 1)
    ]
    return " | ".join(steps)


fibers_option = click.option(
    "--fibers", "-M", "m", type=int, required=True, help="Number of fibers."
)
recirc_option = click.option(
    "--recirc", "-k", "k", type=int, required=True, help="Recirculation bound."
)


def format_option(default: str = "human", choices: tuple[str, ...] = ("human", "json", "csv")):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(choices),
        default=default,
        show_default=True,
        help="Output format.",
    )


@click.group()
@click.version_option(version=__version__, prog_name="fdlopt")
def main():
    """Optimal fiber-delay-line allocation for optical queues with a bounded
    number of recirculations."""


@main.command(name="design")
@fibers_option
@recirc_option
@format_option()
def run_design(m: int, k: int, fmt: str):
    """Compute the candidate optimal profile(s) for (M, k)."""
    try:
        result = optimizer.design(m, k)
    except DomainError as exc:
        _fail(str(exc))
    payload = design_payload(result)
    if fmt == "json":
        click.echo(to_json(payload))
    elif fmt == "csv":
        click.echo(
            _csv_rows(
                (",".join(map(str, c["profile"])), c["B"]) for c in payload["candidates"]
            )
        )
    else:
        click.echo(
            f"M={m} k={k}  gcd={result.trace.gcd}  depth N={result.trace.depth}  "
            f"classification={result.classification.value}"
        )
        click.echo(f"euclid: {_euclid_line(result.trace)}")
        names = ("n", "m")
        for name, candidate in zip(names, payload["candidates"]):
            click.echo(f"candidate {name}: {','.join(map(str, candidate['profile']))}")
            click.echo(f"  delays: {','.join(candidate['delays'])}")
            click.echo(f"  B: {candidate['B']}")
        if result.classification is optimizer.Classification.AT_MOST_TWO:
            click.echo(_AT_MOST_TWO_NOTE)


@main.command(name="value")
@fibers_option
@recirc_option
@click.option("--profile", "profile_text", required=True, help="Comma-separated block sizes.")
@format_option()
def run_value(m: int, k: int, profile_text: str, fmt: str):
    """Expand a given profile and report its delays and coverage bound B."""
    parts = _parse_profile(profile_text)
    try:
        built = build_construction(design_profile(parts, m, k))
    except DomainError as exc:
        _fail(str(exc))
    payload = value_payload(built)
    if fmt == "json":
        click.echo(to_json(payload))
    elif fmt == "csv":
        click.echo(_csv_rows([(",".join(map(str, payload["profile"])), payload["B"])]))
    else:
        click.echo(f"M={m} k={k} profile={','.join(map(str, payload['profile']))}")
        click.echo(f"delays: {','.join(payload['delays'])}")
        click.echo(f"B: {payload['B']}")


@main.command(name="verify")
@fibers_option
@recirc_option
@click.option(
    "--brute-cap",
    type=int,
    default=oracle.DEFAULT_BRUTE_CAP,
    show_default=True,
    help="Refuse exhaustive search above this M.",
)
@format_option()
def run_verify(m: int, k: int, brute_cap: int, fmt: str):
    """Exhaustively search the whole profile space and compare with design."""
    try:
        result, optimum, agree = oracle.verify_design(m, k, cap=brute_cap)
    except DomainError as exc:
        _fail(str(exc))
    payload = verify_payload(result, optimum, agree)
    if fmt == "json":
        click.echo(to_json(payload))
    elif fmt == "csv":
        click.echo(
            _csv_rows(
                (",".join(map(str, parts)), str(optimum.best_B))
                for parts in payload["argmax"]
            )
        )
    else:
        click.echo(
            f"M={m} k={k}  gcd={result.trace.gcd}  "
            f"classification={result.classification.value}"
        )
        click.echo(
            "candidates: "
            + " | ".join(",".join(map(str, parts)) for parts in payload["candidates"])
        )
        click.echo(
            f"argmax over {optimum.space_size} profiles (best B={optimum.best_B}): "
            + " | ".join(",".join(map(str, parts)) for parts in payload["argmax"])
        )
        click.echo("AGREE" if agree else "DISAGREE")
    sys.exit(0 if agree else 1)


@main.command(name="tables")
@format_option(default="csv")
def run_tables(fmt: str):
    """Emit the four reference tables of coverage bounds."""
    rows = table_rows()
    if fmt == "csv":
        click.echo(tables_csv(), nl=False)
    elif fmt == "json":
        click.echo(to_json(tables_payload(rows)))
    else:
        current = None
        for row in rows:
            if row.table != current:
                current = row.table
                click.echo(f"[{row.table}]  M={row.m} k={row.k}")
            click.echo(f"  {row.label()}  B={row.value}")


@main.command(name="lemmas")
@click.option("--max-m", type=int, default=10, show_default=True, help="Sweep bound on M.")
@click.option("--seed", type=int, default=0, show_default=True, help="Random sampling seed.")
@click.option(
    "--samples", type=int, default=1000, show_default=True, help="Cases per sampled suite."
)
@click.option(
    "--brute-cap",
    type=int,
    default=oracle.DEFAULT_BRUTE_CAP,
    show_default=True,
    help="Cap for the exhaustive-optimum suites.",
)
@click.option("--quiet", is_flag=True, help="Print only failures and the summary.")
def run_lemmas(max_m: int, seed: int, samples: int, brute_cap: int, quiet: bool):
    """Run the verification sweeps and report one line per checked case."""
    if max_m < 2:
        _fail(f"--max-m must be at least 2, got {max_m}")
    click.echo(f"sweeps: max_m={max_m} seed={seed} samples={samples}")
    total = failures = 0
    for name, records in oracle.lemma_suites(
        max_m=max_m, seed=seed, samples=samples, brute_cap=brute_cap
    ):
        cases = bad = 0
        for record in records:
            cases += 1
            if not record.ok:
                bad += 1
                click.echo(f"{name}: {record.line()}")
            elif not quiet:
                click.echo(f"{name}: {record.line()}")
        click.echo(f"suite {name}: {cases} cases, {bad} violations")
        total += cases
        failures += bad
    click.echo(f"total: {total} cases, {failures} violations")
    sys.exit(1 if failures else 0)


@main.command(name="serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def run_serve(host: str, port: int):
    """Start the HTTP service."""
    import uvicorn

    uvicorn.run("fdlopt.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
