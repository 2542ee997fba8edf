import json
from pathlib import Path
from typing import Dict, List

import click
from loguru import logger

from randic import verifier
from randic.commands.options import GAMMAS, INTS, flatten
from randic.enumeration import ingest
from randic.errors import CorpusError, ParameterError
from randic.schemas import RunConfig, Theorem
from randic.settings import settings

WRITERS = {
    "json": verifier.reports_to_json,
    "csv": verifier.reports_to_csv,
    "text": verifier.reports_to_text,
}


def load_config(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CorpusError(f"cannot read config {path}: {exc}", code="config_io") from exc
    except json.JSONDecodeError as exc:
        raise ParameterError(f"config {path} is not valid JSON: {exc}", code="config_json") from exc
    if not isinstance(data, dict):
        raise ParameterError(f"config {path} must hold a JSON object", code="config_json")
    data.pop("subcommand", None)
    return data


def corpus_orders(paths: List[str]) -> Dict[int, str]:
    """Map each corpus file to the order of its first graph."""
    corpora: Dict[int, str] = {}
    for path in paths:
        first = next(iter(ingest(path)), None)
        if first is None:
            logger.warning(f"corpus {path} is empty; ignored")
            continue
        corpora[first.n] = path
    return corpora


@click.command("verify")
@click.option("--all", "run_all", is_flag=True, help="Every theorem.")
@click.option("--theorem", "theorems", multiple=True,
              type=click.Choice([t.value for t in Theorem]))
@click.option("--n", "orders", type=INTS, multiple=True, help="Orders, comma separated or repeated.")
@click.option("--gamma", "gammas", type=GAMMAS, multiple=True)
@click.option("--corpus", "corpora", multiple=True, type=click.Path(dir_okay=False),
              help="graph6 corpus; its order is read from the first line.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(sorted(WRITERS)), default=None)
@click.option("--jobs", type=click.IntRange(min=1), default=None,
              help="Worker processes (default: RANDIC_JOBS).")
@click.option("--tolerance", type=float, default=None)
@click.option("--exploratory", is_flag=True,
              help="Also sweep parameters outside the proven ranges.")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="JSON object of run fields; explicit flags win.")
@click.pass_context
def verify_command(ctx, run_all, theorems, orders, gammas, corpora, out, fmt, jobs,
                   tolerance, exploratory, config_path):
    """Sweep the corpus and check every bound and its extremal graphs."""
    fields = load_config(config_path) if config_path else {}
    flags = {
        "theorems": list(Theorem) if run_all else [Theorem(t) for t in theorems],
        "n": flatten(orders),
        "gammas": flatten(gammas),
        "inputs": list(corpora),
        "out": out,
        "format": fmt,
        "jobs": jobs,
        "tolerance": tolerance,
        "exploratory": True if exploratory else None,
    }
    fields.update({k: v for k, v in flags.items() if v not in (None, [])})
    fields.setdefault("jobs", settings.jobs)
    fields.setdefault("tolerance", settings.tolerance)
    config = RunConfig(subcommand="verify", **fields)

    if not config.theorems:
        raise click.UsageError("pass --all or at least one --theorem")
    if not config.n:
        raise click.UsageError("pass --n")
    if not config.gammas:
        raise click.UsageError("pass --gamma")

    reports = verifier.verify_suite(
        config.n,
        config.gammas,
        theorems=config.theorems,
        corpora=corpus_orders(config.inputs),
        jobs=config.jobs,
        exploratory=config.exploratory,
        tolerance=config.tolerance,
    )
    text = WRITERS[config.format](reports)
    if config.out:
        try:
            Path(config.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CorpusError(f"cannot write {config.out}: {exc}", code="corpus_io") from exc
    else:
        click.echo(text, nl=False)

    status = verifier.exit_status(reports)
    if status:
        ctx.exit(status)
