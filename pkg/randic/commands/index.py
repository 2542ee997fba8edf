import json

import click
from loguru import logger

from randic.codec import graph6_encode
from randic.commands.options import GAMMAS, flatten, read_graphs
from randic.invariants import zeroth_order_general_randic


@click.command("index")
@click.option("--gamma", "gammas", type=GAMMAS, multiple=True, required=True,
              help="Exponent(s), comma separated or repeated.")
@click.option("--graph6", "graph6", multiple=True, help="A graph6 string; repeatable.")
@click.option("--input", "inputs", multiple=True, type=click.Path(allow_dash=True),
              help="graph6 file, one graph per line ('-' for stdin).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def index_command(gammas, graph6, inputs, fmt):
    """Compute the zeroth-order general Randic index of each input graph."""
    gammas = flatten(gammas)
    rows = []
    for G in read_graphs(graph6, inputs):
        values = [zeroth_order_general_randic(G, g) for g in gammas]
        text = graph6_encode(G)
        logger.debug(f"index {text}: {values}")
        if fmt == "json":
            rows.extend({"graph6": text, "gamma": g, "value": v} for g, v in zip(gammas, values))
        else:
            click.echo("\t".join(repr(v) for v in values))
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
