import click

from randic.commands.options import read_graphs
from randic.invariants import invariant_profile


@click.command("profile")
@click.option("--graph6", "graph6", multiple=True)
@click.option("--input", "inputs", multiple=True, type=click.Path(allow_dash=True))
def profile_command(graph6, inputs):
    """Print chromatic, clique, connectivity and degree data as JSON, one line per graph."""
    for G in read_graphs(graph6, inputs):
        click.echo(invariant_profile(G).model_dump_json())
