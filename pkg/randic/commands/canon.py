import click

from randic.canon import canonical_form
from randic.commands.options import read_graphs


@click.command("canon")
@click.option("--graph6", "graph6", multiple=True)
@click.option("--input", "inputs", multiple=True, type=click.Path(allow_dash=True))
def canon_command(graph6, inputs):
    """Print the canonical graph6 string of each input graph."""
    for G in read_graphs(graph6, inputs):
        click.echo(canonical_form(G).graph6)
