import json

import click

from randic.codec import graph6_encode
from randic.commands.options import INTS
from randic.families import family_of, generate
from randic.schemas import Family


@click.command("gen")
@click.option("--family", type=click.Choice([f.value for f in Family]), required=True)
@click.option("--n", type=int, default=None, help="Order (implied by --parts/--pendants).")
@click.option("--c", type=int, default=None)
@click.option("--parts", type=INTS, default=None, help="Part sizes for multipartite.")
@click.option("--pendants", type=INTS, default=None, help="Pendant counts for star_clique.")
@click.option("--n1", type=int, default=None, help="Left side size for connectivity_split.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def gen_command(family, n, c, parts, pendants, n1, fmt):
    """Emit one member of a named family as graph6."""
    if n is None and family not in (Family.MULTIPARTITE.value, Family.STAR_CLIQUE.value):
        raise click.UsageError(f"--n is required for {family}")
    if family == Family.MULTIPARTITE.value and not parts:
        raise click.UsageError("--parts is required for multipartite")
    if family == Family.STAR_CLIQUE.value and not pendants:
        raise click.UsageError("--pendants is required for star_clique")
    spec = family_of(family, n, c, parts=parts, pendants=pendants, n1=n1)
    G = generate(spec)
    if fmt == "json":
        click.echo(json.dumps({
            "family": spec.label(),
            "graph6": graph6_encode(G),
            "degrees": sorted(G.degrees(), reverse=True),
        }))
    else:
        click.echo(graph6_encode(G))
