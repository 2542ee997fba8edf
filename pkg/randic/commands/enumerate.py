import click

from randic.codec import graph6_encode
from randic.enumeration import enumerate_all, enumerate_connected, write_corpus


@click.command("enumerate")
@click.option("--n", type=int, required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Corpus file to write; stdout when omitted.")
@click.option("--all-graphs", is_flag=True, help="Include disconnected graphs.")
def enumerate_command(n, out, all_graphs):
    """Write the builtin corpus of non-isomorphic graphs on n vertices."""
    graphs = enumerate_all(n) if all_graphs else enumerate_connected(n)
    if out:
        count = write_corpus(out, graphs)
        click.echo(f"{count} graphs written to {out}", err=True)
        return
    for G in graphs:
        click.echo(graph6_encode(G))
