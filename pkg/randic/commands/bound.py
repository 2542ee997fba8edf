import json

import click

from randic import bounds
from randic.canon import canonical_form
from randic.commands.options import GAMMAS, flatten
from randic.families import generate
from randic.schemas import BoundQuery, Theorem


@click.command("bound")
@click.option("--theorem", type=click.Choice([t.value for t in Theorem]), required=True)
@click.option("--n", type=int, required=True)
@click.option("--c", type=int, required=True)
@click.option("--gamma", "gammas", type=GAMMAS, multiple=True, required=True)
@click.option("--exploratory", is_flag=True, help="Allow parameters outside the proven range.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="json")
def bound_command(theorem, n, c, gammas, exploratory, fmt):
    """Print the bound value and its extremal graphs."""
    out = []
    for gamma in flatten(gammas):
        q = BoundQuery(theorem=Theorem(theorem), n=n, c=c, gamma=gamma, exploratory=exploratory)
        value = bounds.bound_value(q)
        witnesses = [
            {"family": spec.label(), "graph6": canonical_form(generate(spec)).graph6}
            for spec in bounds.expected_witnesses(q)
        ]
        out.append({
            "theorem": theorem, "statement": bounds.THEOREMS[q.theorem].summary,
            "n": n, "c": c, "gamma": gamma,
            "bound": value, "witnesses": witnesses, "exploratory": exploratory,
        })

    if fmt == "json":
        click.echo(json.dumps(out[0] if len(out) == 1 else out, indent=2))
        return
    for row in out:
        click.echo(f"{row['bound']!r}\t{row['statement']}")
        for w in row["witnesses"]:
            click.echo(f"  {w['graph6']}\t{w['family']}")
