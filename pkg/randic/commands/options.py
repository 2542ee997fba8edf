import re
import sys
from typing import Iterator, List, Sequence

import click

from randic.codec import graph6_decode
from randic.enumeration import ingest
from randic.errors import ParameterError
from randic.graph import Graph

DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


def parse_gamma(text: str) -> float:
    text = text.strip()
    if not DECIMAL.match(text):
        raise ParameterError(
            f"gamma must be a decimal literal, got {text!r}", code="gamma_format", value=text
        )
    value = float(text)
    if value == 0:
        raise ParameterError(
            "gamma must be non-zero: the index is defined for non-zero real exponents",
            code="gamma_zero",
        )
    return value


class GammaList(click.ParamType):
    """Comma separated decimal exponents, e.g. "-1,-0.5"."""

    name = "gamma"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        return [parse_gamma(part) for part in str(value).split(",") if part.strip()]


class IntList(click.ParamType):
    name = "ints"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            return [int(part) for part in str(value).split(",") if part.strip()]
        except ValueError:
            self.fail(f"{value!r} is not a comma separated list of integers", param, ctx)


GAMMAS = GammaList()
INTS = IntList()


def flatten(values: Sequence[List]) -> list:
    return [x for group in values for x in group]


def read_graphs(graph6: Sequence[str], inputs: Sequence[str]) -> Iterator[Graph]:
    """Graphs from --graph6 literals, then --input files; stdin when neither is given."""
    for text in graph6:
        yield graph6_decode(text)
    for path in inputs:
        if path == "-":
            yield from _stdin()
        else:
            for G in ingest(path):
                yield G
    if not graph6 and not inputs:
        yield from _stdin()


def _stdin() -> Iterator[Graph]:
    for line in sys.stdin:
        text = line.strip()
        if text:
            yield graph6_decode(text)
