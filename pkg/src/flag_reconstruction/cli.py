"""The `flagrecon` command line."""

import functools
import json
import logging
from collections.abc import Callable
from pathlib import Path
from typing import IO, Any, get_args

import click

from flag_reconstruction.datamodel.reconstruction import NoCertificate
from flag_reconstruction.datamodel.report import (
    AnalysisReport,
    AnalysisSettings,
    InputFormatOptions,
)
from flag_reconstruction.errors import FlagReconstructionError
from flag_reconstruction.families import FAMILIES, generate
from flag_reconstruction.formats import (
    emit_graph6,
    parse_complex,
    parse_graph,
    parse_graph6_lines,
)
from flag_reconstruction.homology import reduced_cohomology, reduced_homology
from flag_reconstruction.reconstruction import (
    brute_force_oracle,
    deck,
    enumerate_graphs,
    reconstruct_from_card,
)
from flag_reconstruction.report import analyze_graph

logger = logging.getLogger(__name__)

EXIT_CERTIFIED = 0
EXIT_NO_CERTIFICATE = 1
EXIT_ERROR = 2

_format_option = click.option(
    "--format",
    "input_format",
    type=click.Choice(get_args(InputFormatOptions)),
    default="g6",
    show_default=True,
    help="Input format: graph6 or a 'u v' edge list.",
)


def _reports_errors[**P, R](command: Callable[P, R]) -> Callable[P, R]:
    """Print package errors to stderr and exit with status 2."""

    @functools.wraps(command)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
        try:
            return command(*args, **kwargs)
        except FlagReconstructionError as e:
            click.echo(f"error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_ERROR) from e

    return wrapper


@click.group()
@click.option("-v", "--verbose", count=True, help="Repeat for more logging (-v info, -vv debug).")
def main(verbose: int) -> None:
    """Reconstructibility certificates for graphs with manifold-like flag complexes."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@main.command()
@click.argument("source", type=click.File("r"), default="-")
@_format_option
@click.option(
    "--json",
    "json_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the report here instead of standard output.",
)
@click.option("--max-dim", type=click.IntRange(min=0), help="Cap on the flag complex dimension.")
@click.option(
    "--timings",
    is_flag=True,
    help='Add a "timings" object with seconds per stage. Without it reports are byte-identical across runs.',
)
@_reports_errors
def analyze(
    source: IO[str],
    input_format: InputFormatOptions,
    json_path: Path | None,
    max_dim: int | None,
    timings: bool,  # noqa: FBT001
) -> None:
    """Analyze one graph; exit 0 with a certificate, 1 without."""
    g = parse_graph(source.read(), input_format)
    settings = AnalysisSettings(max_dimension=max_dim, include_timings=timings)
    report = analyze_graph(g, settings, input_format)
    logger.info("Analyzed %d vertices: certificate %s", g.order, report.certificate.path)
    payload = report.model_dump_json(indent=2)
    if json_path is None:
        click.echo(payload)
    else:
        json_path.write_text(payload + "\n")
        click.echo(f"certificate: {report.certificate.path}")
    if isinstance(report.certificate, NoCertificate):
        raise click.exceptions.Exit(EXIT_NO_CERTIFICATE)


@main.command("deck")
@click.argument("source", type=click.File("r"), default="-")
@_format_option
@_reports_errors
def deck_command(source: IO[str], input_format: InputFormatOptions) -> None:
    """Print the card multiset as 'graph6 multiplicity' lines."""
    g = parse_graph(source.read(), input_format)
    for card in deck(g).cards:
        click.echo(f"{emit_graph6(card.form.to_graph())} {card.multiplicity}")


@main.command()
@click.argument("source", type=click.File("r"), default="-")
@_format_option
@click.option("--dim", type=click.IntRange(min=1), required=True, help="Manifold dimension n.")
@_reports_errors
def reconstruct(source: IO[str], input_format: InputFormatOptions, dim: int) -> None:
    """Recover a graph from one card of a homology-manifold graph."""
    card = parse_graph(source.read(), input_format)
    click.echo(emit_graph6(reconstruct_from_card(card, dim)))


@main.command()
@click.argument("corpus", type=click.File("r"), required=False)
@click.option(
    "--max-n",
    type=click.IntRange(1, 7),
    default=7,
    show_default=True,
    help="Order of the enumerated graphs when no corpus is given (1 to 7).",
)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@_reports_errors
def scan(corpus: IO[str] | None, max_n: int, jobs: int) -> None:
    """Look for non-isomorphic graphs with equal decks.

    Without CORPUS every graph on --max-n vertices is enumerated, 7 by default.
    """
    graphs = parse_graph6_lines(corpus.read()) if corpus else enumerate_graphs(max_n)
    groups = brute_force_oracle(graphs, jobs=jobs)
    for group in groups:
        click.echo(" ".join(emit_graph6(g) for g in group.graphs))
    click.echo(f"{len(graphs)} graphs scanned, {len(groups)} hypomorphic groups")


@main.command()
@click.argument("family", type=click.Choice(sorted(FAMILIES)))
@click.argument("params", type=int, nargs=-1)
@_reports_errors
def gen(family: str, params: tuple[int, ...]) -> None:
    """Emit a graph from a named family as graph6."""
    click.echo(emit_graph6(generate(family, *params)))


@main.command()
@click.argument("source", type=click.File("r"), default="-")
@_reports_errors
def homology(source: IO[str]) -> None:
    """Reduced homology and cohomology of a complex given by maximal simplices."""
    L = parse_complex(source.read())
    h = reduced_homology(L)
    c = reduced_cohomology(L)
    click.echo(f"dimension {L.dimension}, f-vector {L.f_vector()}")
    for k in range(-1, L.dimension + 1):
        click.echo(f"{k:>3}  H~ {h.degree(k)!s:<12} H~^ {c.degree(k)}")


@main.command()
def schema() -> None:
    """Print the JSON schema of analysis reports."""
    document: dict[str, Any] = AnalysisReport.model_json_schema()
    click.echo(json.dumps(document, indent=2))
