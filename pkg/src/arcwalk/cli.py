"""Command-line client for the analysis service.

Subcommands build the same request models the HTTP API accepts and, by
default, invoke the service handlers in-process; --server points them
at a running instance instead.  Exit codes: 0 success, 2 input error,
3 precondition violation (e.g. bipartite basis of a non-bipartite
graph), 4 internal invariant breach.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .documents import canonical_json
from .errors import ArcwalkError, InvariantError, OddCycleError
from .service import (
    AnalyzeRequest,
    CensusRequest,
    perform_analysis,
    perform_census,
)

EXIT_INPUT_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_INVARIANT = 4


def _emit(doc: dict, out: str | None):
    text = canonical_json(doc)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _dispatch(endpoint: str, request, server: str | None) -> dict:
    if server is None:
        handler = perform_analysis if endpoint == "analyze" else perform_census
        return handler(request)
    import httpx

    response = httpx.post(
        f"{server.rstrip('/')}/{endpoint}",
        json=request.model_dump(),
        timeout=None,
    )
    if response.status_code == 409:
        raise OddCycleError((), response.json().get("detail", response.text))
    if response.status_code >= 500:
        raise InvariantError(response.text)
    if response.status_code >= 400:
        raise ArcwalkError(response.text)
    return response.json()


def _run(endpoint: str, request, server: str | None, out: str | None):
    try:
        doc = _dispatch(endpoint, request, server)
    except OddCycleError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PRECONDITION)
    except InvariantError as exc:
        click.echo(f"internal invariant failure: {exc}", err=True)
        sys.exit(EXIT_INVARIANT)
    except (ArcwalkError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    _emit(doc, out)


@click.group()
def main():
    """Exact arc-space and Bass-Hashimoto analysis of graphs."""


@main.command()
@click.option("--graph6", "graph6_str", default=None, help="One graph6 record.")
@click.option(
    "--edges",
    "edges_path",
    default=None,
    type=click.Path(),
    help="Path to an edge-list file ('n m' header then 'u v' lines).",
)
@click.option(
    "--basis",
    type=click.Choice(["direct", "h", "bipartite", "all"]),
    default=None,
    help="Include the selected basis construction(s) of L.",
)
@click.option("--identities", is_flag=True, help="Run the operator identity suite.")
@click.option("--semisimple", is_flag=True, help="Include the semi-simplicity report.")
@click.option(
    "--candidates",
    multiple=True,
    help="Candidate repeated factor, ascending coefficients ('2,1,1' = x^2+x+2).",
)
@click.option("--out", default=None, type=click.Path(), help="Write JSON here instead of stdout.")
@click.option("--server", default=None, help="Base URL of a running arcwalk service.")
def analyze(graph6_str, edges_path, basis, identities, semisimple, candidates, out, server):
    """Analyze a single graph and print one JSON document."""
    if (graph6_str is None) == (edges_path is None):
        click.echo("error: provide exactly one of --graph6 and --edges", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    edge_list = None
    if edges_path is not None:
        try:
            edge_list = Path(edges_path).read_text()
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT_ERROR)
    request = AnalyzeRequest(
        graph6=graph6_str,
        edge_list=edge_list,
        basis=basis,
        identities=identities,
        semisimple=semisimple,
        **({"candidates": list(candidates)} if candidates else {}),
    )
    _run("analyze", request, server, out)


@main.command()
@click.option("--census-n", "n", default=None, type=int, help="Use the built-in generator for this n.")
@click.option("--source", default=None, type=click.Path(), help="External graph6 stream, one record per line.")
@click.option("--connected/--all", "connected_only", default=True, help="Restrict to connected graphs (default) or sweep all.")
@click.option("--no-degree-one", is_flag=True, help="Exclude graphs with a vertex of degree 1.")
@click.option("--min-degree", default=0, type=int, help="Minimum degree bound.")
@click.option("--regular", "regular_valency", default=None, type=int, help="Keep only k-regular graphs.")
@click.option(
    "--candidates",
    multiple=True,
    help="Candidate repeated factor, ascending coefficients; default x^2+2 and x^2+x+2.",
)
@click.option("--jobs", default=1, type=int, help="Worker processes for the sweep.")
@click.option("--out", default=None, type=click.Path(), help="Write JSON here instead of stdout.")
@click.option("--server", default=None, help="Base URL of a running arcwalk service.")
def census(n, source, connected_only, no_degree_one, min_degree, regular_valency, candidates, jobs, out, server):
    """Sweep a graph stream for non-semi-simple Bass-Hashimoto operators."""
    if (n is None) == (source is None):
        click.echo("error: provide exactly one of --census-n and --source", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    records = None
    if source is not None:
        try:
            records = Path(source).read_text().splitlines()
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT_ERROR)
    request = CensusRequest(
        n=n,
        graph6_records=records,
        connected_only=connected_only,
        forbid_degree_one=no_degree_one,
        min_degree=min_degree,
        regular_valency=regular_valency,
        jobs=jobs,
        **({"candidates": list(candidates)} if candidates else {}),
    )
    _run("census", request, server, out)


if __name__ == "__main__":
    main()
