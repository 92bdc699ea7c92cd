"""Command-line front end: a thin client of the HTTP service.

Without --server the service app runs in process behind an ASGI transport;
with --server the same requests go to a running instance. Either way the
CLI only builds requests, renders responses, and maps exit codes:

  0  evaluation succeeded / verification passed
  1  verification failed
  2  usage or parse error
  3  internal search limit

Results go to stdout (or --out); progress and errors go to stderr.
"""

from __future__ import annotations

import asyncio
import sys
from pathlib import Path

import click
import httpx

from .reporting import FORMATS, first_failure, render_report, render_solve, render_value

_FAMILIES = ("complete", "cycle", "path", "star")
_MODES = ("at-least-one", "exactly-one")


def _post(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        try:
            with httpx.Client(base_url=server, timeout=None) as client:
                return client.post(path, json=payload)
        except httpx.HTTPError as exc:
            click.echo(f"error: cannot reach {server}: {exc}", err=True)
            sys.exit(2)

    from .service import app  # deferred so --help stays snappy

    async def call() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://pebbling.internal", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(call())


def _body_or_exit(response: httpx.Response) -> dict:
    if response.status_code == 200:
        return response.json()
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict):
        kind = detail.get("kind", "usage")
        message = detail.get("message", "request failed")
    elif isinstance(detail, list):
        kind = "usage"
        message = "; ".join(str(item.get("msg", item)) for item in detail)
    else:
        kind = "usage"
        message = detail or f"request failed with status {response.status_code}"
    click.echo(f"error: {message}", err=True)
    sys.exit(3 if kind == "limit" else 2)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", newline="") as handle:
            handle.write(text)


def _graph_options(command):
    for option in (
        click.option("--graph", "graph6", metavar="G6", help="graph6 string"),
        click.option(
            "--edges",
            "edges_path",
            type=click.Path(exists=True, dir_okay=False),
            help="edge-list file: first line 'n <count>', then one 'u v' per line",
        ),
        click.option("--family", type=click.Choice(_FAMILIES), help="named construction"),
        click.option("--n", "family_n", type=int, help="vertex count for --family"),
    ):
        command = option(command)
    return command


def _output_options(command):
    for option in (
        click.option(
            "--format",
            "fmt",
            type=click.Choice(FORMATS),
            default="human",
            show_default=True,
        ),
        click.option(
            "--out",
            type=click.Path(dir_okay=False),
            default=None,
            help="write output to this file instead of stdout",
        ),
    ):
        command = option(command)
    return command


def _graph_spec(graph6, edges_path, family, family_n) -> dict:
    given = sum(x is not None for x in (graph6, edges_path, family))
    if given != 1:
        raise click.UsageError("give exactly one of --graph, --edges, --family")
    if graph6 is not None:
        return {"graph6": graph6}
    if edges_path is not None:
        return {"edge_list": Path(edges_path).read_text()}
    if family_n is None:
        raise click.UsageError("--family needs --n")
    return {"family": family, "n": family_n}


@click.group()
@click.option(
    "--server",
    envvar="PEBBLING_SERVER",
    default=None,
    metavar="URL",
    help="base URL of a running service; default runs the service in process",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Exact graph pebbling: solve positions, compute the two pebbling
    numbers, and run verification sweeps."""
    ctx.obj = server


@main.command()
@_graph_options
@click.option("--config", required=True, metavar="COUNTS", help='counts, e.g. "0,4,0"')
@click.option("--target", required=True, type=int, metavar="VERTEX")
@click.option("--mode", required=True, type=click.Choice(_MODES))
@_output_options
@click.pass_obj
def solve(server, graph6, edges_path, family, family_n, config, target, mode, fmt, out):
    """Decide one configuration against one target."""
    payload = {
        "graph": _graph_spec(graph6, edges_path, family, family_n),
        "config": config,
        "target": target,
        "mode": mode,
    }
    body = _body_or_exit(_post(server, "/solve", payload))
    _emit(render_solve(body, fmt), out)


@main.command()
@_graph_options
@_output_options
@click.pass_obj
def pi(server, graph6, edges_path, family, family_n, fmt, out):
    """Exact pebbling number, with a blocking configuration one below it."""
    payload = {"graph": _graph_spec(graph6, edges_path, family, family_n)}
    body = _body_or_exit(_post(server, "/pebbling-number", payload))
    _emit(render_value(body, fmt), out)


@main.command()
@_graph_options
@_output_options
@click.pass_obj
def pis(server, graph6, edges_path, family, family_n, fmt, out):
    """Exact singular (exactly-one) pebbling number, with a blocking witness."""
    payload = {"graph": _graph_spec(graph6, edges_path, family, family_n)}
    body = _body_or_exit(_post(server, "/singular-pebbling-number", payload))
    _emit(render_value(body, fmt), out)


@main.command()
@click.option("--n-max", required=True, type=click.IntRange(3, 7))
@click.option("--t-max", default=8, show_default=True, type=click.IntRange(0))
@click.option("--window", default=4, show_default=True, type=click.IntRange(0))
@click.option(
    "--jobs",
    default=None,
    type=click.IntRange(1),
    help="parallel workers; default: machine concurrency",
)
@_output_options
@click.pass_obj
def verify(server, n_max, t_max, window, jobs, fmt, out):
    """Run the full verification sweep; exit 0 only if everything passes."""
    click.echo(f"verifying graphs up to n={n_max} ...", err=True)
    payload = {"n_max": n_max, "t_max": t_max, "window": window, "jobs": jobs}
    body = _body_or_exit(_post(server, "/verify", payload))
    _emit(render_report(body, fmt), out)
    if not body["passed"]:
        failure = first_failure(body)
        if failure:
            click.echo(f"first counterexample: {failure}", err=True)
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
