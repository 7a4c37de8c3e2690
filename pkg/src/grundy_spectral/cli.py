"""Command-line client.

Every subcommand talks to the HTTP API: in-process by default (no server
needed), or to a running instance via --server.  Exit codes: 0 success,
1 domain error (bad graph, exceeded cap, failed checks), 2 usage error.
"""

from __future__ import annotations

import json
import pathlib
import sys

import click


class _ApiClient:
    """Minimal POST/GET wrapper over either transport."""

    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=None)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict):
        return self._client.post(path, json=payload)

    def get(self, path: str, params: dict):
        return self._client.get(path, params=params)


def _bail(response) -> None:
    """Print the error detail and exit with the contract's code."""
    try:
        detail = response.json().get("detail", response.text)
    except ValueError:
        detail = response.text
    click.echo(f"error: {detail}", err=True)
    sys.exit(2 if response.status_code == 422 else 1)


@click.group()
@click.option(
    "--server",
    default=None,
    metavar="URL",
    help="base URL of a running service; default runs in-process",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Grundy-number bounds, atoms, and spectral experiments."""
    ctx.obj = _ApiClient(server)


@main.command("analyze")
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--exact-budget", default=10**8, show_default=True)
@click.option("--graph-id", default=None, help="identifier in the output")
@click.option("--json", "as_json", is_flag=True, help="JSON output (default)")
@click.option("--csv", "as_csv", is_flag=True, help="CSV output")
@click.pass_obj
def cmd_analyze(
    client: _ApiClient,
    graph_file: str,
    exact_budget: int,
    graph_id: str | None,
    as_json: bool,
    as_csv: bool,
) -> None:
    """Full bound report for a graph in edge-list format."""
    if as_json and as_csv:
        raise click.UsageError("--json and --csv are mutually exclusive")
    text = pathlib.Path(graph_file).read_text()
    payload = {
        "edge_list": text,
        "graph_id": graph_id or pathlib.Path(graph_file).stem,
        "exact_budget": exact_budget,
    }
    resp = client.post("/analyze", payload)
    if resp.status_code != 200:
        _bail(resp)
    data = resp.json()
    if as_csv:
        click.echo(data["csv_header"])
        click.echo(data["csv_row"])
    else:
        data.pop("csv_header")
        data.pop("csv_row")
        click.echo(json.dumps(data, indent=2, sort_keys=True))


@main.command("atoms")
@click.option("--k", required=True, type=int)
@click.option("--n-max", required=True, type=int)
@click.option(
    "--out",
    required=True,
    type=click.Path(file_okay=False),
    help="directory for per-atom JSON files and the manifest",
)
@click.pass_obj
def cmd_atoms(client: _ApiClient, k: int, n_max: int, out: str) -> None:
    """Enumerate all k-atoms up to n_max vertices."""
    resp = client.post("/atoms", {"k": k, "n_max": n_max})
    if resp.status_code != 200:
        _bail(resp)
    data = resp.json()
    out_dir = pathlib.Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = []
    for i, atom in enumerate(data["atoms"]):
        name = f"atom_{i:05d}.json"
        (out_dir / name).write_text(json.dumps(atom, indent=2) + "\n")
        files.append(name)
    manifest = {
        "k": data["k"],
        "n_max": data["n_max"],
        "count": data["count"],
        "files": files,
    }
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n"
    )
    click.echo(f"wrote {data['count']} atoms to {out_dir}")


@main.command("tk")
@click.option("--k-max", required=True, type=int)
@click.pass_obj
def cmd_tk(client: _ApiClient, k_max: int) -> None:
    """CSV table of the tree eigenvalue recurrence vs its upper envelope."""
    resp = client.get("/tk", {"k_max": k_max})
    if resp.status_code != 200:
        _bail(resp)
    click.echo("k,f_k,sqrt_2k_minus_2,gap")
    for row in resp.json()["rows"]:
        click.echo(
            f"{row['k']},{row['f_k']!r},{row['sqrt_2k_minus_2']!r},{row['gap']!r}"
        )


@main.command("verify")
@click.option("--suite", required=True)
@click.pass_obj
def cmd_verify(client: _ApiClient, suite: str) -> None:
    """Run one named invariant suite; nonzero exit on any failure."""
    resp = client.post("/verify", {"suite": suite})
    if resp.status_code != 200:
        _bail(resp)
    data = resp.json()
    for check in data["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        click.echo(f"{status} {check['name']}: {check['detail']}")
    if not data["passed"]:
        sys.exit(1)


def _parse_sweep_config(path: str) -> dict:
    """key=value lines; '#' comments; n_values is comma-separated."""
    payload: dict = {}
    for lineno, raw in enumerate(pathlib.Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise click.UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "family":
            payload[key] = value
        elif key == "n_values":
            payload[key] = [int(v) for v in value.split(",") if v.strip()]
        elif key in ("trials", "rng_seed", "orderings"):
            payload[key] = int(value)
        elif key in ("c", "p_exponent"):
            payload[key] = float(value)
        else:
            raise click.UsageError(f"{path}:{lineno}: unknown key {key!r}")
    return payload


@main.command("sweep")
@click.argument("config_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@click.option("--workers", default=1, show_default=True)
@click.pass_obj
def cmd_sweep(
    client: _ApiClient, config_file: str, out: str | None, workers: int
) -> None:
    """Random-graph sweep driven by a key=value config file."""
    payload = _parse_sweep_config(config_file)
    payload["workers"] = workers
    resp = client.post("/sweep", payload)
    if resp.status_code != 200:
        _bail(resp)
    data = resp.json()
    if out:
        pathlib.Path(out).write_text(data["csv"])
    else:
        click.echo(data["csv"], nl=False)
    if data["truncated"]:
        click.echo("warning: sweep truncated by vertex budget", err=True)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def cmd_serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
