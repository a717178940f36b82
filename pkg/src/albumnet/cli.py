"""Command-line interface: fetch credit data, inspect role inventories,
and produce the full analysis report bundle.

Every command is deterministic for a given input: stable sort orders
everywhere, no sampling, so two runs produce byte-identical outputs.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import click

from albumnet import __version__
from albumnet.analysis import AblationSweep, ablation_sweep, growth_series
from albumnet.discogs import FetchPlan, HttpTransport, fetch_releases
from albumnet.errors import AlbumNetError, InsufficientDataError
from albumnet.graph import (
    BipartiteGraph,
    build_bipartite,
    project,
    write_bipartite_csv,
    write_edges_csv,
)
from albumnet.metrics import compute_stats, degree_distribution, top_hubs
from albumnet.records import Dataset, parse_records, write_records_csv
from albumnet.roles import role_inventory

_FORMAT_CHOICES = click.Choice(["csv", "jsonl", "json-lines"])


def _default_transport():
    # tests monkeypatch this to swap in a canned-payload transport
    return HttpTransport()


def _load_dataset(input_path: str, input_format: str) -> Dataset:
    try:
        with open(input_path, "rb") as handle:
            return parse_records(handle, input_format)
    except (OSError, AlbumNetError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


@click.group()
@click.version_option(__version__)
def main():
    """Collaboration-network toolkit for album credit data."""


@main.command()
@click.option("--input", "id_list_path", required=True,
              help="File with one master-release id per line.")
@click.option("--cache-dir", required=True, type=click.Path(file_okay=False),
              help="Directory for verbatim API response bodies.")
@click.option("--rate-limit", default=25, show_default=True,
              help="Maximum API requests per minute.")
@click.option("--out", "out_path", default="records.csv", show_default=True,
              help="Destination CSV of association records.")
@click.option("--report", "report_path", default=None,
              help="Write the fetch report JSON here instead of stdout.")
def fetch(id_list_path, cache_dir, rate_limit, out_path, report_path):
    """Fetch master releases from the Discogs API into a records CSV.

    Exit code 0 when every id succeeded, 2 on partial failures, 1 on
    configuration problems.
    """
    try:
        lines = Path(id_list_path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        click.echo(f"error: cannot read id list: {exc}", err=True)
        sys.exit(1)
    ids = tuple(line.strip() for line in lines if line.strip())
    plan = FetchPlan(
        release_ids=ids,
        cache_dir=Path(cache_dir),
        requests_per_minute=rate_limit,
    )
    try:
        dataset, report = fetch_releases(plan, transport=_default_transport())
    except AlbumNetError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    with open(out_path, "w", encoding="utf-8", newline="") as handle:
        write_records_csv(dataset, handle)
    payload = json.dumps(report.to_dict(), indent=2, sort_keys=True)
    if report_path:
        Path(report_path).write_text(payload + "\n", encoding="utf-8")
    else:
        click.echo(payload)
    sys.exit(2 if report.failures else 0)


@main.command()
@click.option("--input", "input_path", required=True)
@click.option("--format", "input_format", default="csv", show_default=True,
              type=_FORMAT_CHOICES)
def roles(input_path, input_format):
    """Print the normalized role inventory as CSV (role,count)."""
    dataset = _load_dataset(input_path, input_format)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(("role", "count"))
    for label, count in role_inventory(dataset):
        writer.writerow((label, count))


@main.command()
@click.option("--input", "input_path", required=True)
@click.option("--format", "input_format", default="csv", show_default=True,
              type=_FORMAT_CHOICES)
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
@click.option("--mode", default="both", show_default=True,
              type=click.Choice(["album", "collaborator", "both"]))
@click.option("--top-k", default=10, show_default=True,
              help="Length of the hub table.")
@click.option("--jobs", default=1, show_default=True,
              help="Worker threads for path metrics (never changes results).")
def analyze(input_path, input_format, out_dir, mode, top_k, jobs):
    """Write the per-mode report bundle.

    Per mode: stats.json, degree_distribution.csv, hubs.csv, growth.csv,
    ablation.csv, ablation_summary.json, edges.csv under <out>/<mode>/,
    plus the bipartite edge list at <out>/bipartite.csv.
    """
    dataset = _load_dataset(input_path, input_format)
    try:
        bipartite = build_bipartite(dataset)
    except AlbumNetError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "bipartite.csv", "w", encoding="utf-8", newline="") as handle:
        write_bipartite_csv(bipartite, handle)
    modes = ["album", "collaborator"] if mode == "both" else [mode]
    for current in modes:
        _write_mode_reports(bipartite, current, out / current, top_k, jobs)
        click.echo(f"wrote {current} reports to {out / current}")


def _write_text(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8", newline="\n")


def _write_mode_reports(
    bipartite: BipartiteGraph, mode: str, mode_dir: Path, top_k: int, jobs: int
) -> None:
    mode_dir.mkdir(parents=True, exist_ok=True)
    projected = project(bipartite, mode)
    stats = compute_stats(projected, jobs=jobs)
    stats_payload = stats.to_dict()

    try:
        growth = growth_series(bipartite, mode)
    except InsufficientDataError as exc:
        growth = None
        stats_payload["growth_notice"] = f"growth outputs omitted: {exc}"
    _write_text(
        mode_dir / "stats.json",
        json.dumps(stats_payload, indent=2, sort_keys=True) + "\n",
    )

    distribution = degree_distribution(projected)
    lines = ["degree,fraction"]
    lines += [f"{k},{fraction!r}" for k, fraction in distribution.points]
    _write_text(mode_dir / "degree_distribution.csv", "\n".join(lines) + "\n")

    with open(mode_dir / "hubs.csv", "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(("id", "name", "degree"))
        for node_id, name, degree in top_hubs(projected, top_k).entries:
            writer.writerow((node_id, name, degree))

    with open(mode_dir / "edges.csv", "w", encoding="utf-8", newline="") as handle:
        write_edges_csv(projected, handle)

    if growth is not None:
        lines = ["year,nodes,gc_size"]
        lines += [f"{year},{nodes},{giant}" for year, nodes, giant in growth.points]
        _write_text(mode_dir / "growth.csv", "\n".join(lines) + "\n")

    sweep = ablation_sweep(bipartite, mode, jobs=jobs)
    with open(mode_dir / "ablation.csv", "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(
            ("role", "omitted_edges", "omitted_fraction", "gc_size", "gc_fraction")
        )
        for result in sweep.results:
            writer.writerow(
                (
                    result.omitted_role,
                    result.omitted_edges,
                    repr(result.omitted_fraction),
                    result.giant_component_size,
                    repr(result.giant_component_fraction),
                )
            )
    _write_text(
        mode_dir / "ablation_summary.json",
        json.dumps(_sweep_summary(sweep, growth), indent=2, sort_keys=True) + "\n",
    )


def _sweep_summary(sweep: AblationSweep, growth) -> dict:
    return {
        "mode": sweep.mode,
        "base_stats": sweep.base_stats.to_dict(),
        "descriptive": {
            quantity: {
                "min": stats.min,
                "max": stats.max,
                "mean": stats.mean,
                "std": stats.std,
            }
            for quantity, stats in sweep.descriptive.items()
        },
        "pearson_omitted_edges_vs_giant_size": sweep.pearson_r,
        "growth_pearson_r": None if growth is None else growth.pearson_r,
    }


if __name__ == "__main__":
    main()
