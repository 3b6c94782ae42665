"""Command-line surface: generation, recognition, measurement, enumeration,
verification suites, and format export. All subcommands read and write
graph6, one graph per line."""

from __future__ import annotations

import json
import random
import sys

import click

from .census import census_critical, corpus_from_lines, enumerate_graphs
from .errors import SizeCapError
from .graphs import graph6_decode, graph6_encode, to_dot
from .orekit import is_k_ore, random_ore_tree, realize, tree_dumps
from .packing import compute_T
from .potential import rho, rho_ky
from .suites import DEFAULT_SEED, SUITE_IDS, run_suite


def _read_graphs(handle):
    out = []
    for idx, line in enumerate(handle):
        line = line.strip()
        if not line:
            continue
        try:
            out.append(graph6_decode(line))
        except ValueError as err:
            raise click.ClickException(f"line {idx + 1}: {err}")
    return out


@click.group()
def main():
    """Workbench for composed color-critical graphs and their potentials."""


@main.command("gen-ore")
@click.option("--k", type=int, required=True, help="Clique order of the building blocks.")
@click.option("--steps", type=int, required=True, help="Number of compositions.")
@click.option("--seed", type=int, required=True, help="Random seed.")
@click.option("--count", type=int, default=1, show_default=True, help="How many graphs.")
@click.option("--out", type=click.File("w"), default="-", help="graph6 output file.")
@click.option("--tree-out", type=click.File("w"), default=None, help="Also write composition trees as JSON lines.")
def gen_ore(k, steps, seed, count, out, tree_out):
    """Generate random composed graphs and print them as graph6."""
    rng = random.Random(seed)
    try:
        for _ in range(count):
            tree = random_ore_tree(k, steps, rng)
            out.write(graph6_encode(realize(tree, k)) + "\n")
            if tree_out is not None:
                tree_out.write(tree_dumps(tree) + "\n")
    except ValueError as err:
        raise click.ClickException(str(err))


@main.command("recognize-ore")
@click.option("--k", type=int, required=True)
@click.option("--in", "infile", type=click.File("r"), required=True, help="graph6 input file.")
@click.option("--cap", type=int, default=25, show_default=True, help="Vertex cap for recognition.")
def recognize_ore(k, infile, cap):
    """Decide for each input graph whether it is a composed graph."""
    for g in _read_graphs(infile):
        try:
            witness = is_k_ore(g, k, cap=cap)
        except SizeCapError as err:
            click.echo(f"{graph6_encode(g)}\tskip-cap\t{err}")
            continue
        click.echo(f"{graph6_encode(g)}\t{'ore' if witness is not None else 'not-ore'}")


@main.command("potential")
@click.option("--k", type=int, required=True)
@click.option("--in", "infile", type=click.File("r"), required=True)
def potential_cmd(k, infile):
    """Print exact potential values for each input graph."""
    click.echo("graph6\tn\tm\tT\trho_int\trho")
    for g in _read_graphs(infile):
        t_val = compute_T(g, k).value
        click.echo(
            f"{graph6_encode(g)}\t{g.n}\t{g.edge_count()}\t{t_val}"
            f"\t{rho_ky(g, k)}\t{rho(g, k, t_val)}"
        )


@main.command("pack")
@click.option("--k", type=int, required=True)
@click.option("--in", "infile", type=click.File("r"), required=True)
def pack_cmd(k, infile):
    """Print the exact packing value and a witness for each input graph."""
    for g in _read_graphs(infile):
        witness = compute_T(g, k)
        parts = " ".join("+".join(map(str, c)) for c in witness.cliques) or "-"
        click.echo(f"{graph6_encode(g)}\tT={witness.value}\t{parts}")


@main.command("enumerate")
@click.option("--n", type=int, required=True)
@click.option("--critical", is_flag=True, help="Only k-critical graphs, cumulatively up to n.")
@click.option("--k", type=int, default=4, show_default=True)
def enumerate_cmd(n, critical, k):
    """Print graph6 lines for all classes on n vertices, or the criticality
    census up to n."""
    try:
        corpus = census_critical(n, k) if critical else enumerate_graphs(n)
    except (SizeCapError, ValueError) as err:
        raise click.ClickException(str(err))
    for g in corpus.graphs:
        click.echo(graph6_encode(g))


@main.command("verify")
@click.option("--suite", "suite_id", required=True, help="Suite id or 'all'.")
@click.option("--k", type=int, default=4, show_default=True)
@click.option("--in", "infile", type=click.File("r"), default=None, help="graph6 corpus.")
@click.option("--census", "census_n", type=int, default=None, help="Use the criticality census up to n as corpus.")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--cap", "caps", multiple=True, help="Suite cap as key=value; repeatable.")
@click.option("--json", "json_path", type=click.Path(writable=True), default=None)
@click.option("--csv", "csv_path", type=click.Path(writable=True), default=None)
def verify_cmd(suite_id, k, infile, census_n, seed, caps, json_path, csv_path):
    """Run verification suites; exit 0 only if every run suite passes."""
    if infile is not None and census_n is not None:
        raise click.ClickException("--in and --census are mutually exclusive")
    cap_map = {}
    for item in caps:
        key, sep, value = item.partition("=")
        if not sep:
            raise click.ClickException(f"cap {item!r} is not key=value")
        cap_map[key] = int(value)
    corpus = None
    if infile is not None:
        corpus = corpus_from_lines("cli", infile)
    elif census_n is not None:
        corpus = census_critical(census_n, k)
    params = {"k": k, "seed": seed, "caps": cap_map}
    ids = SUITE_IDS if suite_id == "all" else (suite_id,)
    results = []
    for sid in ids:
        try:
            results.append(run_suite(sid, corpus, params))
        except ValueError as err:
            raise click.ClickException(str(err))
    for res in results:
        c = res.counts()
        click.echo(
            f"{res.suite_id}: {'pass' if res.passed else 'FAIL'}"
            f" (pass={c['pass']} fail={c['fail']} skip-cap={c['skip-cap']})"
        )
    if json_path:
        payload = [r.to_json_dict() for r in results]
        with open(json_path, "w") as fh:
            json.dump(payload[0] if len(payload) == 1 else payload, fh, indent=2)
    if csv_path:
        with open(csv_path, "w") as fh:
            for res in results:
                for row in res.csv_rows():
                    fh.write(",".join('"' + cell.replace('"', '""') + '"' for cell in row) + "\n")
    if not all(r.passed for r in results):
        sys.exit(1)


@main.command("export")
@click.option("--format", "fmt", type=click.Choice(["dot", "g6"]), required=True)
@click.option("--in", "infile", type=click.File("r"), required=True)
@click.option("--out", type=click.File("w"), default="-")
def export_cmd(fmt, infile, out):
    """Convert graph6 input to DOT or normalized graph6."""
    for g in _read_graphs(infile):
        if fmt == "dot":
            out.write(to_dot(g) + "\n")
        else:
            out.write(graph6_encode(g) + "\n")


if __name__ == "__main__":
    main()
