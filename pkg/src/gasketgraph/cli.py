"""CLI commands for gasketgraph."""

from __future__ import annotations

import json
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Iterator, Optional

import typer

from gasketgraph import __version__
from gasketgraph.errors import EXIT_USAGE, EXIT_VERIFICATION_FAILED, GasketError

if TYPE_CHECKING:
    from gasketgraph.graph import GasketGraph

app = typer.Typer(
    name="gasketgraph",
    help="Build Sierpinski gasket graphs and certify their cycle, domination and pebbling properties.",
    no_args_is_help=True,
    add_completion=False,
)
pebble_app = typer.Typer(help="Distances, cover pebbling numbers and the pebbling simulator.", no_args_is_help=True)
config_app = typer.Typer(help="Show or change size ceilings and search budgets.", no_args_is_help=True)
app.add_typer(pebble_app, name="pebble")
app.add_typer(config_app, name="config")


class ExportFormat(str, Enum):
    dot = "dot"
    json = "json"
    edgelist = "edgelist"


class ColorMethod(str, Enum):
    formula = "formula"
    insertion = "insertion"


class Suite(str, Enum):
    all = "all"
    core = "core"
    cycles = "cycles"
    domination = "domination"
    pebbling = "pebbling"


LEVEL_HELP = "Level n of the gasket graph Sn."
JSON_HELP = "Emit JSON instead of tables."


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        from gasketgraph.ui import console

        console.print(f"gasketgraph version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        None,
        "--version",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit.",
    ),
    verbose: bool = typer.Option(False, "--verbose", help="Log search statistics to stderr."),
) -> None:
    """gasketgraph - Sierpinski gasket graphs, certificates and pebbling."""
    from gasketgraph.ui import setup_logging

    setup_logging(verbose)


@contextmanager
def _exit_on_error() -> Iterator[None]:
    """Report a GasketError on stderr and exit with its code."""
    from gasketgraph.ui import print_error

    try:
        yield
    except GasketError as e:
        print_error(f"Error: {e}")
        raise typer.Exit(e.exit_code)


def _emit_json(payload: object) -> None:
    typer.echo(json.dumps(payload, indent=2))


def _coord_text(g: "GasketGraph", vertices: Iterable[int]) -> str:
    return " ".join(f"({g.vertices[v].a},{g.vertices[v].b})" for v in vertices)


def _load(n: int) -> "GasketGraph":
    from gasketgraph.graph import generate

    return generate(n)


@app.command()
def gen(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    fmt: ExportFormat = typer.Option(ExportFormat.json, "--format", "-f", help="Output format."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write to a file instead of stdout."),
) -> None:
    """Generate Sn and export it."""
    from gasketgraph.export import export, write_export
    from gasketgraph.ui import print_error, print_pass

    with _exit_on_error():
        g = _load(n)
        if output is None:
            typer.echo(export(g, fmt.value).decode("utf-8"), nl=False)
            return
        try:
            write_export(g, fmt.value, output)
        except OSError as e:
            print_error(f"Error: cannot write {output}: {e}")
            raise typer.Exit(EXIT_USAGE)
    print_pass(f"Wrote S{n} ({fmt.value}) to {output}")


@app.command()
def stats(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Vertex and edge counts and the degree census."""
    from gasketgraph.graph import degree_census, is_connected
    from gasketgraph.ui import print_header, print_key_value

    with _exit_on_error():
        g = _load(n)
    census = degree_census(g)

    if json_output:
        _emit_json(
            {
                "level": n,
                "side": g.side,
                "vertex_count": g.vertex_count,
                "edge_count": g.edge_count,
                "degree_census": {str(d): c for d, c in census.items()},
                "connected": is_connected(g),
            }
        )
        return

    print_header(f"S{n}")
    print_key_value("Side", str(g.side))
    print_key_value("Vertices", str(g.vertex_count))
    print_key_value("Edges", str(g.edge_count))
    print_key_value("Degree census", ", ".join(f"degree {d}: {c}" for d, c in census.items()))
    print_key_value("Connected", "yes" if is_connected(g) else "no")


@app.command()
def color(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    method: ColorMethod = typer.Option(
        ColorMethod.formula, "--method", help="Closed formula or level-by-level insertion."
    ),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """A proper 3-coloring of Sn."""
    from gasketgraph.graph import recursive_coloring, three_coloring
    from gasketgraph.ui import create_table, print_fail, print_pass, print_table
    from gasketgraph.validator import validate_coloring

    with _exit_on_error():
        g = _load(n)
    coloring = three_coloring(g) if method is ColorMethod.formula else recursive_coloring(g)
    is_valid, errors = validate_coloring(g, coloring)

    if json_output:
        _emit_json(
            {
                "level": n,
                "method": method.value,
                "colors_used": coloring.colors_used,
                "valid": is_valid,
                "errors": errors,
                "assignment": list(coloring.assignment),
            }
        )
    else:
        table = create_table(f"S{n} coloring ({method.value})", ["Color", "Vertices"], numeric=["Vertices"])
        for c, members in coloring.classes.items():
            table.add_row(str(c), str(len(members)))
        print_table(table)
        if is_valid:
            print_pass(f"Proper coloring with {coloring.colors_used} colors")
        else:
            for error in errors:
                print_fail(error)

    if not is_valid:
        raise typer.Exit(EXIT_VERIFICATION_FAILED)


def _print_certificate(g: "GasketGraph", kind: str, vertices: tuple[int, ...], length: int, coords: bool) -> None:
    from gasketgraph.ui import print_key_value, print_plain

    print_key_value("Kind", kind)
    print_key_value("Length", str(length))
    if coords:
        print_plain(_coord_text(g, vertices))
    else:
        print_plain(" ".join(str(v) for v in vertices))


@app.command()
def hampath(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    start: str = typer.Option(..., "--from", help="Start corner (T, L or R)."),
    end: str = typer.Option(..., "--to", help="End corner (T, L or R)."),
    length: Optional[int] = typer.Option(None, "--len", help="Path length in edges (default: Hamiltonian)."),
    avoid: bool = typer.Option(False, "--avoid", help="Skip the third corner."),
    coords: bool = typer.Option(False, "--coords", help="Print coordinates instead of vertex indices."),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """A corner-to-corner path, Hamiltonian or of a given length."""
    from gasketgraph import hamilton

    with _exit_on_error():
        g = _load(n)
        if length is None:
            path = hamilton.ham_path_avoid(g, start, end) if avoid else hamilton.ham_path(g, start, end)
        else:
            path = hamilton.path_of_length(g, start, end, length, avoid=avoid)

    if json_output:
        typer.echo(hamilton.certificate_json(path, g))
        return
    _print_certificate(g, "path", path.vertices, path.length, coords)


@app.command()
def hamcycle(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    length: Optional[int] = typer.Option(None, "--len", help="Cycle length (default: Hamiltonian)."),
    coords: bool = typer.Option(False, "--coords", help="Print coordinates instead of vertex indices."),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """A cycle, Hamiltonian or of a given length."""
    from gasketgraph import hamilton

    with _exit_on_error():
        g = _load(n)
        cycle = hamilton.ham_cycle(g) if length is None else hamilton.cycle_of_length(g, length)

    if json_output:
        typer.echo(hamilton.certificate_json(cycle, g))
        return
    _print_certificate(g, "cycle", cycle.vertices, cycle.length, coords)


@app.command()
def dominate(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    helpers: Optional[int] = typer.Option(
        None, "--helpers", min=0, max=3, help="Dominate Sn minus its corners with this many corners assisting."
    ),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """A minimum dominating set by exact search."""
    from gasketgraph import domination
    from gasketgraph.graph import CORNERS
    from gasketgraph.ui import print_fail, print_key_value, print_pass, print_plain, spinner
    from gasketgraph.validator import validate_domination

    with _exit_on_error():
        g = _load(n)
        if helpers is None:
            with spinner(f"Searching S{n}..."):
                found = domination.min_dominating_set(g)
        else:
            labels = CORNERS[:helpers]
            with spinner(f"Searching S{n} with {helpers} helper corner(s)..."):
                domination.gamma_k(g, labels)
                found = domination.interior_dominating_set(g, [g.corner(c) for c in labels])

    target = domination.target_vertices(g, found.target)
    is_valid, errors = validate_domination(g, found.members, target, found.helpers)

    if json_output:
        _emit_json(
            {
                "level": n,
                "helpers": helpers,
                "gamma": found.size,
                "members": list(found.members),
                "coords": [list(g.vertices[v]) for v in found.members],
                "valid": is_valid,
                "errors": errors,
            }
        )
    else:
        label = "gamma" if helpers is None else f"gamma^{helpers}"
        print_key_value(label, str(found.size))
        print_plain(_coord_text(g, found.members))
        if is_valid:
            print_pass("Validator: every target vertex is dominated")
        else:
            for error in errors:
                print_fail(error)

    if not is_valid:
        raise typer.Exit(EXIT_VERIFICATION_FAILED)


@app.command("gamma-table")
def gamma_table(
    max_level: int = typer.Option(..., "--max", min=1, help="Largest level in the table."),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Domination numbers and efficiency from the closed form."""
    from gasketgraph.domination import efficiency, gamma_closed_form
    from gasketgraph.graph import vertex_count
    from gasketgraph.ui import create_table, print_table

    rows = []
    for n in range(1, max_level + 1):
        eff = efficiency(n) if n >= 3 else None
        rows.append(
            {
                "level": n,
                "vertices": vertex_count(n),
                "gamma": gamma_closed_form(n),
                "efficiency": None if eff is None else f"{eff.numerator}/{eff.denominator}",
                "efficiency_decimal": None if eff is None else round(float(eff), 6),
            }
        )

    if json_output:
        _emit_json(rows)
        return

    table = create_table(
        "Domination numbers",
        ["n", "|V|", "gamma", "efficiency", "decimal"],
        numeric=["n", "|V|", "gamma", "decimal"],
    )
    for row in rows:
        table.add_row(
            str(row["level"]),
            str(row["vertices"]),
            str(row["gamma"]),
            row["efficiency"] or "-",
            "-" if row["efficiency_decimal"] is None else f"{row['efficiency_decimal']:.6f}",
        )
    print_table(table)


# --- pebble ---


@pebble_app.command("st")
def pebble_st(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Stacking values at the corners and middle vertices."""
    from gasketgraph.graph import CORNERS
    from gasketgraph.pebbling import distances
    from gasketgraph.ui import create_table, print_table

    with _exit_on_error():
        g = _load(n)
    labelled = list(zip(CORNERS, g.corners)) + [(f"M{i + 1}", v) for i, v in enumerate(g.middles)]
    rows = []
    for label, v in labelled:
        profile = distances(g, v)
        rows.append({"vertex": label, "coord": list(g.vertices[v]), "st": profile.st_value, "beta": list(profile.beta)})

    if json_output:
        _emit_json({"level": n, "values": rows})
        return

    table = create_table(f"ST values of S{n}", ["Vertex", "Coord", "ST"], numeric=["ST"])
    for row in rows:
        table.add_row(row["vertex"], f"({row['coord'][0]},{row['coord'][1]})", str(row["st"]))
    print_table(table)


@pebble_app.command("lambda")
def pebble_lambda(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """The cover pebbling number of Sn, in full."""
    from gasketgraph.errors import CertificateError
    from gasketgraph.pebbling import cover_pebbling_number, lambda_recursive
    from gasketgraph.ui import print_plain, spinner

    with _exit_on_error():
        g = _load(n)
        with spinner(f"Evaluating stacking values of S{n}..."):
            lam = cover_pebbling_number(g)
        recursive = lambda_recursive(n)
        if lam != recursive:
            raise CertificateError(f"max ST {lam} disagrees with the recursion {recursive}")

    if json_output:
        _emit_json({"level": n, "lambda": lam})
        return
    print_plain(str(lam))


@pebble_app.command("diam")
def pebble_diam(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """The diameter of Sn."""
    from gasketgraph.config import load_settings
    from gasketgraph.pebbling import diameter, distances
    from gasketgraph.ui import print_plain

    with _exit_on_error():
        g = _load(n)
        if n <= load_settings()["exhaustive_st_max_level"]:
            value, method = diameter(g), "all vertices"
        else:
            value, method = max(distances(g, c).eccentricity for c in g.corners), "corners"

    if json_output:
        _emit_json({"level": n, "diameter": value, "method": method})
        return
    print_plain(str(value))


@pebble_app.command("solve")
def pebble_solve(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    config: str = typer.Option(..., "--config", help="JSON file {vertex_index: count} or stack:CORNER:COUNT."),
    target: Optional[str] = typer.Option(
        None, "--target", help="Reach this corner or vertex index instead of covering every vertex."
    ),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Decide a pebbling configuration and print a witness move sequence."""
    from gasketgraph.errors import ParseError
    from gasketgraph.graph import CORNERS
    from gasketgraph.simulator import PebblingSimulator, parse_configuration
    from gasketgraph.ui import print_info, print_key_value, print_plain

    with _exit_on_error():
        g = _load(n)
        start = parse_configuration(config, g)
        if target is None:
            moves = PebblingSimulator(g).cover_moves(start)
            goal = "cover"
        else:
            try:
                vertex = g.corner(target) if target.strip().upper() in CORNERS else int(target)
            except ValueError:
                raise ParseError(f"Target must be a corner or a vertex index, got {target!r}")
            if not 0 <= vertex < g.vertex_count:
                raise ParseError(f"Vertex {vertex} is not in S{n}")
            moves = PebblingSimulator(g, max_vertices=g.vertex_count).reach_moves(start, vertex)
            goal = f"reach {vertex}"

    solvable = moves is not None
    if json_output:
        _emit_json(
            {
                "level": n,
                "goal": goal,
                "weight": start.weight,
                "solvable": solvable,
                "moves": [list(m) for m in moves] if moves is not None else None,
            }
        )
        return

    print_key_value("Goal", goal)
    print_key_value("Weight", str(start.weight))
    print_key_value("Solvable", "yes" if solvable else "no")
    if moves:
        print_info(f"{len(moves)} move(s):")
        print_plain(" ".join(f"{u}->{v}" for u, v in moves))


@pebble_app.command("pi")
def pebble_pi(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """The pebbling number of Sn by exhaustive search (desk-scale levels only)."""
    from gasketgraph.pebbling import PebblingNumbers, cover_pebbling_number
    from gasketgraph.simulator import pebbling_number_search
    from gasketgraph.ui import print_key_value, spinner

    with _exit_on_error():
        g = _load(n)
        with spinner(f"Searching configurations of S{n}..."):
            numbers = PebblingNumbers(lam=cover_pebbling_number(g), pi=pebbling_number_search(g))

    if json_output:
        _emit_json({"level": n, "pi": numbers.pi, "lambda": numbers.lam})
        return
    print_key_value("pi", str(numbers.pi))
    print_key_value("lambda", str(numbers.lam))


# --- verify ---


@app.command()
def verify(
    n: int = typer.Option(..., "-n", "--level", min=1, help=LEVEL_HELP),
    suite: Suite = typer.Option(Suite.all, "--suite", help="Which invariant suite to run."),
    corrupt: bool = typer.Option(False, "--corrupt", hidden=True),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Run the invariant suites and report pass/fail per property."""
    from rich.markup import escape

    from gasketgraph.suites import SUITE_NAMES, drop_edge, run_suites
    from gasketgraph.ui import create_table, print_fail, print_pass, print_table, spinner

    with _exit_on_error():
        g = _load(n)
        if corrupt:
            g = drop_edge(g)
        names = list(SUITE_NAMES) if suite is Suite.all else [suite.value]
        with spinner(f"Verifying S{n}..."):
            results = run_suites(g, names)

    failed = [r for r in results if not r.passed]
    if json_output:
        _emit_json(
            {
                "level": n,
                "passed": not failed,
                "checks": [
                    {"suite": r.suite, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results
                ],
            }
        )
    else:
        table = create_table(f"Verification of S{n}", ["Suite", "Check", "Result", "Detail"])
        for r in results:
            table.add_row(
                r.suite,
                r.name,
                "[pass]PASS[/pass]" if r.passed else "[fail]FAIL[/fail]",
                escape(r.detail),
            )
        print_table(table)
        if failed:
            print_fail(f"{len(failed)} of {len(results)} checks failed")
        else:
            print_pass(f"All {len(results)} checks passed")

    if failed:
        raise typer.Exit(EXIT_VERIFICATION_FAILED)


# --- config ---


@config_app.command("show")
def config_show(json_output: bool = typer.Option(False, "--json", help=JSON_HELP)) -> None:
    """Print the effective settings."""
    from gasketgraph.config import get_config_path, load_settings
    from gasketgraph.ui import print_key_value, print_muted

    with _exit_on_error():
        settings = load_settings()

    if json_output:
        _emit_json(dict(settings))
        return
    for key, value in settings.items():
        print_key_value(key, str(value))
    print_muted(f"Config file: {get_config_path()}")


@config_app.command("set")
def config_set(
    key: str = typer.Argument(..., help="Setting name."),
    value: str = typer.Argument(..., help="Positive integer."),
) -> None:
    """Persist one setting to the config file."""
    from gasketgraph.config import save_setting
    from gasketgraph.ui import print_pass

    with _exit_on_error():
        settings = save_setting(key, value)
    print_pass(f"{key} = {settings[key]}")  # type: ignore[literal-required]


if __name__ == "__main__":
    app()
