"""Command line interface: ``ipgeom-closure VERB --input FILE [options]``.

Exit codes are 0 on success, 1 when a verify-* check fails and 2 on a user
error, in which case a JSON error document is written to stderr.
"""
import functools
import json
import logging
import os

import click
import numpy as np

from . import closures, corpus, hull2d, latfree, plot, poly
from ._io import (
    certificate_to_document,
    cone_to_document,
    csv_text,
    dumps,
    halfspace_to_document,
    helly_to_document,
    parse_cone,
    parse_halfspace,
    parse_integer,
    parse_poly,
    parse_polyhedron,
    parse_rational,
    parse_split,
    parse_split_family,
    parse_subspace,
    poly_to_document,
    read_document,
    split_to_document,
    to_csv_rows,
    vpoly_to_document,
    write_text,
)
from ._logging import PACKAGE_LOGGER, init_log, set_log_to_file
from .config import LOG_LEVELS, load_config
from .errors import ClosureError, InputError
from .example import run_example1

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USER_ERROR = 2

CORPUS_KINDS = ("polygon", "cone", "pair", "infeasible", "split")


def error_document(err: ClosureError) -> dict:
    return {
        "error": type(err).__name__,
        "message": str(err),
        "field": getattr(err, "field", None),
        "condition": getattr(err, "condition", None),
    }


def _reports_errors(func):
    """Turn ClosureError into exit code 2 with a JSON error on stderr"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ClosureError as err:
            logger.debug("user error", exc_info=True)
            click.echo(json.dumps(error_document(err)), err=True)
            click.get_current_context().exit(EXIT_USER_ERROR)

    return wrapper


def _input_option(func):
    return click.option(
        "--input",
        "input_path",
        required=True,
        type=click.Path(exists=True, dir_okay=False),
        help="JSON input document",
    )(func)


def _output_option(func):
    return click.option(
        "--output",
        type=click.Path(dir_okay=False, writable=True),
        default=None,
        help="write the result here instead of stdout",
    )(func)


def _format_option(func):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "csv"]),
        default="json",
        show_default=True,
    )(func)


def _write(text: str, output: str = None):
    if output is None:
        click.echo(text, nl=False)
    else:
        write_text(output, text)


def _emit_poly(P, output, fmt):
    if fmt == "csv":
        _write(csv_text(to_csv_rows(P)), output)
    else:
        _write(dumps(poly_to_document(P)), output)


def _emit_document(document, output, fmt):
    if fmt == "csv":
        raise InputError("format", "csv output is only available for polyhedra")
    _write(dumps(document), output)


def _read_poly(path):
    return parse_poly(read_document(path))


def _integer_list(text: str, field: str):
    return tuple(parse_integer(v.strip(), f"{field}[{i}]") for i, v in enumerate(text.split(",")))


def _viewport(text: str):
    values = [parse_rational(v.strip(), f"viewport[{i}]") for i, v in enumerate(text.split(","))]
    if len(values) != 4:
        raise InputError("viewport", f"expected x_lo,x_hi,y_lo,y_hi, got {text!r}")
    viewport = [values[:2], values[2:]]
    if any(lo >= hi for lo, hi in viewport):
        raise InputError("viewport", "lower bounds must be below upper bounds")
    return viewport


@click.group()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="YAML file merged over the default configuration",
)
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="overrides log_level of the configuration",
)
@click.option(
    "--log-file",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="append log records to this file instead of stderr",
)
@click.pass_context
@_reports_errors
def cli(ctx, config_path, log_level, log_file):
    """Exact integer hulls, split closures and lattice-free certificates"""
    config = load_config(config_path)
    package_logger = init_log(PACKAGE_LOGGER, log_level or config["log_level"])
    if log_file is not None:
        set_log_to_file(package_logger, log_file)
    ctx.obj = config


@cli.command("hull2d")
@_input_option
@_output_option
@_format_option
@click.option("--vertices", is_flag=True, help="emit the V-representation instead")
@click.pass_obj
@_reports_errors
def hull2d_command(config, input_path, output, fmt, vertices):
    """Integer hull of a planar polyhedron"""
    hull = hull2d.integer_hull_2d(_read_poly(input_path))
    if vertices:
        _emit_document(vpoly_to_document(poly.h_to_v_2d(hull)), output, fmt)
    else:
        _emit_poly(hull, output, fmt)


@cli.command("two-halfspace")
@_input_option
@_output_option
@_format_option
@click.pass_obj
@_reports_errors
def two_halfspace_command(config, input_path, output, fmt):
    """Integer hull of the intersection of two halfspaces"""
    P = _read_poly(input_path)
    if len(P) != 2:
        raise InputError("halfspaces", f"expected exactly two halfspaces, got {len(P)}")
    _emit_poly(closures.two_halfspace_hull(*P.halfspaces), output, fmt)


@cli.command("facet-pair-closure")
@_input_option
@_output_option
@_format_option
@click.pass_obj
@_reports_errors
def facet_pair_closure_command(config, input_path, output, fmt):
    """Intersection of the integer hulls of all pairs of facets"""
    _emit_poly(closures.facet_pair_closure(_read_poly(input_path)), output, fmt)


@cli.command("split-hull")
@_input_option
@_output_option
@_format_option
@click.option("--split-a", required=True, help="split normal, e.g. 1,0")
@click.option("--split-k", required=True, type=int, help="split level K")
@click.pass_obj
@_reports_errors
def split_hull_command(config, input_path, output, fmt, split_a, split_k):
    """Convex hull of P minus the interior of one split"""
    P = _read_poly(input_path)
    d = parse_split({"a": list(_integer_list(split_a, "split-a")), "K": split_k}, "split", P.dim)
    _emit_poly(closures.disjunctive_hull(P, d), output, fmt)


@cli.command("split-closure")
@_input_option
@_output_option
@_format_option
@click.option(
    "--family",
    "family_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="split family document; defaults to the box family",
)
@click.option("--box", type=int, default=None, help="norm bound of the box family")
@click.pass_obj
@_reports_errors
def split_closure_command(config, input_path, output, fmt, family_path, box):
    """Intersection of the split hulls of a family of splits"""
    P = _read_poly(input_path)
    if family_path is not None:
        if box is not None:
            raise InputError("box", "--box and --family are mutually exclusive")
        family = parse_split_family(
            read_document(family_path), P, unbounded_radius=config["unbounded_radius"]
        )
    else:
        family = closures.box_split_family(
            P,
            box if box is not None else config["split_box"],
            unbounded_radius=config["unbounded_radius"],
        )
    _emit_poly(closures.split_closure_family(P, family), output, fmt)


@cli.command("cg-cut")
@_input_option
@_output_option
@click.option("--direction", required=True, help="primitive integer direction, e.g. 0,1")
@click.pass_obj
@_reports_errors
def cg_cut_command(config, input_path, output, direction):
    """Chvatal-Gomory cut of a polyhedron in one direction"""
    P = _read_poly(input_path)
    a = _integer_list(direction, "direction")
    if len(a) != P.dim:
        raise InputError("direction", f"expected {P.dim} entries, got {len(a)}")
    cut = closures.cg_cut_from_direction(P, a)
    _write(dumps({"cut": None if cut is None else halfspace_to_document(cut)}), output)


@cli.command("rank-ih")
@_input_option
@_output_option
@click.pass_obj
@_reports_errors
def rank_ih_command(config, input_path, output):
    """Splits certifying that a planar cone reaches its integer hull in one round"""
    C = parse_cone(read_document(input_path))
    certificate = closures.verify_rank_ih(C, ray_window=config["ray_window"])
    _write(dumps(certificate_to_document(certificate)), output)


@cli.command("classify")
@_input_option
@_output_option
@click.pass_obj
@_reports_errors
def classify_command(config, input_path, output):
    """Classify a planar polyhedron as a maximal lattice-free set"""
    P = parse_polyhedron(read_document(input_path))
    _write(dumps(certificate_to_document(latfree.classify_max_latfree_2d(P))), output)


@cli.command("push-out")
@_input_option
@_output_option
@click.pass_obj
@_reports_errors
def push_out_command(config, input_path, output):
    """Push out the facets of a lattice-free quadrilateral"""
    trace = latfree.push_out(_read_poly(input_path))
    _write(dumps(certificate_to_document(trace)), output)


@cli.command("helly")
@_input_option
@_output_option
@click.pass_obj
@_reports_errors
def helly_command(config, input_path, output):
    """At most four halfspaces of an integer-free polyhedron without integer points"""
    P = _read_poly(input_path)
    _write(dumps(helly_to_document(P, latfree.helly_certificate(P))), output)


@cli.command("verify-2dih")
@_input_option
@_output_option
@click.pass_context
@_reports_errors
def verify_2dih_command(ctx, input_path, output):
    """Check that the facet pair closure equals the integer hull"""
    check = latfree.check_2dih(_read_poly(input_path))
    _write(dumps(certificate_to_document(check)), output)
    ctx.exit(EXIT_OK if check.passed else EXIT_CHECK_FAILED)


@cli.command("verify-split-projection")
@_input_option
@_output_option
@click.pass_context
@_reports_errors
def verify_split_projection_command(ctx, input_path, output):
    """Check a split cut against its projection onto a lattice subspace"""
    document = read_document(input_path)
    if not isinstance(document, dict):
        raise InputError("<document>", "expected a JSON object")
    for key in ("polyhedron", "split", "cut", "subspace"):
        if key not in document:
            raise InputError(key, "missing required field")
    P = parse_poly(document["polyhedron"])
    d = parse_split(document["split"], "split", P.dim)
    cut = parse_halfspace(document["cut"], "cut", P.dim)
    L = parse_subspace(document["subspace"])
    passed = closures.split_projection_check(P, d, cut, L)
    _write(dumps({"kind": "split-projection", "passed": passed}), output)
    ctx.exit(EXIT_OK if passed else EXIT_CHECK_FAILED)


@cli.command("verify-example")
@_output_option
@click.pass_context
@_reports_errors
def verify_example_command(ctx, output):
    """Rerun the two-halfspace example separating the two closures"""
    report = run_example1(ctx.obj["split_box"])
    _write(dumps(certificate_to_document(report)), output)
    ctx.exit(EXIT_OK if report.passed else EXIT_CHECK_FAILED)


@cli.command("containment")
@_input_option
@_output_option
@click.option("--box", type=int, default=None, help="norm bound of the box family")
@click.pass_obj
@_reports_errors
def containment_command(config, input_path, output, box):
    """Containments between the facet pair, split and CG closures"""
    report = closures.sandwich_report(
        _read_poly(input_path), box if box is not None else config["split_box"]
    )
    _write(dumps(certificate_to_document(report)), output)


ROUNDS = {
    "pair": closures.facet_pair_closure,
    "split": closures.split_round,
    "cg": closures.cg_round,
}


@cli.command("rank")
@_input_option
@_output_option
@click.option("--round", "round_name", type=click.Choice(sorted(ROUNDS)), default="pair")
@click.option("--max-rounds", type=int, default=10, show_default=True)
@click.pass_obj
@_reports_errors
def rank_command(config, input_path, output, round_name, max_rounds):
    """Number of closure rounds until a planar polyhedron reaches its integer hull"""
    report = closures.closure_rank(_read_poly(input_path), ROUNDS[round_name], max_rounds)
    _write(dumps(certificate_to_document(report)), output)


@cli.command("plot")
@_input_option
@_output_option
@click.option(
    "--format", "fmt", type=click.Choice(["svg", "csv"]), default="svg", show_default=True
)
@click.option("--viewport", default=None, help="x_lo,x_hi,y_lo,y_hi")
@click.pass_obj
@_reports_errors
def plot_command(config, input_path, output, fmt, viewport):
    """Draw a planar polyhedron clipped to the viewport"""
    P = _read_poly(input_path)
    window = _viewport(viewport) if viewport is not None else config["viewport"]
    if fmt == "csv":
        _write(plot.clipped_csv(P, window), output)
    else:
        settings = config["plot"]
        _write(plot.svg_text(P, window, dpi=settings["dpi"], grid=settings["grid"]), output)


def _corpus_document(kind: str, rng, dim: int) -> dict:
    if kind == "polygon":
        return poly_to_document(corpus.random_polygon(rng))
    if kind == "cone":
        return cone_to_document(corpus.random_cone(rng))
    if kind == "pair":
        pair = corpus.random_halfspace_pair(rng, dim)
        return poly_to_document(poly.HPoly(dim, pair))
    if kind == "infeasible":
        return poly_to_document(corpus.random_infeasible_polygon(rng))
    instance = corpus.random_split_instance(rng, dim)
    return {
        "polyhedron": poly_to_document(instance.P),
        "split": split_to_document(instance.split),
        "cut": halfspace_to_document(instance.cut),
        "subspace": {
            "basis": [[str(v) for v in b] for b in instance.subspace.basis_vectors]
        },
    }


@cli.command("gen-corpus")
@click.option("--kind", type=click.Choice(CORPUS_KINDS), required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--count", type=int, default=10, show_default=True)
@click.option("--dim", type=int, default=3, show_default=True, help="for pair and split")
@click.option("--output", type=click.Path(file_okay=False), required=True)
@click.pass_obj
@_reports_errors
def gen_corpus_command(config, kind, seed, count, dim, output):
    """Write numbered random instances to a directory"""
    if count < 0:
        raise InputError("count", "must be nonnegative")
    rng = np.random.default_rng(seed)
    os.makedirs(output, exist_ok=True)
    for i in range(count):
        path = os.path.join(output, f"{kind}-{i:04d}.json")
        write_text(path, dumps(_corpus_document(kind, rng, dim)))
    logger.info("wrote %d %s documents to %s", count, kind, output)


if __name__ == "__main__":
    cli()
