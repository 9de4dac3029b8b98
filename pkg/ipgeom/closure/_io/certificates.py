"""JSON documents for certificates and reports"""
import functools
from typing import Sequence

from ..closures import RankIHCertificate, RankIHSplit, RankReport, SandwichReport
from ..example import ExampleReport
from ..latfree import IntegerHullCheck, LatFreeClass, PushOutTrace, PushStep
from ..poly import HPoly
from .documents import (
    cone_to_document,
    format_rational,
    halfspace_to_document,
    poly_to_document,
    split_to_document,
)


def _point(p):
    return None if p is None else [format_rational(v) for v in p]


def _interval(interval):
    return None if interval is None else [_point(p) for p in interval]


@functools.singledispatch
def certificate_to_document(record) -> dict:
    """Plain JSON-able dict for a certificate or report record"""
    raise TypeError(f"no document format for {type(record).__name__}")


@certificate_to_document.register
def _(record: LatFreeClass) -> dict:
    return {
        "kind": "lattice-free-class",
        "tag": record.tag,
        "maximal": record.is_maximal,
        "facets": poly_to_document(record.facets),
        "witnesses": [_point(w) for w in record.witnesses],
        "interior_point": _point(record.interior_point),
    }


def _push_step(step: PushStep) -> dict:
    return {
        "label": f"H{step.label}",
        "facet": halfspace_to_document(step.facet),
        "new_rhs": None if step.new_rhs is None else format_rational(step.new_rhs),
        "new_point": _point(step.new_point),
    }


@certificate_to_document.register
def _(record: PushOutTrace) -> dict:
    document = {
        "kind": "push-out",
        "outcome": record.outcome,
        "facets": {
            f"H{i + 1}": halfspace_to_document(h) for i, h in enumerate(record.facets)
        },
        "steps": [_push_step(s) for s in record.steps],
        "conclusion_holds": record.conclusion_holds,
    }
    if record.implied_by is not None:
        document["implied_by"] = [f"H{i}" for i in record.implied_by]
    if record.quadrilateral is not None:
        document["quadrilateral"] = poly_to_document(record.quadrilateral)
        document["witnesses"] = [_point(w) for w in record.classification.witnesses]
    return document


def _rank_ih_split(record: RankIHSplit) -> dict:
    return {
        "facet_index": record.facet_index,
        "facet": halfspace_to_document(record.facet),
        "split": None if record.split is None else split_to_document(record.split),
        "unit_interval": _interval(record.unit_interval),
        "facet_interval": _interval(record.facet_interval),
    }


@certificate_to_document.register
def _(record: RankIHCertificate) -> dict:
    return {
        "kind": "rank-ih",
        "cone": cone_to_document(record.cone),
        "integer_hull": poly_to_document(record.integer_hull),
        "splits": [_rank_ih_split(s) for s in record.splits],
        "relaxation": poly_to_document(record.relaxation),
        "cg_rhs": [None if b is None else format_rational(b) for b in record.cg_rhs],
        "passed": record.passed,
    }


@certificate_to_document.register
def _(record: IntegerHullCheck) -> dict:
    return {
        "kind": "2dih",
        "polyhedron": poly_to_document(record.polyhedron),
        "closure": poly_to_document(record.closure),
        "integer_hull": poly_to_document(record.integer_hull),
        "passed": record.passed,
    }


@certificate_to_document.register
def _(record: RankReport) -> dict:
    return {
        "kind": "closure-rank",
        "rounds": record.rounds,
        "reached_integer_hull": record.reached_integer_hull,
        "stabilized": record.stabilized,
        "sizes": list(record.sizes),
    }


@certificate_to_document.register
def _(record: SandwichReport) -> dict:
    return {
        "kind": "containment",
        "pair_closure": poly_to_document(record.pair_closure),
        "split_closure": poly_to_document(record.split_closure),
        "facet_cuts": [halfspace_to_document(h) for h in record.facet_cuts],
        "pair_in_split": record.pair_in_split,
        "split_in_cuts": record.split_in_cuts,
        "split_stable": record.split_stable,
        "second_split_in_pair": record.second_split_in_pair,
    }


@certificate_to_document.register
def _(record: ExampleReport) -> dict:
    return {
        "kind": "example",
        "polyhedron": poly_to_document(record.polyhedron),
        "point": _point(record.point),
        "pair_closure": poly_to_document(record.pair_closure),
        "closure_matches": record.closure_matches,
        "point_outside_pair_closure": record.point_outside_pair_closure,
        "point_in_split_hull": record.point_in_split_hull,
        "point_in_box_split_closure": record.point_in_box_split_closure,
        "passed": record.passed,
    }


def helly_to_document(P: HPoly, indices: Sequence[int]) -> dict:
    return {
        "kind": "helly",
        "indices": list(indices),
        "halfspaces": [halfspace_to_document(P.halfspaces[i]) for i in indices],
    }
