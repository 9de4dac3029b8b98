"""The two-halfspace instance on which the split closure is strictly weaker
than the facet pair closure"""
import dataclasses
import logging
from fractions import Fraction

from . import closures, poly
from ._properties import EXAMPLES
from .closures import SplitDisjunction
from .poly import Halfspace, HPoly
from .ratmath import QVec, qvec

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ExampleReport:
    polyhedron: HPoly
    point: QVec
    pair_closure: HPoly
    closure_matches: bool
    point_outside_pair_closure: bool
    point_in_split_hull: bool
    point_in_box_split_closure: bool

    @property
    def passed(self) -> bool:
        return (
            self.closure_matches
            and self.point_outside_pair_closure
            and self.point_in_split_hull
            and self.point_in_box_split_closure
        )


def polyhedron_from_document(document: dict) -> HPoly:
    return HPoly(
        document["dim"],
        tuple(
            Halfspace.from_coefficients(qvec(h["a"]), Fraction(h["b"]))
            for h in document["halfspaces"]
        ),
    )


def example1_polyhedron() -> HPoly:
    return polyhedron_from_document(EXAMPLES["example1"]["polyhedron"])


def run_example1(split_box: int = 3) -> ExampleReport:
    """Rebuild the instance and check the point z against both closures.

    z must lie outside the facet pair closure, inside the split hull for
    a = (1, 0), K = 0 and inside the closure of the box split family.
    """
    data = EXAMPLES["example1"]
    P = example1_polyhedron()
    z = qvec(data["point"])
    pair = closures.facet_pair_closure(P)
    expected = polyhedron_from_document(data["closure"])
    split = SplitDisjunction(tuple(int(a) for a in data["split"]["a"]), data["split"]["K"])
    split_hull = closures.disjunctive_hull(P, split)
    family = closures.box_split_family(P, split_box)
    box_closure = closures.split_closure_family(P, family)
    report = ExampleReport(
        polyhedron=P,
        point=z,
        pair_closure=pair,
        closure_matches=poly.same_set(pair, expected),
        point_outside_pair_closure=not poly.contains_point(pair, z),
        point_in_split_hull=poly.contains_point(split_hull, z),
        point_in_box_split_closure=poly.contains_point(box_closure, z),
    )
    logger.info("example checks passed: %s", report.passed)
    return report
