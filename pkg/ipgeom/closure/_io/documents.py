"""JSON documents for polyhedra, splits, cones and subspaces.

Rationals are written as strings "p/q" (or "p" for integers) so that no
value ever passes through a float. Parse errors raise :class:`InputError`
with the path of the offending field, e.g. ``halfspaces[1].b``.
"""
import contextlib
import csv
import io
import json
import logging
import os
import tempfile
from fractions import Fraction
from numbers import Rational
from typing import Any, List, Mapping, Sequence

from .. import closures, lattice
from ..closures import BOX, EXPLICIT, SplitDisjunction, SplitFamily
from ..errors import ClosureError, InputError, ZeroVectorError
from ..hull2d import Cone2
from ..lattice import SubspaceBasis
from ..poly import Halfspace, HPoly, VPoly

logger = logging.getLogger(__name__)


def parse_rational(value: Any, field: str) -> Fraction:
    """Exact rational from an integer or a string such as "-3/4" or "2".

    Floats are rejected: they carry binary rounding the caller cannot see.
    """
    if isinstance(value, bool) or not isinstance(value, (int, str, Rational)):
        raise InputError(field, f"expected an integer or a \"p/q\" string, got {value!r}")
    try:
        return Fraction(value)
    except ZeroDivisionError:
        raise InputError(field, f"zero denominator in {value!r}")
    except ValueError:
        raise InputError(field, f"malformed rational {value!r}")


def parse_integer(value: Any, field: str) -> int:
    q = parse_rational(value, field)
    if q.denominator != 1:
        raise InputError(field, f"expected an integer, got {value!r}")
    return q.numerator


def format_rational(value) -> str:
    return str(Fraction(value))


def _require(document: Mapping, key: str, field: str):
    if not isinstance(document, Mapping):
        raise InputError(field or "<document>", "expected a JSON object")
    if key not in document:
        raise InputError(f"{field}.{key}" if field else key, "missing required field")
    return document[key]


def _list(value: Any, field: str) -> list:
    if not isinstance(value, list):
        raise InputError(field, f"expected a list, got {type(value).__name__}")
    return value


def _vector(value: Any, field: str, dim: int = None) -> tuple:
    entries = _list(value, field)
    if dim is not None and len(entries) != dim:
        raise InputError(field, f"expected {dim} entries, got {len(entries)}")
    return tuple(parse_rational(v, f"{field}[{i}]") for i, v in enumerate(entries))


def _integer_vector(value: Any, field: str, dim: int = None) -> tuple:
    entries = _list(value, field)
    if dim is not None and len(entries) != dim:
        raise InputError(field, f"expected {dim} entries, got {len(entries)}")
    return tuple(parse_integer(v, f"{field}[{i}]") for i, v in enumerate(entries))


def _dim(document: Mapping, field: str = "") -> int:
    key = f"{field}.dim" if field else "dim"
    dim = parse_integer(_require(document, "dim", field), key)
    if dim < 1:
        raise InputError(key, f"dimension must be positive, got {dim}")
    return dim


def parse_halfspace(document: Mapping, field: str, dim: int = None) -> Halfspace:
    """Halfspace {x : <a, x> <= b}; the normal is rescaled to be primitive"""
    a = _vector(_require(document, "a", field), f"{field}.a", dim)
    b = parse_rational(_require(document, "b", field), f"{field}.b")
    try:
        return Halfspace.from_coefficients(a, b)
    except ZeroVectorError:
        raise InputError(f"{field}.a", "normal vector is zero")


def parse_poly(document: Mapping) -> HPoly:
    """HPoly from {"dim": n, "halfspaces": [{"a": [...], "b": ...}, ...]}.

    An optional ``"empty": true`` marks the empty set.
    """
    dim = _dim(document)
    if document.get("empty", False):
        return HPoly.empty_set(dim)
    entries = _list(_require(document, "halfspaces", ""), "halfspaces")
    halfspaces = tuple(
        parse_halfspace(h, f"halfspaces[{i}]", dim) for i, h in enumerate(entries)
    )
    return HPoly(dim, halfspaces)


def parse_vpoly(document: Mapping) -> VPoly:
    """VPoly from {"dim": n, "vertices": [...], "rays": [...], "lineality": [...]}"""
    dim = _dim(document)
    vertices = tuple(
        _vector(v, f"vertices[{i}]", dim)
        for i, v in enumerate(_list(_require(document, "vertices", ""), "vertices"))
    )
    directions = {}
    for key in ("rays", "lineality"):
        directions[key] = tuple(
            _vector(v, f"{key}[{i}]", dim)
            for i, v in enumerate(_list(document.get(key, []), key))
        )
    try:
        return VPoly(dim, vertices, directions["rays"], directions["lineality"])
    except ZeroVectorError as err:
        raise InputError("rays", str(err))


def parse_polyhedron(document: Mapping):
    """HPoly or VPoly, depending on whether the document lists vertices"""
    if isinstance(document, Mapping) and "vertices" in document:
        return parse_vpoly(document)
    return parse_poly(document)


def halfspace_to_document(h: Halfspace) -> dict:
    return {"a": [format_rational(v) for v in h.normal], "b": format_rational(h.rhs)}


def poly_to_document(P: HPoly) -> dict:
    document = {
        "dim": P.dim,
        "halfspaces": [halfspace_to_document(h) for h in P],
    }
    if P.empty:
        document["empty"] = True
    return document


def _vectors_to_document(vectors) -> List[List[str]]:
    return [[format_rational(v) for v in vector] for vector in vectors]


def vpoly_to_document(V: VPoly) -> dict:
    return {
        "dim": V.dim,
        "vertices": _vectors_to_document(V.vertices),
        "rays": _vectors_to_document(V.rays),
        "lineality": _vectors_to_document(V.lineality),
    }


def parse_split(document: Mapping, field: str, dim: int = None) -> SplitDisjunction:
    a = _integer_vector(_require(document, "a", field), f"{field}.a", dim)
    K = parse_integer(_require(document, "K", field), f"{field}.K")
    try:
        return SplitDisjunction(a, K)
    except ZeroVectorError:
        raise InputError(f"{field}.a", "split normal is zero")
    except ClosureError as err:
        raise InputError(f"{field}.a", str(err))


def split_to_document(d: SplitDisjunction) -> dict:
    return {"a": [format_rational(v) for v in d.a], "K": d.K}


def parse_split_family(
    document: Mapping, P: HPoly = None, unbounded_radius: int = 10
) -> SplitFamily:
    """SplitFamily from {"dim": n, "splits": [{"a": [...], "K": k}, ...]} or
    from {"box": B}.

    Without "dim" the dimension is read off the first split. A box document
    stands for :func:`closures.box_split_family` of P with bound B and needs P.
    """
    if "box" in document:
        bound = parse_integer(document["box"], "box")
        if bound < 1:
            raise InputError("box", f"norm bound must be positive, got {bound}")
        if P is None:
            raise InputError("box", "a box family is resolved against a polyhedron")
        if "dim" in document and _dim(document) != P.dim:
            raise InputError(
                "dim", f"family of dimension {_dim(document)} for a polyhedron in R^{P.dim}"
            )
        return closures.box_split_family(P, bound, unbounded_radius)
    entries = _list(_require(document, "splits", ""), "splits")
    if "dim" in document:
        dim = _dim(document)
    elif entries and isinstance(entries[0], Mapping) and isinstance(entries[0].get("a"), list):
        dim = len(entries[0]["a"])
    else:
        raise InputError("dim", "dimension is missing and there is no split to infer it from")
    splits = tuple(parse_split(s, f"splits[{i}]", dim) for i, s in enumerate(entries))
    provenance = document.get("provenance", EXPLICIT)
    if provenance not in (EXPLICIT, BOX):
        raise InputError("provenance", f"unknown provenance {provenance!r}")
    bound = document.get("bound")
    if bound is not None:
        bound = parse_integer(bound, "bound")
    try:
        return SplitFamily(splits, provenance, bound)
    except ClosureError as err:
        raise InputError("splits", str(err))


def split_family_to_document(F: SplitFamily) -> dict:
    document = {
        "dim": F.disjunctions[0].dim,
        "provenance": F.provenance,
        "splits": [split_to_document(d) for d in F],
    }
    if F.bound is not None:
        document["bound"] = F.bound
    return document


def parse_cone(document: Mapping) -> Cone2:
    """Cone2 from {"apex": [x, y], "rays": [[..], [..]]}"""
    apex = _vector(_require(document, "apex", ""), "apex", 2)
    rays = _list(_require(document, "rays", ""), "rays")
    if len(rays) != 2:
        raise InputError("rays", f"expected two rays, got {len(rays)}")
    rays = tuple(_vector(r, f"rays[{i}]", 2) for i, r in enumerate(rays))
    try:
        return Cone2(apex, rays)
    except ZeroVectorError as err:
        raise InputError("rays", str(err))


def cone_to_document(C: Cone2) -> dict:
    return {
        "apex": [format_rational(v) for v in C.apex],
        "rays": _vectors_to_document(C.rays),
    }


def parse_subspace(document: Mapping, field: str = "subspace") -> SubspaceBasis:
    """SubspaceBasis from {"basis": [[...], ...]}"""
    basis = _list(_require(document, "basis", field), f"{field}.basis")
    vectors = [_vector(v, f"{field}.basis[{i}]") for i, v in enumerate(basis)]
    if not vectors:
        raise InputError(f"{field}.basis", "subspace basis is empty")
    try:
        return lattice.subspace(vectors)
    except ClosureError as err:
        raise InputError(f"{field}.basis", str(err))


def to_csv_rows(P: HPoly) -> List[List[str]]:
    """Header plus one row a_1, ..., a_n, b per halfspace"""
    header = [f"a{i + 1}" for i in range(P.dim)] + ["b"]
    return [header] + [
        [format_rational(v) for v in h.normal] + [format_rational(h.rhs)] for h in P
    ]


def vectors_to_csv_rows(vectors: Sequence[Sequence], dim: int) -> List[List[str]]:
    header = [f"x{i + 1}" for i in range(dim)]
    return [header] + [[format_rational(v) for v in vector] for vector in vectors]


def csv_text(rows: List[List[str]]) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    return buffer.getvalue()


def read_document(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as err:
            raise InputError("<document>", f"{path} is not valid JSON: {err}")
        except UnicodeDecodeError as err:
            raise InputError("<document>", f"{path} is not UTF-8: {err.reason}")


def dumps(document: Any) -> str:
    return json.dumps(document, indent=2) + "\n"


def write_text(path: str, text: str):
    """Write text to path atomically, through a temporary file in the same directory"""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        with contextlib.suppress(FileNotFoundError):
            os.remove(tmp_path)
        raise
    logger.debug("wrote %s", path)
