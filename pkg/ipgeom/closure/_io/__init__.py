from .certificates import certificate_to_document, helly_to_document
from .documents import (
    cone_to_document,
    csv_text,
    dumps,
    format_rational,
    halfspace_to_document,
    parse_cone,
    parse_halfspace,
    parse_integer,
    parse_poly,
    parse_polyhedron,
    parse_rational,
    parse_split,
    parse_split_family,
    parse_subspace,
    parse_vpoly,
    poly_to_document,
    read_document,
    split_family_to_document,
    split_to_document,
    to_csv_rows,
    vectors_to_csv_rows,
    vpoly_to_document,
    write_text,
)

__all__ = list(key for key in locals().keys() if not key.startswith("_"))
