"""Static pictures of planar polyhedra.

Unbounded polyhedra are clipped to a rectangular viewport. Edges lying on
a facet line are drawn solid; edges created by the viewport are dashed, so
recession directions stay distinguishable from facets.
"""
import dataclasses
import io
import logging
import math
from fractions import Fraction
from typing import List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import oracle, poly  # noqa: E402
from ._geometry import graham_scan  # noqa: E402
from ._io.documents import csv_text, vectors_to_csv_rows, write_text  # noqa: E402
from .errors import DimensionError  # noqa: E402
from .poly import Halfspace, HPoly  # noqa: E402
from .ratmath import QVec  # noqa: E402

logger = logging.getLogger(__name__)

Viewport = Sequence[Sequence]


@dataclasses.dataclass(frozen=True)
class ClippedPolygon:
    """Vertices of P ∩ viewport in counterclockwise order; ``clipped[i]`` is
    True when the edge from vertex i to vertex i + 1 comes from the viewport"""

    vertices: Tuple[QVec, ...]
    clipped: Tuple[bool, ...]


def viewport_box(viewport: Viewport) -> HPoly:
    (x_lo, x_hi), (y_lo, y_hi) = [(Fraction(lo), Fraction(hi)) for lo, hi in viewport]
    return HPoly(
        2,
        (
            Halfspace((1, 0), x_hi),
            Halfspace((-1, 0), -x_lo),
            Halfspace((0, 1), y_hi),
            Halfspace((0, -1), -y_lo),
        ),
    )


def clip_to_viewport(P: HPoly, viewport: Viewport) -> ClippedPolygon:
    if P.dim != 2:
        raise DimensionError(2, P.dim, what="planar polyhedron")
    clipped = poly.intersect([P, viewport_box(viewport)])
    if clipped.empty:
        return ClippedPolygon((), ())
    vertices = tuple(graham_scan(poly.h_to_v_2d(clipped).vertices))
    flags = []
    for i, u in enumerate(vertices):
        v = vertices[(i + 1) % len(vertices)]
        on_facet = any(h.value(u) == h.rhs and h.value(v) == h.rhs for h in P)
        flags.append(not on_facet)
    return ClippedPolygon(vertices, tuple(flags))


def _lattice_points(viewport: Viewport) -> List[Tuple[int, int]]:
    (x_lo, x_hi), (y_lo, y_hi) = viewport
    xs = np.arange(math.ceil(Fraction(x_lo)), math.floor(Fraction(x_hi)) + 1)
    ys = np.arange(math.ceil(Fraction(y_lo)), math.floor(Fraction(y_hi)) + 1)
    grid_x, grid_y = np.meshgrid(xs, ys)
    return [(int(x), int(y)) for x, y in zip(grid_x.ravel(), grid_y.ravel())]


def draw(P: HPoly, viewport: Viewport, grid: bool = True, title: str = None):
    """Return a matplotlib figure of P clipped to the viewport"""
    polygon = clip_to_viewport(P, viewport)
    fig, ax = plt.subplots(figsize=(5, 5))
    (x_lo, x_hi), (y_lo, y_hi) = [(float(lo), float(hi)) for lo, hi in viewport]
    ax.set_xlim(x_lo, x_hi)
    ax.set_ylim(y_lo, y_hi)
    ax.set_aspect("equal")
    if grid:
        points = np.array(_lattice_points(viewport), dtype=float)
        if len(points):
            ax.scatter(points[:, 0], points[:, 1], s=4, color="lightgrey", zorder=1)
    vertices = [(float(x), float(y)) for x, y in polygon.vertices]
    if len(vertices) >= 3:
        ax.fill(*zip(*vertices), color="tab:blue", alpha=0.2, zorder=2)
    for i, is_clipped in enumerate(polygon.clipped):
        if len(vertices) < 2:
            break
        u, v = vertices[i], vertices[(i + 1) % len(vertices)]
        ax.plot(
            [u[0], v[0]],
            [u[1], v[1]],
            color="tab:blue",
            linestyle="--" if is_clipped else "-",
            zorder=3,
        )
    inside = oracle.enum_integer_points(P, oracle.Box(*zip(*viewport)))
    if inside:
        inside = np.array(inside, dtype=float)
        ax.scatter(inside[:, 0], inside[:, 1], s=12, color="tab:red", zorder=4)
    if title:
        ax.set_title(title)
    return fig


def svg_text(P: HPoly, viewport: Viewport, dpi: int = 100, grid: bool = True) -> str:
    fig = draw(P, viewport, grid=grid)
    buffer = io.BytesIO()
    fig.savefig(buffer, format="svg", dpi=dpi)
    plt.close(fig)
    return buffer.getvalue().decode("utf-8")


def write_svg(P: HPoly, path: str, viewport: Viewport, dpi: int = 100, grid: bool = True):
    write_text(path, svg_text(P, viewport, dpi=dpi, grid=grid))
    logger.info("wrote plot to %s", path)


def clipped_csv(P: HPoly, viewport: Viewport) -> str:
    """Vertices of P ∩ viewport, one per row, with a ``clipped`` column for
    the edge leaving each vertex"""
    polygon = clip_to_viewport(P, viewport)
    rows = vectors_to_csv_rows(polygon.vertices, 2)
    rows[0].append("clipped")
    for row, flag in zip(rows[1:], polygon.clipped):
        row.append(str(flag).lower())
    return csv_text(rows)
