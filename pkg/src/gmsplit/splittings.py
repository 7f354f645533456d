"""Vertical Heegaard splittings of a single Seifert vertex, and Q x S^1."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import GMSplitError
from .local import LocalModel
from .model import VertexManifold, euler_char_base
from .surfaces import PieceTag, SurfacePiece


@dataclass(frozen=True)
class VerticalSplittingSpec:
    vertex: VertexManifold
    fibers_in_V: frozenset[int]
    boundaries_in_V: frozenset[int]
    spine_arcs: int


@dataclass(frozen=True)
class VerticalSplitting:
    genus: int
    chi: int
    spec: VerticalSplittingSpec


def spine_arc_count(v: VertexManifold, i: int, j: int) -> int:
    """Number of arcs cutting the base down to a neighborhood of the W-side features.

    ``i`` exceptional fibers and ``j`` boundary components go to V.  Cutting
    along an arc raises the Euler characteristic by one, and the target is
    a disk per remaining exceptional point plus an annulus per remaining
    boundary circle (a single disk when nothing remains).
    """
    if not v.is_seifert:
        raise GMSplitError("not-seifert", "vertical splittings need a Seifert vertex")
    n, m = len(v.exceptional), v.boundary_count
    if not (0 <= i <= n and 1 <= j <= m):
        raise GMSplitError("bad-partition", f"need 0 <= i <= {n} and 1 <= j <= {m}")
    rest = (n - i) + (m - j)
    target = (n - i) if rest > 0 else 1
    arcs = target - euler_char_base(v)
    if arcs < 0:
        raise GMSplitError("no-spine", f"target chi {target} below base chi {euler_char_base(v)}")
    return arcs


def vertical_splitting(v: VertexManifold, fibers_in_V, boundaries_in_V) -> VerticalSplitting:
    fibers, bdys = frozenset(fibers_in_V), frozenset(boundaries_in_V)
    if not bdys:
        raise GMSplitError("bad-partition", "at least one boundary component must lie in V")
    if any(not 0 <= f < len(v.exceptional) for f in fibers) or any(not 0 <= b < v.boundary_count for b in bdys):
        raise GMSplitError("bad-partition", "partition names a missing fiber or boundary")
    arcs = spine_arc_count(v, len(fibers), len(bdys))
    # every V-side core other than the base boundary must be reached by an arc
    if arcs < len(fibers) + len(bdys) - 1:
        raise GMSplitError("disconnected-splitting", f"{arcs} arcs cannot join {len(fibers) + len(bdys)} cores")
    spec = VerticalSplittingSpec(v, fibers, bdys, arcs)
    return VerticalSplitting(1 + arcs, -2 * arcs, spec)


def vertical_splittings(v: VertexManifold) -> Iterator[VerticalSplitting]:
    """All feasible partitions, in a fixed order."""
    n, m = len(v.exceptional), v.boundary_count
    for j in range(1, m + 1):
        for bdys in combinations(range(m), j):
            for i in range(n + 1):
                for fibers in combinations(range(n), i):
                    try:
                        yield vertical_splitting(v, fibers, bdys)
                    except GMSplitError:
                        continue


def splitting_piece(vs: VerticalSplitting) -> SurfacePiece:
    """The pseudovertical splitting surface of ``vs`` as a vertex piece.

    Region 0 is V (collars of the V-side boundaries, fiber neighborhoods and
    the arc handles); region 1 is W.  The surface misses the boundary.
    """
    v, s = vs.spec.vertex, vs.spec
    strips = {j: ((0,) if j in s.boundaries_in_V else (1,)) for j in range(v.boundary_count)}
    local = LocalModel(
        comp_chi=(vs.chi,),
        region_side=(0, 1),
        curves={j: () for j in range(v.boundary_count)},
        strips=strips,
        linear={j: False for j in range(v.boundary_count)},
        comp_sides=((0, 1),),
        parallel_tori={j: (0, 0, 1) for j in sorted(s.boundaries_in_V)},
    )
    detail = {
        "arcs": s.spine_arcs,
        "boundaries_in_V": sorted(s.boundaries_in_V),
        "fibers_in_V": sorted(s.fibers_in_V),
    }
    return SurfacePiece(PieceTag.PSEUDOVERTICAL, vs.chi, {}, local, detail)


def product_times_circle_splitting(g: int) -> tuple[int, int]:
    """(genus, chi) of the standard splitting of Q x S^1 for closed Q of genus ``g``.

    A boundary torus over a small disk D is tubed along arcs cutting
    Q minus D into a disk: chi(Q - D) = 1 - 2g, so 2g arcs.
    """
    if g < 1:
        raise GMSplitError("sphere-base-unsupported", "S^2 x S^1 is not handled")
    arcs = 1 - (1 - 2 * g)
    return 1 + arcs, -2 * arcs


def product_times_circle_piece(g: int) -> SurfacePiece:
    genus, chi = product_times_circle_splitting(g)
    local = LocalModel(comp_chi=(chi,), region_side=(0, 1), comp_sides=((0, 1),))
    return SurfacePiece(PieceTag.PSEUDOVERTICAL, chi, {}, local, {"arcs": genus - 1, "product_genus": g})
