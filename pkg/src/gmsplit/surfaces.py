"""Vertical, horizontal, pseudovertical and pseudohorizontal pieces in a vertex.

Multicurves in the base orbifold are given combinatorially.  Labels name
the marked features of the base: ``"e3"`` is the exceptional point of
fiber 3 and ``"b1"`` is boundary circle 1.

* :class:`BaseCurve` -- a closed curve; ``enclosed`` lists the labels on
  its inner side, which is taken to be planar.  Its preimage is a vertical
  torus.
* :class:`BaseArc` -- a properly embedded arc.  An arc between two
  different boundary circles never separates; an arc from ``b_p`` back to
  ``b_p`` separates off the labels in ``enclosed``.  Its preimage is a
  vertical annulus.
* :class:`SurgeryArc` -- an arc for ambient 1-surgery joining two
  components of the vertical collection through one complementary region.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Any, Sequence

from .errors import GMSplitError
from .local import LocalModel, UnionFind
from .model import VertexKind, VertexManifold, euler_char_base, orbifold_euler_char
from .slopes import FIBER, SECTION, Curves, primitive


class PieceTag(str, Enum):
    VERTICAL = "vertical"
    PSEUDOVERTICAL = "pseudovertical"
    HORIZONTAL = "horizontal"
    PSEUDOHORIZONTAL = "pseudohorizontal"


@dataclass(frozen=True)
class SurfacePiece:
    tag: PieceTag
    chi: int
    boundary: dict[int, Curves]
    local: LocalModel
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def active(self) -> bool:
        """True when the piece compresses (carries a tube or a collar)."""
        if self.tag is PieceTag.PSEUDOVERTICAL:
            return self.detail.get("arcs", 0) > 0
        return self.tag is PieceTag.PSEUDOHORIZONTAL

    def to_json(self) -> dict[str, Any]:
        return {
            "boundary": {str(j): [[c.slope.a, c.slope.b], c.count] for j, c in sorted(self.boundary.items())},
            "chi": self.chi,
            "detail": self.detail,
            "tag": self.tag.value,
        }


@dataclass(frozen=True, order=True)
class BaseCurve:
    enclosed: frozenset[str]


@dataclass(frozen=True, order=True)
class BaseArc:
    ends: tuple[int, int]
    enclosed: frozenset[str] = frozenset()


@dataclass(frozen=True, order=True)
class SurgeryArc:
    ends: tuple[int, int]  # component indices in the vertical collection
    region: str | int | None = None  # a label in the arc's region, or the region index
    separates: frozenset[str] = frozenset()  # labels cut off by the projected arc


def _labels(v: VertexManifold) -> set[str]:
    return {f"e{i}" for i in range(len(v.exceptional))} | {f"b{j}" for j in range(v.boundary_count)}


def _disk_like(side: frozenset[str]) -> bool:
    cones = sum(1 for x in side if x.startswith("e"))
    bdys = sum(1 for x in side if x.startswith("b"))
    return bdys == 0 and cones <= 1


@dataclass
class _Vertical:
    """Mutable builder for the local model of a vertical collection."""

    comp_chi: list[int]
    region_side: list[int]
    comp_sides: list[tuple[int, int]]
    curves: dict[int, list[int]]
    strips: dict[int, list[int]]
    label_region: dict[str, int]
    parallel: dict[int, tuple[int, int, int]]
    ends: Counter


def _build_vertical(v: VertexManifold, items: Sequence[BaseCurve | BaseArc]) -> _Vertical:
    labels = _labels(v)
    if not items:
        raise GMSplitError("empty-surface", "no curves or arcs given")
    nodes = []  # (enclosed, kind, item) for separating things, kept laminar
    families: dict[tuple[int, int], int] = {}
    for it in items:
        bad = set(it.enclosed) - labels
        if bad:
            raise GMSplitError("unknown-label", f"{sorted(bad)}")
        if isinstance(it, BaseCurve):
            inner = frozenset(it.enclosed)
            outer = frozenset(labels - inner)
            if not inner or _disk_like(inner) or (v.base_genus == 0 and _disk_like(outer)):
                raise GMSplitError("inessential-curve", f"curve enclosing {sorted(inner)} bounds a disk")
            nodes.append((inner, "curve", it))
        else:
            p, q = it.ends
            for j in (p, q):
                if not 0 <= j < v.boundary_count:
                    raise GMSplitError("unknown-label", f"arc end on missing boundary {j}")
            if p == q:
                inner = frozenset(it.enclosed)
                if f"b{p}" in inner:
                    raise GMSplitError("inessential-arc", "an arc's enclosed side cannot contain its own boundary")
                if not inner or _disk_like(inner) or (v.base_genus == 0 and inner == frozenset(labels - {f"b{p}"})):
                    raise GMSplitError("inessential-arc", f"arc at b{p} cuts off a disk")
                nodes.append((inner, "arc", it))
            else:
                key = (min(p, q), max(p, q))
                families[key] = families.get(key, 0) + 1

    # laminar check: any two enclosed sets are nested or disjoint
    for i, (a, _, _) in enumerate(nodes):
        for b, _, _ in nodes[i + 1 :]:
            if a & b and not (a <= b or b <= a):
                raise GMSplitError("crossing", f"{sorted(a)} and {sorted(b)} cross")

    # order nodes outermost first; identical sets are parallel copies
    order = sorted(range(len(nodes)), key=lambda i: (-len(nodes[i][0]), sorted(nodes[i][0]), nodes[i][1]))
    region_side = [0]
    comp_chi: list[int] = []
    comp_sides: list[tuple[int, int]] = []
    node_region: list[int] = [0] * len(nodes)
    node_comp: list[int] = [0] * len(nodes)
    node_parent: list[int] = [0] * len(nodes)
    placed: list[int] = []
    for i in order:
        enc = nodes[i][0]
        parent_region = 0
        for k in placed:  # innermost already-placed node containing this one
            if enc <= nodes[k][0]:
                parent_region = node_region[k]
        r = len(region_side)
        region_side.append(region_side[parent_region] ^ 1)
        node_region[i], node_parent[i] = r, parent_region
        node_comp[i] = len(comp_chi)
        comp_chi.append(0)
        comp_sides.append((parent_region, r))
        placed.append(i)

    def region_of(label: str, only_curves: bool) -> int:
        r = 0
        for k in placed:
            if (not only_curves or nodes[k][1] == "curve") and label in nodes[k][0]:
                r = node_region[k]
        return r

    label_region = {x: region_of(x, x.startswith("b")) for x in labels}
    for i, (enc, kind, it) in enumerate(nodes):
        if kind == "arc":
            p = it.ends[0]
            if label_region[f"b{p}"] != node_parent[i]:
                raise GMSplitError("crossing", f"arc at b{p} crosses a closed curve")

    curves: dict[int, list[int]] = {j: [] for j in range(v.boundary_count)}
    strips: dict[int, list[int]] = {j: [] for j in range(v.boundary_count)}
    ends: Counter = Counter()

    for (p, q), k in sorted(families.items()):
        home = label_region[f"b{p}"]
        if label_region[f"b{q}"] != home:
            raise GMSplitError("crossing", f"arcs b{p}-b{q} cross a closed curve")
        bands = []
        for t in range(1, k):
            bands.append(len(region_side))
            region_side.append(region_side[home] ^ (t % 2))
        seq = bands + [home]
        first = len(comp_chi)
        for t in range(k):
            comp_chi.append(0)
            comp_sides.append(((home if t == 0 else bands[t - 1]), seq[t]))
        for j in (p, q):
            # the second end traverses the band sequence in reverse
            order_t = range(k) if j == p else range(k - 1, -1, -1)
            for t in order_t:
                curves[j].append(first + t)
                strips[j].append(seq[t] if j == p else (bands[t - 1] if t > 0 else home))
            ends[j] += k

    # separating arcs: DFS over the laminar forest at each boundary
    arc_nodes = [i for i in placed if nodes[i][1] == "arc"]
    for j in range(v.boundary_count):
        mine = [i for i in arc_nodes if nodes[i][2].ends[0] == j]

        def visit(i):
            curves[j].append(node_comp[i])
            strips[j].append(node_region[i])
            for c in mine:
                if node_parent[c] == node_region[i]:
                    visit(c)
            curves[j].append(node_comp[i])
            strips[j].append(node_parent[i])

        for i in mine:
            if node_parent[i] == label_region[f"b{j}"]:
                visit(i)
        ends[j] += 2 * len(mine)
        if not curves[j]:
            strips[j] = [label_region[f"b{j}"]]

    parallel = {}
    for i in placed:
        enc, kind, _ = nodes[i]
        if kind != "curve":
            continue
        for j in range(v.boundary_count):
            rest = frozenset(labels - {f"b{j}"})
            if enc == {f"b{j}"} or (v.base_genus == 0 and enc == rest):
                near = label_region[f"b{j}"]
                far = node_parent[i] if near == node_region[i] else node_region[i]
                parallel.setdefault(j, (node_comp[i], near, far))
    return _Vertical(comp_chi, region_side, comp_sides, curves, strips, label_region, parallel, ends)


def _boundary_of(b: _Vertical) -> dict[int, Curves]:
    return {j: Curves(FIBER, n) for j, n in sorted(b.ends.items()) if n}


def _local(b: _Vertical, v: VertexManifold) -> LocalModel:
    return LocalModel(
        comp_chi=tuple(b.comp_chi),
        region_side=tuple(b.region_side),
        curves={j: tuple(c) for j, c in b.curves.items()},
        strips={j: tuple(s) for j, s in b.strips.items()},
        linear={j: False for j in b.curves},
        comp_sides=tuple(b.comp_sides),
        parallel_tori=dict(b.parallel),
    )


def vertical_piece(v: VertexManifold, items: Sequence[BaseCurve | BaseArc]) -> SurfacePiece:
    """Preimage of a base multicurve: vertical tori and annuli, chi 0."""
    if v.kind is VertexKind.SEIFERT and not v.boundary_count and any(isinstance(i, BaseArc) for i in items):
        raise GMSplitError("unknown-label", "closed base has no arcs")
    b = _build_vertical(v, items)
    return SurfacePiece(
        PieceTag.VERTICAL,
        0,
        _boundary_of(b),
        _local(b, v),
        {"items": [_item_json(i) for i in items]},
    )


def _item_json(it) -> dict[str, Any]:
    if isinstance(it, BaseCurve):
        return {"curve": sorted(it.enclosed)}
    return {"arc": list(it.ends), "enclosed": sorted(it.enclosed)}


def pseudovertical_piece(
    v: VertexManifold, items: Sequence[BaseCurve | BaseArc], arcs: Sequence[SurgeryArc]
) -> SurfacePiece:
    """Vertical collection tubed along ``arcs``; each tube lowers chi by 2."""
    b = _build_vertical(v, items)
    labels = _labels(v)
    ncomp = len(b.comp_chi)
    by_region: dict[int, list[frozenset[str]]] = {}
    comps = UnionFind()
    regions = UnionFind()
    for c in range(ncomp):
        comps.add(c)
    for r in range(len(b.region_side)):
        regions.add(r)
    chi = {c: b.comp_chi[c] for c in range(ncomp)}
    for a in arcs:
        x, y = a.ends
        if not (0 <= x < ncomp and 0 <= y < ncomp):
            raise GMSplitError("arc-endpoint-missing", f"arc ends {a.ends} outside 0..{ncomp - 1}")
        if isinstance(a.region, int):
            if not 0 <= a.region < len(b.region_side):
                raise GMSplitError("arc-region-unknown", f"no region {a.region}")
            r = hint = a.region
        else:
            if set(a.separates) - labels or (a.region and a.region not in labels):
                raise GMSplitError("unknown-label", f"arc {a}")
            hint = a.region or (min(a.separates) if a.separates else None)
            if hint is None:
                raise GMSplitError("arc-region-unknown", "surgery arc needs a region or separated labels")
            r = b.label_region[hint]
        sx, sy = b.comp_sides[x], b.comp_sides[y]
        if r not in sx or r not in sy:
            raise GMSplitError("arc-endpoint-missing", f"arc in region of {hint} does not reach components {a.ends}")
        for other in by_region.get(r, []):
            s = frozenset(a.separates)
            if s & other and not (s <= other or other <= s):
                raise GMSplitError("crossing", "projected surgery arcs cross")
        by_region.setdefault(r, []).append(frozenset(a.separates))
        fx = sx[1] if sx[0] == r else sx[0]
        fy = sy[1] if sy[0] == r else sy[0]
        regions.union(fx, fy)
        rx, ry = comps.find(x), comps.find(y)
        merged = comps.union(rx, ry)
        total = chi.pop(rx) + (chi.pop(ry) if ry != rx else 0) - 2
        chi[merged] = total

    comp_ids = {root: k for k, root in enumerate(sorted(chi))}
    reg_roots = sorted({regions.find(r) for r in range(len(b.region_side))})
    reg_ids = {root: k for k, root in enumerate(reg_roots)}
    cmap = lambda c: comp_ids[comps.find(c)]  # noqa: E731
    rmap = lambda r: reg_ids[regions.find(r)]  # noqa: E731
    local = LocalModel(
        comp_chi=tuple(chi[root] for root in sorted(chi)),
        region_side=tuple(b.region_side[root] for root in reg_roots),
        curves={j: tuple(cmap(c) for c in cs) for j, cs in b.curves.items()},
        strips={j: tuple(rmap(r) for r in ss) for j, ss in b.strips.items()},
        linear={j: False for j in b.curves},
        comp_sides=tuple((rmap(s0), rmap(s1)) for s0, s1 in b.comp_sides),
        parallel_tori={j: (cmap(c), rmap(n), rmap(f)) for j, (c, n, f) in b.parallel.items()},
    )
    tag = PieceTag.PSEUDOVERTICAL
    return SurfacePiece(
        tag,
        -2 * len(arcs),
        _boundary_of(b),
        local,
        {"arcs": len(arcs), "items": [_item_json(i) for i in items]},
    )


# --------------------------------------------------------------------------
# horizontal surfaces


def multiplicity_lcm(v: VertexManifold) -> int:
    return reduce(math.lcm, (i.alpha for i in v.exceptional), 1)


def horizontal_admissible_degrees(v: VertexManifold, n_max: int) -> list[int]:
    if not v.is_seifert:
        raise GMSplitError("not-seifert", "use product_horizontal for product vertices")
    if v.boundary_count < 1:
        raise GMSplitError("closed-vertex", "horizontal degrees are defined here for bounded vertices")
    step = multiplicity_lcm(v)
    return list(range(step, n_max + 1, step))


def euler_target(v: VertexManifold, n: int) -> Fraction:
    """Required sum of framing coefficients: -n * sum(beta/alpha)."""
    return -n * sum((i.fraction for i in v.exceptional), Fraction(0))


def horizontal_piece(v: VertexManifold, n: int, framing: Sequence[int]) -> SurfacePiece:
    """Degree-``n`` horizontal surface with boundary classes ``(c_j, n)``.

    Boundary ``j`` meets the surface in ``gcd(c_j, n)`` parallel copies of
    the primitive part of ``c_j * fiber + n * section``.  The surface is a
    union of ``d`` parallel connected copies, where ``d`` is the largest
    common divisor of ``n`` and every ``c_j`` leaving an admissible degree.
    """
    if not v.is_seifert:
        raise GMSplitError("not-seifert", "use product_horizontal for product vertices")
    if v.boundary_count < 1:
        raise GMSplitError("closed-vertex", "horizontal pieces need boundary")
    if n < 1 or n % multiplicity_lcm(v):
        raise GMSplitError("inadmissible-degree", f"degree {n} not divisible by {multiplicity_lcm(v)}")
    if len(framing) != v.boundary_count:
        raise GMSplitError("bad-framing", f"need {v.boundary_count} framing coefficients")
    if sum(framing) != euler_target(v, n):
        raise GMSplitError(
            "euler-number-obstruction", f"sum of framings {sum(framing)} != {euler_target(v, n)}"
        )
    chi_q = n * orbifold_euler_char(v)
    assert chi_q.denominator == 1, "admissible degree gives integral chi"
    chi = int(chi_q)
    step = multiplicity_lcm(v)
    g = reduce(math.gcd, framing, n)
    d = max(k for k in range(1, g + 1) if g % k == 0 and (n // k) % step == 0)

    boundary, curves, strips = {}, {}, {}
    for j, c in enumerate(framing):
        slope, count = primitive(c, n)
        boundary[j] = Curves(slope, count)
        curves[j] = tuple(t % d for t in range(count))
        strips[j] = tuple(t % d for t in range(count))
    local = LocalModel(
        comp_chi=tuple([chi // d] * d),
        region_side=tuple(k % 2 for k in range(d)),
        curves=curves,
        strips=strips,
        linear={j: False for j in curves},
        comp_sides=tuple(((k - 1) % d, k) for k in range(d)),
    )
    return SurfacePiece(
        PieceTag.HORIZONTAL, chi, boundary, local, {"copies": d, "degree": n, "framing": list(framing)}
    )


def product_horizontal(v: VertexManifold, copies: int) -> SurfacePiece:
    """``copies`` parallel level surfaces in ``(surface) x I``."""
    if v.kind is not VertexKind.PRODUCT:
        raise GMSplitError("not-product", "product_horizontal needs a product vertex")
    if copies not in (1, 2):
        raise GMSplitError("bad-copies", "copies must be 1 or 2")
    if euler_char_base(v) > 0:
        raise GMSplitError("sphere-or-disk-pieces-forbidden", "level disks compress")
    chi = copies * euler_char_base(v)
    m = v.boundary_count
    local = LocalModel(
        comp_chi=tuple([euler_char_base(v)] * copies),
        region_side=tuple(k % 2 for k in range(copies + 1)),
        curves={j: tuple(range(copies)) for j in range(m)},
        strips={j: tuple(range(copies + 1)) for j in range(m)},
        linear={j: True for j in range(m)},
        comp_sides=tuple((k, k + 1) for k in range(copies)),
    )
    return SurfacePiece(
        PieceTag.HORIZONTAL,
        chi,
        {j: Curves(SECTION, copies) for j in range(m)},
        local,
        {"copies": copies, "degree": copies, "framing": [0] * m},
    )


def drill(v: VertexManifold, fiber_index: int | None) -> VertexManifold:
    """Remove a neighborhood of a fiber; the new boundary gets the last index."""
    exc = list(v.exceptional)
    if fiber_index is not None:
        if not 0 <= fiber_index < len(exc):
            raise GMSplitError("unknown-fiber", f"no exceptional fiber {fiber_index}")
        del exc[fiber_index]
    return VertexManifold(v.kind, v.base_genus, v.boundary_count + 1, tuple(exc), v.exterior)


def pseudohorizontal_piece(
    v: VertexManifold, fiber_index: int | None, n: int, framing: Sequence[int]
) -> SurfacePiece:
    """Horizontal away from one fiber, a collar of that fiber near it.

    ``framing`` covers the boundaries of the drilled vertex, the new
    boundary last.  ``fiber_index=None`` drills a regular fiber.
    """
    if not v.is_seifert:
        raise GMSplitError("not-seifert", "pseudohorizontal pieces live in Seifert vertices")
    if fiber_index is None and v.boundary_count == 0:
        raise GMSplitError("closed-vertex-unsupported", "regular-fiber collars in closed vertices are not modelled")
    drilled = drill(v, fiber_index)
    h = horizontal_piece(drilled, n, framing)
    new = drilled.boundary_count - 1
    if h.boundary[new].count != 2:
        raise GMSplitError("collar-mismatch", f"{h.boundary[new].count} curves on the drilled torus, need 2")
    lm = h.local
    c0, c1 = lm.curves[new]
    # the collar annulus joins the two curves on the drilled torus
    keep = sorted(set(range(len(lm.comp_chi))) - ({max(c0, c1)} if c0 != c1 else set()))
    merged = min(c0, c1)
    cmap = {c: keep.index(merged if c in (c0, c1) else c) for c in range(len(lm.comp_chi))}
    comp_chi = [0] * len(keep)
    for c, x in enumerate(lm.comp_chi):
        comp_chi[cmap[c]] += x
    local = LocalModel(
        comp_chi=tuple(comp_chi),
        region_side=lm.region_side,
        curves={j: tuple(cmap[c] for c in cs) for j, cs in lm.curves.items() if j != new},
        strips={j: s for j, s in lm.strips.items() if j != new},
        linear={j: False for j in lm.curves if j != new},
        comp_sides=tuple(lm.comp_sides[c] for c in keep),
    )
    boundary = {j: c for j, c in h.boundary.items() if j != new}
    detail = {
        "degree": n,
        "fiber": "regular" if fiber_index is None else fiber_index,
        "framing": list(framing),
    }
    return SurfacePiece(PieceTag.PSEUDOHORIZONTAL, h.chi, boundary, local, detail)
