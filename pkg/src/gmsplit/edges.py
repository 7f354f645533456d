"""Surface patterns inside edge manifolds (torus x I and annulus x I).

Patterns are computed in the edge's own coordinates: the demand at each
end is first transported through that end's gluing map.  Curves at end
``k`` are keyed ``k`` in the local model.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .errors import GMSplitError
from .local import LocalModel, UnionFind
from .model import EdgeKind, EdgeManifold
from .slopes import SECTION, Curves, Slope, intersection_number, transport_slope


class PatternKind(str, Enum):
    ANNULI = "annuli"
    ANNULI_WITH_TUBE = "annuli_with_tube"
    CROSS = "cross"


_FIXED_CHI = {PatternKind.ANNULI: 0, PatternKind.ANNULI_WITH_TUBE: -2, PatternKind.CROSS: -2}


@dataclass(frozen=True)
class EdgePattern:
    kind: PatternKind
    spanning_count: int
    parallel_count: tuple[int, int]  # boundary-parallel annuli at end 0, end 1
    local: LocalModel
    slopes: tuple[Slope | None, Slope | None] = (None, None)  # edge coordinates
    tube: tuple[int, int, int] | None = None  # (component, component, region)
    tube_end: int | None = None
    owner: str = "V"  # Cross: which side is the collar
    identify: bool = False  # parallel tori at both ends merged into one
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def chi(self) -> int:
        return _FIXED_CHI[self.kind]

    @property
    def active(self) -> bool:
        return self.kind is not PatternKind.ANNULI

    @property
    def tubes(self) -> int:
        return 1 if self.kind is PatternKind.ANNULI_WITH_TUBE else 0

    def demand(self, end: int) -> int:
        return len(self.local.curves.get(end, ()))

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "chi": self.chi,
            "kind": self.kind.value,
            "parallel": list(self.parallel_count),
            "spanning": self.spanning_count,
        }
        if self.kind is PatternKind.CROSS:
            c, c2 = self.slopes
            out["cross_slopes"] = [[c.a, c.b], [c2.a, c2.b]]
            out["owner"] = self.owner
        if self.tube is not None:
            out["tube"] = list(self.tube)
            out["tube_end"] = self.tube_end
        if self.identify:
            out["identify_tori"] = True
        return out


def _annuli_local(s: int, p0: int, p1: int, linear: bool) -> LocalModel:
    """Spanning annuli (components 0..s-1) then end-0 and end-1 pockets."""
    comp_chi = [0] * (s + p0 + p1)
    comp_sides: list[tuple[int, int]] = []
    if linear:
        slabs = list(range(s + 1))
        side = [k % 2 for k in slabs]
        comp_sides = [(k, k + 1) for k in range(s)]
        outer = s  # pockets sit in the last slab
    else:
        nslab = max(s, 1)
        slabs = list(range(nslab))
        side = [k % 2 for k in slabs]
        comp_sides = [((k - 1) % nslab, k) for k in range(s)]
        outer = nslab - 1
    curves: dict[int, list[int]] = {0: [], 1: []}
    strips: dict[int, list[int]] = {0: [], 1: []}
    for end in (0, 1):
        if linear:
            strips[end].append(0)
        for k in range(s):
            curves[end].append(k)
            strips[end].append(slabs[k + 1] if linear else slabs[k])
        start = s + (0 if end == 0 else p0)
        for t in range(p0 if end == 0 else p1):
            comp = start + t
            pocket = len(side)
            side.append(side[outer] ^ 1)
            comp_sides.append((outer, pocket))
            curves[end] += [comp, comp]
            strips[end] += [pocket, outer]
        if not curves[end] and not linear:
            strips[end] = [outer]
    return LocalModel(
        comp_chi=tuple(comp_chi),
        region_side=tuple(side),
        curves={k: tuple(v) for k, v in curves.items()},
        strips={k: tuple(v) for k, v in strips.items()},
        linear={0: linear, 1: linear},
        comp_sides=tuple(comp_sides),
    )


def _with_tube(lm: LocalModel, a: int, b: int, region: int) -> LocalModel:
    sa, sb = lm.comp_sides[a], lm.comp_sides[b]
    fa = sa[1] if sa[0] == region else sa[0]
    fb = sb[1] if sb[0] == region else sb[0]
    regions = UnionFind()
    for r in range(len(lm.region_side)):
        regions.add(r)
    regions.union(fa, fb)
    roots = sorted({regions.find(r) for r in range(len(lm.region_side))})
    rid = {r: roots.index(regions.find(r)) for r in range(len(lm.region_side))}
    lo, hi = min(a, b), max(a, b)
    keep = [c for c in range(len(lm.comp_chi)) if c != hi or lo == hi]
    cid = {c: keep.index(lo if c == hi else c) for c in range(len(lm.comp_chi))}
    comp_chi = [0] * len(keep)
    for c, x in enumerate(lm.comp_chi):
        comp_chi[cid[c]] += x
    comp_chi[cid[lo]] -= 2
    return LocalModel(
        comp_chi=tuple(comp_chi),
        region_side=tuple(lm.region_side[r] for r in roots),
        curves={k: tuple(cid[c] for c in v) for k, v in lm.curves.items()},
        strips={k: tuple(rid[r] for r in v) for k, v in lm.strips.items()},
        linear=dict(lm.linear),
        comp_sides=tuple((rid[x], rid[y]) for x, y in (lm.comp_sides[c] for c in keep)),
    )


def _tube_choices(lm: LocalModel, p0: int, p1: int, s: int):
    """Every (a, b, region): two annuli (or one) adjacent to a common region.

    The arc runs parallel into the end where one of its annuli has a
    boundary; spanning annuli reach both ends.
    """
    n = len(lm.comp_chi)
    for a in range(n):
        for b in range(a, n):
            shared = sorted(set(lm.comp_sides[a]) & set(lm.comp_sides[b]))
            for r in shared:
                yield a, b, r


def _end_of(comp: int, s: int, p0: int) -> int | None:
    if comp < s:
        return None
    return 0 if comp < s + p0 else 1


def cross_local() -> LocalModel:
    """Frontier of a collar of (c x 0) u (p x I) u (c' x 1): chi -2, two curves per end."""
    return LocalModel(
        comp_chi=(-2,),
        region_side=(0, 1),
        curves={0: (0, 0), 1: (0, 0)},
        strips={0: (0, 1), 1: (0, 1)},
        linear={0: False, 1: False},
        comp_sides=((0, 1),),
    )


def edge_patterns(
    e: EdgeManifold,
    left: Curves | None,
    right: Curves | None,
    allow_tube: bool = True,
    owner: str = "V",
) -> list[EdgePattern]:
    """All patterns meeting the demands ``left`` (end 0) and ``right`` (end 1).

    Demands are in each end's vertex coordinates.  The list is empty when
    nothing fits.
    """
    if owner not in ("V", "W"):
        raise GMSplitError("bad-owner", "owner must be V or W")
    t = [
        transport_slope(e.gluings[k], d.slope) if d is not None else None
        for k, d in enumerate((left, right))
    ]
    k0 = left.count if left else 0
    k1 = right.count if right else 0
    linear_of = [e.kind is EdgeKind.ANNULUS and s == SECTION for s in t]
    out: list[EdgePattern] = []

    spans = []
    if t[0] is not None and t[1] is not None and t[0] == t[1]:
        spans = [s for s in range(1, min(k0, k1) + 1) if (k0 - s) % 2 == 0 and (k1 - s) % 2 == 0]
    if k0 % 2 == 0 and k1 % 2 == 0:
        spans = [0] + spans
    for s in spans:
        p0, p1 = (k0 - s) // 2, (k1 - s) // 2
        linear = linear_of[0] if t[0] is not None else linear_of[1]
        if t[0] is not None and t[1] is not None and linear_of[0] != linear_of[1]:
            continue
        lm = _annuli_local(s, p0, p1, linear)
        slopes = (t[0], t[1])
        out.append(EdgePattern(PatternKind.ANNULI, s, (p0, p1), lm, slopes))
        if allow_tube and lm.comp_chi:
            for a, b, r in _tube_choices(lm, p0, p1, s):
                ends = {x for x in (_end_of(a, s, p0), _end_of(b, s, p0)) if x is not None}
                if len(ends) > 1:
                    continue  # an arc joining pockets at opposite ends is not boundary-parallel
                tube_end = ends.pop() if ends else 0
                out.append(
                    EdgePattern(
                        PatternKind.ANNULI_WITH_TUBE,
                        s,
                        (p0, p1),
                        _with_tube(lm, a, b, r),
                        slopes,
                        tube=(a, b, r),
                        tube_end=tube_end,
                    )
                )
    if (
        e.kind is EdgeKind.TORUS
        and k0 == 2
        and k1 == 2
        and intersection_number(t[0], t[1]) == 1
    ):
        out.append(EdgePattern(PatternKind.CROSS, 0, (0, 0), cross_local(), (t[0], t[1]), owner=owner))
    return out


def identify_pattern() -> EdgePattern:
    """Empty edge whose two parallel tori are merged into one (amalgamation)."""
    lm = LocalModel(
        comp_chi=(),
        region_side=(0,),
        curves={0: (), 1: ()},
        strips={0: (0,), 1: (0,)},
        linear={0: False, 1: False},
    )
    return EdgePattern(PatternKind.ANNULI, 0, (0, 0), lm, identify=True)
