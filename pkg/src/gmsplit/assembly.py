"""Gluing vertex pieces and edge patterns into closed candidate surfaces.

Also holds the enumeration of standard constructions and the
amalgamation / weak-reduction bookkeeping.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Iterable, Sequence

from .edges import EdgePattern, PatternKind, edge_patterns
from .errors import GMSplitError
from .local import LocalModel, UnionFind
from .model import EdgeKind, GraphManifoldSpec, VertexKind, VertexManifold, require_valid
from .slopes import transport_slope
from .splittings import product_times_circle_piece, splitting_piece, vertical_splittings
from .surfaces import (
    BaseArc,
    SurfacePiece,
    SurgeryArc,
    drill,
    euler_target,
    horizontal_piece,
    multiplicity_lcm,
    product_horizontal,
    pseudohorizontal_piece,
    pseudovertical_piece,
    vertical_piece,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bounds:
    n_max: int = 12
    max_arcs: int = 8
    allow_tubes: bool = True


@dataclass(frozen=True)
class CandidateSplitting:
    vertex_pieces: dict[str, SurfacePiece]
    edge_patterns: dict[str, EdgePattern]
    total_chi: int
    genus: int
    bicoloring: dict[str, str]
    # (edge id, end) -> (rotation, reflected) used to match curves
    matching: dict[tuple[str, int], tuple[int, bool]] = field(default_factory=dict)

    @property
    def tubes(self) -> int:
        arcs = sum(p.detail.get("arcs", 0) for p in self.vertex_pieces.values())
        return arcs + sum(p.tubes for p in self.edge_patterns.values())

    @property
    def active(self) -> list[str]:
        out = [f"vertex:{v}" for v, p in sorted(self.vertex_pieces.items()) if p.active]
        return out + [f"edge:{e}" for e, p in sorted(self.edge_patterns.items()) if p.active]

    def encoding(self) -> str:
        doc = {
            "edges": {e: p.to_json() for e, p in self.edge_patterns.items()},
            "vertices": {v: p.to_json() for v, p in self.vertex_pieces.items()},
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    def to_json(self) -> dict[str, Any]:
        return {
            "active": self.active,
            "bicoloring": dict(sorted(self.bicoloring.items())),
            "chi": self.total_chi,
            "edges": {e: {"pattern": p.to_json()} for e, p in sorted(self.edge_patterns.items())},
            "genus": self.genus,
            "tubes": self.tubes,
            "vertices": {v: {"piece": p.to_json()} for v, p in sorted(self.vertex_pieces.items())},
        }

    def chi_ledger(self) -> list[tuple[str, str, int]]:
        rows = [(f"vertex {v}", p.tag.value, p.chi) for v, p in sorted(self.vertex_pieces.items())]
        rows += [(f"edge {e}", p.kind.value, p.chi) for e, p in sorted(self.edge_patterns.items())]
        return rows


def _end_matchings(n: int, linear: bool):
    """Ways to match n vertex curves with n edge curves: (rotation, reflected)."""
    if n == 0:
        return [(0, False)]
    if linear:
        return [(0, False), (0, True)]
    return [(r, refl) for refl in (False, True) for r in range(n)]


def _match(n: int, linear: bool, rot: int, refl: bool):
    """Return (curve map, strip map) from vertex positions to edge positions."""
    if n == 0:
        return [], {0: 0}
    if linear:
        if not refl:
            return list(range(n)), {i: i for i in range(n + 1)}
        return [n - 1 - t for t in range(n)], {i: n - i for i in range(n + 1)}
    if not refl:
        return [(t + rot) % n for t in range(n)], {t: (t + rot) % n for t in range(n)}
    # reflected: vertex strip after t lies between edge curves (rot-t) and (rot-t-1)
    return [(rot - t) % n for t in range(n)], {t: (rot - t - 1) % n for t in range(n)}


def _distinct_matchings(vl: LocalModel, j, el: LocalModel, k):
    """Matchings at one edge end, one per distinct effect, that respect strip sides.

    Parallel copies make many rotations equivalent; only the induced
    component and region identifications matter.  A matching is locally
    admissible only if vertex and edge strip sides agree up to one global
    flip.
    """
    vc, vs = vl.curves.get(j, ()), vl.strips.get(j, (0,))
    ec, es = el.curves[k], el.strips[k]
    linear = bool(el.linear.get(k))
    seen, out = set(), []
    for rot, refl in _end_matchings(len(vc), linear):
        cmap, smap = _match(len(vc), linear, rot, refl)
        flips = {vl.region_side[r] ^ el.region_side[es[smap[i]]] for i, r in enumerate(vs)}
        if len(flips) > 1:
            continue
        sig = (
            frozenset((c, ec[cmap[t]]) for t, c in enumerate(vc)),
            frozenset((r, es[smap[i]]) for i, r in enumerate(vs)),
        )
        if sig not in seen:
            seen.add(sig)
            out.append((rot, refl))
    return out


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _pfind(parent, parity, x):
    path = []
    while parent[x] != x:
        path.append(x)
        x = parent[x]
    acc = 0
    for node in reversed(path):
        acc ^= parity[node]
        parity[node] = acc
        parent[node] = x
    return x, (parity[path[0]] if path else 0)


class _Cells:
    """Integer-indexed components and regions of every piece of a candidate."""

    def __init__(self, vp: dict[str, SurfacePiece], ep: dict[str, EdgePattern]):
        self.coff: dict = {}
        self.roff: dict = {}
        nc = nr = 0
        rparent: list[int] = []
        rparity: list[int] = []
        for prefix, lm in [(("v", k), p.local) for k, p in sorted(vp.items())] + [
            (("e", k), p.local) for k, p in sorted(ep.items())
        ]:
            self.coff[prefix], self.roff[prefix] = nc, nr
            nc += len(lm.comp_chi)
            side = lm.region_side
            for r in range(len(side)):
                rparent.append(nr)
                rparity.append(side[r] ^ side[0])
            nr += len(side)
        self.ncomp = nc
        self.cparent = list(range(nc))
        self.rparent, self.rparity = rparent, rparity

    def comp(self, prefix, c) -> int:
        return self.coff[prefix] + c

    def region(self, prefix, r) -> int:
        return self.roff[prefix] + r


def _union(parent, a, b) -> bool:
    ra, rb = _find(parent, a), _find(parent, b)
    if ra == rb:
        return False
    if rb < ra:
        ra, rb = rb, ra
    parent[rb] = ra
    return True


def _relate(parent, parity, a, b, diff) -> bool:
    ra, pa = _pfind(parent, parity, a)
    rb, pb = _pfind(parent, parity, b)
    if ra == rb:
        return (pa ^ pb) == diff
    if rb < ra:
        ra, rb, pa, pb = rb, ra, pb, pa
    parent[rb] = ra
    parity[rb] = pa ^ pb ^ diff
    return True


def _end_gluings(cells: _Cells, eid, k, vid, vl: LocalModel, j, el: LocalModel, rot, refl):
    """Component pairs and region pairs identified by one matching at one edge end."""
    pv, pe = ("v", vid), ("e", eid)
    vc, vs = vl.curves.get(j, ()), vl.strips.get(j, (0,))
    ec, es = el.curves[k], el.strips[k]
    cmap, smap = _match(len(vc), bool(el.linear.get(k)), rot, refl)
    cpairs = [(cells.comp(pv, c), cells.comp(pe, ec[cmap[t]])) for t, c in enumerate(vc)]
    rpairs = [(cells.region(pv, r), cells.region(pe, es[smap[i]])) for i, r in enumerate(vs)]
    return cpairs, rpairs


def assemble(
    spec: GraphManifoldSpec,
    vertex_choices: dict[str, SurfacePiece],
    edge_choices: dict[str, EdgePattern] | None = None,
    matching: dict[tuple[str, int], tuple[int, bool]] | None = None,
) -> CandidateSplitting:
    """Glue pieces into one closed surface and check it splits ``spec``.

    When ``matching`` is omitted every rotation/reflection of the curves at
    each edge end is tried and the first one that gives a connected,
    separating surface is kept.
    """
    edge_choices = dict(edge_choices or {})
    if set(vertex_choices) != set(spec.vertices):
        raise GMSplitError("missing-choice", "need exactly one piece per vertex")
    if set(edge_choices) != set(spec.edges):
        raise GMSplitError("missing-choice", "need exactly one pattern per edge")

    for vid, v in sorted(spec.vertices.items()):
        piece = vertex_choices[vid]
        for j in sorted(v.exterior):
            if piece.local.curves.get(j):
                raise GMSplitError("exterior-boundary-met", f"{vid} boundary {j} is exterior")
    for eid, e in sorted(spec.edges.items()):
        pat = edge_choices[eid]
        for k, (vid, j) in enumerate(e.ends):
            have = vertex_choices[vid].boundary.get(j)
            n = have.count if have else 0
            if pat.identify:
                if n:
                    raise GMSplitError("slope-mismatch", f"{eid} end {k}: identified tori but {n} curves")
                continue
            if n != pat.demand(k):
                raise GMSplitError("slope-mismatch", f"{eid} end {k}: {n} curves, pattern has {pat.demand(k)}")
            if n and transport_slope(e.gluings[k], have.slope) != pat.slopes[k]:
                raise GMSplitError("slope-mismatch", f"{eid} end {k}: slope {have.slope} does not match")
        if e.kind is EdgeKind.TORUS and not pat.identify and pat.demand(0) == 0 and pat.demand(1) == 0:
            raise GMSplitError("torus-in-complement", f"surface misses the decomposing torus of {eid}")

    for p in list(vertex_choices.values()) + list(edge_choices.values()):
        p.local.check()

    total = sum(p.chi for p in vertex_choices.values()) + sum(p.chi for p in edge_choices.values())
    if total % 2:
        raise GMSplitError("odd-chi", f"total chi {total} is odd")
    ncomp = sum(len(p.local.comp_chi) for p in vertex_choices.values()) + sum(
        len(p.local.comp_chi) for p in edge_choices.values()
    )
    if ncomp == 0:
        raise GMSplitError("empty-surface", "no surface components")

    keys = []
    options = []
    for eid, e in sorted(spec.edges.items()):
        for k, (vid, j) in enumerate(e.ends):
            pat = edge_choices[eid]
            n = len(vertex_choices[vid].local.curves.get(j, ()))
            if matching and (eid, k) in matching:
                opts = [matching[(eid, k)]]
            elif pat.identify:
                opts = [(0, False)]
            else:
                opts = _distinct_matchings(vertex_choices[vid].local, j, pat.local, k)
                if not opts:
                    raise GMSplitError("not-separating", f"{eid} end {k}: strip sides cannot agree")
            keys.append((eid, k))
            options.append(opts)

    # each matched curve merges at most two components, identified tori one more
    merges = sum(len(vertex_choices[vid].local.curves.get(j, ())) for eid, k in keys
                 for vid, j in [spec.edges[eid].ends[k]])
    merges += sum(1 for p in edge_choices.values() if p.identify)
    if ncomp - 1 > merges:
        raise GMSplitError("disconnected-surface", f"{ncomp} components but only {merges} gluings")

    cells = _Cells(vertex_choices, edge_choices)
    classes = cells.ncomp
    for eid in sorted(spec.edges):
        e = spec.edges[eid]
        if not edge_choices[eid].identify:
            continue
        tori = []
        for vid, j in e.ends:
            pt = vertex_choices[vid].local.parallel_tori.get(j)
            if pt is None:
                raise GMSplitError("identify-without-tori", f"{vid} has no torus parallel to boundary {j}")
            tori.append((("v", vid), pt))
        (pa, (ca, na, fa)), (pb, (cb, nb, fb)) = tori
        classes -= _union(cells.cparent, cells.comp(pa, ca), cells.comp(pb, cb))
        ok = _relate(cells.rparent, cells.rparity, cells.region(pa, na), cells.region(pb, fb), 0)
        ok &= _relate(cells.rparent, cells.rparity, cells.region(pb, nb), cells.region(pa, fa), 0)
        if not ok:
            raise GMSplitError("not-separating", f"identified tori of {eid} do not bound consistently")

    steps = []
    for (eid, k), opts in zip(keys, options):
        vid, j = spec.edges[eid].ends[k]
        if edge_choices[eid].identify:
            steps.append([(opts[0], [], [])])
            continue
        vl, el = vertex_choices[vid].local, edge_choices[eid].local
        steps.append([(o, *_end_gluings(cells, eid, k, vid, vl, j, el, *o)) for o in opts])
    budget = [sum(len(step[0][1]) for step in steps[i:]) for i in range(len(steps) + 1)]

    failures = []

    def search(i, cparent, rparent, rparity, classes, chosen):
        if classes - 1 > budget[i]:
            failures.append("disconnected-surface")
            return None
        if i == len(steps):
            if classes != 1:
                failures.append("disconnected-surface")
                return None
            return chosen, rparent, rparity
        for opt, cpairs, rpairs in steps[i]:
            cp, rp, rq = list(cparent), list(rparent), list(rparity)
            if not all([_relate(rp, rq, a, b, 0) for a, b in rpairs]):
                failures.append("not-separating")
                continue
            left = classes - sum(_union(cp, a, b) for a, b in cpairs)
            found = search(i + 1, cp, rp, rq, left, chosen + [opt])
            if found:
                return found
        return None

    found = search(0, cells.cparent, cells.rparent, cells.rparity, classes, [])
    if found is None:
        code = failures[0] if failures else "not-separating"
        msg = "complement regions admit no 2-colouring" if code == "not-separating" else "surface is disconnected"
        raise GMSplitError(code, msg)
    chosen, rparent, rparity = found
    genus = 1 - total // 2
    if genus < 0:
        raise GMSplitError("negative-genus", f"chi {total}")

    def side(prefix, r):
        return _pfind(rparent, rparity, cells.region(prefix, r))[1]

    coloring = _bicoloring(vertex_choices, edge_choices, side)
    return CandidateSplitting(dict(vertex_choices), edge_choices, total, genus, coloring, dict(zip(keys, chosen)))


def _bicoloring(vp, ep, side) -> dict[str, str]:
    # orientation: the Cross collar owner, else the V region of a splitting piece
    anchor = None
    for eid, p in sorted(ep.items()):
        if p.kind is PatternKind.CROSS:
            anchor = (("e", eid), 0), p.owner
            break
    if anchor is None:
        for vid, p in sorted(vp.items()):
            if "boundaries_in_V" in p.detail:
                anchor = (("v", vid), 0), "V"
                break
    if anchor is None:
        first = sorted(vp)[0] if vp else None
        anchor = ((("v", first), 0) if first is not None else (("e", sorted(ep)[0]), 0)), "V"
    key, label = anchor
    base = side(*key)
    other = "W" if label == "V" else "V"
    out = {}
    for kind, items in (("v", vp), ("e", ep)):
        for pid, p in sorted(items.items()):
            for r in range(len(p.local.region_side)):
                here = side((kind, pid), r)
                out[f"{'vertex' if kind == 'v' else 'edge'}:{pid}/{r}"] = label if here == base else other
    return out


# --------------------------------------------------------------------------
# enumeration


def _torus_ends(spec: GraphManifoldSpec, vid: str) -> set[int]:
    return {j for j, (eid, _) in spec.edge_ends_at(vid).items() if spec.edges[eid].kind is EdgeKind.TORUS}


def _framings(total: int, m: int, n: int) -> Iterable[tuple[int, ...]]:
    """Integer m-tuples summing to ``total`` inside a box of half-width n + |total|."""
    box = n + abs(total)
    if m == 1:
        yield (total,)
        return
    for head in product(range(-box, box + 1), repeat=m - 1):
        last = total - sum(head)
        if abs(last) <= box:
            yield head + (last,)


def _vertical_options(v: VertexManifold, need: set[int]) -> list[list]:
    """Base multicurves whose vertical preimage touches every boundary in ``need``.

    Bands are pairs of parallel arcs between two boundaries; a boundary not
    reached by a band gets one separating arc around a set of cone points.
    """
    interior = sorted(v.interior_boundaries())
    pairs = list(combinations(interior, 2))
    cones = [f"e{i}" for i in range(len(v.exceptional))]
    subsets = [frozenset(c) for r in range(1, len(cones) + 1) for c in combinations(cones, r)]
    out = []
    for r in range(len(pairs) + 1):
        for bands in combinations(pairs, r):
            touched = {x for pq in bands for x in pq}
            lonely = sorted(need - touched)
            for encl in product(subsets, repeat=len(lonely)):
                items = [BaseArc(pq) for pq in bands for _ in range(2)]
                items += [BaseArc((j, j), e) for j, e in zip(lonely, encl)]
                if items:
                    out.append(items)
    return out


def vertex_options(
    spec: GraphManifoldSpec, vid: str, bounds: Bounds
) -> list[SurfacePiece]:
    """Every piece considered for ``vid`` in a multi-piece spec, in a fixed order."""
    v = spec.vertices[vid]
    need = _torus_ends(spec, vid)
    out: list[SurfacePiece] = []

    def keep(make, *args):
        try:
            piece = make(*args)
        except GMSplitError:
            return
        # a decomposing torus missed by the surface would sit inside V or W
        if need - set(piece.boundary):
            return
        out.append(piece)

    if v.kind is VertexKind.PRODUCT:
        for copies in (1, 2):
            if not v.exterior:
                keep(product_horizontal, v, copies)
    for items in _vertical_options(v, need):
        keep(vertical_piece, v, items)
        if not bounds.allow_tubes:
            continue
        try:
            base = vertical_piece(v, items).local
        except GMSplitError:
            continue
        n = len(base.comp_chi)
        arcs = [
            SurgeryArc((a, b), region=r)
            for a in range(n)
            for b in range(a, n)
            for r in sorted(set(base.comp_sides[a]) & set(base.comp_sides[b]))
        ]
        for k in range(1, min(bounds.max_arcs, 2) + 1):
            for chosen in combinations(arcs, k):
                keep(pseudovertical_piece, v, items, list(chosen))
    if v.is_seifert and not v.exterior and v.boundary_count:
        step = multiplicity_lcm(v)
        for n in range(step, bounds.n_max + 1, step):
            target = euler_target(v, n)
            for fr in _framings(int(target), v.boundary_count, n):
                keep(horizontal_piece, v, n, fr)
    if v.is_seifert and not v.exterior and bounds.allow_tubes:
        for f in range(len(v.exceptional)):
            _pseudohorizontal_options(v, f, bounds, keep)
    return out


def _pseudohorizontal_options(v, f, bounds, keep):
    d = drill(v, f)
    step = multiplicity_lcm(d)
    for n in range(step, bounds.n_max + 1, step):
        for fr in _framings(int(euler_target(d, n)), d.boundary_count, n):
            keep(pseudohorizontal_piece, v, f, n, fr)


def _single_vertex_options(v: VertexManifold, bounds: Bounds) -> list[SurfacePiece]:
    if v.boundary_count:
        if not v.is_seifert:
            return []
        return [splitting_piece(vs) for vs in vertical_splittings(v)]
    out = []
    if v.is_seifert and not v.exceptional and v.base_genus >= 1:
        out.append(product_times_circle_piece(v.base_genus))
    for f in range(len(v.exceptional)):
        _pseudohorizontal_options(v, f, bounds, lambda make, *a: _try_append(out, make, *a))
    return out


def _try_append(out, make, *args):
    try:
        out.append(make(*args))
    except GMSplitError:
        pass


def _sort_key(c: CandidateSplitting):
    return (c.genus, c.tubes, c.encoding())


def enumerate_standard(spec: GraphManifoldSpec, bounds: Bounds = Bounds()) -> list[CandidateSplitting]:
    """All assemblable standard candidates, ascending by genus.

    A strongly irreducible splitting compresses in exactly one vertex or
    edge piece, so every candidate carries exactly one active piece.
    Ties are broken by fewer tubes, then by the canonical encoding.
    """
    require_valid(spec)
    found: dict[str, CandidateSplitting] = {}
    if not spec.edges:
        (vid, v), = spec.vertices.items()
        for piece in _single_vertex_options(v, bounds):
            try:
                c = assemble(spec, {vid: piece}, {})
            except GMSplitError:
                continue
            found.setdefault(c.encoding(), c)
        return sorted(found.values(), key=_sort_key)

    vids = sorted(spec.vertices)
    eids = sorted(spec.edges)
    per_vertex = [vertex_options(spec, vid, bounds) for vid in vids]
    pattern_cache: dict = {}
    log.debug("vertex option counts: %s", [len(x) for x in per_vertex])
    for combo in product(*per_vertex):
        actives = sum(p.active for p in combo)
        if actives > 1:
            continue
        vp = dict(zip(vids, combo))
        per_edge = []
        for eid in eids:
            e = spec.edges[eid]
            dem = [vp[vid].boundary.get(j) for vid, j in e.ends]
            ck = (eid, dem[0], dem[1])
            if ck not in pattern_cache:
                pattern_cache[ck] = edge_patterns(e, dem[0], dem[1], allow_tube=bounds.allow_tubes)
            pats = pattern_cache[ck]
            per_edge.append([p for p in pats if actives + p.active <= 1])
            if not per_edge[-1]:
                break
        else:
            for pats in product(*per_edge):
                if actives + sum(p.active for p in pats) != 1:
                    continue
                try:
                    c = assemble(spec, vp, dict(zip(eids, pats)))
                except GMSplitError:
                    continue
                found.setdefault(c.encoding(), c)
    return sorted(found.values(), key=_sort_key)


# --------------------------------------------------------------------------
# generalized splittings


@dataclass(frozen=True)
class GeneralizedSplitting:
    """Thick levels chi(S_i) interleaved with thin levels chi(F_i).

    ``levels[i] = (chi(S_i), chi(F_i))``; the last thin entry is None.
    """

    levels: tuple[tuple[int, int | None], ...]
    labels: tuple[str, ...] = ()


def amalgamate(gs: GeneralizedSplitting | Sequence[Sequence[int]]) -> tuple[int, int]:
    """Euler characteristic and genus of the amalgamated splitting surface."""
    levels = gs.levels if isinstance(gs, GeneralizedSplitting) else tuple(
        (lv[0], lv[1] if len(lv) > 1 else None) for lv in gs
    )
    if not levels:
        raise GMSplitError("empty-splitting", "need at least one thick level")
    for k, (s, f) in enumerate(levels):
        if (f is None) != (k == len(levels) - 1):
            raise GMSplitError("malformed-splitting", "only the last level omits its thin surface")
    chi = sum(s - (f or 0) for s, f in levels)
    if chi % 2:
        raise GMSplitError("odd-chi", f"chi {chi} is odd")
    return chi, 1 - chi // 2


def cut_edge(spec: GraphManifoldSpec, edge_id: str) -> list[GraphManifoldSpec]:
    """Cut along the decomposing torus of ``edge_id``.

    The two collars left over are absorbed into the adjacent vertices,
    whose attaching boundaries become exterior.
    """
    if edge_id not in spec.edges:
        raise GMSplitError("unknown-edge", edge_id)
    e = spec.edges[edge_id]
    if e.kind is not EdgeKind.TORUS:
        raise GMSplitError("cut-annulus-unsupported", "only torus edges can be cut")
    vertices = dict(spec.vertices)
    for vid, j in e.ends:
        v = vertices[vid]
        vertices[vid] = VertexManifold(v.kind, v.base_genus, v.boundary_count, v.exceptional, v.exterior | {j})
    edges = {k: x for k, x in spec.edges.items() if k != edge_id}

    comps = UnionFind()
    for vid in vertices:
        comps.add(vid)
    for x in edges.values():
        comps.union(x.ends[0][0], x.ends[1][0])
    groups = sorted(comps.classes().values())
    if len(groups) == 1:
        return [GraphManifoldSpec(vertices, edges, spec.name)]
    out = []
    for k, members in enumerate(groups):
        ms = set(members)
        out.append(
            GraphManifoldSpec(
                {v: vertices[v] for v in sorted(ms)},
                {i: x for i, x in sorted(edges.items()) if x.ends[0][0] in ms},
                f"{spec.name}#{k}" if spec.name else f"#{k}",
            )
        )
    return out


@dataclass(frozen=True)
class WeakReduction:
    splitting: GeneralizedSplitting
    pieces: tuple[GraphManifoldSpec, ...]
    witnesses: tuple[CandidateSplitting, ...]
    chi: int
    genus: int


def weak_reduction_pipeline(
    spec: GraphManifoldSpec, thin_edges: Iterable[str], bounds: Bounds = Bounds()
) -> WeakReduction:
    """Cut along torus thin levels, split each piece minimally, amalgamate."""
    thin = sorted(set(thin_edges))
    if not thin:
        raise GMSplitError("no-thin-levels", "give at least one edge to cut along")
    pieces = [spec]
    for eid in thin:
        nxt = []
        for p in pieces:
            nxt.extend(cut_edge(p, eid) if eid in p.edges else [p])
        pieces = nxt
    witnesses = []
    for k, p in enumerate(pieces):
        cands = enumerate_standard(p, bounds)
        if not cands:
            raise GMSplitError("empty-piece", f"piece {k} ({sorted(p.vertices)}) has no candidate")
        witnesses.append(cands[0])
    levels = tuple((w.total_chi, 0 if k < len(witnesses) - 1 else None) for k, w in enumerate(witnesses))
    gs = GeneralizedSplitting(levels, tuple(",".join(sorted(p.vertices)) for p in pieces))
    chi, genus = amalgamate(gs)
    return WeakReduction(gs, tuple(pieces), tuple(witnesses), chi, genus)
