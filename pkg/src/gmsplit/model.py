"""Combinatorial description of totally orientable generalized graph manifolds.

A :class:`GraphManifoldSpec` is a multigraph: vertices are Seifert fibered
pieces (or products ``surface x I``), edges are ``torus x I`` or
``annulus x I`` pieces glued to vertex boundary components.  Boundary
components of a vertex are indexed from 0.  Coordinates on every boundary
torus are ``(fiber, section)``; a gluing matrix sends vertex-side
coordinates at one end of an edge to the edge's own torus coordinates.

Values are immutable and are *not* checked on construction; call
:func:`validate` to get the list of violated invariants.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping

from .errors import GMSplitError

FORMAT = "gm-spec/1"


class VertexKind(str, Enum):
    SEIFERT = "seifert"
    PRODUCT = "product"  # (compact surface) x [0, 1]


class EdgeKind(str, Enum):
    TORUS = "torus"  # torus x I
    ANNULUS = "annulus"  # annulus x I


@dataclass(frozen=True, order=True)
class SeifertInvariant:
    alpha: int
    beta: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.beta, self.alpha)


@dataclass(frozen=True)
class VertexManifold:
    kind: VertexKind
    base_genus: int
    boundary_count: int
    exceptional: tuple[SeifertInvariant, ...] = ()
    exterior: frozenset[int] = frozenset()

    @property
    def is_seifert(self) -> bool:
        return self.kind is VertexKind.SEIFERT

    def interior_boundaries(self) -> list[int]:
        return [j for j in range(self.boundary_count) if j not in self.exterior]


def seifert(genus: int, boundary: int, exceptional=(), exterior=()) -> VertexManifold:
    """Shorthand constructor; ``exceptional`` is a sequence of ``(alpha, beta)``."""
    return VertexManifold(
        VertexKind.SEIFERT,
        genus,
        boundary,
        tuple(SeifertInvariant(a, b) for a, b in exceptional),
        frozenset(exterior),
    )


def product(genus: int, boundary: int, exterior=()) -> VertexManifold:
    return VertexManifold(VertexKind.PRODUCT, genus, boundary, (), frozenset(exterior))


@dataclass(frozen=True)
class GluingMap:
    matrix: tuple[tuple[int, int], tuple[int, int]] = ((1, 0), (0, 1))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def apply(self, x: int, y: int) -> tuple[int, int]:
        (a, b), (c, d) = self.matrix
        return a * x + b * y, c * x + d * y

    def inverse(self) -> "GluingMap":
        (a, b), (c, d) = self.matrix
        det = self.det
        if det not in (1, -1):
            raise GMSplitError("gluing-not-unimodular", f"det={det}")
        # inverse of a unimodular matrix is integral: adj / det
        return GluingMap(((d * det, -b * det), (-c * det, a * det)))


IDENTITY = GluingMap()
SWAP = GluingMap(((0, 1), (1, 0)))


@dataclass(frozen=True)
class EdgeManifold:
    kind: EdgeKind
    ends: tuple[tuple[str, int], tuple[str, int]]
    gluings: tuple[GluingMap, GluingMap] = (IDENTITY, IDENTITY)

    @property
    def is_loop(self) -> bool:
        return self.ends[0][0] == self.ends[1][0]


@dataclass(frozen=True)
class GraphManifoldSpec:
    vertices: Mapping[str, VertexManifold]
    edges: Mapping[str, EdgeManifold] = field(default_factory=dict)
    name: str = ""

    def edge_ends_at(self, vid: str) -> dict[int, tuple[str, int]]:
        """Map boundary index of ``vid`` -> (edge id, end index)."""
        out = {}
        for eid in sorted(self.edges):
            for k, (v, j) in enumerate(self.edges[eid].ends):
                if v == vid:
                    out[j] = (eid, k)
        return out


# --------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    code: str
    path: str
    message: str

    def to_json(self) -> dict[str, str]:
        return {"code": self.code, "message": self.message, "path": self.path}


def _check_vertex(vid: str, v: VertexManifold, sole: bool) -> list[Violation]:
    out = []
    p = f"vertices.{vid}"
    if v.base_genus < 0:
        out.append(Violation("negative-genus", f"{p}.base_genus", "base genus must be >= 0"))
    if v.boundary_count < 0 or (v.boundary_count == 0 and not sole):
        out.append(
            Violation(
                "bad-boundary-count",
                f"{p}.boundary_count",
                "boundary count must be positive (zero only for a sole closed vertex)",
            )
        )
    if v.kind is VertexKind.PRODUCT and v.exceptional:
        out.append(
            Violation("product-has-exceptional", f"{p}.exceptional", "product vertices carry no exceptional fibers")
        )
    if v.kind is VertexKind.PRODUCT and v.boundary_count == 0:
        out.append(Violation("product-closed-base", f"{p}.boundary_count", "product vertex needs a bounded surface"))
    for i, inv in enumerate(v.exceptional):
        q = f"{p}.exceptional[{i}]"
        if inv.alpha < 2:
            out.append(Violation("seifert-alpha-too-small", q, f"alpha={inv.alpha} < 2"))
        elif not 0 < inv.beta < inv.alpha:
            out.append(Violation("seifert-not-normalized", q, f"need 0 < beta < alpha, got {inv.beta}/{inv.alpha}"))
        elif math.gcd(inv.alpha, inv.beta) != 1:
            out.append(Violation("seifert-not-coprime", q, f"gcd({inv.alpha}, {inv.beta}) != 1"))
    for j in sorted(v.exterior):
        if not 0 <= j < v.boundary_count:
            out.append(Violation("exterior-out-of-range", f"{p}.exterior", f"boundary {j} does not exist"))
    return out


def validate(spec: GraphManifoldSpec) -> list[Violation]:
    """Return every violated invariant of ``spec``; an empty list means valid."""
    out: list[Violation] = []
    sole = len(spec.vertices) == 1 and not spec.edges
    if not spec.vertices:
        out.append(Violation("empty", "vertices", "spec has no vertices"))
        return out
    for vid in sorted(spec.vertices):
        out.extend(_check_vertex(vid, spec.vertices[vid], sole))

    used: dict[tuple[str, int], str] = {}
    for eid in sorted(spec.edges):
        e = spec.edges[eid]
        p = f"edges.{eid}"
        for k, g in enumerate(e.gluings):
            if g.det not in (1, -1):
                out.append(Violation("gluing-not-unimodular", f"{p}.gluings[{k}]", f"determinant {g.det}"))
        for k, (vid, j) in enumerate(e.ends):
            q = f"{p}.ends[{k}]"
            v = spec.vertices.get(vid)
            if v is None:
                out.append(Violation("unknown-vertex", q, f"no vertex {vid!r}"))
                continue
            if not 0 <= j < v.boundary_count:
                out.append(Violation("boundary-index-out-of-range", q, f"{vid} has no boundary {j}"))
                continue
            if j in v.exterior:
                out.append(Violation("endpoint-on-exterior", q, f"boundary {j} of {vid} is exterior"))
            if (vid, j) in used:
                out.append(Violation("boundary-reused", q, f"boundary {j} of {vid} already used by {used[(vid, j)]}"))
            used[(vid, j)] = eid
            if e.kind is EdgeKind.ANNULUS and v.kind is not VertexKind.PRODUCT:
                out.append(
                    Violation("annulus-edge-on-seifert", q, "annulus edges attach to product vertices only")
                )
    for vid in sorted(spec.vertices):
        v = spec.vertices[vid]
        for j in v.interior_boundaries():
            if (vid, j) not in used:
                out.append(
                    Violation(
                        "boundary-unmatched",
                        f"vertices.{vid}",
                        f"boundary {j} is neither exterior nor attached to an edge",
                    )
                )
    if _components(spec) > 1:
        out.append(Violation("disconnected", "edges", "underlying multigraph is disconnected"))
    return out


def _components(spec: GraphManifoldSpec) -> int:
    parent = {v: v for v in spec.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in spec.edges.values():
        a, b = e.ends[0][0], e.ends[1][0]
        if a in parent and b in parent:
            parent[find(a)] = find(b)
    return len({find(v) for v in spec.vertices})


def require_valid(spec: GraphManifoldSpec) -> None:
    report = validate(spec)
    if report:
        raise GMSplitError(report[0].code, f"{report[0].path}: {report[0].message}")


# --------------------------------------------------------------------------
# Euler characteristics


def euler_char_base(v: VertexManifold) -> int:
    """Euler characteristic of the underlying surface of the base orbifold."""
    return 2 - 2 * v.base_genus - v.boundary_count


def orbifold_euler_char(v: VertexManifold) -> Fraction:
    if not v.is_seifert:
        raise GMSplitError("not-seifert", "orbifold Euler characteristic needs a Seifert vertex")
    return euler_char_base(v) - sum((1 - Fraction(1, inv.alpha) for inv in v.exceptional), Fraction(0))


# --------------------------------------------------------------------------
# JSON documents


def vertex_to_json(v: VertexManifold) -> dict[str, Any]:
    return {
        "base_genus": v.base_genus,
        "boundary_count": v.boundary_count,
        "exceptional": [[i.alpha, i.beta] for i in v.exceptional],
        "exterior": sorted(v.exterior),
        "kind": v.kind.value,
    }


def spec_to_json(spec: GraphManifoldSpec) -> dict[str, Any]:
    return {
        "edges": {
            eid: {
                "ends": [[vid, j] for vid, j in e.ends],
                "gluings": [[list(r) for r in g.matrix] for g in e.gluings],
                "kind": e.kind.value,
            }
            for eid, e in spec.edges.items()
        },
        "format": FORMAT,
        "name": spec.name,
        "vertices": {vid: vertex_to_json(v) for vid, v in spec.vertices.items()},
    }


def dumps(spec: GraphManifoldSpec) -> str:
    """Canonical form: sorted keys, no insignificant whitespace."""
    return json.dumps(spec_to_json(spec), sort_keys=True, separators=(",", ":"))


def _int(x, path):
    if isinstance(x, bool) or not isinstance(x, int):
        raise GMSplitError("parse-error", f"{path}: expected integer, got {x!r}")
    return x


def _matrix(m, path) -> GluingMap:
    if not (isinstance(m, list) and len(m) == 2 and all(isinstance(r, list) and len(r) == 2 for r in m)):
        raise GMSplitError("parse-error", f"{path}: expected [[a,b],[c,d]]")
    return GluingMap(tuple(tuple(_int(x, path) for x in r) for r in m))


def from_json(doc: Any) -> GraphManifoldSpec:
    """Build a spec from a decoded ``gm-spec/1`` document.

    Structural problems (missing fields, wrong types, unknown format) raise
    :class:`GMSplitError` with code ``parse-error`` or ``unknown-format``;
    semantic problems are left for :func:`validate`.
    """
    if not isinstance(doc, dict):
        raise GMSplitError("parse-error", "document must be a JSON object")
    if doc.get("format") != FORMAT:
        raise GMSplitError("unknown-format", f"expected format {FORMAT!r}, got {doc.get('format')!r}")
    try:
        vertices = {}
        for vid, v in doc["vertices"].items():
            p = f"vertices.{vid}"
            vertices[vid] = VertexManifold(
                VertexKind(v.get("kind", "seifert")),
                _int(v["base_genus"], p),
                _int(v["boundary_count"], p),
                tuple(SeifertInvariant(_int(a, p), _int(b, p)) for a, b in v.get("exceptional", [])),
                frozenset(_int(j, p) for j in v.get("exterior", [])),
            )
        edges = {}
        for eid, e in doc.get("edges", {}).items():
            p = f"edges.{eid}"
            (v0, j0), (v1, j1) = e["ends"]
            gl = e.get("gluings", [[[1, 0], [0, 1]], [[1, 0], [0, 1]]])
            if len(gl) != 2:
                raise GMSplitError("parse-error", f"{p}.gluings: need exactly two matrices")
            edges[eid] = EdgeManifold(
                EdgeKind(e.get("kind", "torus")),
                ((str(v0), _int(j0, p)), (str(v1), _int(j1, p))),
                (_matrix(gl[0], p), _matrix(gl[1], p)),
            )
    except GMSplitError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise GMSplitError("parse-error", f"malformed document: {exc!r}") from exc
    return GraphManifoldSpec(vertices, edges, str(doc.get("name", "")))


def loads(text: str) -> GraphManifoldSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GMSplitError("parse-error", str(exc)) from exc
    return from_json(doc)
