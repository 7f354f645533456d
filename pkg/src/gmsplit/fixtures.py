"""Small named manifolds used by tests, the acceptance suite and the CLI docs."""

from __future__ import annotations

from .model import IDENTITY, SWAP, EdgeKind, EdgeManifold, GluingMap, GraphManifoldSpec, seifert

QUARTER_TURN = GluingMap(((0, -1), (1, 0)))


def disk_two_fibers() -> GraphManifoldSpec:
    """Disk base, two order-2 exceptional fibers, boundary exterior."""
    return GraphManifoldSpec({"m": seifert(0, 1, [(2, 1), (2, 1)], exterior=[0])}, {}, "disk(2,2)")


def solid_torus() -> GraphManifoldSpec:
    return GraphManifoldSpec({"m": seifert(0, 1, exterior=[0])}, {}, "solid-torus")


def doubled_disk_two_fibers() -> GraphManifoldSpec:
    """Two copies of :func:`disk_two_fibers` glued along their boundary tori."""
    v = seifert(0, 1, [(2, 1), (2, 1)])
    edge = EdgeManifold(EdgeKind.TORUS, (("m1", 0), ("m2", 0)), (IDENTITY, QUARTER_TURN))
    return GraphManifoldSpec({"m1": v, "m2": v}, {"t": edge}, "double-disk(2,2)")


def pants_loop() -> GraphManifoldSpec:
    """Pants x S^1 with boundaries 1 and 2 glued, fiber to section; boundary 0 exterior."""
    edge = EdgeManifold(EdgeKind.TORUS, (("p", 1), ("p", 2)), (IDENTITY, SWAP))
    return GraphManifoldSpec({"p": seifert(0, 3, exterior=[0])}, {"t": edge}, "pants-loop")


def sphere_four_fibers(l: int = 1) -> GraphManifoldSpec:
    """Closed, base S^2, invariants 1/2, 1/2, 1/2, l/(2l+1)."""
    v = seifert(0, 0, [(2, 1), (2, 1), (2, 1), (2 * l + 1, l)])
    return GraphManifoldSpec({"n": v}, {}, f"sphere(2,2,2,{2 * l + 1})")


def punctured_torus_pair() -> GraphManifoldSpec:
    """Two once-punctured-torus x S^1 glued so the boundary curves meet once."""
    v = seifert(1, 1)
    edge = EdgeManifold(EdgeKind.TORUS, (("m1", 0), ("m2", 0)), (IDENTITY, SWAP))
    return GraphManifoldSpec({"m1": v, "m2": v}, {"t": edge}, "punctured-torus-pair")


def torus_times_circle(g: int = 1) -> GraphManifoldSpec:
    return GraphManifoldSpec({"q": seifert(g, 0)}, {}, f"surface{g}xS1")


ALL = {
    "disk-two-fibers": disk_two_fibers,
    "solid-torus": solid_torus,
    "doubled-disk-two-fibers": doubled_disk_two_fibers,
    "pants-loop": pants_loop,
    "sphere-four-fibers": sphere_four_fibers,
    "punctured-torus-pair": punctured_torus_pair,
}
