"""Local cell structure shared by vertex pieces and edge patterns.

Every piece of a candidate splitting surface is described, inside its own
vertex or edge manifold, by:

* its surface components and their Euler characteristics,
* the complementary regions, each with a local side (0 or 1) such that the
  two sides of every surface component carry different sides,
* for each boundary component it meets, the cyclic (torus) or linear
  (annulus) sequence of boundary curves, each labelled by its surface
  component, and of the strips between them, each labelled by its region.

For ``k`` curves on a torus there are ``k`` strips (strip ``t`` follows
curve ``t``); on an annulus there are ``k + 1`` strips (strip ``0`` precedes
curve ``0``).  A boundary the surface misses has a single strip and no
curves.  Assembly glues these local models along edge ends.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GMSplitError


class UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # deterministic representative: the smaller key
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra
        return ra

    def classes(self) -> dict:
        out: dict = {}
        for x in sorted(self.parent):
            out.setdefault(self.find(x), []).append(x)
        return out


class ParityUnionFind:
    """Union-find tracking the parity of each element relative to its root."""

    def __init__(self):
        self.parent: dict = {}
        self.parity: dict = {}

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.parity[x] = 0
            return x, 0
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root, acc = x, 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parent[node] = root
        return root, (self.parity[path[0]] if path else 0)

    def relate(self, a, b, diff: int) -> bool:
        """Require side(a) XOR side(b) == diff; return False on contradiction."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == diff
        if rb < ra:
            ra, rb, pa, pb = rb, ra, pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ diff
        return True

    def side(self, x) -> int:
        root, p = self.find(x)
        return p


@dataclass(frozen=True)
class LocalModel:
    comp_chi: tuple[int, ...]
    region_side: tuple[int, ...]
    # boundary key -> component of each curve, in order
    curves: dict = field(default_factory=dict)
    # boundary key -> region of each strip, in order
    strips: dict = field(default_factory=dict)
    # boundary key -> True if the boundary is an annulus (linear order)
    linear: dict = field(default_factory=dict)
    # (component, region) pairs: region adjacent to component, one per side
    comp_sides: tuple[tuple[int, int], ...] = ()
    # boundary key -> (component, near region, far region) for a torus
    # parallel to that boundary; near is the side facing the boundary
    parallel_tori: dict = field(default_factory=dict)

    @property
    def chi(self) -> int:
        return sum(self.comp_chi)

    def check(self) -> None:
        """Structural self-consistency; raises on violation."""
        nc, nr = len(self.comp_chi), len(self.region_side)
        for key, cs in self.curves.items():
            ss = self.strips[key]
            want = len(cs) + 1 if self.linear.get(key) else max(len(cs), 1)
            if len(ss) != want:
                raise GMSplitError("bad-local-model", f"boundary {key}: {len(cs)} curves, {len(ss)} strips")
            if any(not 0 <= c < nc for c in cs) or any(not 0 <= r < nr for r in ss):
                raise GMSplitError("bad-local-model", f"boundary {key}: index out of range")
            n = len(cs)
            for t in range(n):
                before = ss[t - 1] if not self.linear.get(key) else ss[t]
                after = ss[t] if not self.linear.get(key) else ss[t + 1]
                if self.region_side[before] == self.region_side[after]:
                    raise GMSplitError("not-separating", f"boundary {key}: curve {t} has one side on both sides")
        for c, (r0, r1) in enumerate(self.comp_sides):
            if self.region_side[r0] == self.region_side[r1]:
                raise GMSplitError("not-separating", f"component {c} does not separate locally")

