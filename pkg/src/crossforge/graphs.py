"""K_m x P_n and K_m x C_n with their layer decompositions.

Vertices are pairs (i, j): copy i of K_m in column j.  Layer j holds exactly
the edges joining column j to column j+1 (mod n for cycles), each stored as
the ordered pair ((i1, j), (i2, j+1)) with the lower column first; for the
cycle's wrap layer this normalizes to (n-1 -> 0).
"""
from __future__ import annotations

from dataclasses import dataclass

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]

PATH = "path"
CYCLE = "cycle"


@dataclass(frozen=True)
class LayeredGraph:
    family: str
    m: int
    n: int
    layers: tuple[frozenset[Edge], ...]

    @property
    def vertices(self) -> list[Vertex]:
        return [(i, j) for j in range(self.n) for i in range(self.m)]

    @property
    def edges(self) -> frozenset[Edge]:
        out: set[Edge] = set()
        for layer in self.layers:
            out |= layer
        return frozenset(out)

    def degree(self, v: Vertex) -> int:
        return sum(1 for layer in self.layers for e in layer if v in e)


def _layer(m: int, j: int, j2: int) -> frozenset[Edge]:
    return frozenset(((i1, j), (i2, j2))
                     for i1 in range(m) for i2 in range(m) if i1 != i2)


def build_kronecker_path(m: int, n: int) -> LayeredGraph:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if n < 2:
        raise ValueError(f"paths need n >= 2, got {n}")
    layers = tuple(_layer(m, j, j + 1) for j in range(n - 1))
    return LayeredGraph(family=PATH, m=m, n=n, layers=layers)


def build_kronecker_cycle(m: int, n: int) -> LayeredGraph:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if n < 3:
        # n = 2 would collapse layers 0 and 1 onto the same vertex pairs
        raise ValueError(f"cycles need n >= 3, got {n}")
    layers = tuple(_layer(m, j, (j + 1) % n) for j in range(n))
    return LayeredGraph(family=CYCLE, m=m, n=n, layers=layers)


def layer_edges(g: LayeredGraph, j: int) -> frozenset[Edge]:
    if not 0 <= j < len(g.layers):
        raise IndexError(f"layer {j} out of range (graph has {len(g.layers)})")
    return g.layers[j]


@dataclass(frozen=True)
class StructureReport:
    ok: bool
    witness: str = ""

    def __bool__(self) -> bool:
        return self.ok


def layer_structure_check(g: LayeredGraph, j: int, span: str) -> StructureReport:
    """Compare a layer against its expected bipartite structure.

    span="single": E^j induces K_{m,m} minus a perfect matching (the missing
    pairs are exactly i1 == i2).  span="adjacent": E^j union E^{j+1} induces
    K_{m,2m} minus m two-edge stars centered in the middle column.  Both are
    canonical-construction comparisons, not isomorphism tests.
    """
    if span not in ("single", "adjacent"):
        raise ValueError(f"span must be 'single' or 'adjacent', got {span!r}")
    if span == "single":
        if not 0 <= j < len(g.layers):
            raise IndexError(f"layer {j} out of range")
        j2 = (j + 1) % g.n
        actual = g.layers[j]
        expected = _layer(g.m, j, j2)
        extra = actual - expected
        missing = expected - actual
        if extra:
            # catches corruption such as a re-added matching edge
            return StructureReport(False, f"unexpected edge {sorted(extra)[0]}")
        if missing:
            return StructureReport(False, f"missing edge {sorted(missing)[0]}")
        return StructureReport(True)
    if g.family == PATH and j + 1 >= len(g.layers):
        raise IndexError(f"adjacent span needs layer {j + 1} in range")
    jm = (j + 1) % g.n
    jr = (j + 2) % g.n
    actual = set(g.layers[j]) | set(g.layers[(j + 1) % len(g.layers)])
    # middle column jm vs outer columns j and jr; missing edges are the m
    # stars {(i,j)-(i,jm), (i,jm)-(i,jr)}
    expected: set[Edge] = set(_layer(g.m, j, jm)) | set(_layer(g.m, jm, jr))
    extra = actual - expected
    missing = expected - actual
    if extra:
        return StructureReport(False, f"unexpected edge {sorted(extra)[0]}")
    if missing:
        return StructureReport(False, f"missing edge {sorted(missing)[0]}")
    for i in range(g.m):
        mid = (i, jm)
        deg = sum(1 for e in actual if mid in e)
        if deg != 2 * (g.m - 1):
            return StructureReport(False, f"middle vertex {mid} has degree {deg}")
    return StructureReport(True)


def to_edge_lines(g: LayeredGraph) -> str:
    """Line-oriented dump: one edge per line as 'i1 j1 i2 j2'."""
    lines = []
    for layer in g.layers:
        for (i1, j1), (i2, j2) in sorted(layer):
            lines.append(f"{i1} {j1} {i2} {j2}")
    return "\n".join(lines) + "\n"
