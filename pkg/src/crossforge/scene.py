"""Explicit drawings on a cylinder and the purely geometric crossing count.

Scenes live on an integer lattice in the universal cover: x is the angular
coordinate with integer period, y the height (ring or column index).  Curves
are straight lifted segments (helices or meridian drops) plus cap routes:
a chord across the top or bottom disk followed by a meridian drop.  The
counter is independent of every counting formula in the package: segments
are intersected pairwise over all angular shifts with exact integer
predicates, chords by strict rim interleaving; pairs sharing a graph vertex
never count and overlapping tangencies are hard errors.

Cap crossing rules: (a) two cap routes cross iff their rim chords strictly
interleave; (b) a meridian drop crosses a helix iff its angle lies strictly
inside the helix's swept interval (this is the segment rule applied to a
vertical segment); (c) drops at distinct angles never cross, and drops
sharing their vertex meet only there.  The m = 5 end-layer search hitting
exactly 15 is the fidelity gate for these rules.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from crossforge import kernels
from crossforge.conformance import DEFAULT, Readings
from crossforge.graphs import CYCLE, PATH, Edge, Vertex
from crossforge.layercount import helix_pair_crossings, winding
from crossforge.schedules import ScheduleAssignment, schedule_for

LATERAL = "lateral"
CAP = "cap"


@dataclass(frozen=True)
class Lateral:
    x0: int
    y0: int
    x1: int
    y1: int


@dataclass(frozen=True)
class CapChord:
    disk: str  # "top" | "bottom"
    a: int     # rim angles, x units
    b: int


@dataclass(frozen=True)
class CapDrop:
    disk: str
    x: int
    y0: int
    y1: int


@dataclass(frozen=True)
class SceneEdge:
    u: Vertex
    v: Vertex
    pieces: tuple


@dataclass(frozen=True)
class CylinderScene:
    family: str
    m: int
    n: int
    period: int
    vertices: dict[Vertex, tuple[int, int]]
    edges: tuple[SceneEdge, ...]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        seen = {}
        for v, pos in self.vertices.items():
            key = (pos[0] % self.period, pos[1])
            if key in seen:
                raise ValueError(f"vertices {seen[key]} and {v} coincide at {key}")
            seen[key] = v


def _strict_interleave(a: int, b: int, c: int, d: int, period: int) -> bool:
    """Chords {a,b}, {c,d} on a rim of the given circumference."""
    a, b, c, d = a % period, b % period, c % period, d % period
    if c in (a, b) or d in (a, b):
        return False
    span = (b - a) % period
    cin = 0 < (c - a) % period < span
    din = 0 < (d - a) % period < span
    return cin != din


def count_scene_crossings(scene: CylinderScene) -> int:
    """Exact pairwise crossing count; raises on tangent/overlapping curves."""
    vid = {v: k for k, v in enumerate(sorted(scene.vertices))}
    segments = []
    chords = []
    for e in scene.edges:
        a, b = vid[e.u], vid[e.v]
        for p in e.pieces:
            if isinstance(p, Lateral):
                segments.append((p.x0, p.y0, p.x1, p.y1, a, b))
            elif isinstance(p, CapDrop):
                segments.append((p.x, p.y0, p.x, p.y1, a, b))
            elif isinstance(p, CapChord):
                chords.append((p, a, b))
    total = kernels.segment_crossings(segments, scene.period)
    for i in range(len(chords)):
        ci, ai, bi = chords[i]
        for j in range(i + 1, len(chords)):
            cj, aj, bj = chords[j]
            if ci.disk != cj.disk:
                continue
            if ai in (aj, bj) or bi in (aj, bj):
                continue
            if _strict_interleave(ci.a, ci.b, cj.a, cj.b, scene.period):
                total += 1
    return total


# ---------------------------------------------------------------------------
# cycle drawings

def realize_cycle_drawing(m: int, n: int,
                          readings: Readings = DEFAULT) -> CylinderScene:
    """Columns at angles j, ring contents propagated by the schedule.

    Column 0 holds the identity arrangement; column j holds the arrangement
    forced by i_{j-1,t} = i_{j,f^j(t)}.  Sector j joins columns j and j+1;
    the wrap sector uses whatever arrangement the propagation produced, so a
    schedule that fails to close up simply yields a different count (recorded
    in meta["closure"]) rather than an invalid scene.
    """
    if m < 4:
        raise ValueError(f"the schedule-driven drawing needs m >= 4, got {m}")
    sched = schedule_for(m, n, "cycle", readings)
    cols = [list(range(m))]
    for j in range(1, n):
        finv = sched.per_layer[j].inverse()
        prev = cols[-1]
        cols.append([prev[finv(t)] for t in range(m)])
    closure = cols[-1] == list(sched.per_layer[0].values)
    pos = [{v: t for t, v in enumerate(col)} for col in cols]
    vertices = {(i, j): (j, pos[j][i]) for j in range(n) for i in range(m)}
    edges = []
    for j in range(n):
        j2 = (j + 1) % n
        for i1 in range(m):
            for i2 in range(m):
                if i1 == i2:
                    continue
                seg = Lateral(x0=j, y0=pos[j][i1], x1=j + 1, y1=pos[j2][i2])
                edges.append(SceneEdge(u=(i1, j), v=(i2, j2), pieces=(seg,)))
    return CylinderScene(family=CYCLE, m=m, n=n, period=n,
                         vertices=vertices, edges=tuple(edges),
                         meta={"schedule": list(sched.family_indices),
                               "closure": closure})


# ---------------------------------------------------------------------------
# end-layer cap routing

def _drop_crosses_helix(theta: int, a: int, d: int, m: int) -> int:
    """Rule (b): the drop's angle strictly inside the helix sweep."""
    if d > 0:
        return 1 if 0 < (theta - a) % m < d else 0
    return 1 if 0 < (a - theta) % m < -d else 0


def _pair_cost(e1: tuple[int, int], e2: tuple[int, int], r1: str, r2: str,
               m: int, end: str, rule: str) -> int:
    """Crossings between two end-layer edges under the given routes."""
    (a1, b1), (a2, b2) = e1, e2
    if a1 == a2 or b1 == b2:
        return 0
    d1, d2 = winding(a1, b1, m, rule), winding(a2, b2, m, rule)
    if r1 == LATERAL and r2 == LATERAL:
        return helix_pair_crossings(a1, d1, a2, d2, m)
    if r1 == CAP and r2 == CAP:
        return 1 if _strict_interleave(a1, b1, a2, b2, m) else 0
    if r1 == CAP:
        (ac, bc), (al, dl) = e1, (a2, d2)
    else:
        (ac, bc), (al, dl) = e2, (a1, d1)
    theta = bc if end == "top" else ac
    return _drop_crosses_helix(theta, al, dl, m)


@dataclass(frozen=True)
class CapSearchResult:
    m: int
    end: str
    count: int
    assignment: dict[tuple[int, int], str]
    method: str

    def capped(self) -> list[tuple[int, int]]:
        return sorted(e for e, r in self.assignment.items() if r == CAP)


def _qubo_terms(m: int, end: str, rule: str):
    edges = [(a, b) for a in range(m) for b in range(m) if a != b]
    nb = len(edges)
    const = 0
    lin = [0] * nb
    quad = [[0] * nb for _ in range(nb)]
    for i in range(nb):
        for j in range(i + 1, nb):
            cll = _pair_cost(edges[i], edges[j], LATERAL, LATERAL, m, end, rule)
            ccl = _pair_cost(edges[i], edges[j], CAP, LATERAL, m, end, rule)
            clc = _pair_cost(edges[i], edges[j], LATERAL, CAP, m, end, rule)
            ccc = _pair_cost(edges[i], edges[j], CAP, CAP, m, end, rule)
            const += cll
            lin[i] += ccl - cll
            lin[j] += clc - cll
            q = ccc - ccl - clc + cll
            quad[i][j] += q
            quad[j][i] += q
    return edges, const, lin, quad


def _mask_cost(mask: int, const: int, lin: list[int], quad: list[list[int]]) -> int:
    bits = [i for i in range(len(lin)) if (mask >> i) & 1]
    total = const + sum(lin[i] for i in bits)
    for ai in range(len(bits)):
        row = quad[bits[ai]]
        for bi in range(ai + 1, len(bits)):
            total += row[bits[bi]]
    return total


def cap_route_search(m: int, end: str = "top", readings: Readings = DEFAULT,
                     exhaustive_bit_limit: int = 20) -> CapSearchResult:
    """Minimize the end-layer crossing count over lateral-vs-cap choices.

    Exhaustive (gray-code QUBO sweep) while m(m-1) fits the bit limit;
    beyond that, a warm start over rotation-symmetric winding-class patterns
    followed by greedy single-flip descent.  Fully deterministic.
    """
    if m < 4:
        raise ValueError(f"cap routing applies to end layers with m >= 4, got {m}")
    if end not in ("top", "bottom"):
        raise ValueError(f"end must be 'top' or 'bottom', got {end!r}")
    rule = readings.path_winding
    edges, const, lin, quad = _qubo_terms(m, end, rule)
    nb = len(edges)
    if nb <= exhaustive_bit_limit:
        best, mask = kernels.qubo_min(nb, const, lin, quad)
        method = "exhaustive"
    else:
        best, mask = None, 0
        for pattern in range(1 << (m - 1)):
            cand = 0
            for i, (a, b) in enumerate(edges):
                if (pattern >> (((b - a) % m) - 1)) & 1:
                    cand |= 1 << i
            cost = _mask_cost(cand, const, lin, quad)
            if best is None or cost < best:
                best, mask = cost, cand
        improved = True
        while improved:
            improved = False
            for i in range(nb):
                cand = mask ^ (1 << i)
                cost = _mask_cost(cand, const, lin, quad)
                if cost < best:
                    best, mask = cost, cand
                    improved = True
        method = "class_descent"
    assignment = {e: (CAP if (mask >> i) & 1 else LATERAL)
                  for i, e in enumerate(edges)}
    return CapSearchResult(m=m, end=end, count=best, assignment=assignment,
                           method=method)


# ---------------------------------------------------------------------------
# path drawings

def realize_path_drawing(m: int, n: int,
                         readings: Readings = DEFAULT) -> CylinderScene:
    """Rings stacked at heights 0..n-1, identity layout, helical interiors,
    cap-routed end layers.  For m <= 3 the explicit planar witness is used."""
    if n < 4 and m >= 4:
        raise ValueError(f"the path drawing is built for n >= 4, got {n}")
    if m <= 3:
        return planar_small_cases(m, PATH, n)
    rule = readings.path_winding
    top = cap_route_search(m, "top", readings)
    bottom = cap_route_search(m, "bottom", readings)
    vertices = {(i, j): (i, j) for j in range(n) for i in range(m)}
    edges = []
    for j in range(n - 1):
        for a in range(m):
            for b in range(m):
                if a == b:
                    continue
                u, v = (a, j), (b, j + 1)
                if j == 0 and top.assignment[(a, b)] == CAP:
                    pieces = (CapChord("top", a, b), CapDrop("top", b, 0, 1))
                elif j == n - 2 and bottom.assignment[(a, b)] == CAP:
                    pieces = (CapDrop("bottom", a, n - 2, n - 1),
                              CapChord("bottom", a, b))
                else:
                    pieces = (Lateral(a, j, a + winding(a, b, m, rule), j + 1),)
                edges.append(SceneEdge(u=u, v=v, pieces=pieces))
    return CylinderScene(family=PATH, m=m, n=n, period=m,
                         vertices=vertices, edges=tuple(edges),
                         meta={"end_layer_count": top.count,
                               "bottom_end_layer_count": bottom.count,
                               "cap_method": top.method})


# ---------------------------------------------------------------------------
# planar small cases

def _components(m: int, n: int, family: str) -> list[list[Vertex]]:
    """Connected components of the degree <= 2 products, each a traversal
    order (path endpoints first, cycles in cyclic order)."""
    wrap = family == CYCLE
    adj: dict[Vertex, list[Vertex]] = {(i, j): [] for j in range(n) for i in range(m)}
    cols = n if wrap else n - 1
    for j in range(cols):
        j2 = (j + 1) % n
        for i1 in range(m):
            for i2 in range(m):
                if i1 != i2:
                    adj[(i1, j)].append((i2, j2))
                    adj[(i2, j2)].append((i1, j))
    seen: set[Vertex] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        if not adj[start]:
            seen.add(start)
            comps.append([start])
            continue
        # walk to an endpoint if there is one, else it is a cycle
        v0 = start
        prev = None
        steps = 0
        while True:
            nxt = [w for w in adj[v0] if w != prev]
            if len(adj[v0]) == 1 or not nxt:
                break
            prev, v0 = v0, nxt[0]
            steps += 1
            if v0 == start:
                break
            if steps > 2 * m * n:
                raise AssertionError("component walk did not terminate")
        order = [v0]
        seen.add(v0)
        prev = None
        cur = v0
        while True:
            nxt = [w for w in adj[cur] if w != prev and w not in seen]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
            seen.add(cur)
        comps.append(order)
    return comps


def planar_small_cases(m: int, family: str, n: int) -> CylinderScene:
    """Constructive zero-crossing witnesses: m <= 3 paths, m <= 2 cycles."""
    if family == PATH:
        if m > 3:
            raise ValueError(f"planar path witnesses cover m <= 3, got {m}")
        if n < 2:
            raise ValueError(f"paths need n >= 2, got {n}")
    elif family == CYCLE:
        if m > 2:
            raise ValueError(f"planar cycle witnesses cover m <= 2, got {m}")
        if n < 3:
            raise ValueError(f"cycles need n >= 3, got {n}")
    else:
        raise ValueError(f"family must be 'path' or 'cycle', got {family!r}")

    if family == PATH and m == 3:
        # chain of nested zigzag hexagons: ring j rotated half a step
        period = 6
        vertices = {(i, j): (((3 - i) % 3) * 2 + 3 * (j % 2), j)
                    for j in range(n) for i in range(3)}
        edges = []
        for j in range(n - 1):
            for i1 in range(3):
                for i2 in range(3):
                    if i1 == i2:
                        continue
                    x0 = vertices[(i1, j)][0]
                    x1 = vertices[(i2, j + 1)][0]
                    delta = (x1 - x0 + 3) % 6 - 3
                    edges.append(SceneEdge(u=(i1, j), v=(i2, j + 1),
                                           pieces=(Lateral(x0, j, x0 + delta, j + 1),)))
        return CylinderScene(family=PATH, m=3, n=n, period=period,
                             vertices=vertices, edges=tuple(edges),
                             meta={"witness": "nested-hexagon chain"})

    # degree <= 2: each component is laid flat on its own ring
    comps = _components(m, n, family)
    period = 1
    for comp in comps:
        L = len(comp)
        if L >= 3 and family == CYCLE and m == 2:
            period = period * L // _gcd(period, L)
    period = max(period, max((len(c) for c in comps), default=1), 3)
    vertices = {}
    edges = []
    for c, comp in enumerate(comps):
        L = len(comp)
        closed = family == CYCLE and L >= 3
        step = period // L if closed else 1
        for k, v in enumerate(comp):
            vertices[v] = (k * step, c)
        for k in range(L - 1 if not closed else L):
            u, v = comp[k], comp[(k + 1) % L]
            edges.append(SceneEdge(u=u, v=v,
                                   pieces=(Lateral(k * step, c, (k + 1) * step, c),)))
    return CylinderScene(family=family, m=m, n=n, period=period,
                         vertices=vertices, edges=tuple(edges),
                         meta={"witness": "component rings"})


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# serialization

def scene_to_json(scene: CylinderScene, crossings: int | None = None) -> str:
    def piece(p):
        if isinstance(p, Lateral):
            return {"kind": "lateral", "x0": p.x0, "y0": p.y0,
                    "x1": p.x1, "y1": p.y1}
        if isinstance(p, CapDrop):
            return {"kind": "drop", "disk": p.disk, "x": p.x,
                    "y0": p.y0, "y1": p.y1}
        return {"kind": "chord", "disk": p.disk, "a": p.a, "b": p.b}

    payload = {
        "schema": 1,
        "family": scene.family,
        "m": scene.m,
        "n": scene.n,
        "period": scene.period,
        "vertices": [{"i": v[0], "j": v[1], "x": x, "y": y}
                     for v, (x, y) in sorted(scene.vertices.items())],
        "edges": [{"u": list(e.u), "v": list(e.v),
                   "pieces": [piece(p) for p in e.pieces]}
                  for e in scene.edges],
        "crossings": count_scene_crossings(scene) if crossings is None else crossings,
        "meta": {k: v for k, v in sorted(scene.meta.items())},
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
