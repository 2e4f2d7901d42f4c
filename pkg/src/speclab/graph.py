"""Weighted undirected graphs, exact cut arithmetic, and family generators.

Vertices are 0-indexed internally; the JSON interchange format and all
user-facing listings are 1-based. Edge weights are positive integers and a
self-loop of weight w contributes w (once) to the degree of its vertex, so
that degree(i) equals the i-th row sum of the weighted adjacency matrix.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (ConnectivityError, DomainError, SchemaError, SizeError,
                     UnsupportedError)

SUBSET_CAPACITY = 64
EXHAUSTIVE_CAP = 24


@dataclass(frozen=True)
class Graph:
    """Immutable weighted undirected graph with optional self-loops.

    ``edges`` entries are ``(u, v, w)`` with ``u < v``; 2-tuples are accepted
    at construction and normalized to weight 1. ``mirror``, when present, is
    an order-2 automorphism supplied by the generator (antenna swap for the
    two-row families, reversal for paths).
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]
    loops: tuple[tuple[int, int], ...] = ()
    name: str = ""
    mirror: tuple[int, ...] | None = None
    degrees: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"graph needs at least one vertex, got n={self.n}")
        norm = []
        seen = set()
        for e in self.edges:
            if len(e) == 2:
                u, v, w = e[0], e[1], 1
            else:
                u, v, w = e
            if u == v:
                raise DomainError(f"edge ({u},{v}) is a loop; use the loops field")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge ({u},{v}) out of range for n={self.n}")
            if not (isinstance(w, int) and w > 0):
                raise DomainError(f"edge weight {w!r} is not a positive integer")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise DomainError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            norm.append((u, v, w))
        loops = []
        seen_loops = set()
        for entry in self.loops:
            v, w = entry
            if not (0 <= v < self.n):
                raise DomainError(f"loop vertex {v} out of range for n={self.n}")
            if not (isinstance(w, int) and w > 0):
                raise DomainError(f"loop weight {w!r} is not a positive integer")
            if v in seen_loops:
                raise DomainError(f"duplicate loop on vertex {v}")
            seen_loops.add(v)
            loops.append((v, w))
        if self.mirror is not None and sorted(self.mirror) != list(range(self.n)):
            raise DomainError("mirror is not a permutation of the vertices")
        deg = [0] * self.n
        for u, v, w in norm:
            deg[u] += w
            deg[v] += w
        for v, w in loops:
            deg[v] += w
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "loops", tuple(loops))
        object.__setattr__(self, "degrees", tuple(deg))

    @property
    def volume(self) -> int:
        return sum(self.degrees)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> list[int]:
        out = [b if a == v else a for a, b, _w in self.edges if v in (a, b)]
        return sorted(out)

    def adjacency_rows(self) -> list[dict[int, int]]:
        """Weighted adjacency as one dict per vertex (loops on the diagonal)."""
        rows = [dict() for _ in range(self.n)]
        for u, v, w in self.edges:
            rows[u][v] = w
            rows[v][u] = w
        for v, w in self.loops:
            rows[v][v] = w
        return rows


@dataclass(frozen=True)
class VertexSubset:
    """One side of a bipartition, with its exact volume and cut weight."""

    graph: Graph = field(repr=False)
    mask: int
    volume: int
    cut_weight: int

    def vertices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.graph.n) if self.mask >> i & 1)

    def size(self) -> int:
        return self.mask.bit_count()

    def complement_mask(self) -> int:
        return ((1 << self.graph.n) - 1) ^ self.mask


def vertex_subset(g: Graph, vertices: Iterable[int]) -> VertexSubset:
    """Build a subset from vertex indices, caching volume and cut weight."""
    mask = 0
    for v in vertices:
        if not (0 <= v < g.n):
            raise DomainError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return subset_from_mask(g, mask)


def subset_from_mask(g: Graph, mask: int) -> VertexSubset:
    if g.n > SUBSET_CAPACITY:
        raise SizeError(f"subset capacity is {SUBSET_CAPACITY} vertices, graph has {g.n}")
    if mask < 0 or mask >= (1 << g.n):
        raise DomainError(f"mask {mask} out of range for n={g.n}")
    vol = sum(g.degrees[i] for i in range(g.n) if mask >> i & 1)
    cutw = sum(w for u, v, w in g.edges if (mask >> u & 1) != (mask >> v & 1))
    return VertexSubset(g, mask, vol, cutw)


def _coerce_subset(g: Graph, a) -> VertexSubset:
    if isinstance(a, VertexSubset):
        if a.graph is not g:
            raise DomainError("subset was built for a different graph")
        return a
    return vertex_subset(g, a)


def cut_weight(g: Graph, a) -> int:
    """Total weight of edges between ``a`` and its complement."""
    return _coerce_subset(g, a).cut_weight


def subset_volume(g: Graph, a) -> int:
    return _coerce_subset(g, a).volume


def normalized_cut(g: Graph, a) -> Fraction:
    """cut(A, V\\A) * (1/vol(A) + 1/vol(V\\A)) as an exact rational.

    Requires a nonempty proper subset. A disconnected graph may yield 0.
    """
    s = _coerce_subset(g, a)
    if s.mask == 0 or s.mask == (1 << g.n) - 1:
        raise DomainError("normalized cut needs a nonempty proper subset")
    vol_b = g.volume - s.volume
    if s.volume == 0 or vol_b == 0:
        raise DomainError("both sides must have positive volume")
    return Fraction(s.cut_weight, s.volume) + Fraction(s.cut_weight, vol_b)


# ---------------------------------------------------------------------------
# graph families
# ---------------------------------------------------------------------------

PATH = "path"
CYCLE = "cycle"
COMPLETE = "complete"
TREE = "tree"
DOUBLE_TREE = "double_tree"
CYCLE_CROSS_PATH = "cycle_cross_path"
ROACH = "roach"
WEIGHTED_PATH = "weighted_path"
LOLLIPOP = "lollipop"

FAMILIES = (PATH, CYCLE, COMPLETE, TREE, DOUBLE_TREE, CYCLE_CROSS_PATH,
            ROACH, WEIGHTED_PATH, LOLLIPOP)


@dataclass(frozen=True)
class FamilySpec:
    """Tagged parameter record for one of the named graph families."""

    family: str
    n: int | None = None
    k: int | None = None
    m: int | None = None
    depth: int | None = None

    @classmethod
    def path(cls, n: int) -> "FamilySpec":
        return cls(PATH, n=n)

    @classmethod
    def cycle(cls, n: int) -> "FamilySpec":
        return cls(CYCLE, n=n)

    @classmethod
    def complete(cls, n: int) -> "FamilySpec":
        return cls(COMPLETE, n=n)

    @classmethod
    def tree(cls, depth: int) -> "FamilySpec":
        return cls(TREE, depth=depth)

    @classmethod
    def double_tree(cls, depth: int) -> "FamilySpec":
        return cls(DOUBLE_TREE, depth=depth)

    @classmethod
    def cycle_cross_path(cls, m: int, n: int) -> "FamilySpec":
        return cls(CYCLE_CROSS_PATH, m=m, n=n)

    @classmethod
    def roach(cls, n: int, k: int) -> "FamilySpec":
        return cls(ROACH, n=n, k=k)

    @classmethod
    def weighted_path(cls, n: int, k: int) -> "FamilySpec":
        return cls(WEIGHTED_PATH, n=n, k=k)

    @classmethod
    def lollipop(cls, n: int, m: int) -> "FamilySpec":
        return cls(LOLLIPOP, n=n, m=m)

    def validate(self) -> None:
        f = self.family
        if f == PATH:
            self._need(self.n is not None and self.n >= 1, "path needs n >= 1")
        elif f == CYCLE:
            self._need(self.n is not None and self.n >= 3, "cycle needs n >= 3")
        elif f == COMPLETE:
            self._need(self.n is not None and self.n >= 1, "complete needs n >= 1")
        elif f in (TREE, DOUBLE_TREE):
            self._need(self.depth is not None and self.depth >= 1,
                       f"{f} needs depth >= 1")
        elif f == CYCLE_CROSS_PATH:
            self._need(self.m is not None and self.m >= 3
                       and self.n is not None and self.n >= 1,
                       "cycle_cross_path needs m >= 3 and n >= 1")
        elif f == ROACH:
            self._need(self.n is not None and self.n >= 1
                       and self.k is not None and self.k >= 2,
                       "roach needs n >= 1 and k >= 2")
        elif f == WEIGHTED_PATH:
            self._need(self.n is not None and self.n >= 1
                       and self.k is not None and self.k >= 1,
                       "weighted_path needs n >= 1 and k >= 1")
        elif f == LOLLIPOP:
            self._need(self.n is not None and self.n >= 3
                       and self.m is not None and self.m >= 1,
                       "lollipop needs n >= 3 and m >= 1")
        else:
            raise DomainError(f"unknown family {f!r}")

    def _need(self, ok: bool, msg: str) -> None:
        if not ok:
            raise DomainError(f"{msg} (got {self})")

    def label(self) -> str:
        f = self.family
        if f in (PATH, CYCLE, COMPLETE):
            return f"{f}({self.n})"
        if f in (TREE, DOUBLE_TREE):
            return f"{f}({self.depth})"
        if f == CYCLE_CROSS_PATH:
            return f"{f}({self.m},{self.n})"
        if f == LOLLIPOP:
            return f"{f}({self.n},{self.m})"
        return f"{f}({self.n},{self.k})"


def _heap_tree_edges(depth: int) -> tuple[int, list[tuple[int, int, int]]]:
    t = 2 ** depth - 1
    edges = []
    for i in range(t):
        for c in (2 * i + 1, 2 * i + 2):
            if c < t:
                edges.append((i, c, 1))
    return t, edges


def generate(spec: FamilySpec) -> Graph:
    """Build the exact vertex and edge sets of the named family."""
    spec.validate()
    f, name = spec.family, spec.label()
    if f == PATH:
        n = spec.n
        return Graph(n, tuple((i, i + 1, 1) for i in range(n - 1)), name=name,
                     mirror=tuple(n - 1 - i for i in range(n)))
    if f == CYCLE:
        n = spec.n
        edges = [(i, i + 1, 1) for i in range(n - 1)] + [(0, n - 1, 1)]
        return Graph(n, tuple(edges), name=name)
    if f == COMPLETE:
        n = spec.n
        edges = [(i, j, 1) for i in range(n) for j in range(i + 1, n)]
        return Graph(n, tuple(edges), name=name)
    if f == TREE:
        t, edges = _heap_tree_edges(spec.depth)
        return Graph(t, tuple(edges), name=name)
    if f == DOUBLE_TREE:
        t, half = _heap_tree_edges(spec.depth)
        edges = half + [(t + u, t + v, w) for u, v, w in half] + [(0, t, 1)]
        mirror = tuple((i + t) % (2 * t) for i in range(2 * t))
        return Graph(2 * t, tuple(edges), name=name, mirror=mirror)
    if f == CYCLE_CROSS_PATH:
        return cartesian_product(generate(FamilySpec.cycle(spec.m)),
                                 generate(FamilySpec.path(spec.n)), name=name)
    if f == ROACH:
        n, k = spec.n, spec.k
        s = n + k
        edges = []
        for i in range(s - 1):
            edges.append((i, i + 1, 1))
            edges.append((s + i, s + i + 1, 1))
        for i in range(n, s):
            edges.append((i, s + i, 1))
        mirror = tuple((i + s) % (2 * s) for i in range(2 * s))
        return Graph(2 * s, tuple(edges), name=name, mirror=mirror)
    if f == WEIGHTED_PATH:
        n, k = spec.n, spec.k
        s = n + k
        edges = tuple((i, i + 1, 1) for i in range(s - 1))
        loops = tuple((i, 1) for i in range(n, s))
        return Graph(s, edges, loops, name=name)
    if f == LOLLIPOP:
        n, m = spec.n, spec.m
        edges = [(i, i + 1, 1) for i in range(m - 1)]
        edges += [(m + i, m + j, 1) for i in range(n) for j in range(i + 1, n)]
        edges.append((m - 1, m, 1))
        return Graph(m + n, tuple(edges), name=name)
    raise DomainError(f"unknown family {f!r}")


def cartesian_product(g: Graph, h: Graph, name: str = "") -> Graph:
    """Cartesian product; vertex (u, v) maps to index u * h.n + v."""
    if g.loops or h.loops:
        raise UnsupportedError("cartesian product is defined for loop-free graphs")
    edges = []
    for u in range(g.n):
        for a, b, w in h.edges:
            edges.append((u * h.n + a, u * h.n + b, w))
    for a, b, w in g.edges:
        for v in range(h.n):
            edges.append((a * h.n + v, b * h.n + v, w))
    label = name or f"({g.name or 'G'})x({h.name or 'H'})"
    return Graph(g.n * h.n, tuple(edges), name=label)


# ---------------------------------------------------------------------------
# traversal
# ---------------------------------------------------------------------------

def _bfs_dist(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    rows = g.adjacency_rows()
    q = deque([src])
    while q:
        u = q.popleft()
        for v in rows[u]:
            if v != u and dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    return g.n == 1 or min(_bfs_dist(g, 0)) >= 0


def distance(g: Graph, u: int, v: int) -> int:
    """Unweighted shortest-path distance (edge weights count as unit hops)."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise DomainError(f"vertex pair ({u},{v}) out of range")
    d = _bfs_dist(g, u)[v]
    if d < 0:
        raise ConnectivityError(f"vertices {u} and {v} are not connected")
    return d


def diameter(g: Graph) -> int:
    best = 0
    for src in range(g.n):
        d = _bfs_dist(g, src)
        m = max(d)
        if min(d) < 0:
            raise ConnectivityError("diameter of a disconnected graph")
        best = max(best, m)
    return best


def edge_connectivity(g: Graph) -> int:
    """Minimum cut weight over all bipartitions (exhaustive, |V| <= 24)."""
    if g.n < 2:
        raise DomainError("edge connectivity needs at least two vertices")
    if g.n > EXHAUSTIVE_CAP:
        raise SizeError(f"edge connectivity is exhaustive, capped at {EXHAUSTIVE_CAP} vertices")
    if not is_connected(g):
        return 0
    from ._enumeration import bipartition_arrays
    cut, _vol = bipartition_arrays(g)
    return int(cut[:-1].min())


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    """True iff the permutation commutes with the weighted adjacency matrix."""
    if sorted(perm) != list(range(g.n)):
        raise DomainError("perm is not a bijection on the vertex set")
    rows = g.adjacency_rows()
    for u in range(g.n):
        mapped = {perm[v]: w for v, w in rows[u].items()}
        if mapped != rows[perm[u]]:
            return False
    return True


# ---------------------------------------------------------------------------
# interchange formats
# ---------------------------------------------------------------------------

def to_json_dict(g: Graph) -> dict:
    """Graph as a JSON-ready dict with 1-based vertex ids."""
    return {
        "name": g.name,
        "n": g.n,
        "edges": [[u + 1, v + 1, w] for u, v, w in g.edges],
        "loops": [[v + 1, w] for v, w in g.loops],
    }


def from_json_dict(data) -> Graph:
    if not isinstance(data, dict):
        raise SchemaError("graph document must be a JSON object")
    for key in ("name", "n", "edges", "loops"):
        if key not in data:
            raise SchemaError(f"missing key {key!r}")
    name, n = data["name"], data["n"]
    if not isinstance(name, str):
        raise SchemaError("name must be a string")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SchemaError("n must be a positive integer")
    edges = []
    if not isinstance(data["edges"], list) or not isinstance(data["loops"], list):
        raise SchemaError("edges and loops must be arrays")
    for item in data["edges"]:
        if (not isinstance(item, list) or len(item) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise SchemaError(f"edge entry {item!r} is not [u, v, w]")
        u, v, w = item
        if not (1 <= u <= n and 1 <= v <= n):
            raise SchemaError(f"edge {item!r} references a vertex outside 1..{n}")
        edges.append((u - 1, v - 1, w))
    loops = []
    for item in data["loops"]:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise SchemaError(f"loop entry {item!r} is not [v, w]")
        v, w = item
        if not 1 <= v <= n:
            raise SchemaError(f"loop {item!r} references a vertex outside 1..{n}")
        loops.append((v - 1, w))
    try:
        return Graph(n, tuple(edges), tuple(loops), name=name)
    except DomainError as exc:
        raise SchemaError(str(exc)) from exc


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g))


def from_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return from_json_dict(data)


def to_dot(g: Graph) -> str:
    """GraphViz rendering with 1-based labels; loop weights shown on edges."""
    lines = [f'graph "{g.name or "G"}" {{']
    for v in range(g.n):
        lines.append(f"  {v + 1};")
    for u, v, w in g.edges:
        attr = f' [label="{w}"]' if w != 1 else ""
        lines.append(f"  {u + 1} -- {v + 1}{attr};")
    for v, w in g.loops:
        lines.append(f'  {v + 1} -- {v + 1} [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
