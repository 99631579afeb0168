"""The tetravalent graphs Gamma(n, a) on Z_n x Z_3.

Vertex (i, j) is stored as the linear index ``i + n*j``.  The edge rules are

    (i, j) ~ (a*i + 1, j - 1),  (a*i - 1, j - 1)
    (i, j) ~ (b*i + b, j + 1),  (b*i - b, j + 1)

with b = a^2 mod n; the second pair are the inverses of the first, so either
family alone already determines the (symmetric) edge set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .groups import Permutation
from .modular import check_admissible

FORMATS = ("graph6", "dot", "json")


@dataclass(frozen=True)
class Vertex:
    i: int
    j: int

    def __str__(self) -> str:
        return f"{self.i},{self.j}"


class GammaGraph:
    """Immutable simple graph with (n, a, b) metadata.

    ``adjacency[v]`` is the sorted tuple of neighbour indices of vertex ``v``.
    """

    def __init__(self, n: int, a: int, b: int, adjacency, *, check: bool = True):
        self.n = n
        self.a = a
        self.b = b
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adjacency
        )
        if check:
            self._check_simple(regular=4)

    def _check_simple(self, regular: int | None = None) -> None:
        adj = self.adjacency
        for v, nbrs in enumerate(adj):
            if v in nbrs:
                raise AssertionError(f"self-loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise AssertionError(f"repeated neighbour at vertex {v}")
            if regular is not None and len(nbrs) != regular:
                raise AssertionError(f"vertex {v} has degree {len(nbrs)}, expected {regular}")
            for w in nbrs:
                if v not in adj[w]:
                    raise AssertionError(f"asymmetric adjacency {v}-{w}")

    def __repr__(self) -> str:
        return f"GammaGraph(n={self.n}, a={self.a}, b={self.b})"

    @property
    def num_vertices(self) -> int:
        return len(self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def index(self, i: int, j: int) -> int:
        return (i % self.n) + self.n * (j % 3)

    def vertex(self, v: int) -> Vertex:
        if not 0 <= v < self.num_vertices:
            raise IndexError(f"vertex index {v} out of range")
        return Vertex(v % self.n, v // self.n)

    def label(self, v: int) -> str:
        return str(self.vertex(v))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.num_vertices, self.num_vertices), dtype=np.uint8)
        for u, v in self.edges():
            m[u, v] = m[v, u] = 1
        return m

    def relabeled(self, perm: Permutation) -> "GammaGraph":
        """Copy with vertex v renamed perm(v); metadata is kept verbatim."""
        new = [None] * self.num_vertices
        for v, nbrs in enumerate(self.adjacency):
            new[perm(v)] = [perm(w) for w in nbrs]
        return GammaGraph(self.n, self.a, self.b, new, check=False)

    def with_extra_edges(self, extra) -> "GammaGraph":
        """Copy with additional edges; used to build deliberately faulty inputs."""
        adj = [set(nbrs) for nbrs in self.adjacency]
        for u, v in extra:
            adj[u].add(v)
            adj[v].add(u)
        g = GammaGraph(self.n, self.a, self.b, adj, check=False)
        g._check_simple(regular=None)
        return g


def build(n: int, a: int) -> GammaGraph:
    pair = check_admissible(n, a)
    b = pair.b
    down: list[set[int]] = [set() for _ in range(3 * n)]
    up: list[set[int]] = [set() for _ in range(3 * n)]
    for j in range(3):
        for i in range(n):
            v = i + n * j
            jm, jp = (j - 1) % 3, (j + 1) % 3
            down[v].update(((a * i + s) % n) + n * jm for s in (1, -1))
            up[v].update(((b * i + s * b) % n) + n * jp for s in (1, -1))
    # the j+1 rules must be exactly the reversal of the j-1 rules
    for v in range(3 * n):
        for w in down[v]:
            if v not in up[w]:
                raise AssertionError(f"edge rules disagree on {v}-{w}")
        for w in up[v]:
            if v not in down[w]:
                raise AssertionError(f"edge rules disagree on {v}-{w}")
    adjacency = [down[v] | up[v] for v in range(3 * n)]
    g = GammaGraph(n, a, b, adjacency)
    if g.num_edges != 6 * n:
        raise AssertionError(f"expected {6 * n} edges, got {g.num_edges}")
    return g


def neighbors(g: GammaGraph, v) -> list[Vertex]:
    if isinstance(v, Vertex):
        if not (0 <= v.i < g.n and 0 <= v.j < 3):
            raise IndexError(f"vertex {v} out of range")
        idx = g.index(v.i, v.j)
    else:
        idx = v
        g.vertex(idx)
    return [g.vertex(w) for w in g.adjacency[idx]]


def tau_map(g: GammaGraph) -> Permutation:
    """(i, j) -> (a*i, -j): an isomorphism Gamma(n, a) -> Gamma(n, a^2)."""
    n, a = g.n, g.a
    return Permutation.from_function(
        3 * n, lambda v: ((a * (v % n)) % n) + n * ((-(v // n)) % 3)
    )


def is_isomorphism(perm: Permutation, source: GammaGraph, target: GammaGraph) -> bool:
    if source.num_vertices != target.num_vertices or source.num_edges != target.num_edges:
        return False
    return all(target.has_edge(perm(u), perm(v)) for u, v in source.edges())


# serialization


def graph6_size_bytes(num_vertices: int) -> bytes:
    if num_vertices < 0:
        raise ValueError("negative vertex count")
    if num_vertices <= 62:
        return bytes([num_vertices + 63])
    if num_vertices <= 258047:
        return b"~" + bytes(((num_vertices >> s) & 63) + 63 for s in (12, 6, 0))
    if num_vertices <= 68719476735:
        return b"~~" + bytes(((num_vertices >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph6 cannot encode more than 68719476735 vertices")


def to_graph6(g: GammaGraph) -> bytes:
    nv = g.num_vertices
    m = g.adjacency_matrix()
    # upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    cols, rows = np.triu_indices(nv, k=1)
    order = np.lexsort((cols, rows))  # sort by column index, then row
    bits = m[cols[order], rows[order]]
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)]).reshape(-1, 6)
    weights = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)
    body = (bits @ weights + 63).astype(np.uint8).tobytes()
    return graph6_size_bytes(nv) + body


def to_dot(g: GammaGraph) -> bytes:
    lines = [f"graph \"Gamma({g.n},{g.a})\" {{"]
    for v in range(g.num_vertices):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def to_json(g: GammaGraph) -> bytes:
    doc = {
        "n": g.n,
        "a": g.a,
        "b": g.b,
        "vertices": [[vx.i, vx.j] for vx in map(g.vertex, range(g.num_vertices))],
        "edges": [[u, v] for u, v in g.edges()],
    }
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode()


def export(g: GammaGraph, fmt: str) -> bytes:
    if g.num_edges != 6 * g.n:
        raise AssertionError(f"refusing to export: {g.num_edges} edges, expected {6 * g.n}")
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "dot":
        return to_dot(g)
    if fmt in ("json", "edgelist-json"):
        return to_json(g)
    raise ValueError(f"unknown export format {fmt!r}; choose from {FORMATS}")
