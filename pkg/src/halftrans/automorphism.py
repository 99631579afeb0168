"""Automorphisms of Gamma(n, a).

Two layers live here.  The generic one is an individualization-refinement
search (colour refinement on ordered partitions, first-smallest target cell,
automorphism pruning) that yields generators, the exact group order from the
stabilizer chain along the first path, and a canonical certificate.  The
family-specific one builds the named automorphisms alpha, beta, gamma, the
regular subgroup <alpha, beta>, the orbit counts behind the transitivity
classification, and the arc-stabilizer probe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .construction import GammaGraph
from .groups import Permutation, PermGroup, UnionFind, orbit_of, pair_orbits
from .modular import check_admissible
from .structure import BudgetExceeded

DEFAULT_SEARCH_BUDGET = 1_000_000


# partition refinement


def refine(adj, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    A vertex's signature is the sorted tuple of its neighbours' cell indices;
    each cell splits into sub-cells ordered by signature.  Nothing depends on
    vertex names, which is what makes certificates label-invariant.
    """
    nv = len(adj)
    cell_of = [0] * nv
    for idx, c in enumerate(cells):
        for v in c:
            cell_of[v] = idx
    while True:
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                key = tuple(sorted([cell_of[w] for w in adj[v]]))
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new_cells.append(c)
                continue
            changed = True
            for key in sorted(groups):
                new_cells.append(groups[key])
        if not changed:
            return cells
        cells = new_cells
        for idx, c in enumerate(cells):
            for v in c:
                cell_of[v] = idx


def quotient_invariant(adj, cells: list[list[int]]) -> tuple:
    """Cell sizes plus each cell's neighbour-cell signature (the quotient graph)."""
    cell_of = {}
    for idx, c in enumerate(cells):
        for v in c:
            cell_of[v] = idx
    return tuple(
        (len(c), tuple(sorted(cell_of[w] for w in adj[c[0]]))) for c in cells
    )


def individualize(cells: list[list[int]], index: int, v: int) -> list[list[int]]:
    rest = [w for w in cells[index] if w != v]
    return cells[:index] + [[v], rest] + cells[index + 1:]


def target_cell(cells: list[list[int]]) -> Optional[int]:
    """Index of the first smallest non-singleton cell, None if discrete."""
    best, best_size = None, None
    for idx, c in enumerate(cells):
        if len(c) > 1 and (best_size is None or len(c) < best_size):
            best, best_size = idx, len(c)
    return best


def _certificate(adj, lab: Sequence[int]) -> tuple:
    pos = [0] * len(lab)
    for p, v in enumerate(lab):
        pos[v] = p
    return tuple(sorted(
        (pos[u], pos[w]) for u in range(len(adj)) for w in adj[u] if pos[u] < pos[w]
    ))


class _Search:
    """Depth-first individualization-refinement over one graph."""

    def __init__(self, adj, budget: int, canonical: bool):
        self.adj = adj
        self.nv = len(adj)
        self.budget = budget
        self.canonical = canonical
        self.nodes = 0
        self.generators: list[Permutation] = []
        self.first_prefix: Optional[list[int]] = None
        self.first_invs: Optional[list] = None
        self.first_lab: Optional[list[int]] = None
        self.first_cert = None
        self.best_invs = None
        self.best_lab = None
        self.best_cert = None
        self._orbit_cache: dict = {}

    def run(self, cells: Optional[list[list[int]]] = None) -> None:
        if cells is None:
            cells = [list(range(self.nv))]
        root = refine(self.adj, cells)
        self._dfs(root, [], [quotient_invariant(self.adj, root)])

    # bookkeeping

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded("automorphism search", self.budget)

    def _gens_fixing(self, prefix: Sequence[int]) -> list[Permutation]:
        return [g for g in self.generators if g.fixes(prefix)]

    def _orbit_rep(self, prefix: Sequence[int]):
        key = (tuple(prefix), len(self.generators))
        uf = self._orbit_cache.get(key)
        if uf is None:
            uf = UnionFind(self.nv)
            for g in self._gens_fixing(prefix):
                for x, y in enumerate(g.images):
                    uf.union(x, y)
            self._orbit_cache = {key: uf}
        return uf

    def _add_generator(self, g: Permutation) -> None:
        if g.is_identity() or g in self.generators:
            return
        for u in range(self.nv):
            gu = g.images[u]
            for w in self.adj[u]:
                if g.images[w] not in self.adj[gu]:
                    raise AssertionError("search produced a non-automorphism")
        self.generators.append(g)

    def _worth(self, invs: list) -> bool:
        depth = len(invs)
        if self.first_invs is None:
            return True
        if invs == self.first_invs[:depth]:
            return True
        if not self.canonical:
            return False
        return invs <= self.best_invs[:depth]

    # tree walk

    def _dfs(self, cells, prefix: list[int], invs: list) -> Optional[int]:
        """Explore a node; returns a depth to unwind to, or None."""
        self._tick()
        t = target_cell(cells)
        if t is None:
            return self._leaf(cells, prefix, invs)
        depth = len(prefix)
        explored: list[int] = []
        for w in sorted(cells[t]):
            if explored:
                uf = self._orbit_rep(prefix)
                rw = uf.find(w)
                if any(uf.find(u) == rw for u in explored):
                    continue
            child = refine(self.adj, individualize(cells, t, w))
            child_invs = invs + [quotient_invariant(self.adj, child)]
            if not self._worth(child_invs):
                continue
            jump = self._dfs(child, prefix + [w], child_invs)
            explored.append(w)
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, cells, prefix, invs) -> Optional[int]:
        lab = [c[0] for c in cells]
        cert = _certificate(self.adj, lab)
        if self.first_lab is None:
            self.first_prefix = list(prefix)
            self.first_invs = list(invs)
            self.first_lab = lab
            self.first_cert = cert
            self.best_invs, self.best_lab, self.best_cert = list(invs), lab, cert
            return None
        if invs == self.first_invs and cert == self.first_cert:
            self._add_generator(_mapping(self.first_lab, lab))
            k = 0
            while prefix[k] == self.first_prefix[k]:
                k += 1
            return k
        if not self.canonical:
            return None
        key = (invs, cert)
        best_key = (self.best_invs, self.best_cert)
        if key == best_key:
            self._add_generator(_mapping(self.best_lab, lab))
        elif key < best_key:
            self.best_invs, self.best_lab, self.best_cert = list(invs), lab, cert
        return None

    # results

    def base(self) -> list[int]:
        return list(self.first_prefix)

    def basic_orbit_sizes(self) -> list[int]:
        sizes = []
        for k, v in enumerate(self.first_prefix):
            sizes.append(len(orbit_of(v, self._gens_fixing(self.first_prefix[:k]))))
        return sizes


def _mapping(src_lab: Sequence[int], dst_lab: Sequence[int]) -> Permutation:
    images = [0] * len(src_lab)
    for s, d in zip(src_lab, dst_lab):
        images[s] = d
    return Permutation(images)


class AutomorphismGroup(PermGroup):
    """Generators from the search plus the order read off its stabilizer chain."""

    def __init__(self, generators, degree, base, orbit_sizes, nodes):
        super().__init__(generators, degree)
        self.search_base = list(base)
        self.search_orbit_sizes = list(orbit_sizes)
        self.search_nodes = nodes

    def order(self) -> int:
        result = 1
        for s in self.search_orbit_sizes:
            result *= s
        return result


def automorphism_group(g, budget: int = DEFAULT_SEARCH_BUDGET) -> AutomorphismGroup:
    search = _Search(g.adjacency, budget, canonical=False)
    search.run()
    return AutomorphismGroup(
        search.generators,
        len(g.adjacency),
        search.base(),
        search.basic_orbit_sizes(),
        search.nodes,
    )


def canonical_labeling(g, budget: int = DEFAULT_SEARCH_BUDGET) -> list[int]:
    """Vertex order of the canonical leaf: position -> original vertex."""
    search = _Search(g.adjacency, budget, canonical=True)
    search.run()
    return list(search.best_lab)


def canonical_form(g, budget: int = DEFAULT_SEARCH_BUDGET) -> bytes:
    """Opaque certificate; equal for two graphs exactly when they are isomorphic.

    Layout: 4-byte big-endian vertex count followed by the packed upper
    triangle (row-major) of the canonically relabelled adjacency matrix.
    Stable across runs of one version, not promised across versions.
    """
    lab = canonical_labeling(g, budget)
    nv = len(lab)
    pos = np.empty(nv, dtype=np.int64)
    pos[np.asarray(lab)] = np.arange(nv)
    m = np.zeros((nv, nv), dtype=np.uint8)
    for u, nbrs in enumerate(g.adjacency):
        for w in nbrs:
            m[pos[u], pos[w]] = 1
    rows, cols = np.triu_indices(nv, k=1)
    return nv.to_bytes(4, "big") + np.packbits(m[rows, cols]).tobytes()


def are_isomorphic(g1, g2, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    if len(g1.adjacency) != len(g2.adjacency):
        return False
    if sorted(map(len, g1.adjacency)) != sorted(map(len, g2.adjacency)):
        return False
    return canonical_form(g1, budget) == canonical_form(g2, budget)


def find_automorphism(g, sources: Sequence[int], targets: Sequence[int],
                      budget: int = DEFAULT_SEARCH_BUDGET) -> Optional[Permutation]:
    """Some automorphism with sources[k] -> targets[k] for all k, or None.

    Both sides are individualized in lockstep and refined; branches whose
    quotient invariants disagree cannot extend to an automorphism.
    """
    adj = g.adjacency
    nv = len(adj)
    if len(sources) != len(targets):
        raise ValueError("sources and targets differ in length")
    nodes = 0
    left = refine(adj, [list(range(nv))])
    right = left
    for s, t in zip(sources, targets):
        li = next(k for k, c in enumerate(left) if s in c)
        ri = next(k for k, c in enumerate(right) if t in c)
        if li != ri:
            return None
        left = refine(adj, individualize(left, li, s))
        right = refine(adj, individualize(right, ri, t))
        if quotient_invariant(adj, left) != quotient_invariant(adj, right):
            return None

    def walk(lc, rc) -> Optional[Permutation]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("find_automorphism", budget)
        t = target_cell(lc)
        if t is None:
            perm = _mapping([c[0] for c in lc], [c[0] for c in rc])
            ok = all(perm.images[w] in adj[perm.images[u]] for u in range(nv) for w in adj[u])
            return perm if ok else None
        x = min(lc[t])
        left_child = refine(adj, individualize(lc, t, x))
        inv = quotient_invariant(adj, left_child)
        for y in sorted(rc[t]):
            right_child = refine(adj, individualize(rc, t, y))
            if quotient_invariant(adj, right_child) != inv:
                continue
            found = walk(left_child, right_child)
            if found is not None:
                return found
        return None

    return walk(left, right)


def naive_automorphisms(g, limit: int = 10**6) -> list[Permutation]:
    """Every automorphism, by plain backtracking with no refinement.

    Vertices are assigned in BFS order from 0; each later vertex must map to a
    neighbour of its BFS parent's image and respect adjacency to everything
    already placed.  Only for small graphs; used as an independent oracle.
    """
    adj = g.adjacency
    nv = len(adj)
    adj_sets = [set(a) for a in adj]
    order = [0]
    parent = {0: -1}
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    if len(order) != nv:
        raise ValueError("naive search needs a connected graph")
    earlier = []  # for each position, neighbours placed before it
    placed_at = {v: k for k, v in enumerate(order)}
    for k, v in enumerate(order):
        earlier.append([w for w in adj[v] if placed_at[w] < k])
    image = [-1] * nv
    used = [False] * nv
    found: list[Permutation] = []

    def extend(k: int) -> None:
        if k == nv:
            found.append(Permutation(image))
            if len(found) > limit:
                raise BudgetExceeded("naive_automorphisms", limit)
            return
        v = order[k]
        pool = range(nv) if k == 0 else adj[image[parent[v]]]
        for y in pool:
            if used[y] or len(adj[y]) != len(adj[v]):
                continue
            if not all(image[w] in adj_sets[y] for w in earlier[k]):
                continue
            # non-adjacency to placed vertices must be preserved as well
            if sum(1 for z in adj[y] if used[z]) != len(earlier[k]):
                continue
            image[v] = y
            used[y] = True
            extend(k + 1)
            used[y] = False
            image[v] = -1

    extend(0)
    return found


# the Gamma(n, a) family


def named_automorphisms(n: int, a: int) -> tuple[Permutation, Permutation, Permutation]:
    """alpha: (i,j) -> (i + a^-j, j); beta: (i,j) -> (i, j+1); gamma: (i,j) -> (-i, j).

    a^-1 = b = a^2 mod n.  Each map is checked against the graph and against
    its expected order (n, 3, 2); a failure means the construction is wrong.
    """
    pair = check_admissible(n, a)
    b = pair.b
    deg = 3 * n
    shift = [pow(b, j, n) for j in range(3)]  # a^-j
    alpha = Permutation.from_function(deg, lambda v: (v % n + shift[v // n]) % n + n * (v // n))
    beta = Permutation.from_function(deg, lambda v: v % n + n * ((v // n + 1) % 3))
    gamma = Permutation.from_function(deg, lambda v: (-(v % n)) % n + n * (v // n))
    from .construction import build

    g = build(n, a)
    for name, p, expected in (("alpha", alpha, n), ("beta", beta, 3), ("gamma", gamma, 2)):
        if not is_automorphism(g, p):
            raise AssertionError(f"{name} is not an automorphism of Gamma({n},{a})")
        if p.order() != expected:
            raise AssertionError(f"{name} has order {p.order()}, expected {expected}")
    return alpha, beta, gamma


def is_automorphism(g, p: Permutation) -> bool:
    adj = g.adjacency
    if p.degree != len(adj):
        return False
    return all(p.images[w] in adj[p.images[u]] for u in range(len(adj)) for w in adj[u])


@dataclass(frozen=True)
class RelationCheck:
    ok: bool
    failing: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_relations(alpha: Permutation, beta: Permutation, gamma: Permutation,
                     n: int, a: int) -> RelationCheck:
    """alpha*beta = beta*alpha^(a^2), alpha*gamma = gamma*alpha^-1, beta*gamma = gamma*beta."""
    checks = (
        ("alpha*beta = beta*alpha^(a^2)", alpha * beta, beta * alpha ** ((a * a) % n)),
        ("alpha*gamma = gamma*alpha^-1", alpha * gamma, gamma * alpha ** -1),
        ("beta*gamma = gamma*beta", beta * gamma, gamma * beta),
    )
    for label, lhs, rhs in checks:
        if lhs != rhs:
            return RelationCheck(False, label)
    return RelationCheck(True)


@dataclass(frozen=True)
class RegularityCheck:
    regular: bool
    order: int


def cayley_regular_check(n: int, a: int) -> RegularityCheck:
    """Enumerate H = {alpha^i beta^j} and test that it acts sharply transitively."""
    alpha, beta, _ = named_automorphisms(n, a)
    deg = 3 * n
    elements = set()
    ai = Permutation.identity(deg)
    for _ in range(n):
        bj = Permutation.identity(deg)
        for _ in range(3):
            elements.add(ai * bj)
            bj = beta * bj
        ai = alpha * ai
    # closure: H must already be closed under the generators
    for h in list(elements):
        if alpha * h not in elements or beta * h not in elements:
            return RegularityCheck(False, len(elements))
    regular = len(elements) == deg
    if regular:
        for v in range(deg):
            images = sorted(h.images[v] for h in elements)
            if images != list(range(deg)):
                regular = False
                break
    return RegularityCheck(regular, len(elements))


CLASSIFICATIONS = ("arc-transitive", "half-transitive", "vertex-only", "edge-only", "other")


@dataclass(frozen=True)
class TransitivityReport:
    vertex_orbits: int
    edge_orbits: int
    arc_orbits: int
    classification: str

    def to_dict(self) -> dict:
        return {
            "vertex_orbits": self.vertex_orbits,
            "edge_orbits": self.edge_orbits,
            "arc_orbits": self.arc_orbits,
            "classification": self.classification,
        }


def classify(vertex_orbits: int, edge_orbits: int, arc_orbits: int) -> str:
    if arc_orbits == 1:
        return "arc-transitive"
    if vertex_orbits == 1 and edge_orbits == 1:
        return "half-transitive"
    if vertex_orbits == 1:
        return "vertex-only"
    if edge_orbits == 1:
        return "edge-only"
    return "other"


def transitivity(g, group: PermGroup) -> TransitivityReport:
    gens = group.generators
    nv = len(g.adjacency)
    vertex = len(PermGroup(gens, nv).orbits()) if gens else nv
    edges = list(g.edges())
    arcs = list(g.arcs())
    edge_orbits = len(pair_orbits(gens, edges, ordered=False))
    arc_orbits = len(pair_orbits(gens, arcs, ordered=True))
    return TransitivityReport(vertex, edge_orbits, arc_orbits,
                              classify(vertex, edge_orbits, arc_orbits))


def arc_stabilizer_probe(g: GammaGraph, budget: int = DEFAULT_SEARCH_BUDGET):
    """Look for an automorphism fixing (0,0) and sending (b,1) to (1,2).

    Returns (found, witness permutation or None).
    """
    origin = g.index(0, 0)
    src = g.index(g.b, 1)
    dst = g.index(1, 2)
    witness = find_automorphism(g, [origin, src], [origin, dst], budget)
    return witness is not None, witness


def abg_group(n: int, a: int) -> PermGroup:
    return PermGroup(list(named_automorphisms(n, a)), 3 * n)
