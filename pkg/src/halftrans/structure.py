"""Structural invariants: bipartition, colouring, girth, odd girth, short
cycles and Hamiltonian cycles.

All routines take any object with an ``adjacency`` sequence of neighbour
lists (``GammaGraph`` in practice) and never mutate it.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

DEFAULT_HAMILTON_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of node expansions before deciding."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: budget of {budget} expansions exhausted")
        self.what = what
        self.budget = budget


def bipartition(g) -> Optional[tuple[list[int], list[int]]]:
    """BFS 2-colouring; None if an odd cycle is met."""
    adj = g.adjacency
    colour = [-1] * len(adj)
    for start in range(len(adj)):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    x = [v for v, c in enumerate(colour) if c == 0]
    y = [v for v, c in enumerate(colour) if c == 1]
    return x, y


def is_proper_coloring(g, coloring: Sequence[int]) -> bool:
    return all(coloring[u] != coloring[v] for u, nbrs in enumerate(g.adjacency) for v in nbrs)


def chromatic_number(g) -> tuple[int, list[int]]:
    """2 with the bipartition for even n, else 3 with the layer colouring j.

    Only valid for the Gamma(n, a) family (odd n graphs are non-bipartite and
    the three layers Z_n x {j} are independent); the witness is checked.
    """
    parts = bipartition(g)
    if parts is not None:
        coloring = [0] * len(g.adjacency)
        for v in parts[1]:
            coloring[v] = 1
        k = 2
    else:
        coloring = [v // g.n for v in range(len(g.adjacency))]
        k = 3
    if not is_proper_coloring(g, coloring):
        raise AssertionError("colouring witness is not proper")
    return k, coloring


def _bfs_levels(adj, root: int, max_depth: int | None = None):
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        if max_depth is not None and dist[u] >= max_depth:
            continue
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def _path_to_root(parent, v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def _cycle_from_edge(parent, u: int, w: int) -> Optional[list[int]]:
    """Close root->u, edge u-w, w->root into a cycle if the two paths only share the root."""
    pu = _path_to_root(parent, u)
    pw = _path_to_root(parent, w)
    if set(pu[:-1]) & set(pw[:-1]):
        return None
    return list(reversed(pu)) + pw[:-1]


def shortest_cycle(g) -> list[int]:
    """A shortest cycle, found by BFS from each root truncated at the best depth."""
    adj = g.adjacency
    best: Optional[list[int]] = None
    best_len = len(adj) + 1
    for root in range(len(adj)):
        depth_cap = best_len // 2
        dist, parent = _bfs_levels(adj, root, depth_cap)
        for u in dist:
            for w in adj[u]:
                if w not in dist or parent[u] == w or parent[w] == u:
                    continue
                length = dist[u] + dist[w] + 1
                if length < best_len:
                    cyc = _cycle_from_edge(parent, u, w)
                    if cyc is not None:
                        best, best_len = cyc, len(cyc)
        if best_len == 3:
            break
    if best is None:
        raise ValueError("graph is acyclic")
    return best


def girth(g) -> int:
    return len(shortest_cycle(g))


def shortest_odd_cycle(g) -> Optional[list[int]]:
    """Shortest odd cycle via same-level edges of per-root BFS; None if bipartite."""
    adj = g.adjacency
    best: Optional[list[int]] = None
    best_len = len(adj) + 2
    for root in range(len(adj)):
        dist, parent = _bfs_levels(adj, root, best_len // 2)
        for u in dist:
            du = dist[u]
            if 2 * du + 1 >= best_len:
                continue
            for w in adj[u]:
                if u < w and dist.get(w) == du:
                    cyc = _cycle_from_edge(parent, u, w)
                    if cyc is not None:
                        best, best_len = cyc, len(cyc)
    return best


def odd_girth(g) -> Optional[int]:
    cyc = shortest_odd_cycle(g)
    return None if cyc is None else len(cyc)


def is_cycle(g, cycle: Sequence[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(g.has_edge(cycle[k], cycle[(k + 1) % len(cycle)]) for k in range(len(cycle)))


def find_cycle(g, k: int) -> Optional[list[int]]:
    """Some cycle of length exactly k, or None.

    Depth-first over simple paths whose start is the smallest vertex on the
    cycle, so each cycle is met at most twice.
    """
    if k < 3:
        raise ValueError("cycles have length >= 3")
    adj = g.adjacency
    for start in range(len(adj)):
        path = [start]
        on_path = {start}
        stack = [iter(adj[start])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if len(path) == k:
                if nxt == start:
                    return list(path)
                continue
            if nxt <= start or nxt in on_path:
                continue
            path.append(nxt)
            on_path.add(nxt)
            stack.append(iter(adj[nxt]))
    return None


def cycle_census(g, k: int) -> bool:
    return find_cycle(g, k) is not None


def hamiltonian_cycle(g, budget: int = DEFAULT_HAMILTON_BUDGET) -> list[int]:
    """Backtracking search for a Hamiltonian cycle.

    Branches go to the unvisited neighbour with the fewest unvisited
    neighbours first.  A branch is cut when some unvisited vertex can no
    longer be entered and left, when two unvisited vertices both depend on
    the current end, or when the unvisited vertices stop being reachable from
    the end.  Attempts restart on a Luby schedule of expansion limits; attempt
    k breaks ties with ``random.Random(k)``, so runs are reproducible.  All
    attempts share ``budget``.

    Raises BudgetExceeded when ``budget`` runs out; never claims that no
    cycle exists.  The returned cycle is rotated to begin at vertex 0.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    spent = 0
    attempt = 0
    while spent < budget:
        allowance = min(HAMILTON_RESTART_UNIT * _luby(attempt + 1), budget - spent)
        cycle, used = _hamilton_attempt(g.adjacency, attempt, allowance)
        spent += used
        if cycle is not None:
            k = cycle.index(0)
            cycle = cycle[k:] + cycle[:k]
            if not is_hamiltonian_cycle(g, cycle):
                raise AssertionError("search produced an invalid Hamiltonian cycle")
            return cycle
        attempt += 1
    raise BudgetExceeded("hamiltonian_cycle", budget)


HAMILTON_RESTART_UNIT = 2000


def _luby(i: int) -> int:
    """i-th term (1-based) of the Luby restart sequence 1,1,2,1,1,2,4,..."""
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while True:
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1


def _hamilton_attempt(adj, seed: int, limit: int):
    """One bounded DFS from vertex 0; returns (cycle or None, expansions used)."""
    nv = len(adj)
    rng = random.Random(seed)
    tiebreak = list(range(nv))
    if seed:
        rng.shuffle(tiebreak)
    start = 0
    start_adj = [False] * nv
    for x in adj[start]:
        start_adj[x] = True
    visited = [False] * nv
    free_deg = [len(nbrs) for nbrs in adj]
    mark = [0] * nv
    epoch = 0
    path: list[int] = []
    expansions = 0

    def push(w):
        visited[w] = True
        path.append(w)
        for x in adj[w]:
            free_deg[x] -= 1

    def pop():
        w = path.pop()
        visited[w] = False
        for x in adj[w]:
            free_deg[x] += 1

    def candidates(u):
        opts = [w for w in adj[u] if not visited[w]]
        # a neighbour whose only other way out is through u must come next
        forced = [w for w in opts if free_deg[w] + start_adj[w] < 2]
        if len(forced) > 1:
            return []
        if forced:
            return forced
        opts.sort(key=lambda w: (free_deg[w], tiebreak[w]))
        return opts

    def dead_end(end: int, prev: int) -> bool:
        nonlocal epoch
        remaining = nv - len(path)
        if remaining == 0:
            return False
        for x in (*adj[end], *adj[prev]):
            if not visited[x] and free_deg[x] + (end in adj[x]) + start_adj[x] < 2:
                return True
        if all(visited[x] for x in adj[start]):
            return True
        epoch += 1
        mark[end] = epoch
        stack = [end]
        count = 0
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not visited[y] and mark[y] != epoch:
                    mark[y] = epoch
                    count += 1
                    stack.append(y)
        return count != remaining

    push(start)
    stack = [iter(candidates(start))]
    while stack:
        if len(path) == nv:
            if start_adj[path[-1]]:
                return list(path), expansions
            stack.pop()
            pop()
            continue
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            pop()
            continue
        if visited[w]:
            continue
        expansions += 1
        if expansions > limit:
            return None, limit
        prev = path[-1]
        push(w)
        if dead_end(w, prev):
            pop()
            continue
        stack.append(iter(candidates(w)))
    return None, expansions


def is_hamiltonian_cycle(g, cycle: Sequence[int]) -> bool:
    return len(cycle) == len(g.adjacency) and is_cycle(g, cycle)


@dataclass
class StructureReport:
    bipartite: bool
    bipartition: Optional[tuple[list[int], list[int]]]
    chromatic: Optional[int]
    coloring: Optional[list[int]]
    girth: int
    odd_girth: Optional[int]
    triangle_free: bool
    has_4cycle: bool
    has_6cycle: bool
    hamiltonian_cycle: Optional[list[int]] = None
    hamiltonian_status: str = "skipped"  # found | budget_exceeded | skipped
    witnesses: dict = field(default_factory=dict)


def analyze_structure(g, *, hamiltonian: bool = True,
                      budget: int = DEFAULT_HAMILTON_BUDGET) -> StructureReport:
    parts = bipartition(g)
    try:
        chi, coloring = chromatic_number(g)
    except AssertionError:
        # only reachable for graphs outside the family (corrupted inputs)
        chi, coloring = None, None
    cyc = shortest_cycle(g)
    odd = shortest_odd_cycle(g)
    six = find_cycle(g, 6)
    report = StructureReport(
        bipartite=parts is not None,
        bipartition=parts,
        chromatic=chi,
        coloring=coloring,
        girth=len(cyc),
        odd_girth=None if odd is None else len(odd),
        triangle_free=len(cyc) > 3,
        has_4cycle=cycle_census(g, 4),
        has_6cycle=six is not None,
        witnesses={"girth_cycle": cyc, "odd_cycle": odd, "six_cycle": six},
    )
    if hamiltonian:
        try:
            report.hamiltonian_cycle = hamiltonian_cycle(g, budget)
            report.hamiltonian_status = "found"
        except BudgetExceeded:
            report.hamiltonian_status = "budget_exceeded"
    return report
