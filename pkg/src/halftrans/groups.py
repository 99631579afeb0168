"""Permutations of {0..d-1} and groups generated by them.

Permutations compose like functions: ``(p * q)(x) == p(q(x))``.  Group order
comes from a deterministic Schreier-Sims stabilizer chain; orbits on points,
unordered pairs and ordered pairs come from union-find closure under the
generators.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        p = cls.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_function(cls, degree: int, fn) -> "Permutation":
        return cls([fn(x) for x in range(degree)])

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        im = self.images
        return Permutation._trusted(tuple(im[x] for x in other.images))

    def __invert__(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation._trusted(tuple(inv))

    def inverse(self) -> "Permutation":
        return ~self

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else ~self
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_notation()})"

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_notation(self, label=str) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(label(x) for x in c) + ")" for c in cyc)

    def order(self) -> int:
        from math import lcm

        result = 1
        for c in self.cycles():
            result = lcm(result, len(c))
        return result

    def fixes(self, points: Iterable[int]) -> bool:
        return all(self.images[x] == x for x in points)


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


def point_orbits(generators: Sequence[Permutation], degree: int) -> list[list[int]]:
    uf = UnionFind(degree)
    for g in generators:
        for x, y in enumerate(g.images):
            uf.union(x, y)
    return uf.classes()


def orbit_of(point: int, generators: Sequence[Permutation]) -> set[int]:
    seen = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def pair_orbits(
    generators: Sequence[Permutation],
    pairs: Sequence[tuple[int, int]],
    ordered: bool,
) -> list[list[tuple[int, int]]]:
    """Orbits of the induced action on a closed set of vertex pairs."""
    key = (lambda u, v: (u, v)) if ordered else (lambda u, v: (min(u, v), max(u, v)))
    index = {key(u, v): k for k, (u, v) in enumerate(pairs)}
    if len(index) != len(pairs):
        raise ValueError("duplicate pairs")
    uf = UnionFind(len(pairs))
    for g in generators:
        im = g.images
        for k, (u, v) in enumerate(pairs):
            target = index.get(key(im[u], im[v]))
            if target is None:
                raise ValueError("pair set is not invariant under the generators")
            uf.union(k, target)
    return [[pairs[k] for k in cls] for cls in uf.classes()]


def _first_moved(g: Permutation) -> int:
    for x, y in enumerate(g.images):
        if x != y:
            return x
    raise ValueError("identity moves no point")


class PermGroup:
    """Group generated by permutations of a common degree.

    The stabilizer chain is built on demand from a deterministic
    Schreier-Sims pass, so ``order`` and ``__contains__`` are exact.
    """

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None):
        gens = [g for g in generators if not g.is_identity()]
        if degree is None:
            if not generators:
                raise ValueError("degree required for the trivial group")
            degree = generators[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("generators disagree on degree")
        self.degree = degree
        self.generators = list(dict.fromkeys(gens))
        self._chain = None

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, gens={len(self.generators)})"

    # stabilizer chain

    def _build_chain(self):
        ident = Permutation.identity(self.degree)
        strong = list(self.generators)
        base: list[int] = []
        for s in strong:
            if s.fixes(base):
                base.append(_first_moved(s))
        trans: list[dict[int, Permutation]] = [{} for _ in base]

        def level_gens(i):
            prefix = base[:i]
            return [s for s in strong if s.fixes(prefix)]

        def compute(i):
            t = {base[i]: ident}
            queue = deque([base[i]])
            gens = level_gens(i)
            while queue:
                x = queue.popleft()
                for g in gens:
                    y = g.images[x]
                    if y not in t:
                        t[y] = g * t[x]
                        queue.append(y)
            trans[i] = t

        def sift(g, start):
            for j in range(start, len(base)):
                y = g.images[base[j]]
                if y not in trans[j]:
                    return g, j
                g = ~trans[j][y] * g
            return g, len(base)

        for i in range(len(base)):
            compute(i)
        i = len(base) - 1
        while i >= 0:
            added = False
            gens_i = level_gens(i)
            t_i = trans[i]
            for x, u in list(t_i.items()):
                for s in gens_i:
                    h = ~t_i[s.images[x]] * (s * u)
                    if h.is_identity():
                        continue
                    res, j = sift(h, i + 1)
                    if res.is_identity():
                        continue
                    strong.append(res)
                    if j == len(base):
                        base.append(_first_moved(res))
                        trans.append({})
                    for k in range(j + 1):
                        compute(k)
                    i = j
                    added = True
                    break
                if added:
                    break
            if not added:
                i -= 1
        self._chain = list(zip(base, trans))
        self.strong_generators = strong

    def _verified_chain(self):
        if self._chain is None:
            self._build_chain()
        return self._chain

    @property
    def base(self) -> list[int]:
        return [b for b, _ in self._verified_chain()]

    def basic_orbit_sizes(self) -> list[int]:
        return [len(t) for _, t in self._verified_chain()]

    def order(self) -> int:
        result = 1
        for size in self.basic_orbit_sizes():
            result *= size
        return result

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        for base, trans in self._verified_chain():
            y = g.images[base]
            if y not in trans:
                return False
            g = ~trans[y] * g
        return g.is_identity()

    # orbits

    def orbits(self) -> list[list[int]]:
        return point_orbits(self.generators, self.degree)

    def orbit(self, point: int) -> set[int]:
        return orbit_of(point, self.generators)

    def elements(self, limit: int = 1_000_000) -> Iterator[Permutation]:
        """Breadth-first closure of the generators; brute force, small groups only."""
        ident = Permutation.identity(self.degree)
        seen = {ident}
        queue = deque([ident])
        yield ident
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g * x
                if y not in seen:
                    if len(seen) >= limit:
                        raise RuntimeError(f"group closure exceeded {limit} elements")
                    seen.add(y)
                    queue.append(y)
                    yield y
