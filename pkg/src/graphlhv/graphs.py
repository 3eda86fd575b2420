"""Undirected graphs on 1-indexed nodes: named families and structural queries."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class GraphFormatError(ValueError):
    """A graph description is malformed (bad endpoint, self-loop, duplicate edge)."""


class UnsupportedSizeError(ValueError):
    """An input exceeds the documented guard of an exact algorithm."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with nodes 1..n and canonically sorted edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphFormatError(f"node count must be a positive integer, got {self.n!r}")
        seen: set[tuple[int, int]] = set()
        canon = []
        for pair in self.edges:
            try:
                u, v = pair
            except (TypeError, ValueError):
                raise GraphFormatError(f"edge {pair!r} is not a node pair") from None
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphFormatError(f"edge ({u}, {v}) leaves the node range 1..{self.n}")
            if u == v:
                raise GraphFormatError(f"self-loop at node {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            canon.append(key)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """neighbors[j - 1] is the sorted neighborhood of node j."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u - 1].append(v)
            nbrs[v - 1].append(u)
        return tuple(tuple(sorted(b)) for b in nbrs)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """neighbor_masks[j - 1] has bit k-1 set for every neighbor k of node j."""
        masks = []
        for block in self.neighbors:
            m = 0
            for k in block:
                m |= 1 << (k - 1)
            masks.append(m)
        return tuple(masks)

    def check_node(self, j: int) -> None:
        if not (1 <= j <= self.n):
            raise ValueError(f"node {j} outside 1..{self.n}")

    def neighborhood(self, j: int) -> tuple[int, ...]:
        self.check_node(j)
        return self.neighbors[j - 1]

    def degree(self, j: int) -> int:
        return len(self.neighborhood(j))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighborhood(u)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@dataclass(frozen=True)
class NodeColoring:
    """Total labeling of nodes 1..n, used to restrict automorphisms."""

    labels: tuple

    @classmethod
    def uniform(cls, n: int) -> "NodeColoring":
        return cls(("*",) * n)

    def of(self, j: int) -> object:
        return self.labels[j - 1]


def ring(n: int) -> Graph:
    """Cycle 1-2-...-n-1."""
    if n < 3:
        raise ValueError(f"a ring needs at least 3 nodes, got {n}")
    edges = [(j, j + 1) for j in range(1, n)] + [(n, 1)]
    return Graph(n, tuple(edges))


def chain(n: int) -> Graph:
    """Path 1-2-...-n."""
    if n < 1:
        raise ValueError(f"a chain needs at least 1 node, got {n}")
    return Graph(n, tuple((j, j + 1) for j in range(1, n)))


def star(n: int) -> Graph:
    """Node 1 adjacent to every other node."""
    if n < 1:
        raise ValueError(f"a star needs at least 1 node, got {n}")
    return Graph(n, tuple((1, j) for j in range(2, n + 1)))


def grid(rows: int, cols: int) -> Graph:
    """rows x cols square lattice, row-major numbering (node = (r-1)*cols + c)."""
    if rows < 1 or cols < 1:
        raise ValueError(f"grid dimensions must be positive, got {rows}x{cols}")
    edges = []
    for r in range(1, rows + 1):
        for c in range(1, cols + 1):
            node = (r - 1) * cols + c
            if c < cols:
                edges.append((node, node + 1))
            if r < rows:
                edges.append((node, node + cols))
    return Graph(rows * cols, tuple(edges))


def padded_ring(n: int) -> Graph:
    """Ring of size n - r on nodes 1..n-r plus r = (n - 12) mod 24 isolated nodes."""
    if n < 12:
        raise ValueError(f"padded ring needs at least 12 nodes, got {n}")
    r = (n - 12) % 24
    ring_part = ring(n - r)
    return Graph(n, ring_part.edges)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts 1..a and a+1..a+b."""
    if a < 1 or b < 1:
        raise ValueError(f"part sizes must be positive, got {a}, {b}")
    edges = tuple((u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1))
    return Graph(a + b, edges)


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, tuple(tuple(e) for e in edges))


# Relabeling of the row-major 2x3 grid that numbers the nodes around the
# boundary cycle (top row left to right, bottom row right to left).
CLOCKWISE_2X3 = {1: 1, 2: 2, 3: 3, 4: 6, 5: 5, 6: 4}


def relabel(g: Graph, mapping: Mapping[int, int]) -> Graph:
    """Apply a node bijection to a graph."""
    if sorted(mapping) != list(range(1, g.n + 1)) or sorted(mapping.values()) != list(range(1, g.n + 1)):
        raise ValueError("mapping must be a bijection on 1..n")
    return Graph(g.n, tuple((mapping[u], mapping[v]) for u, v in g.edges))


_FAMILIES = {
    "ring": lambda p: ring(int(p)),
    "chain": lambda p: chain(int(p)),
    "star": lambda p: star(int(p)),
    "padded-ring": lambda p: padded_ring(int(p)),
    "grid": lambda p: grid(*_parse_dims(p)),
    "complete-bipartite": lambda p: complete_bipartite(*_parse_dims(p)),
}


def _parse_dims(p: str) -> tuple[int, int]:
    a, sep, b = p.partition("x")
    if not sep:
        raise GraphFormatError(f"expected AxB dimensions, got {p!r}")
    return int(a), int(b)


def named_graph(spec: str) -> Graph:
    """Build a graph from a family spec such as 'ring:12' or 'grid:2x3'."""
    name, sep, param = spec.partition(":")
    if not sep or name not in _FAMILIES:
        raise GraphFormatError(
            f"unknown graph spec {spec!r}; expected one of "
            + ", ".join(f"{k}:<param>" for k in sorted(_FAMILIES))
        )
    try:
        return _FAMILIES[name](param)
    except (ValueError, TypeError) as exc:
        raise GraphFormatError(f"bad parameter in graph spec {spec!r}: {exc}") from exc


def graph_from_json(text: str) -> Graph:
    """Parse the JSON graph format {"n": int, "edges": [[u, v], ...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphFormatError('graph JSON must be an object with "n" and "edges"')
    return Graph(data["n"], tuple(tuple(e) for e in data["edges"]))


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json(fh.read())


def ball(g: Graph, j: int, d: int) -> frozenset[int]:
    """Nodes reachable from j along at most d edges, including j itself."""
    g.check_node(j)
    if d < 0:
        raise ValueError(f"distance must be non-negative, got {d}")
    seen = {j}
    frontier = [j]
    for _ in range(d):
        nxt = [k for u in frontier for k in g.neighborhood(u) if k not in seen]
        if not nxt:
            break
        seen.update(nxt)
        frontier = nxt
    return frozenset(seen)


def connected_component(g: Graph, j: int) -> frozenset[int]:
    return ball(g, j, g.n)


def diameter(g: Graph) -> int:
    """Largest eccentricity over all nodes, taken within each component."""
    best = 0
    for j in range(1, g.n + 1):
        seen = {j}
        frontier = [j]
        depth = 0
        while True:
            nxt = [k for u in frontier for k in g.neighborhood(u) if k not in seen]
            if not nxt:
                break
            seen.update(nxt)
            frontier = nxt
            depth += 1
        best = max(best, depth)
    return best


def automorphisms(g: Graph, coloring: NodeColoring | None = None, max_nodes: int = 12) -> list[tuple[int, ...]]:
    """All node permutations preserving edges and the coloring.

    The search is a complete backtracking enumeration with pruning on degree
    and color, exact for the small graphs this library targets. Permutations
    are returned as tuples p with p[j-1] the image of node j, sorted
    lexicographically; the identity is always present. Raise the guard via
    ``max_nodes`` only for graphs known to be rigid enough to enumerate.
    """
    if g.n > max_nodes:
        raise UnsupportedSizeError(
            f"automorphism search is guarded at {max_nodes} nodes, got {g.n}"
        )
    labels = coloring.labels if coloring is not None else ("*",) * g.n
    if len(labels) != g.n:
        raise ValueError("coloring must label every node")
    degs = [g.degree(j) for j in range(1, g.n + 1)]
    adj = [set(g.neighbors[j]) for j in range(g.n)]

    n = g.n
    image = [0] * (n + 1)
    used = [False] * (n + 1)
    found: list[tuple[int, ...]] = []

    def place(u: int) -> None:
        if u > n:
            found.append(tuple(image[1:]))
            return
        for v in range(1, n + 1):
            if used[v] or labels[v - 1] != labels[u - 1] or degs[v - 1] != degs[u - 1]:
                continue
            ok = True
            for w in range(1, u):
                if (w in adj[u - 1]) != (image[w] in adj[v - 1]):
                    ok = False
                    break
            if ok:
                used[v] = True
                image[u] = v
                place(u + 1)
                used[v] = False
        image[u] = 0

    place(1)
    return sorted(found)


def orbits(n: int, perms: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Orbits of nodes 1..n under a set of permutations, sorted by smallest member."""
    parent = list(range(n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in perms:
        for j in range(1, n + 1):
            ra, rb = find(j), find(p[j - 1])
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for j in range(1, n + 1):
        groups.setdefault(find(j), []).append(j)
    return tuple(sorted((tuple(sorted(v)) for v in groups.values()), key=lambda t: t[0]))


def is_chain(g: Graph) -> bool:
    """True when g is exactly the path 1-2-...-n."""
    return g.edges == chain(g.n).edges
