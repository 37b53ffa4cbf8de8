"""Simple undirected graphs: the type, small constructors, IO, and an exact
maximum-clique search used as a combinatorial oracle."""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with edges stored as (u, v), u < v."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for a graph on {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        """Build a graph, normalizing endpoint order and rejecting loops."""
        edges = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            edges.add((u, v))
        return cls(n, frozenset(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_regular(self, d: int) -> bool:
        return all(x == d for x in self.degrees()) if self.n else True

    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for u, v in self.edges:
            A[u, v] = 1.0
            A[v, u] = 1.0
        return A

    def neighbor_masks(self) -> list[int]:
        """Adjacency as per-vertex bitmasks, for bitset clique search."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks


def complement(G: Graph) -> Graph:
    edges = frozenset(
        (u, v) for u, v in combinations(range(G.n), 2) if (u, v) not in G.edges
    )
    return Graph(G.n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(*sizes: int) -> Graph:
    """Complete multipartite graph with the given part sizes."""
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    bounds = np.cumsum((0,) + sizes)
    part = np.zeros(int(bounds[-1]), dtype=int)
    for i in range(len(sizes)):
        part[bounds[i] : bounds[i + 1]] = i
    n = int(bounds[-1])
    edges = [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
    return Graph.from_edges(n, edges)


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def line_graph(G: Graph) -> Graph:
    """Graph on the edges of G, adjacent when they share an endpoint."""
    es = sorted(G.edges)
    pairs = []
    for i, e in enumerate(es):
        for j in range(i + 1, len(es)):
            f = es[j]
            if e[0] in f or e[1] in f:
                pairs.append((i, j))
    return Graph.from_edges(len(es), pairs)


def disjoint_union(*graphs: Graph) -> Graph:
    n = 0
    edges = []
    for G in graphs:
        edges += [(u + n, v + n) for u, v in G.edges]
        n += G.n
    return Graph.from_edges(n, edges)


def random_3regular(n: int, seed: int = 0) -> Graph:
    """Random simple 3-regular graph via the pairing model with whole-pairing
    rejection of loops and repeated edges. Deterministic for a fixed seed."""
    if n < 4 or n % 2 != 0:
        raise ValueError("3-regular graphs need an even vertex count >= 4")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), 3)
    for _ in range(10_000):
        perm = rng.permutation(stubs)
        edges = set()
        ok = True
        for a, b in perm.reshape(-1, 2):
            u, v = int(a), int(b)
            if u == v:
                ok = False
                break
            if u > v:
                u, v = v, u
            if (u, v) in edges:
                ok = False
                break
            edges.add((u, v))
        if ok:
            return Graph(n, frozenset(edges))
    raise RuntimeError("pairing model failed to produce a simple graph")


def maximum_clique(G: Graph) -> tuple[int, ...]:
    """Exact maximum clique by branch and bound over vertex bitsets.

    Candidates are explored in ascending vertex order and the incumbent is
    replaced only on strict improvement, so the returned clique is the
    lexicographically smallest maximum clique.
    """
    if G.n == 0:
        return ()
    masks = G.neighbor_masks()
    best: list[int] = []

    def expand(current: list[int], cand: int):
        nonlocal best
        if cand == 0:
            if len(current) > len(best):
                best = current.copy()
            return
        while cand:
            if len(current) + cand.bit_count() <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            current.append(v)
            # restrict to neighbors of v above v: each clique is visited once,
            # as its sorted tuple
            expand(current, cand & masks[v] & ~((1 << (v + 1)) - 1))
            current.pop()
            cand &= cand - 1

    expand([], (1 << G.n) - 1)
    return tuple(best)


def graph_to_text(G: Graph) -> str:
    lines = [f"{G.n} {G.edge_count}"]
    lines += [f"{u} {v}" for u, v in sorted(G.edges)]
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Parse the plain-text graph format: a header line "n m" followed by
    exactly m lines "u v" with 0 <= u < v < n. Duplicate, out-of-range, or
    malformed lines are rejected."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line {lines[0]!r}; expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"bad header line {lines[0]!r}; expected two integers") from None
    if n < 0 or m < 0:
        raise ValueError("header counts must be nonnegative")
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"bad edge line {ln!r}") from None
        if not (0 <= u < v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if (u, v) in edges:
            raise ValueError(f"duplicate edge ({u}, {v})")
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_graph_text(text)
    except ValueError as e:
        raise ValueError(f"{path}: {e}") from None


def save_graph(G: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_to_text(G))
