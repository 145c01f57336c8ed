"""Graphs, structural statistics and the constructors for every family used here.

Vertices are 0-based indices; colours are positive integers. A graph may carry
a bipartition ``(U, V)``; constructed bipartite families always store theirs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

__all__ = [
    "Graph",
    "GraphStats",
    "ParseError",
    "complete_bipartite",
    "complete_bipartite_minus_matching",
    "path",
    "layered_example",
    "forcing_gadget",
    "path_plus_chain",
    "k18_list_instance",
    "frozen_list_instance",
    "matching_number",
    "degeneracy",
    "graph_stats",
    "two_colour",
    "format_graph",
    "parse_graph",
]


class ParseError(ValueError):
    """Malformed text input; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.message = message
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    bipartition: Optional[tuple[frozenset, frozenset]] = field(default=None)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.bipartition is not None:
            U, V = (frozenset(s) for s in self.bipartition)
            if U & V or len(U) + len(V) != self.n or (U | V) != frozenset(range(self.n)):
                raise ValueError("bipartition must split the vertex set")
            for u, v in norm:
                if (u in U) == (v in U):
                    raise ValueError(f"edge {(u, v)} inside one side of the bipartition")
            object.__setattr__(self, "bipartition", (U, V))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, bipartition=None) -> "Graph":
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen), bipartition)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    matching_number: int
    degeneracy: int


# ---------------------------------------------------------------- families


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise ValueError("both part sizes must be positive")
    U = range(p)
    V = range(p, p + q)
    return Graph(p + q, frozenset((u, v) for u in U for v in V), (frozenset(U), frozenset(V)))


def complete_bipartite_minus_matching(m: int) -> Graph:
    """K_{m,m} with the perfect matching ``{i, m+i}`` removed."""
    if m < 2:
        raise ValueError("m must be at least 2")
    edges = frozenset((i, m + j) for i in range(m) for j in range(m) if i != j)
    return Graph(2 * m, edges, (frozenset(range(m)), frozenset(range(m, 2 * m))))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    even = frozenset(range(0, n, 2))
    odd = frozenset(range(1, n, 2))
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)), (even, odd))


def layered_example() -> Graph:
    """The 10-vertex bipartite graph built in four layers ``r | a1..a3 | b1..b3 | c1..c3``.

    ``r`` sees every ``a_i``; ``a_i ~ b_j`` and ``b_i ~ c_j`` whenever ``i != j``.
    This is K_{4,4} minus a perfect matching with one vertex split into three,
    each copy keeping two of the original three neighbours.
    """
    r, a, b, c = 0, (1, 2, 3), (4, 5, 6), (7, 8, 9)
    edges = [(r, x) for x in a]
    edges += [(a[i], b[j]) for i in range(3) for j in range(3) if i != j]
    edges += [(b[i], c[j]) for i in range(3) for j in range(3) if i != j]
    return Graph.from_edges(10, edges, (frozenset((r,) + b), frozenset(a + c)))


def forcing_gadget(t: int, s: int):
    """Complete bipartite gadget whose lists pin the small side to its first colours.

    Small-side vertex ``i`` gets ``{i*s+1, ..., (i+1)*s}``. Each of the ``s**t - 1``
    large-side vertices gets a distinct transversal of those lists; the all-first
    transversal is left out, so the only extendable small-side assignment is
    ``(1, s+1, 2s+1, ...)``.

    Returns ``(graph, lists, special_vertices)``.
    """
    if t < 2 or s < 2:
        raise ValueError("forcing gadget needs t >= 2 and s >= 2")
    small = [frozenset(range(i * s + 1, (i + 1) * s + 1)) for i in range(t)]
    first = tuple(i * s + 1 for i in range(t))
    transversals = [tr for tr in itertools.product(*(sorted(L) for L in small)) if tr != first]
    big = len(transversals)
    g = complete_bipartite(t, big)
    lists = tuple(small) + tuple(frozenset(tr) for tr in transversals)
    return g, lists, list(range(t))


def path_plus_chain(k: int):
    """Path ``P_k`` with a (4,4) forcing gadget hung off every path vertex.

    Path vertex ``i`` is joined to the special vertex (small-side vertex 0) of
    gadget copy ``i``; path vertices get the list ``{1, 17, 18, 19}``.
    Returns ``(graph, lists)``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    gadget, glists, special = forcing_gadget(4, 4)
    size = gadget.n
    edges = [(i, i + 1) for i in range(k - 1)]
    lists: list[frozenset] = [frozenset({1, 17, 18, 19})] * k
    for copy in range(k):
        off = k + copy * size
        edges += [(off + u, off + v) for u, v in gadget.edges]
        edges.append((copy, off + special[0]))
        lists.extend(glists)
    n = k + k * size
    return Graph.from_edges(n, edges), tuple(lists)


def k18_list_instance():
    """K_{18,18} with 4-lists from ``[5]`` and the two list-colourings that swap colours.

    One ``u in U`` and one ``v in V`` per triple ``(i, j, l)`` with ``i in {1,3,5}``,
    ``j in {2,4}``, ``l in [5] - {i, j}``; both get list ``[5] - {l}``, and
    ``alpha(u) = i = beta(v)``, ``beta(u) = j = alpha(v)``.
    Returns ``(graph, lists, alpha, beta)``.
    """
    triples = [(i, j, l) for i in (1, 3, 5) for j in (2, 4) for l in range(1, 6) if l not in (i, j)]
    p = len(triples)
    g = complete_bipartite(p, p)
    lists = [None] * (2 * p)
    alpha = [0] * (2 * p)
    beta = [0] * (2 * p)
    for t, (i, j, l) in enumerate(triples):
        u, v = t, p + t
        lists[u] = lists[v] = frozenset(c for c in range(1, 6) if c != l)
        alpha[u], beta[u] = i, j
        alpha[v], beta[v] = j, i
    return g, tuple(lists), tuple(alpha), tuple(beta)


def frozen_list_instance(m: int):
    """K_{m,m} minus a perfect matching with lists ``[m] - {i}`` and a frozen colouring."""
    if m < 4:
        raise ValueError("m must be at least 4")
    g = complete_bipartite_minus_matching(m)
    lists = tuple(frozenset(c for c in range(1, m + 1) if c != i) for i in range(1, m + 1)) * 2
    phi = tuple((i % m) + 1 for i in range(1, m + 1)) * 2
    return g, lists, phi


# ---------------------------------------------------------------- statistics


def two_colour(g: Graph) -> Optional[tuple[frozenset, frozenset]]:
    """A bipartition found by BFS 2-colouring, or None if ``g`` has an odd cycle."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    U = frozenset(v for v in range(g.n) if side[v] == 0)
    return U, frozenset(range(g.n)) - U


def _bipartite_matching(g: Graph, U) -> int:
    # Kuhn's augmenting paths; iterative to stay clear of the recursion limit.
    match_of = {}
    size = 0
    for root in sorted(U):
        seen = set()
        stack = [(root, iter(g.adjacency[root]))]
        trail = []
        found = False
        while stack and not found:
            u, it = stack[-1]
            for v in it:
                if v in seen:
                    continue
                seen.add(v)
                if v not in match_of:
                    trail.append((u, v))
                    found = True
                    break
                trail.append((u, v))
                w = match_of[v]
                stack.append((w, iter(g.adjacency[w])))
                break
            else:
                stack.pop()
                if trail:
                    trail.pop()
        if found:
            for u, v in trail:
                match_of[v] = u
            size += 1
    return size


def _exhaustive_matching(g: Graph) -> int:
    edges = g.sorted_edges()
    best = 0

    def grow(start, used, count):
        nonlocal best
        best = max(best, count)
        if count + (g.n - len(used)) // 2 <= best:
            return
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if u not in used and v not in used:
                grow(idx + 1, used | {u, v}, count + 1)

    grow(0, frozenset(), 0)
    return best


def matching_number(g: Graph) -> int:
    parts = g.bipartition or two_colour(g)
    if parts is not None:
        return _bipartite_matching(g, parts[0])
    if g.n > 20:
        raise ValueError("matching number of non-bipartite graphs is only supported for n <= 20")
    return _exhaustive_matching(g)


def degeneracy(g: Graph) -> int:
    deg = [len(a) for a in g.adjacency]
    removed = [False] * g.n
    best = 0
    for _ in range(g.n):
        v = min((d, v) for v, d in enumerate(deg) if not removed[v])[1]
        best = max(best, deg[v])
        removed[v] = True
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
    return best


def graph_stats(g: Graph) -> GraphStats:
    return GraphStats(g.n, g.m, matching_number(g), degeneracy(g))


# ---------------------------------------------------------------- text format


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n}"]
    if g.bipartition is not None:
        U = sorted(g.bipartition[0])
        lines.append(" ".join(["parts", str(len(U))] + [str(u) for u in U]))
    lines += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    if text and not text.endswith("\n"):
        raise ParseError("missing trailing newline", text.count("\n") + 1)
    n = None
    parts = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        try:
            if tok[0] == "graph":
                if n is not None or len(tok) != 2:
                    raise ParseError("bad header", lineno)
                n = int(tok[1])
            elif n is None:
                raise ParseError("expected 'graph <n>' header", lineno)
            elif tok[0] == "parts":
                count = int(tok[1])
                U = [int(x) for x in tok[2:]]
                if parts is not None or len(U) != count:
                    raise ParseError("bad parts line", lineno)
                parts = (frozenset(U), frozenset(range(n)) - frozenset(U))
            elif tok[0] == "e":
                if len(tok) != 3:
                    raise ParseError("edge line needs two vertices", lineno)
                edges.append((int(tok[1]), int(tok[2]), lineno))
            else:
                raise ParseError(f"unknown record {tok[0]!r}", lineno)
        except (IndexError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), lineno) from None
    if n is None:
        raise ParseError("empty graph file", 1)
    seen = set()
    for u, v, lineno in edges:
        key = (min(u, v), max(u, v))
        if u == v or not (0 <= u < n and 0 <= v < n) or key in seen:
            raise ParseError(f"invalid edge {u} {v}", lineno)
        seen.add(key)
    try:
        return Graph(n, frozenset(seen), parts)
    except ValueError as exc:
        raise ParseError(str(exc), 1) from None
