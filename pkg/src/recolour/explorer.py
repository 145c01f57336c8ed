"""Exhaustive exploration of recolouring graphs C_k(G) and C_L(G).

Two routes through the same state space:

* ``distance`` walks the recolouring graph implicitly with a bidirectional BFS,
  states packed as mixed-radix integers.
* ``StateSpace`` enumerates every proper colouring into numpy arrays and builds
  the single-recolouring adjacency as CSR; ``metrics``, ``components`` and
  ``hamiltonian_cycle`` run on it. Eccentricities come from a bit-parallel BFS
  that advances 64 sources per sweep.

State codes are order preserving: comparing codes compares colourings
lexicographically, so ``StateSpace.codes`` is sorted and lookups are
``searchsorted``.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .colouring import Lists, Palette, Uniform, admissible, is_proper, respects_palette
from .graph_core import Graph, ParseError

__all__ = [
    "BudgetExhausted",
    "RecolouringSequence",
    "DistanceResult",
    "ComponentsReport",
    "MetricsReport",
    "HamiltonResult",
    "VerifyReport",
    "StateSpace",
    "enumerate_colourings",
    "neighbours",
    "distance",
    "components",
    "metrics",
    "eccentricities",
    "hamiltonian_cycle",
    "verify_sequence",
    "format_sequence",
    "parse_sequence",
    "DEFAULT_STATE_BUDGET",
    "DEFAULT_SEARCH_BUDGET",
]

DEFAULT_STATE_BUDGET = 10**8
DEFAULT_SEARCH_BUDGET = 10**9
_BATCH = 64


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class RecolouringSequence:
    start: tuple
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "start", tuple(self.start))
        object.__setattr__(self, "steps", tuple((int(v), int(c)) for v, c in self.steps))

    def __len__(self):
        return len(self.steps)

    def final(self) -> tuple:
        c = list(self.start)
        for v, x in self.steps:
            c[v] = x
        return tuple(c)

    def states(self) -> list[tuple]:
        c = list(self.start)
        out = [tuple(c)]
        for v, x in self.steps:
            c[v] = x
            out.append(tuple(c))
        return out

    def reversed(self) -> "RecolouringSequence":
        """The same walk traversed from its final colouring back to ``start``."""
        states = self.states()
        steps = [(v, states[i][v]) for i, (v, _) in reversed(list(enumerate(self.steps)))]
        return RecolouringSequence(states[-1], steps)


# ---------------------------------------------------------------- encoding


class _Codec:
    """Mixed-radix packing: digit ``v`` is the rank of ``c[v]`` in its admissible list."""

    def __init__(self, allowed: list[tuple[int, ...]]):
        self.allowed = allowed
        self.rank = [{c: r for r, c in enumerate(A)} for A in allowed]
        self.radix = [len(A) for A in allowed]
        w = [1] * len(allowed)
        for v in range(len(allowed) - 2, -1, -1):
            w[v] = w[v + 1] * self.radix[v + 1]
        self.weight = w
        self.total = w[0] * self.radix[0] if allowed else 1

    def encode(self, c: Sequence[int]) -> int:
        return sum(self.rank[v][x] * self.weight[v] for v, x in enumerate(c))

    def decode(self, code: int) -> tuple[int, ...]:
        out = [0] * len(self.radix)
        for v in range(len(self.radix) - 1, -1, -1):
            code, r = divmod(code, self.radix[v])
            out[v] = self.allowed[v][r]
        return tuple(out)


def _validate(g: Graph, palette: Palette, c: Sequence[int], what="colouring"):
    if len(c) != g.n:
        raise ValueError(f"{what} has length {len(c)}, graph has {g.n} vertices")
    if not is_proper(g, c) or not respects_palette(palette, c):
        raise ValueError(f"{what} must be proper and palette-respecting")


# ---------------------------------------------------------------- implicit route


def enumerate_colourings(g: Graph, palette: Palette) -> Iterator[tuple]:
    """Every proper palette-respecting colouring, lexicographically, by backtracking."""
    allowed = admissible(palette, g.n)
    earlier = [[u for u in g.adjacency[v] if u < v] for v in range(g.n)]
    c = [0] * g.n
    if g.n == 0:
        yield ()
        return
    iters = [iter(allowed[0])]
    v = 0
    while iters:
        for x in iters[-1]:
            if all(c[u] != x for u in earlier[v]):
                c[v] = x
                break
        else:
            iters.pop()
            v -= 1
            continue
        if v == g.n - 1:
            yield tuple(c)
        else:
            v += 1
            iters.append(iter(allowed[v]))


def _moves(g: Graph, allowed, c: Sequence[int]):
    for v in range(g.n):
        blocked = {c[u] for u in g.adjacency[v]}
        blocked.add(c[v])
        for x in allowed[v]:
            if x not in blocked:
                yield v, x


def neighbours(g: Graph, palette: Palette, c: Sequence[int]) -> list[tuple]:
    _validate(g, palette, c)
    allowed = admissible(palette, g.n)
    out = []
    for v, x in _moves(g, allowed, c):
        d = list(c)
        d[v] = x
        out.append(tuple(d))
    return out


@dataclass(frozen=True)
class DistanceResult:
    status: str  # "reachable" | "unreachable" | "budget-exhausted"
    distance: Optional[int] = None
    sequence: Optional[RecolouringSequence] = None
    visited: int = 0


def distance(
    g: Graph,
    palette: Palette,
    a: Sequence[int],
    b: Sequence[int],
    budget: Optional[int] = None,
    with_sequence: bool = True,
) -> DistanceResult:
    """Shortest recolouring distance from ``a`` to ``b`` by bidirectional BFS.

    ``budget`` caps the number of stored states (both directions together).
    When ``with_sequence`` is false only depths are kept.
    """
    _validate(g, palette, a, "start")
    _validate(g, palette, b, "target")
    a, b = tuple(a), tuple(b)
    budget = DEFAULT_STATE_BUDGET if budget is None else budget
    if a == b:
        return DistanceResult("reachable", 0, RecolouringSequence(a) if with_sequence else None, 1)
    codec = _Codec(admissible(palette, g.n))
    ca, cb = codec.encode(a), codec.encode(b)
    # code -> depth, or code -> (depth, parent code, vertex) when a witness is wanted
    sides = [{ca: (0, None, None)}, {cb: (0, None, None)}] if with_sequence else [{ca: 0}, {cb: 0}]
    fronts = [[ca], [cb]]
    depth = [0, 0]

    def depth_of(entry):
        return entry[0] if with_sequence else entry

    while fronts[0] and fronts[1]:
        s = 0 if len(fronts[0]) <= len(fronts[1]) else 1
        own, other = sides[s], sides[1 - s]
        nxt = []
        best = None
        for code in fronts[s]:
            col = codec.decode(code)
            for v, x in _moves(g, codec.allowed, col):
                t = code + (codec.rank[v][x] - codec.rank[v][col[v]]) * codec.weight[v]
                if t in own:
                    continue
                own[t] = (depth[s] + 1, code, v) if with_sequence else depth[s] + 1
                nxt.append(t)
                if t in other:
                    total = depth[s] + 1 + depth_of(other[t])
                    if best is None or (total, t) < best:
                        best = (total, t)
            if len(sides[0]) + len(sides[1]) > budget:
                return DistanceResult("budget-exhausted", visited=len(sides[0]) + len(sides[1]))
        depth[s] += 1
        fronts[s] = nxt
        if best is not None:
            total, meet = best
            seq = None
            if with_sequence:
                seq = _stitch(codec, sides, a, meet)
            return DistanceResult("reachable", total, seq, len(sides[0]) + len(sides[1]))
    return DistanceResult("unreachable", visited=len(sides[0]) + len(sides[1]))


def _stitch(codec: _Codec, sides, start, meet) -> RecolouringSequence:
    fwd, bwd = sides
    steps = []
    code = meet
    while fwd[code][1] is not None:
        _, parent, v = fwd[code]
        steps.append((v, codec.decode(code)[v]))
        code = parent
    steps.reverse()
    code = meet
    while bwd[code][1] is not None:
        _, parent, v = bwd[code]
        steps.append((v, codec.decode(parent)[v]))
        code = parent
    return RecolouringSequence(start, steps)


# ---------------------------------------------------------------- explicit route


class StateSpace:
    """All proper colourings of ``g`` under ``palette`` plus their adjacency (CSR).

    ``colours[i]`` is the i-th colouring in lexicographic order and ``codes[i]`` its
    packed code. ``indptr``/``indices`` list neighbours of state ``i`` as
    ``indices[indptr[i]:indptr[i+1]]``.
    """

    def __init__(self, g: Graph, palette: Palette, budget: Optional[int] = None):
        self.graph = g
        self.palette = palette
        budget = DEFAULT_STATE_BUDGET if budget is None else budget
        allowed = admissible(palette, g.n)
        self.codec = codec = _Codec(allowed)
        if codec.total >= 2**62:
            raise ValueError("state space too large to index with 64-bit codes")
        dtype = np.uint8 if max((max(A) for A in allowed), default=1) < 256 else np.uint16
        ranks = np.zeros((1, 0), dtype=np.uint8)
        for v in range(g.n):
            blocks = []
            earlier = [u for u in g.adjacency[v] if u < v]
            for r, x in enumerate(allowed[v]):
                ok = np.ones(len(ranks), dtype=bool)
                for u in earlier:
                    ok &= _colour_col(ranks, u, allowed) != x
                rows = ranks[ok]
                blocks.append(np.hstack([rows, np.full((len(rows), 1), r, dtype=np.uint8)]))
            ranks = np.vstack(blocks) if blocks else np.zeros((0, v + 1), dtype=np.uint8)
            if len(ranks) > budget:
                raise BudgetExhausted(f"more than {budget} partial colourings")
        weights = np.array(codec.weight, dtype=np.int64)
        codes = ranks.astype(np.int64) @ weights if g.n else np.zeros(len(ranks), np.int64)
        order = np.argsort(codes, kind="stable")
        self.codes = codes[order]
        self.ranks = ranks[order]
        self.colours = np.empty(self.ranks.shape, dtype=dtype)
        for v in range(g.n):
            self.colours[:, v] = np.asarray(allowed[v], dtype=dtype)[self.ranks[:, v]]
        self._build_edges(allowed, weights)

    def _build_edges(self, allowed, weights):
        g = self.graph
        src_parts, dst_parts = [], []
        cols = self.colours
        for v in range(g.n):
            for r, x in enumerate(allowed[v]):
                ok = cols[:, v] != x
                for u in g.adjacency[v]:
                    ok &= cols[:, u] != x
                src = np.nonzero(ok)[0]
                if not len(src):
                    continue
                target = self.codes[src] + (r - self.ranks[src, v].astype(np.int64)) * weights[v]
                src_parts.append(src.astype(np.int32))
                dst_parts.append(np.searchsorted(self.codes, target).astype(np.int32))
        n_states = len(self.codes)
        if src_parts:
            src = np.concatenate(src_parts)
            dst = np.concatenate(dst_parts)
            order = np.argsort(src, kind="stable")
            self.indices = dst[order]
            counts = np.bincount(src, minlength=n_states)
        else:
            self.indices = np.zeros(0, dtype=np.int32)
            counts = np.zeros(n_states, dtype=np.int64)
        self.indptr = np.zeros(n_states + 1, dtype=np.int64)
        np.cumsum(counts, out=self.indptr[1:])
        self.degree = counts

    def __len__(self):
        return len(self.codes)

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    def index_of(self, c: Sequence[int]) -> int:
        try:
            code = self.codec.encode(c)
        except (KeyError, IndexError):
            raise ValueError("colouring not in the state space") from None
        i = int(np.searchsorted(self.codes, code))
        if i >= len(self.codes) or self.codes[i] != code:
            raise ValueError("colouring not in the state space")
        return i

    def colouring(self, i: int) -> tuple:
        return tuple(int(x) for x in self.colours[i])

    def neighbour_ids(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def canonical_ids(self) -> np.ndarray:
        """States whose colours first appear in the order 1, 2, 3, ... along the vertices."""
        if not isinstance(self.palette, Uniform):
            raise ValueError("colour symmetry needs a uniform palette")
        cols = self.colours.astype(np.int16)
        if cols.shape[1] == 0:
            return np.arange(len(cols))
        prev = np.zeros(len(cols), dtype=np.int16)
        ok = np.ones(len(cols), dtype=bool)
        for v in range(cols.shape[1]):
            ok &= cols[:, v] <= prev + 1
            np.maximum(prev, cols[:, v], out=prev)
        return np.nonzero(ok)[0]

    def distances_from(self, source: int) -> np.ndarray:
        """BFS distances from one state; -1 where unreachable."""
        dist = np.full(len(self), -1, dtype=np.int64)
        dist[source] = 0
        frontier = np.zeros(len(self), dtype=bool)
        frontier[source] = True
        seen = frontier.copy()
        level = 0
        while True:
            new = _spread(self, frontier) & ~seen
            if not new.any():
                return dist
            level += 1
            dist[new] = level
            seen |= new
            frontier = new


def _colour_col(ranks, u, allowed):
    return np.asarray(allowed[u])[ranks[:, u]]


def _spread(space: StateSpace, frontier: np.ndarray) -> np.ndarray:
    """OR of ``frontier`` over each state's neighbours (works for bool or uint64)."""
    out = np.zeros_like(frontier)
    if not len(space.indices):
        return out
    has = space.degree > 0
    starts = space.indptr[:-1][has]
    out[has] = np.bitwise_or.reduceat(frontier[space.indices], starts)
    return out


def _ecc_batch(space: StateSpace, sources: np.ndarray) -> np.ndarray:
    bits = np.left_shift(np.uint64(1), np.arange(len(sources), dtype=np.uint64))
    visited = np.zeros(len(space), dtype=np.uint64)
    visited[sources] = bits
    frontier = visited.copy()
    ecc = np.zeros(len(sources), dtype=np.int64)
    level = 0
    while True:
        new = _spread(space, frontier) & ~visited
        alive = int(np.bitwise_or.reduce(new))
        if not alive:
            return ecc
        level += 1
        for j in range(len(sources)):
            if alive >> j & 1:
                ecc[j] = level
        visited |= new
        frontier = new


def eccentricities(space: StateSpace, sources: Sequence[int], workers: int = 1) -> np.ndarray:
    """Eccentricity of each source within its component, 64 sources per sweep.

    Batches are fixed by position, so the result does not depend on ``workers``.
    """
    sources = np.asarray(sources, dtype=np.int64)
    batches = [sources[i : i + _BATCH] for i in range(0, len(sources), _BATCH)]
    if workers > 1 and len(batches) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _ecc_batch(space, b), batches))
    else:
        parts = [_ecc_batch(space, b) for b in batches]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


@dataclass(frozen=True)
class ComponentsReport:
    count: int
    sizes: tuple
    representatives: tuple  # lexicographically smallest colouring per component


def _labels(space: StateSpace):
    n = len(space)
    if n == 0:
        return 0, np.zeros(0, dtype=np.int32)
    data = np.ones(len(space.indices), dtype=np.int8)
    mat = csr_matrix((data, space.indices, space.indptr), shape=(n, n))
    return connected_components(mat, directed=False)


def components(g: Graph, palette: Palette, budget: Optional[int] = None, space: Optional[StateSpace] = None) -> ComponentsReport:
    space = space or StateSpace(g, palette, budget)
    count, labels = _labels(space)
    if count == 0:
        return ComponentsReport(0, (), ())
    first = np.full(count, len(space), dtype=np.int64)
    np.minimum.at(first, labels, np.arange(len(space)))
    order = np.argsort(first, kind="stable")
    sizes = np.bincount(labels, minlength=count)
    return ComponentsReport(
        count,
        tuple(int(sizes[c]) for c in order),
        tuple(space.colouring(int(first[c])) for c in order),
    )


@dataclass(frozen=True)
class MetricsReport:
    node_count: int
    connected: bool
    component_count: int
    diameter: float  # math.inf when disconnected
    radius: float
    witness_pair: Optional[tuple] = None
    sources: int = 0

    def to_dict(self) -> dict:
        def num(x):
            return "infinite" if x == math.inf else x

        return {
            "nodes": self.node_count,
            "components": self.component_count,
            "connected": self.connected,
            "diameter": num(self.diameter),
            "radius": num(self.radius),
            "witness": None if self.witness_pair is None else [list(c) for c in self.witness_pair],
        }


def metrics(
    g: Graph,
    palette: Palette,
    use_colour_symmetry: bool = False,
    budget: Optional[int] = None,
    workers: int = 1,
    space: Optional[StateSpace] = None,
) -> MetricsReport:
    """Exact diameter and radius of the recolouring graph (one BFS per source).

    With ``use_colour_symmetry`` only colourings in first-occurrence canonical
    form are used as sources; colour permutations are automorphisms of C_k(G),
    so the extreme eccentricities are unchanged.
    """
    if use_colour_symmetry and not isinstance(palette, Uniform):
        raise ValueError("colour symmetry is only valid for a uniform palette")
    space = space or StateSpace(g, palette, budget)
    n = len(space)
    count, _ = _labels(space)
    if n == 0:
        return MetricsReport(0, False, 0, math.inf, math.inf)
    if count > 1:
        return MetricsReport(n, False, count, math.inf, math.inf)
    sources = space.canonical_ids() if use_colour_symmetry else np.arange(n)
    ecc = eccentricities(space, sources, workers)
    j = int(np.argmax(ecc))
    s = int(sources[j])
    dist = space.distances_from(s)
    far = int(np.nonzero(dist == ecc[j])[0][0])
    return MetricsReport(
        n, True, 1, int(ecc.max()), int(ecc.min()), (space.colouring(s), space.colouring(far)), len(sources)
    )


# ---------------------------------------------------------------- Hamiltonicity


@dataclass(frozen=True)
class HamiltonResult:
    status: str  # "found" | "none" | "budget-exhausted"
    cycle: Optional[tuple] = None
    search_nodes: int = 0


def hamiltonian_cycle(
    g: Graph,
    palette: Palette,
    budget: Optional[int] = None,
    space: Optional[StateSpace] = None,
) -> HamiltonResult:
    """Search for a Hamiltonian cycle of the recolouring graph.

    A seeded rotation-extension walk runs first and usually finds a cycle
    quickly; it can never prove absence, so the rest of the budget goes to an
    exact backtracking search. Backtracking pruning: an unvisited state whose
    usable neighbours (unvisited or path ends) drop below two kills the
    branch; an unvisited neighbour of the tail with exactly two usable
    neighbours is a forced next step; the unvisited states must stay connected
    to the tail. Otherwise candidates are tried fewest-usable-neighbours first.
    ``budget`` counts rotation steps plus search-tree nodes.
    """
    budget = DEFAULT_SEARCH_BUDGET if budget is None else budget
    space = space or StateSpace(g, palette)
    n = len(space)
    if n < 3:
        return HamiltonResult("none")
    if _labels(space)[0] > 1 or int(space.degree.min()) < 2:
        return HamiltonResult("none")
    adj = [space.neighbour_ids(i).tolist() for i in range(n)]
    quick = min(budget // 2, _ROTATION_STEPS)
    cycle, spent = _rotation_extension(adj, quick, seed=n)
    if cycle is None:
        cycle, more = _ham_search(adj, budget - spent)
        spent += more
    if cycle is None:
        return HamiltonResult("none", search_nodes=spent)
    if cycle == "budget":
        return HamiltonResult("budget-exhausted", search_nodes=spent)
    return HamiltonResult("found", tuple(space.colouring(i) for i in cycle), spent)


_ROTATION_STEPS = 2_000_000


def _rotation_extension(adj, max_steps, seed):
    """Posa-style rotations: extend the tail when possible, else reverse a suffix."""
    rng = random.Random(seed)
    n = len(adj)
    closing = set(adj[0])
    path = [0]
    pos = {0: 0}
    for step in range(max_steps):
        t = path[-1]
        free = [w for w in adj[t] if w not in pos]
        if free:
            w = rng.choice(free)
            pos[w] = len(path)
            path.append(w)
            continue
        if len(path) == n and t in closing:
            return path, step
        i = pos[rng.choice(adj[t])]
        if i == len(path) - 2:
            continue
        path[i + 1 :] = path[:i:-1]
        for j in range(i + 1, len(path)):
            pos[path[j]] = j
    return None, max_steps


def _ham_search(adj, budget):
    n = len(adj)
    start = 0
    on_path = [False] * n
    on_path[start] = True
    usable = [len(a) for a in adj]
    path = [start]
    start_adj = set(adj[start])

    def candidates(x):
        free = [w for w in adj[x] if not on_path[w]]
        forced = [w for w in free if usable[w] == 2]
        # the start keeps its closing edge, so two forced neighbours are fine there
        if len(forced) > (2 if x == start else 1):
            return []
        if forced:
            return forced
        return sorted(free, key=lambda w: (usable[w], w))

    def remainder_connected(x):
        # every unvisited state must be reachable from the tail through unvisited states
        left = n - len(path)
        seen = {x}
        stack = [x]
        reached = 0
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not on_path[w] and w not in seen:
                    seen.add(w)
                    reached += 1
                    stack.append(w)
        return reached == left

    frames = [[candidates(start), 0]]
    undo = []
    spent = 0
    while frames:
        frame = frames[-1]
        cands, i = frame
        if i == len(cands):
            frames.pop()
            if undo:
                for w in undo.pop():
                    usable[w] += 1
                on_path[path.pop()] = False
            continue
        frame[1] = i + 1
        x = cands[i]
        spent += 1
        if spent > budget:
            return "budget", spent
        t = path[-1]
        on_path[x] = True
        path.append(x)
        dec = []
        dead = False
        if t != start:
            for w in adj[t]:
                if not on_path[w]:
                    usable[w] -= 1
                    dec.append(w)
                    if usable[w] < 2:
                        dead = True
        if not dead:
            if len(path) == n:
                if x in start_adj:
                    return list(path), spent
                dead = True
            elif not any(not on_path[w] for w in adj[start]):
                # the closing edge must reach start from a still-unvisited state
                dead = True
            elif not remainder_connected(x):
                dead = True
        nxt = [] if dead else candidates(x)
        if dead or not nxt:
            for w in dec:
                usable[w] += 1
            on_path[path.pop()] = False
            continue
        undo.append(dec)
        frames.append([nxt, 0])
    return None, spent


# ---------------------------------------------------------------- verification


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    length: int
    per_vertex_counts: tuple
    failure_step: Optional[int] = None
    reason: str = ""


def verify_sequence(g: Graph, palette: Palette, seq: RecolouringSequence, target: Sequence[int]) -> VerifyReport:
    """Replay ``seq`` and check every prefix; the first bad step index is reported.

    ``failure_step == len(seq)`` means all steps were legal but the walk does not
    end at ``target``.
    """
    counts = [0] * g.n
    steps = seq.steps
    if len(seq.start) != g.n or not is_proper(g, seq.start) or not respects_palette(palette, seq.start):
        return VerifyReport(False, len(steps), tuple(counts), 0, "start is not a valid colouring")
    allowed = [set(A) for A in admissible(palette, g.n)]
    c = list(seq.start)
    for i, (v, x) in enumerate(steps):
        if not 0 <= v < g.n:
            return VerifyReport(False, len(steps), tuple(counts), i, f"vertex {v} out of range")
        if c[v] == x:
            return VerifyReport(False, len(steps), tuple(counts), i, f"vertex {v} already has colour {x}")
        if x not in allowed[v]:
            return VerifyReport(False, len(steps), tuple(counts), i, f"colour {x} not admissible at {v}")
        if any(c[u] == x for u in g.adjacency[v]):
            return VerifyReport(False, len(steps), tuple(counts), i, f"colour {x} clashes at {v}")
        c[v] = x
        counts[v] += 1
    if tuple(c) != tuple(target):
        return VerifyReport(False, len(steps), tuple(counts), len(steps), "walk does not end at target")
    return VerifyReport(True, len(steps), tuple(counts))


# ---------------------------------------------------------------- text format


def format_sequence(seq: RecolouringSequence) -> str:
    lines = [f"seq {len(seq)}"] + [f"r {v} {x}" for v, x in seq.steps]
    return "\n".join(lines) + "\n"


def parse_sequence(text: str, start: Sequence[int]) -> RecolouringSequence:
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), 1) if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0][1][0] != "seq" or len(lines[0][1]) != 2:
        raise ParseError("expected 'seq <len>' header", lines[0][0] if lines else 1)
    try:
        declared = int(lines[0][1][1])
    except ValueError as exc:
        raise ParseError(str(exc), lines[0][0]) from None
    steps = []
    for lineno, tok in lines[1:]:
        if tok[0] != "r" or len(tok) != 3:
            raise ParseError("step lines are 'r <vertex> <colour>'", lineno)
        try:
            steps.append((int(tok[1]), int(tok[2])))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if len(steps) != declared:
        raise ParseError(f"header says {declared} steps, found {len(steps)}", lines[0][0])
    return RecolouringSequence(tuple(start), steps)


def state_budget_from_env(default: int = DEFAULT_STATE_BUDGET) -> int:
    raw = os.environ.get("RECOLOUR_BUDGET")
    return int(raw) if raw else default
