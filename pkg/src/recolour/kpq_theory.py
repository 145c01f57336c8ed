"""Complete bipartite graphs: diameter formulas, far-apart pairs, constructive recolouring.

Vertices of ``K_{p,q}`` are numbered as in ``complete_bipartite``: the small
part ``U`` is ``0..p-1`` and ``V`` is ``p..p+q-1``. Formula arithmetic is done in
``Fraction`` and floored only at the end.

``recolour_kpq`` runs a portfolio of explicit strategies (spare colour,
split-swap, the two three-colour methods, and the two induction moves on a
shared colour) and returns the shortest sequence. Every candidate is replayed
move by move against the running colouring, so an invalid step raises instead
of being returned.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .colouring import is_proper
from .explorer import RecolouringSequence
from .graph_core import Graph, complete_bipartite

__all__ = [
    "HIGH",
    "MIDDLE",
    "LOW",
    "KpqInstance",
    "DiameterInterval",
    "ExtremalPairSpec",
    "InductionStats",
    "regime",
    "regime_expressions",
    "upper_bound_formula",
    "diameter_interval",
    "extremal_pair",
    "induction_stats",
    "spare_colour_sequence",
    "split_swap_sequence",
    "recolour_kpq",
    "regime_table",
    "format_regime_table",
]

HIGH, MIDDLE, LOW = "HIGH", "MIDDLE", "LOW"

SPLIT_SWAP_EXHAUSTIVE = 1000
SPLIT_SWAP_SAMPLE = 1000


@dataclass(frozen=True)
class KpqInstance:
    """``K_{p,q}`` with ``k`` colours; parts are swapped so that ``p <= q``."""

    p: int
    q: int
    k: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("both parts need at least one vertex")
        if self.k < 3:
            raise ValueError("k must be at least 3")
        if self.p > self.q:
            p, q = self.q, self.p
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def U(self) -> tuple:
        return tuple(range(self.p))

    @property
    def V(self) -> tuple:
        return tuple(range(self.p, self.p + self.q))

    def graph(self) -> Graph:
        return complete_bipartite(self.p, self.q)


@dataclass(frozen=True)
class DiameterInterval:
    lower: int
    upper: int
    regime: str
    g_slack: int
    exact: bool

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "regime": self.regime,
            "g_slack": self.g_slack,
            "exact": self.exact,
        }


@dataclass(frozen=True)
class ExtremalPairSpec:
    """Block layout of the far-apart pair.

    ``blocks`` lists ``(i, j, |U_ij|, |V_ij|)`` in the order the vertices
    were filled; earlier blocks take the rounded-up sizes.
    """

    a: int
    b: int
    blocks: tuple

    def u_size(self, i: int, j: int) -> int:
        return next(su for bi, bj, su, _ in self.blocks if (bi, bj) == (i, j))

    def v_size(self, i: int, j: int) -> int:
        return next(sv for bi, bj, _, sv in self.blocks if (bi, bj) == (i, j))


@dataclass(frozen=True)
class InductionStats:
    y0: int
    y1: int
    y2: int

    @property
    def y(self) -> int:
        return self.y0 + self.y1 + self.y2


# ------------------------------------------------------------------ formulas


def _ceil_half(k: int) -> int:
    return (k + 1) // 2


def regime(inst: KpqInstance) -> str:
    """Boundary values go to the lower regime: ``q = kp`` is MIDDLE, ``q = ceil(k/2)p`` is LOW."""
    p, q, k = inst.p, inst.q, inst.k
    if q > k * p:
        return HIGH
    if q > _ceil_half(k) * p:
        return MIDDLE
    return LOW


def regime_expressions(k: int, p: int, q: int) -> tuple[Fraction, Fraction, Fraction]:
    """The three unfloored expressions ``(B, G, O)`` for HIGH, MIDDLE and LOW."""
    high = 2 * p + q + Fraction(q - p, k - 1)
    middle = 3 * p + q + Fraction(q - k * p, k * k // 4)
    low = 2 * p + q + Fraction(q - p, _ceil_half(k))
    return high, middle, low


def upper_bound_formula(inst: KpqInstance) -> int:
    high, middle, low = regime_expressions(inst.k, inst.p, inst.q)
    value = {HIGH: high, MIDDLE: middle, LOW: low}[regime(inst)]
    return value.__floor__()


def diameter_interval(inst: KpqInstance) -> DiameterInterval:
    p, q, k = inst.p, inst.q, inst.k
    upper = upper_bound_formula(inst)
    tag = regime(inst)
    m = k * k // 4
    if k == 3 or q >= k * p:
        slack = 0
    elif p % m == 0 and q % m == 0:
        slack = 0
    else:
        slack = m if tag == MIDDLE else k // 2
    return DiameterInterval(upper - slack, upper, tag, slack, slack == 0)


def regime_table(k: int, p: int, q_max: int) -> list[dict]:
    """Rows ``q, B, O, G, active`` for ``q = p..q_max`` with active ``max(B, min(O, G))``."""
    if k < 3 or p < 1 or q_max < p:
        raise ValueError("need k >= 3 and 1 <= p <= q_max")
    rows = []
    for q in range(p, q_max + 1):
        b, g, o = regime_expressions(k, p, q)
        rows.append({"q": q, "B": b, "O": o, "G": g, "active": max(b, min(o, g))})
    return rows


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_regime_table(rows: Iterable[dict]) -> str:
    lines = ["q\tB\tO\tG\tactive"]
    for r in rows:
        lines.append("\t".join([str(r["q"])] + [_frac(r[key]) for key in ("B", "O", "G", "active")]))
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- far-apart pair


def _block_order(a: int, b: int) -> list[tuple[int, int]]:
    """All ``(i, j)`` in ``[a] x [a+1, a+b]``, ordered so every prefix spreads evenly over colours."""
    n = a * b
    if a == 1:
        pairs = [(0, t) for t in range(b)]
    elif b == a + 1:
        pairs = [(t % a, t % b) for t in range(n)]
    elif b == a:
        pairs = [(t % a, (t + t // a) % a) for t in range(n)]
    else:
        pairs = [(t // b, t % b) for t in range(n)]
    return [(i + 1, a + 1 + j) for i, j in pairs]


def _spread(total: int, parts: int) -> list[int]:
    base, extra = divmod(total, parts)
    return [base + (1 if t < extra else 0) for t in range(parts)]


def extremal_pair(inst: KpqInstance) -> tuple[tuple, tuple, ExtremalPairSpec]:
    """Colourings that swap colours between ``U`` and ``V`` block by block."""
    p, q, k = inst.p, inst.q, inst.k
    a = 1 if q >= k * p else k // 2
    b = k - a
    order = _block_order(a, b)
    us, vs = _spread(p, a * b), _spread(q, a * b)
    alpha, beta = [0] * (p + q), [0] * (p + q)
    u = iter(inst.U)
    v = iter(inst.V)
    for (i, j), su, sv in zip(order, us, vs):
        for _ in range(su):
            x = next(u)
            alpha[x], beta[x] = i, j
        for _ in range(sv):
            x = next(v)
            alpha[x], beta[x] = j, i
    shape = ExtremalPairSpec(a, b, tuple((i, j, su, sv) for (i, j), su, sv in zip(order, us, vs)))
    return tuple(alpha), tuple(beta), shape


def induction_stats(a: Sequence[int], b: Sequence[int], V: Iterable[int], c: int) -> InductionStats:
    y0 = y1 = y2 = 0
    for v in V:
        ina, inb = a[v] == c, b[v] == c
        y0 += ina and inb
        y1 += ina and not inb
        y2 += inb and not ina
    return InductionStats(y0, y1, y2)


# ------------------------------------------------------------------- walker


class _Walk:
    """Replays moves on ``K_{U,V}`` and refuses improper ones."""

    def __init__(self, U, V, start: Sequence[int]):
        self.cur = list(start)
        self.side = {x: 0 for x in U}
        self.side.update({x: 1 for x in V})
        self.count = [{}, {}]
        for x, s in self.side.items():
            self.count[s][self.cur[x]] = self.count[s].get(self.cur[x], 0) + 1
        self.steps: list[tuple[int, int]] = []

    def move(self, v: int, colour: int):
        old = self.cur[v]
        if old == colour:
            return
        s = self.side[v]
        if self.count[1 - s].get(colour, 0):
            raise AssertionError(f"move ({v}, {colour}) clashes with the other part")
        self.count[s][old] -= 1
        self.count[s][colour] = self.count[s].get(colour, 0) + 1
        self.cur[v] = colour
        self.steps.append((v, colour))

    def used(self, part: int) -> set:
        return {x for x, m in self.count[part].items() if m}


def _split(U, V, a, b):
    av = {a[v] for v in V}
    bv = {b[v] for v in V}
    c1 = av & bv
    return c1, av - c1, bv - c1


def _spare_steps(U, V, a, b, c) -> list:
    w = _Walk(U, V, a)
    for u in U:
        if a[u] != b[u]:
            w.move(u, c)
    for v in V:
        w.move(v, b[v])
    for u in U:
        w.move(u, b[u])
    return w.steps


def _split_swap_steps(U, V, a, b, C2, C3, C2p, C3p) -> list:
    w = _Walk(U, V, a)
    rest3 = sorted(C3 - C3p)
    for u in U:
        if a[u] in C3p:
            w.move(u, b[u] if b[u] in rest3 else rest3[0])
    parking = sorted(C3p | (C2 - C2p))
    for v in V:
        if a[v] in C2p:
            w.move(v, b[v] if b[v] in C3p else parking[0])
    first2 = min(C2p)
    for u in U:
        w.move(u, b[u] if b[u] in C2p else first2)
    for v in V:
        w.move(v, b[v])
    for u in U:
        w.move(u, b[u])
    return w.steps


def _split_swap_candidates(C2: frozenset, C3: frozenset):
    s2, s3 = sorted(C2), sorted(C3)
    sizes = []
    for n2, n3 in ((len(s2), len(s3) - 1), (1, len(s3) - 1), (1, 1)):
        if n2 >= 1 and n3 >= 1 and (n2, n3) not in sizes:
            sizes.append((n2, n3))
    for n2, n3 in sizes:
        total = comb(len(s2), n2) * comb(len(s3), n3)
        pairs = itertools.product(itertools.combinations(s2, n2), itertools.combinations(s3, n3))
        if total > SPLIT_SWAP_EXHAUSTIVE:
            rng = random.Random(total)
            pairs = [
                (tuple(sorted(rng.sample(s2, n2))), tuple(sorted(rng.sample(s3, n3))))
                for _ in range(SPLIT_SWAP_SAMPLE)
            ]
        for c2p, c3p in pairs:
            yield frozenset(c2p), frozenset(c3p)


def _best_split_swap(U, V, a, b, C2, C3) -> list | None:
    best = None
    for c2p, c3p in _split_swap_candidates(C2, C3):
        steps = _split_swap_steps(U, V, a, b, C2, C3, c2p, c3p)
        if best is None or (len(steps), steps) < (len(best), best):
            best = steps
    return best


def _three_first(U, V, a, b, c1, c2, c3) -> list:
    w = _Walk(U, V, a)
    for v in V:
        if a[v] == c2:
            w.move(v, c1)
    for u in U:
        w.move(u, c2)
    for v in V:
        if b[v] == c3:
            w.move(v, c3)
    for u in U:
        w.move(u, b[u])
    return w.steps


def _three_second(U, V, a, b, c1, c2, c3) -> list:
    w = _Walk(U, V, a)
    for v in V:
        if a[v] == c1:
            w.move(v, c2)
    for u in U:
        w.move(u, c1)
    for v in V:
        w.move(v, c3)
    for u in U:
        w.move(u, b[u])
    for v in V:
        w.move(v, b[v])
    return w.steps


def _shared_colour_detour(U, V, a, b, c, C2, C3) -> list:
    """Clear ``c`` from V, park U on ``c``, fix V, then bring ``b``'s ``c``-class back."""
    w = _Walk(U, V, a)
    bu = {b[u] for u in U}
    free2 = sorted(C2 - bu) or sorted(C2)
    for v in V:
        if a[v] == c:
            w.move(v, free2[0])
    for u in U:
        w.move(u, c)
    for v in V:
        if b[v] != c:
            w.move(v, b[v])
    park = min(C3)
    for v in V:
        if b[v] == c and w.cur[v] in bu:
            w.move(v, park)
    for u in U:
        w.move(u, b[u])
    for v in V:
        if b[v] == c:
            w.move(v, c)
    return w.steps


def _shared_colour_reduce(U, V, a, b, colours, c) -> list:
    """Pin the ``c``-classes of V on ``c`` and solve the rest with one colour fewer."""
    w = _Walk(U, V, a)
    for v in V:
        if b[v] == c:
            w.move(v, c)
    rest = tuple(v for v in V if a[v] != c and b[v] != c)
    for v, x in _best(U, rest, tuple(w.cur), b, colours - {c}):
        w.move(v, x)
    for v in V:
        w.move(v, b[v])
    return w.steps


def _reverse_steps(start: Sequence[int], steps: list) -> list:
    cur = list(start)
    undo = []
    for v, x in steps:
        undo.append((v, cur[v]))
        cur[v] = x
    return undo[::-1]


def _oriented(U, V, a, b, colours) -> list:
    """Candidates ``(length, strategy, colour, steps)`` with U and V fixed and ``|C3| >= |C2|``."""
    C1, C2, C3 = _split(U, V, a, b)
    spares = sorted(colours - C1 - C2 - C3)
    out = []
    if spares:
        return [(len(steps), 0, c, steps) for c in spares for steps in [_spare_steps(U, V, a, b, c)]]
    if not C1:
        steps = _best_split_swap(U, V, a, b, C2, C3)
        if steps is not None:
            out.append((len(steps), 1, 0, steps))
        return out
    if len(colours) == 3:
        (c1,), (c2,), (c3,) = C1, C2, C3
        for sid, method in ((2, _three_first), (3, _three_second)):
            steps = method(U, V, a, b, c1, c2, c3)
            out.append((len(steps), sid, c1, steps))
        return out
    for c in sorted(C1):
        steps = _shared_colour_reduce(U, V, a, b, colours, c)
        out.append((len(steps), 4, c, steps))
        steps = _shared_colour_detour(U, V, a, b, c, C2, C3)
        out.append((len(steps), 5, c, steps))
    return out


def _best(P, Q, a, b, colours: frozenset) -> list:
    """Shortest portfolio sequence from ``a`` to ``b`` on ``K_{P,Q}`` inside ``colours``."""
    if all(a[x] == b[x] for x in itertools.chain(P, Q)):
        return []
    if not P or not Q:
        return [(x, b[x]) for x in itertools.chain(P, Q) if a[x] != b[x]]
    if len(P) < len(Q):
        orientations = [(P, Q)]
    elif len(Q) < len(P):
        orientations = [(Q, P)]
    else:
        orientations = [(P, Q), (Q, P)]
    best = None
    for o, (U, V) in enumerate(orientations):
        _, C2, C3 = _split(U, V, a, b)
        if len(C3) >= len(C2):
            for length, sid, c, steps in _oriented(U, V, a, b, colours):
                key = (length, sid, c, o, 0, steps)
                if best is None or key < best:
                    best = key
        if len(C2) >= len(C3):
            for length, sid, c, steps in _oriented(U, V, b, a, colours):
                steps = _reverse_steps(b, steps)
                key = (length, sid, c, o, 1, steps)
                if best is None or key < best:
                    best = key
    return best[-1]


# ----------------------------------------------------------------- public ops


def _check_pair(inst: KpqInstance, a: Sequence[int], b: Sequence[int]) -> tuple[tuple, tuple]:
    a, b = tuple(a), tuple(b)
    g = inst.graph()
    for name, c in (("a", a), ("b", b)):
        if len(c) != inst.n:
            raise ValueError(f"{name} has length {len(c)}, expected {inst.n}")
        if any(x < 1 or x > inst.k for x in c):
            raise ValueError(f"{name} uses a colour outside 1..{inst.k}")
        if not is_proper(g, c):
            raise ValueError(f"{name} is not a proper colouring of K_{{{inst.p},{inst.q}}}")
    return a, b


def spare_colour_sequence(inst: KpqInstance, a: Sequence[int], b: Sequence[int], c: int) -> RecolouringSequence:
    """Park U on ``c``, move V to ``b``, then U to ``b``: at most ``2p + q`` steps."""
    a, b = _check_pair(inst, a, b)
    V = inst.V
    if any(a[v] == c or b[v] == c for v in V) or not 1 <= c <= inst.k:
        raise ValueError(f"colour {c} is not spare: it appears on V or lies outside 1..{inst.k}")
    return RecolouringSequence(a, _spare_steps(inst.U, V, a, b, c))


def split_swap_sequence(inst: KpqInstance, a: Sequence[int], b: Sequence[int]) -> RecolouringSequence:
    """Shortest five-phase sequence over the subset choices, for pairs sharing no colour on V."""
    a, b = _check_pair(inst, a, b)
    U, V = inst.U, inst.V
    C1, C2, C3 = _split(U, V, a, b)
    if C1:
        raise ValueError("the two colourings share a colour on V")
    if a == b:
        return RecolouringSequence(a, ())
    swapped = len(C3) < len(C2)
    src, dst = (b, a) if swapped else (a, b)
    if swapped:
        C2, C3 = C3, C2
    if len(C3) < 2:
        raise ValueError("split-swap needs at least two target colours on V")
    steps = _best_split_swap(U, V, src, dst, C2, C3)
    if swapped:
        steps = _reverse_steps(b, steps)
    return RecolouringSequence(a, steps)


def recolour_kpq(inst: KpqInstance, a: Sequence[int], b: Sequence[int]) -> RecolouringSequence:
    """Shortest sequence found by the strategy portfolio; within ``upper_bound_formula``."""
    a, b = _check_pair(inst, a, b)
    steps = _best(inst.U, inst.V, a, b, frozenset(range(1, inst.k + 1)))
    return RecolouringSequence(a, steps)
