"""Colourings, palettes and the basic checks on them.

A colouring is a tuple of positive ints indexed by vertex. A palette says which
colours each vertex may take: ``Uniform(k)`` allows ``1..k`` everywhere and
``Lists(L)`` allows ``L[v]`` at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .graph_core import Graph, ParseError

__all__ = [
    "Uniform",
    "Lists",
    "Palette",
    "ColourSplit",
    "admissible",
    "is_proper",
    "respects_lists",
    "respects_palette",
    "colour_classes",
    "same_partition",
    "is_frozen",
    "colour_split",
    "format_colouring",
    "parse_colouring",
    "format_lists",
    "parse_lists",
]

Colouring = tuple


@dataclass(frozen=True)
class Uniform:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("palette needs at least one colour")

    def allowed(self, v: int) -> tuple[int, ...]:
        return tuple(range(1, self.k + 1))


@dataclass(frozen=True)
class Lists:
    lists: tuple[frozenset, ...]

    def __post_init__(self):
        lists = tuple(frozenset(L) for L in self.lists)
        for v, L in enumerate(lists):
            if not L:
                raise ValueError(f"empty list at vertex {v}")
            if min(L) < 1:
                raise ValueError(f"non-positive colour in list of vertex {v}")
        object.__setattr__(self, "lists", lists)

    def allowed(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.lists[v]))


Palette = Union[Uniform, Lists]


def admissible(palette: Palette, n: int) -> list[tuple[int, ...]]:
    """Sorted admissible colours per vertex."""
    if isinstance(palette, Lists) and len(palette.lists) != n:
        raise ValueError(f"list assignment has {len(palette.lists)} lists for {n} vertices")
    return [palette.allowed(v) for v in range(n)]


def _check_length(g: Graph, c: Sequence[int]):
    if len(c) != g.n:
        raise ValueError(f"colouring has length {len(c)}, graph has {g.n} vertices")


def is_proper(g: Graph, c: Sequence[int]) -> bool:
    _check_length(g, c)
    return all(c[u] != c[v] for u, v in g.edges)


def respects_lists(lists: Sequence, c: Sequence[int]) -> bool:
    if isinstance(lists, Lists):
        lists = lists.lists
    if len(lists) != len(c):
        raise ValueError("list assignment and colouring differ in length")
    return all(x in L for x, L in zip(c, lists))


def respects_palette(palette: Palette, c: Sequence[int]) -> bool:
    if isinstance(palette, Uniform):
        return all(1 <= x <= palette.k for x in c)
    return respects_lists(palette, c)


def colour_classes(c: Sequence[int]) -> dict[int, frozenset]:
    classes: dict[int, set] = {}
    for v, x in enumerate(c):
        classes.setdefault(x, set()).add(v)
    return {x: frozenset(vs) for x, vs in sorted(classes.items())}


def same_partition(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise ValueError("colourings differ in length")
    return set(colour_classes(a).values()) == set(colour_classes(b).values())


def is_frozen(g: Graph, c: Sequence[int], palette: Palette) -> bool:
    """True when no vertex can move to another admissible colour and stay proper."""
    if not is_proper(g, c) or not respects_palette(palette, c):
        raise ValueError("is_frozen needs a proper, palette-respecting colouring")
    for v in range(g.n):
        blocked = {c[w] for w in g.adjacency[v]}
        blocked.add(c[v])
        if any(x not in blocked for x in palette.allowed(v)):
            return False
    return True


@dataclass(frozen=True)
class ColourSplit:
    """Colours on a part ``V``: shared (C1), only-alpha (C2), only-beta (C3).

    ``swapped`` records that alpha and beta were exchanged so that
    ``|C3| >= |C2|``.
    """

    C1: frozenset
    C2: frozenset
    C3: frozenset
    swapped: bool = False


def colour_split(a: Sequence[int], b: Sequence[int], V) -> ColourSplit:
    av = {a[v] for v in V}
    bv = {b[v] for v in V}
    c1 = av & bv
    c2, c3 = av - c1, bv - c1
    if len(c3) < len(c2):
        return ColourSplit(frozenset(c1), frozenset(c3), frozenset(c2), True)
    return ColourSplit(frozenset(c1), frozenset(c2), frozenset(c3), False)


# ---------------------------------------------------------------- text formats


def format_colouring(c: Sequence[int]) -> str:
    return " ".join(str(x) for x in c) + "\n"


def parse_colouring(text: str) -> tuple[int, ...]:
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if len(lines) != 1:
        raise ParseError("colouring must be a single line", lines[1][0] if len(lines) > 1 else 1)
    lineno, line = lines[0]
    try:
        c = tuple(int(x) for x in line.split())
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None
    if any(x < 1 for x in c):
        raise ParseError("colours must be positive", lineno)
    return c


def format_lists(lists: Sequence) -> str:
    if isinstance(lists, Lists):
        lists = lists.lists
    return "".join(" ".join(str(x) for x in sorted(L)) + "\n" for L in lists)


def parse_lists(text: str) -> tuple[frozenset, ...]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        try:
            L = frozenset(int(x) for x in line.split())
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if not L or min(L) < 1:
            raise ParseError("each list needs at least one positive colour", lineno)
        out.append(L)
    return tuple(out)
