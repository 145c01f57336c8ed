"""Certified recolouring between two colourings with the same colour classes.

Given proper ``a`` and ``b`` inducing the same partition into classes, and
``ell`` at least one more than the number of classes, ``optimal_renaming``
walks ``a`` to ``b`` inside C_ell(G) in at most ``floor(3n/2)`` steps,
recolouring each vertex at most twice.

The classes form a digraph with an arc ``i -> j`` when ``a(C_i) == b(C_j)``;
every node has in- and out-degree at most one, so it splits into directed
paths and cycles. A path is recoloured from its source onwards: the source's
target colour is unused, and each move frees the colour the next class wants.
A cycle first parks its smallest class on an unused colour, walks the rest
of the cycle, then moves the parked class home.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .colouring import is_proper, same_partition
from .explorer import RecolouringSequence
from .graph_core import Graph

__all__ = ["ClassNode", "RenamingDigraph", "build_renaming_digraph", "optimal_renaming"]


@dataclass(frozen=True)
class ClassNode:
    vertices: tuple
    alpha: int
    beta: int


@dataclass(frozen=True)
class RenamingDigraph:
    nodes: tuple  # ClassNode, ordered by smallest vertex
    arcs: tuple  # (i, j): alpha of class i equals beta of class j

    def successor(self) -> dict:
        return dict(self.arcs)

    def predecessor(self) -> dict:
        return {j: i for i, j in self.arcs}

    def decompose(self) -> list[tuple[str, list[int]]]:
        """Directed paths (source first) and cycles, ordered by smallest class index.

        A cycle is rotated to start at its smallest class (ties: smallest vertex).
        """
        succ, pred = self.successor(), self.predecessor()
        seen = set()
        parts = []
        for i in range(len(self.nodes)):
            if i in seen:
                continue
            j = i
            while j in pred and pred[j] != i:
                j = pred[j]
            kind = "cycle" if j in pred else "path"
            members = [j]
            x = succ.get(j)
            while x is not None and x != j:
                members.append(x)
                x = succ.get(x)
            if kind == "cycle":
                smallest = min(members, key=lambda c: (len(self.nodes[c].vertices), self.nodes[c].vertices[0]))
                k = members.index(smallest)
                members = members[k:] + members[:k]
            parts.append((kind, members))
            seen.update(members)
        return parts


def build_renaming_digraph(a: Sequence[int], b: Sequence[int]) -> RenamingDigraph:
    if not same_partition(a, b):
        raise ValueError("colourings do not induce the same partition")
    classes = sorted(
        {tuple(sorted(v for v in range(len(a)) if a[v] == x)) for x in set(a)},
        key=lambda cls: cls[0],
    )
    nodes = tuple(ClassNode(cls, a[cls[0]], b[cls[0]]) for cls in classes)
    by_beta = {node.beta: j for j, node in enumerate(nodes)}
    arcs = []
    for i, node in enumerate(nodes):
        j = by_beta.get(node.alpha)
        if j is not None and j != i:
            arcs.append((i, j))
    return RenamingDigraph(nodes, tuple(arcs))


def optimal_renaming(g: Graph, a: Sequence[int], b: Sequence[int], ell: int) -> RecolouringSequence:
    """Recolour ``a`` into ``b`` within colours ``1..ell`` in at most ``floor(3n/2)`` steps.

    Arc ``i -> j`` means class ``j`` wants the colour class ``i`` sits on, so
    ``i`` moves first. A parked cycle class goes to the smallest colour absent
    from the current colouring.
    """
    a, b = tuple(a), tuple(b)
    if len(a) != g.n or len(b) != g.n:
        raise ValueError("colourings must cover every vertex")
    if not is_proper(g, a) or not is_proper(g, b):
        raise ValueError("both colourings must be proper")
    digraph = build_renaming_digraph(a, b)
    used = len(digraph.nodes)
    if ell < used + 1:
        raise ValueError(f"ell={ell} is too small: {used} classes need at least {used + 1} colours")
    if any(x < 1 or x > ell for x in a + b):
        raise ValueError(f"colours must lie in 1..{ell}")

    current = list(a)
    steps = []

    def move(node: ClassNode, colour: int):
        for v in node.vertices:
            steps.append((v, colour))
            current[v] = colour

    for kind, members in digraph.decompose():
        nodes = [digraph.nodes[i] for i in members]
        if kind == "path":
            for node in nodes:
                if node.alpha != node.beta:
                    move(node, node.beta)
        else:
            parked = nodes[0]
            present = set(current)
            free = next((x for x in range(1, ell + 1) if x not in present), None)
            assert free is not None, "no free colour although ell exceeds the class count"
            move(parked, free)
            for node in nodes[1:]:
                move(node, node.beta)
            move(parked, parked.beta)
    return RecolouringSequence(a, steps)
