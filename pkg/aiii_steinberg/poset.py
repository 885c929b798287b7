"""Closure order on orbit graphs, cover moves and Hasse diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import TYPE_CHECKING, Any

import networkx as nx
from loguru import logger

from .const import MAX_ENUMERATION_SIZE
from .exceptions import SteinbergInconsistencyError, SteinbergValidationError
from .orbit import (
    DEGREE_FREE,
    OrbitGraph,
    RankMatrix,
    dense_orbit,
    dimension,
    enumerate_parameters,
    rank_matrix,
)

if TYPE_CHECKING:
    from collections.abc import Iterator


def _dominates(lower: RankMatrix, upper: RankMatrix) -> bool:
    return all(
        x >= y
        for lower_row, upper_row in zip(lower.entries, upper.entries, strict=True)
        for x, y in zip(lower_row, upper_row, strict=True)
    )


def leq(omega: OrbitGraph, other: OrbitGraph) -> bool:
    """Return True if the orbit of ``omega`` lies in the closure of the orbit of ``other``.

    Raises:
        SteinbergValidationError: if the two graphs have different (p, q, r).

    """
    if omega.sizes != other.sizes:
        msg = f"Cannot compare {omega} with {other}: different (p,q,r)"
        raise SteinbergValidationError(msg)
    return _dominates(rank_matrix(omega), rank_matrix(other))


def _rebuild(
    omega: OrbitGraph,
    edges: dict[int, int],
    plus: set[int],
    minus: set[int],
) -> OrbitGraph:
    return OrbitGraph(omega.p, omega.q, omega.r, tuple(edges.items()), tuple(plus), tuple(minus))


def _moves(omega: OrbitGraph) -> Iterator[OrbitGraph]:  # noqa: C901
    edges = dict(omega.edges)
    plus = set(omega.plus)
    minus = set(omega.minus)
    free_plus = [a for a in range(1, omega.p + 1) if omega.plus_degrees[a - 1] == DEGREE_FREE]
    free_minus = [c for c in range(1, omega.q + 1) if omega.minus_degrees[c - 1] == DEGREE_FREE]

    # Uncross two edges: (a,d),(b,c) with a<b, c<d become (a,c),(b,d).
    for (a, d), (b, c) in permutations(omega.edges, 2):
        if a < b and c < d:
            moved = dict(edges)
            moved[a], moved[b] = c, d
            yield _rebuild(omega, moved, plus, minus)

    for a, c in omega.edges:
        # Edge and a later plus mark trade places.
        for b in omega.plus:
            if a < b:
                moved = dict(edges)
                del moved[a]
                moved[b] = c
                yield _rebuild(omega, moved, (plus - {b}) | {a}, minus)
        # Edge and a later minus mark trade places.
        for d in omega.minus:
            if c < d:
                moved = dict(edges)
                moved[a] = d
                yield _rebuild(omega, moved, plus, (minus - {d}) | {c})
        # Slide the plus end to an earlier free vertex.
        for free in free_plus:
            if free < a:
                moved = dict(edges)
                del moved[a]
                moved[free] = c
                yield _rebuild(omega, moved, plus, minus)
        # Slide the minus end to an earlier free vertex.
        for free in free_minus:
            if free < c:
                moved = dict(edges)
                moved[a] = free
                yield _rebuild(omega, moved, plus, minus)
        # Collapse the edge onto one of its ends.
        moved = dict(edges)
        del moved[a]
        yield _rebuild(omega, moved, plus | {a}, minus)
        yield _rebuild(omega, moved, plus, minus | {c})

    # Slide a mark to an earlier free vertex.
    for b in omega.plus:
        for free in free_plus:
            if free < b:
                yield _rebuild(omega, edges, (plus - {b}) | {free}, minus)
    for d in omega.minus:
        for free in free_minus:
            if free < d:
                yield _rebuild(omega, edges, plus, (minus - {d}) | {free})


def downward_moves(omega: OrbitGraph) -> list[OrbitGraph]:
    """Return every graph reachable from ``omega`` by one elementary move.

    The moves are: uncrossing two edges; swapping an edge end with a later
    mark; sliding an edge end or a mark to an earlier free vertex; and
    collapsing an edge onto one of its ends. Each strictly lowers the orbit.
    """
    unique = {moved.canonical(): moved for moved in _moves(omega)}
    return [unique[key] for key in sorted(unique)]


def covers(omega: OrbitGraph) -> list[OrbitGraph]:
    """Return the lower covers of ``omega``: moves that drop the dimension by exactly one."""
    target = dimension(omega) - 1
    return [moved for moved in downward_moves(omega) if dimension(moved) == target]


@dataclass(frozen=True)
class HasseDiagram:
    """Orbit graphs with their dimensions and cover edges (upper index, lower index)."""

    nodes: tuple[tuple[OrbitGraph, int], ...]
    cover_edges: tuple[tuple[int, int], ...]

    @property
    def graphs(self) -> tuple[OrbitGraph, ...]:
        """Node graphs in order."""
        return tuple(omega for omega, _ in self.nodes)

    def dimension_histogram(self) -> dict[int, int]:
        """Number of nodes per dimension, highest first."""
        histogram: dict[int, int] = {}
        for _, dim in self.nodes:
            histogram[dim] = histogram.get(dim, 0) + 1
        return dict(sorted(histogram.items(), reverse=True))

    def top(self) -> OrbitGraph:
        """Return the only node without an upper cover.

        Raises:
            SteinbergInconsistencyError: if there is not exactly one such node.

        """
        graph = self.to_networkx()
        tops = [node for node in graph.nodes if graph.in_degree(node) == 0]
        if len(tops) != 1:
            msg = f"Expected one maximal element, found {len(tops)}"
            raise SteinbergInconsistencyError(msg)
        return self.graphs[tops[0]]

    def to_networkx(self) -> nx.DiGraph:
        """Cover graph with edges pointing from upper to lower node index."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.nodes)))
        graph.add_edges_from(self.cover_edges)
        return graph


def _order_graph(graphs: list[OrbitGraph]) -> nx.DiGraph:
    ranks = [rank_matrix(omega) for omega in graphs]
    order = nx.DiGraph()
    order.add_nodes_from(range(len(graphs)))
    for upper, upper_ranks in enumerate(ranks):
        for lower, lower_ranks in enumerate(ranks):
            if upper != lower and _dominates(lower_ranks, upper_ranks):
                order.add_edge(upper, lower)
    return order


def hasse_diagram(
    p: int,
    q: int,
    r: int,
    bound: int = MAX_ENUMERATION_SIZE,
    *,
    cross_check: bool = True,
) -> HasseDiagram:
    """Build the Hasse diagram of the closure order for (p, q, r).

    Cover edges come from the elementary moves. With ``cross_check`` they are
    also compared with the transitive reduction of the full order, which costs
    time quadratic in the number of parameters.

    Raises:
        SteinbergInconsistencyError: if the two cover sets differ.

    """
    graphs = enumerate_parameters(p, q, r, bound)
    index = {omega.canonical(): position for position, omega in enumerate(graphs)}

    from_moves = {
        (upper, index[lower.canonical()])
        for upper, omega in enumerate(graphs)
        for lower in covers(omega)
    }
    from_order = set(nx.transitive_reduction(_order_graph(graphs)).edges()) if cross_check else from_moves
    if from_order != from_moves:
        missing = sorted(from_order - from_moves)
        extra = sorted(from_moves - from_order)
        msg = (
            f"Cover relations for ({p},{q},{r}) disagree: "
            f"{len(missing)} missing from moves {missing[:5]}, {len(extra)} extra {extra[:5]}"
        )
        raise SteinbergInconsistencyError(msg)
    logger.debug(
        "Hasse diagram for ({},{},{}): {} nodes, {} covers, cross-checked: {}",
        p,
        q,
        r,
        len(graphs),
        len(from_moves),
        cross_check,
    )
    return HasseDiagram(
        nodes=tuple((omega, dimension(omega)) for omega in graphs),
        cover_edges=tuple(sorted(from_moves)),
    )


def maximum(p: int, q: int, r: int, bound: int = MAX_ENUMERATION_SIZE) -> OrbitGraph:
    """Return the unique maximal element of the closure order.

    Raises:
        SteinbergInconsistencyError: if it is not unique or not the open orbit.

    """
    top = hasse_diagram(p, q, r, bound).top()
    if top != dense_orbit(p, q, r):
        msg = f"Maximal element {top} differs from the open orbit {dense_orbit(p, q, r)}"
        raise SteinbergInconsistencyError(msg)
    return top


def _gvquote(text: str) -> str:
    return '"{}"'.format(text.replace('"', r"\""))


def _dot_lines(diagram: HasseDiagram) -> Iterator[str]:
    yield "digraph hasse {"
    yield "  rankdir=TB;"
    yield '  node [shape=box, fontname="monospace"];'
    for position, (omega, dim) in enumerate(diagram.nodes):
        label = _gvquote(omega.canonical() + r"\n" + f"dim={dim}")
        yield f"  n{position} [label={label}];"
    for dim in diagram.dimension_histogram():
        members = " ".join(f"n{position};" for position, (_, d) in enumerate(diagram.nodes) if d == dim)
        yield f"  {{ rank=same; {members} }}"
    for upper, lower in diagram.cover_edges:
        yield f"  n{upper} -> n{lower};"
    yield "}"


def emit_dot(diagram: HasseDiagram) -> str:
    """Render the diagram as a Graphviz digraph, edges pointing downwards."""
    return "\n".join(_dot_lines(diagram)) + "\n"


def hasse_json(diagram: HasseDiagram) -> dict[str, Any]:
    """Return ``{"nodes": [...], "covers": [[upper, lower], ...]}``."""
    return {
        "nodes": [{"omega": omega.canonical(), "dimension": dim} for omega, dim in diagram.nodes],
        "covers": [[upper, lower] for upper, lower in diagram.cover_edges],
    }
