"""Marked matching graphs parametrizing K-orbits of Gr(p+q, r) x Fl(p) x Fl(q)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from math import comb, factorial
from typing import TYPE_CHECKING, Any

from loguru import logger

from .const import MAX_ENUMERATION_SIZE
from .exceptions import SteinbergRefusalError, SteinbergValidationError
from .linalg import RationalMatrix, standard_basis_columns
from .tableau import BijectionWord

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

_OMEGA_PATTERN = re.compile(
    r"^(?P<p>\d+)x(?P<q>\d+)x(?P<r>\d+):(?P<edges>[0-9,\-]*):(?P<plus>[0-9,]*):(?P<minus>[0-9,]*)$"
)

# Vertex degrees used by the a+/a- counts.
DEGREE_FREE = 0
DEGREE_EDGE = 1
DEGREE_MARKED = 2


@dataclass(frozen=True)
class OrbitGraph:
    """Bipartite graph on p plus vertices and q minus vertices.

    Edges form a partial matching, marked vertices carry no edge, and
    edges plus marks number r.
    """

    p: int
    q: int
    r: int
    edges: tuple[tuple[int, int], ...] = ()
    plus: tuple[int, ...] = ()
    minus: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Sort the components and check the matching invariants."""
        edges = tuple(sorted((int(a), int(c)) for a, c in self.edges))
        plus = tuple(sorted(int(a) for a in self.plus))
        minus = tuple(sorted(int(c) for c in self.minus))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

        if min(self.p, self.q, self.r) < 0:
            msg = f"Negative size in ({self.p},{self.q},{self.r})"
            raise SteinbergValidationError(msg)
        if self.r > self.p + self.q:
            msg = f"r={self.r} exceeds p+q={self.p + self.q}"
            raise SteinbergValidationError(msg)
        plus_used = [a for a, _ in edges] + list(plus)
        minus_used = [c for _, c in edges] + list(minus)
        if any(not 1 <= a <= self.p for a in plus_used):
            msg = f"Plus vertex out of range 1..{self.p} in {self.canonical()}"
            raise SteinbergValidationError(msg)
        if any(not 1 <= c <= self.q for c in minus_used):
            msg = f"Minus vertex out of range 1..{self.q} in {self.canonical()}"
            raise SteinbergValidationError(msg)
        if len(set(plus_used)) != len(plus_used):
            msg = f"A plus vertex carries two edges or an edge and a mark in {self.canonical()}"
            raise SteinbergValidationError(msg)
        if len(set(minus_used)) != len(minus_used):
            msg = f"A minus vertex carries two edges or an edge and a mark in {self.canonical()}"
            raise SteinbergValidationError(msg)
        if len(edges) + len(plus) + len(minus) != self.r:
            msg = f"Edges and marks number {len(edges) + len(plus) + len(minus)}, expected r={self.r}"
            raise SteinbergValidationError(msg)

    @classmethod
    def empty(cls, p: int, q: int) -> OrbitGraph:
        """Graph without edges or marks, the only parameter for r = 0."""
        return cls(p, q, 0)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> OrbitGraph:
        """Build from the JSON form produced by :meth:`to_json`."""
        try:
            return cls(
                int(data["p"]),
                int(data["q"]),
                int(data["r"]),
                tuple((int(a), int(c)) for a, c in data.get("edges", [])),
                tuple(data.get("plus", [])),
                tuple(data.get("minus", [])),
            )
        except SteinbergValidationError:
            raise
        except (KeyError, TypeError, ValueError) as ex:
            msg = f"Malformed orbit graph JSON {data!r}"
            raise SteinbergValidationError(msg) from ex

    def canonical(self) -> str:
        """Return ``<p>x<q>x<r>:<edges>:<plus>:<minus>`` with edges sorted by plus vertex."""
        edges = ",".join(f"{a}-{c}" for a, c in self.edges)
        plus = ",".join(str(a) for a in self.plus)
        minus = ",".join(str(c) for c in self.minus)
        return f"{self.p}x{self.q}x{self.r}:{edges}:{plus}:{minus}"

    def __str__(self) -> str:
        """Return the canonical string."""
        return self.canonical()

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "edges": [[a, c] for a, c in self.edges],
            "plus": list(self.plus),
            "minus": list(self.minus),
        }

    @property
    def sizes(self) -> tuple[int, int, int]:
        """Return (p, q, r)."""
        return self.p, self.q, self.r

    @cached_property
    def plus_degrees(self) -> tuple[int, ...]:
        """Degree of each plus vertex 1..p: 0 free, 1 on an edge, 2 marked."""
        degrees = [DEGREE_FREE] * self.p
        for a, _ in self.edges:
            degrees[a - 1] = DEGREE_EDGE
        for a in self.plus:
            degrees[a - 1] = DEGREE_MARKED
        return tuple(degrees)

    @cached_property
    def minus_degrees(self) -> tuple[int, ...]:
        """Degree of each minus vertex 1..q."""
        degrees = [DEGREE_FREE] * self.q
        for _, c in self.edges:
            degrees[c - 1] = DEGREE_EDGE
        for c in self.minus:
            degrees[c - 1] = DEGREE_MARKED
        return tuple(degrees)


def parse_omega(text: str) -> OrbitGraph:
    """Parse a canonical string such as ``5x3x4:2-3,4-1:5:2``.

    Edges and marks may be listed in any order.

    Raises:
        SteinbergValidationError: if the text is malformed or violates the invariants.

    """
    match = _OMEGA_PATTERN.match(text.strip())
    if match is None:
        msg = f"Malformed orbit graph string {text!r}, expected <p>x<q>x<r>:<edges>:<plus>:<minus>"
        raise SteinbergValidationError(msg)
    try:
        edges = tuple(
            (int(a), int(c))
            for a, c in (item.split("-") for item in _items(match["edges"]))
        )
        plus = tuple(int(a) for a in _items(match["plus"]))
        minus = tuple(int(c) for c in _items(match["minus"]))
    except ValueError as ex:
        msg = f"Malformed edge or mark list in {text!r}"
        raise SteinbergValidationError(msg) from ex
    return OrbitGraph(int(match["p"]), int(match["q"]), int(match["r"]), edges, plus, minus)


def _items(section: str) -> list[str]:
    return [item for item in section.split(",") if item]


@dataclass(frozen=True)
class DerivedData:
    """Vertex decomposition and numerical invariants of an orbit graph.

    ``edge_plus``/``marked_plus``/``free_plus`` split 1..p as I, L, L' and
    ``edge_minus``/``marked_minus``/``free_minus`` split 1..q as J, M, M'.
    ``sigma`` maps J onto I along the edges.
    """

    edge_plus: tuple[int, ...]
    marked_plus: tuple[int, ...]
    free_plus: tuple[int, ...]
    edge_minus: tuple[int, ...]
    marked_minus: tuple[int, ...]
    free_minus: tuple[int, ...]
    sigma: BijectionWord
    a_plus: int
    a_minus: int
    b: int
    c: int

    @property
    def k(self) -> int:
        """Number of edges."""
        return len(self.edge_plus)

    @property
    def s(self) -> int:
        """Number of marked plus vertices."""
        return len(self.marked_plus)

    @property
    def t(self) -> int:
        """Number of marked minus vertices."""
        return len(self.marked_minus)

    @property
    def s_prime(self) -> int:
        """Number of free plus vertices."""
        return len(self.free_plus)

    @property
    def t_prime(self) -> int:
        """Number of free minus vertices."""
        return len(self.free_minus)

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {
            "I": list(self.edge_plus),
            "L": list(self.marked_plus),
            "Lprime": list(self.free_plus),
            "J": list(self.edge_minus),
            "M": list(self.marked_minus),
            "Mprime": list(self.free_minus),
            "sigma": self.sigma.to_json(),
            "aPlus": self.a_plus,
            "aMinus": self.a_minus,
            "b": self.b,
            "c": self.c,
        }


def _ascents(degrees: Sequence[int]) -> int:
    return sum(
        1 for i, j in combinations(range(len(degrees)), 2) if degrees[i] < degrees[j]
    )


def derived_data(omega: OrbitGraph) -> DerivedData:
    """Compute I, L, L', J, M, M', sigma and the invariants a+, a-, b, c."""
    sigma = BijectionWord(tuple((c, a) for a, c in omega.edges))
    targets = sigma.word
    crossings = sum(1 for x, y in combinations(range(len(targets)), 2) if targets[x] > targets[y])
    return DerivedData(
        edge_plus=tuple(a for a, _ in omega.edges),
        marked_plus=omega.plus,
        free_plus=tuple(a for a in range(1, omega.p + 1) if omega.plus_degrees[a - 1] == DEGREE_FREE),
        edge_minus=sigma.sources,
        marked_minus=omega.minus,
        free_minus=tuple(c for c in range(1, omega.q + 1) if omega.minus_degrees[c - 1] == DEGREE_FREE),
        sigma=sigma,
        a_plus=_ascents(omega.plus_degrees),
        a_minus=_ascents(omega.minus_degrees),
        b=len(omega.edges),
        c=crossings,
    )


@dataclass(frozen=True)
class RankMatrix:
    """Counts r_{i,j} of edges and marks among plus vertices 1..i and minus vertices 1..j."""

    p: int
    q: int
    r: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        """Return r_{i,j}."""
        i, j = key
        return self.entries[i][j]

    def second_difference(self, i: int, j: int) -> int:
        """Return e_{i,j}, with out-of-range terms read as zero."""

        def at(x: int, y: int) -> int:
            return self.entries[x][y] if x >= 0 and y >= 0 else 0

        return at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1)

    def to_json(self) -> list[list[int]]:
        """Return the JSON form, a list of rows indexed by i = 0..p."""
        return [list(row) for row in self.entries]


def rank_matrix(omega: OrbitGraph) -> RankMatrix:
    """Return R(omega)."""
    entries = []
    for i in range(omega.p + 1):
        row = []
        for j in range(omega.q + 1):
            count = sum(1 for a, c in omega.edges if a <= i and c <= j)
            count += sum(1 for a in omega.plus if a <= i)
            count += sum(1 for c in omega.minus if c <= j)
            row.append(count)
        entries.append(tuple(row))
    return RankMatrix(omega.p, omega.q, omega.r, tuple(entries))


def omega_from_rank_matrix(matrix: RankMatrix) -> OrbitGraph:
    """Invert :func:`rank_matrix` by second differences.

    Raises:
        SteinbergValidationError: if ``matrix`` is not the rank matrix of any graph.

    """
    p, q, r = matrix.p, matrix.q, matrix.r
    if len(matrix.entries) != p + 1 or any(len(row) != q + 1 for row in matrix.entries):
        msg = f"Rank matrix must be {p + 1}x{q + 1}"
        raise SteinbergValidationError(msg)
    if matrix[0, 0] != 0 or matrix[p, q] != r:
        msg = f"Not a rank matrix: r_00={matrix[0, 0]}, r_pq={matrix[p, q]}, expected 0 and {r}"
        raise SteinbergValidationError(msg)

    edges, plus, minus = [], [], []
    for i in range(p + 1):
        for j in range(q + 1):
            e = matrix.second_difference(i, j)
            if e not in (0, 1):
                msg = f"Not a rank matrix: second difference {e} at ({i},{j})"
                raise SteinbergValidationError(msg)
            if e == 0 or (i == 0 and j == 0):
                continue
            if i == 0:
                minus.append(j)
            elif j == 0:
                plus.append(i)
            else:
                edges.append((i, j))
    try:
        omega = OrbitGraph(p, q, r, tuple(edges), tuple(plus), tuple(minus))
    except SteinbergValidationError as ex:
        msg = f"Not a rank matrix: {ex}"
        raise SteinbergValidationError(msg) from ex
    if rank_matrix(omega) != matrix:
        msg = "Not a rank matrix: second differences do not reproduce it"
        raise SteinbergValidationError(msg)
    return omega


def ambient_dimension(p: int, q: int, r: int) -> int:
    """Dimension of Gr(p+q, r) x Fl(p) x Fl(q)."""
    return r * (p + q - r) + p * (p - 1) // 2 + q * (q - 1) // 2


def dimension(omega: OrbitGraph) -> int:
    """Dimension of the orbit parametrized by ``omega``."""
    data = derived_data(omega)
    return (
        omega.p * (omega.p - 1) // 2
        + omega.q * (omega.q - 1) // 2
        + data.a_plus
        + data.a_minus
        + data.b * (data.b + 1) // 2
        + data.c
    )


def kst_triples(p: int, q: int, r: int) -> Iterator[tuple[int, int, int]]:
    """Yield (k, s, t) with k+s+t = r, k+s <= p and k+t <= q."""
    for k in range(min(p, q, r) + 1):
        for s in range(min(p - k, r - k) + 1):
            t = r - k - s
            if 0 <= t <= q - k:
                yield k, s, t


def _check_bounds(p: int, q: int, r: int, bound: int) -> None:
    if min(p, q, r) < 0 or r > p + q:
        msg = f"Invalid sizes (p,q,r)=({p},{q},{r})"
        raise SteinbergValidationError(msg)
    if max(p, q) > bound:
        msg = f"Refusing to enumerate (p,q,r)=({p},{q},{r}) beyond the bound {bound}"
        raise SteinbergRefusalError(msg)


def _graphs_for(p: int, q: int, k: int, s: int, t: int) -> Iterator[OrbitGraph]:
    r = k + s + t
    for marked_plus in combinations(range(1, p + 1), s):
        rest_plus = [a for a in range(1, p + 1) if a not in marked_plus]
        for marked_minus in combinations(range(1, q + 1), t):
            rest_minus = [c for c in range(1, q + 1) if c not in marked_minus]
            for edge_plus in combinations(rest_plus, k):
                for edge_minus in combinations(rest_minus, k):
                    for matched in permutations(edge_minus):
                        yield OrbitGraph(
                            p, q, r, tuple(zip(edge_plus, matched, strict=True)), marked_plus, marked_minus
                        )


def enumerate_parameters(
    p: int, q: int, r: int, bound: int = MAX_ENUMERATION_SIZE
) -> list[OrbitGraph]:
    """List every orbit graph for (p, q, r), sorted by canonical string.

    Raises:
        SteinbergRefusalError: if p or q exceeds ``bound``.

    """
    _check_bounds(p, q, r, bound)
    graphs = [
        omega
        for k, s, t in kst_triples(p, q, r)
        for omega in _graphs_for(p, q, k, s, t)
    ]
    graphs.sort(key=OrbitGraph.canonical)
    logger.debug("Enumerated {} orbit graphs for (p,q,r)=({},{},{})", len(graphs), p, q, r)
    return graphs


def count_parameters(p: int, q: int, r: int) -> int:
    """Count orbit graphs by the closed multinomial formula."""
    total = 0
    for k, s, t in kst_triples(p, q, r):
        plus_ways = comb(p, k) * comb(p - k, s)
        minus_ways = comb(q, k) * comb(q - k, t)
        total += plus_ways * minus_ways * factorial(k)
    return total


def representative_matrix(omega: OrbitGraph) -> RationalMatrix:
    """0/1 matrix of size (p+q) x r whose columns span a subspace in the orbit.

    Columns list edges by plus vertex, then plus marks, then minus marks.
    """
    n = omega.p + omega.q
    columns = []
    for a, c in omega.edges:
        column = [0] * n
        column[a - 1] = 1
        column[omega.p + c - 1] = 1
        columns.append(column)
    for a in omega.plus:
        column = [0] * n
        column[a - 1] = 1
        columns.append(column)
    for c in omega.minus:
        column = [0] * n
        column[omega.p + c - 1] = 1
        columns.append(column)
    return RationalMatrix.from_columns(columns, n)


def classify_subspace(matrix: RationalMatrix, p: int, q: int) -> OrbitGraph:
    """Return the orbit graph of the subspace spanned by the columns of ``matrix``.

    Reads dim(W ∩ (F+_i + F-_j)) from exact ranks and inverts the rank matrix.

    Raises:
        SteinbergValidationError: if the shape is wrong or the columns are dependent.

    """
    n = p + q
    if matrix.nrows != n:
        msg = f"Subspace matrix has {matrix.nrows} rows, expected p+q={n}"
        raise SteinbergValidationError(msg)
    r = matrix.ncols
    if matrix.rank() != r:
        msg = f"Subspace matrix has rank {matrix.rank()} < {r} columns"
        raise SteinbergValidationError(msg)
    entries = []
    for i in range(p + 1):
        row = []
        for j in range(q + 1):
            flag = standard_basis_columns(n, [*range(i), *range(p, p + j)])
            row.append(r + i + j - matrix.hstack(flag).rank())
        entries.append(tuple(row))
    return omega_from_rank_matrix(RankMatrix(p, q, r, tuple(entries)))


def dual(omega: OrbitGraph) -> OrbitGraph:
    """Swap the two vertex rows."""
    return OrbitGraph(
        omega.q,
        omega.p,
        omega.r,
        tuple((c, a) for a, c in omega.edges),
        omega.minus,
        omega.plus,
    )


@dataclass(frozen=True)
class GrassmannInvariants:
    """K-orbit data of the subspace alone: dim W ∩ V+, dim W ∩ V- and the K-orbit dimension."""

    s_plus: int
    t_minus: int
    k_orbit_dimension: int

    def to_json(self) -> dict[str, int]:
        """Return the JSON form."""
        return {
            "sPlus": self.s_plus,
            "tMinus": self.t_minus,
            "kOrbitDimension": self.k_orbit_dimension,
        }


def grassmann_orbit_dimension(p: int, q: int, s: int, t: int, k: int) -> int:
    """Dimension of the K-orbit of subspaces with invariants (s, t) and k = r - s - t."""
    return (s + k) * (p - s) + (t + k) * (q - t) - k * k


def grassmann_invariants(omega: OrbitGraph) -> GrassmannInvariants:
    """Return (r_{p,0}, r_{0,q}) and the dimension of the K-orbit of the subspace."""
    ranks = rank_matrix(omega)
    s, t, k = len(omega.plus), len(omega.minus), len(omega.edges)
    return GrassmannInvariants(
        s_plus=ranks[omega.p, 0],
        t_minus=ranks[0, omega.q],
        k_orbit_dimension=grassmann_orbit_dimension(omega.p, omega.q, s, t, k),
    )


def grassmann_leq(omega: OrbitGraph, other: OrbitGraph) -> bool:
    """Closure order of the K-orbits of the underlying subspaces."""
    mine = grassmann_invariants(omega)
    theirs = grassmann_invariants(other)
    return mine.s_plus >= theirs.s_plus and mine.t_minus >= theirs.t_minus


def _sorted_graph(p: int, q: int, k: int, s: int, t: int) -> OrbitGraph:
    # Free vertices first, then edge endpoints, then marks; all edges cross.
    edge_plus = range(p - s - k + 1, p - s + 1)
    edge_minus = range(q - t - k + 1, q - t + 1)
    edges = tuple(zip(edge_plus, reversed(edge_minus), strict=True))
    return OrbitGraph(
        p,
        q,
        k + s + t,
        edges,
        tuple(range(p - s + 1, p + 1)),
        tuple(range(q - t + 1, q + 1)),
    )


def is_dense_in_saturation(omega: OrbitGraph) -> bool:
    """Return True if the orbit is dense in the K-saturation of its subspace.

    Degrees must be weakly increasing along both rows and every two edges must cross.
    """
    rows_sorted = all(
        degrees[i] <= degrees[i + 1]
        for degrees in (omega.plus_degrees, omega.minus_degrees)
        for i in range(len(degrees) - 1)
    )
    return rows_sorted and derived_data(omega).c == comb(len(omega.edges), 2)


def dense_orbit(p: int, q: int, r: int) -> OrbitGraph:
    """Return the parameter of the open orbit."""
    if min(p, q, r) < 0 or r > p + q:
        msg = f"Invalid sizes (p,q,r)=({p},{q},{r})"
        raise SteinbergValidationError(msg)
    s = max(0, r - q)
    t = max(0, r - p)
    return _sorted_graph(p, q, r - s - t, s, t)


@dataclass(frozen=True)
class GrassmannOrbit:
    """One K-orbit of subspaces with its dense double flag representative."""

    s: int
    t: int
    k: int
    dimension: int
    representative: OrbitGraph

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {
            "s": self.s,
            "t": self.t,
            "k": self.k,
            "dimension": self.dimension,
            "representative": self.representative.canonical(),
        }


def grassmann_orbits(p: int, q: int, r: int) -> list[GrassmannOrbit]:
    """List the K-orbits of Gr(p+q, r), by decreasing dimension then (s, t)."""
    orbits = [
        GrassmannOrbit(s, t, k, grassmann_orbit_dimension(p, q, s, t, k), _sorted_graph(p, q, k, s, t))
        for k, s, t in kst_triples(p, q, r)
    ]
    return sorted(orbits, key=lambda orbit: (-orbit.dimension, orbit.s, orbit.t))
