"""Independent check of the Steinberg maps by sampling the conormal direction.

A sample x = (a b; c d) annihilates the subspace of omega, has image inside it,
and has strictly upper triangular diagonal blocks. The Jordan types of a and d
at a generic sample give the symmetrized image, and the signed Jordan type of
the off-diagonal part gives the exotic image.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, TypeVar

from loguru import logger

from .const import (
    DEFAULT_BOUND,
    DEFAULT_POWER_CHECK_DEPTH,
    DEFAULT_RETRY_CAP,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
)
from .exceptions import (
    SteinbergGenericityError,
    SteinbergInconsistencyError,
    SteinbergValidationError,
)
from .linalg import RationalMatrix, intersection_dimension, standard_basis_columns
from .orbit import OrbitGraph, derived_data, dual, representative_matrix
from .steinberg import KTypePair
from .tableau import Partition, SignedYoungDiagram, signed_diagram_from_counts

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

_Profile = TypeVar("_Profile")

Seed = int | str | random.Random


def _block_matrix(
    top_left: RationalMatrix,
    top_right: RationalMatrix,
    bottom_left: RationalMatrix,
    bottom_right: RationalMatrix,
) -> RationalMatrix:
    top = top_left.hstack(top_right)
    bottom = bottom_left.hstack(bottom_right)
    return RationalMatrix(top.nrows + bottom.nrows, top.ncols, top.entries + bottom.entries)


@dataclass(frozen=True)
class ConormalElement:
    """A matrix x = (a b; c d) in the conormal direction of ``omega``."""

    omega: OrbitGraph
    a: RationalMatrix
    b: RationalMatrix
    c: RationalMatrix
    d: RationalMatrix

    @property
    def x(self) -> RationalMatrix:
        """Full (p+q) x (p+q) matrix."""
        return _block_matrix(self.a, self.b, self.c, self.d)

    @property
    def x_k(self) -> RationalMatrix:
        """Block diagonal part diag(a, d)."""
        p, q = self.omega.p, self.omega.q
        return _block_matrix(self.a, RationalMatrix.zeros(p, q), RationalMatrix.zeros(q, p), self.d)

    @property
    def x_s(self) -> RationalMatrix:
        """Off-diagonal part (0 b; c 0)."""
        p, q = self.omega.p, self.omega.q
        return _block_matrix(RationalMatrix.zeros(p, p), self.b, self.c, RationalMatrix.zeros(q, q))

    @property
    def tau(self) -> RationalMatrix:
        """The p x q pattern of sigma: tau[sigma(j), j] = 1."""
        rows = [[0] * self.omega.q for _ in range(self.omega.p)]
        for a, c in self.omega.edges:
            rows[a - 1][c - 1] = 1
        return RationalMatrix.from_rows(rows, ncols=self.omega.q)


def is_conormal(omega: OrbitGraph, x: RationalMatrix) -> bool:
    """Return True if ``x`` lies in the conormal direction of ``omega``.

    The diagonal blocks must be strictly upper triangular, x must kill the
    subspace and map into it.
    """
    p, q, n = omega.p, omega.q, omega.p + omega.q
    if x.shape != (n, n):
        return False
    a = x.submatrix(range(p), range(p))
    d = x.submatrix(range(p, n), range(p, n))
    if not (a.is_strictly_upper_triangular() and d.is_strictly_upper_triangular()):
        return False
    subspace = representative_matrix(omega)
    if not (x @ subspace).is_zero():
        return False
    return subspace.hstack(x).rank() == omega.r


def _rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)  # noqa: S311


def sample_conormal(
    omega: OrbitGraph,
    bound: int = DEFAULT_BOUND,
    seed: Seed = DEFAULT_SEED,
) -> ConormalElement:
    """Draw an element of the conormal direction with free entries uniform in [-bound, bound].

    Raises:
        SteinbergValidationError: if ``bound`` is not positive.
        SteinbergInconsistencyError: if the assembled matrix fails the membership test.

    """
    if bound < 1:
        msg = f"Sampling bound must be positive, got {bound}"
        raise SteinbergValidationError(msg)
    rng = _rng(seed)
    p, q = omega.p, omega.q
    data = derived_data(omega)
    sigma = data.sigma.as_dict()
    sigma_inverse = data.sigma.inverse().as_dict()
    edge_plus, marked_plus, free_plus = data.edge_plus, data.marked_plus, data.free_plus
    edge_minus, marked_minus, free_minus = data.edge_minus, data.marked_minus, data.free_minus

    # 1-based scratch blocks
    a = [[0] * (p + 1) for _ in range(p + 1)]
    b = [[0] * (q + 1) for _ in range(p + 1)]
    c = [[0] * (p + 1) for _ in range(q + 1)]
    d = [[0] * (q + 1) for _ in range(q + 1)]

    def draw() -> int:
        return rng.randint(-bound, bound)

    for j in edge_minus:
        for i in edge_plus:
            if sigma[j] < i and j < sigma_inverse[i]:
                c[j][i] = draw()
        for free in free_plus:
            if sigma[j] < free:
                c[j][free] = draw()
    for m in marked_minus:
        for i in edge_plus:
            if m < sigma_inverse[i]:
                c[m][i] = draw()
        for free in free_plus:
            c[m][free] = draw()
    for ell in marked_plus:
        for i in edge_plus:
            if ell < i:
                a[ell][i] = draw()
        for free in free_plus:
            if ell < free:
                a[ell][free] = draw()
        for free in free_minus:
            b[ell][free] = draw()
    for row in (*edge_minus, *marked_minus):
        for free in free_minus:
            if row < free:
                d[row][free] = draw()

    # Rows sigma(J) of (a b) repeat rows J of (c d); columns J repeat -(columns sigma(J)).
    for j in edge_minus:
        for column in (*edge_plus, *free_plus):
            a[sigma[j]][column] = c[j][column]
    for row in (*edge_minus, *marked_minus):
        for j in edge_minus:
            d[row][j] = -c[row][sigma[j]]
    for ell in marked_plus:
        for j in edge_minus:
            b[ell][j] = -a[ell][sigma[j]]
    for j in edge_minus:
        for column in (*edge_minus, *free_minus):
            b[sigma[j]][column] = d[j][column]

    element = ConormalElement(
        omega=omega,
        a=RationalMatrix.from_rows([row[1:] for row in a[1:]], ncols=p),
        b=RationalMatrix.from_rows([row[1:] for row in b[1:]], ncols=q),
        c=RationalMatrix.from_rows([row[1:] for row in c[1:]], ncols=p),
        d=RationalMatrix.from_rows([row[1:] for row in d[1:]], ncols=q),
    )
    x = element.x
    if not is_conormal(omega, x) or not (x @ x).is_zero():
        msg = f"Sample for {omega} is not in its conormal direction"
        raise SteinbergInconsistencyError(msg)
    return element


def dual_element(element: ConormalElement) -> ConormalElement:
    """Conjugate by the swap of V+ and V-: (a b; c d) becomes (d c; b a) for the dual graph."""
    return ConormalElement(
        omega=dual(element.omega),
        a=element.d,
        b=element.c,
        c=element.b,
        d=element.a,
    )


def sample_to_json(element: ConormalElement) -> dict[str, Any]:
    """Return ``{"omega": ..., "x": [[...]]}`` with integer entries."""
    return {"omega": element.omega.canonical(), "x": element.x.to_json()}


def _check_nilpotent(matrix: RationalMatrix) -> None:
    if matrix.nrows != matrix.ncols:
        msg = f"Expected a square matrix, got {matrix.shape}"
        raise SteinbergValidationError(msg)
    if not matrix.power(matrix.nrows).is_zero():
        msg = "Matrix is not nilpotent"
        raise SteinbergValidationError(msg)


def _kernel_dimensions(matrix: RationalMatrix) -> list[int]:
    n = matrix.nrows
    dims = []
    power = RationalMatrix.identity(n)
    for _ in range(n):
        power = power @ matrix
        dims.append(n - power.rank())
    return dims


def _partition_from_kernels(kernel_dims: Sequence[int]) -> Partition:
    # Number of parts of size >= k is d_k - d_{k-1}.
    previous = 0
    at_least = []
    for dim in kernel_dims:
        if dim > previous:
            at_least.append(dim - previous)
        previous = dim
    return Partition(tuple(at_least)).conjugate()


def jordan_type(matrix: RationalMatrix) -> Partition:
    """Jordan type of a nilpotent matrix from the kernel dimensions of its powers.

    Raises:
        SteinbergValidationError: if the matrix is not square and nilpotent.

    """
    _check_nilpotent(matrix)
    return _partition_from_kernels(_kernel_dimensions(matrix))


def _signed_kernel_counts(x_s: RationalMatrix, p: int, q: int) -> tuple[list[int], list[int]]:
    n = p + q
    plus_space = standard_basis_columns(n, range(p))
    minus_space = standard_basis_columns(n, range(p, n))
    plus_cum, minus_cum = [], []
    power = RationalMatrix.identity(n)
    for _ in range(max(n, 1)):
        power = power @ x_s
        kernel = RationalMatrix.from_columns(power.nullspace(), n)
        plus_cum.append(intersection_dimension(plus_space, kernel))
        minus_cum.append(intersection_dimension(minus_space, kernel))
    return plus_cum, minus_cum


def signed_jordan_type(x_s: RationalMatrix, p: int, q: int) -> SignedYoungDiagram:
    """Signed Young diagram of a nilpotent (0 b; c 0) from dim(V± ∩ ker x^k).

    Raises:
        SteinbergValidationError: if the matrix is not nilpotent of off-diagonal form.

    """
    n = p + q
    if x_s.shape != (n, n):
        msg = f"Expected a {n}x{n} matrix, got {x_s.shape}"
        raise SteinbergValidationError(msg)
    if not (x_s.submatrix(range(p), range(p)).is_zero() and x_s.submatrix(range(p, n), range(p, n)).is_zero()):
        msg = "Matrix has nonzero diagonal blocks"
        raise SteinbergValidationError(msg)
    _check_nilpotent(x_s)
    plus_cum, minus_cum = _signed_kernel_counts(x_s, p, q)
    return signed_diagram_from_counts(plus_cum, minus_cum, signature=(p, q))


def _dominant(profiles: list[_Profile], at_least: Callable[[_Profile, _Profile], bool]) -> _Profile | None:
    for candidate in profiles:
        if all(at_least(candidate, other) for other in profiles):
            return candidate
    return None


def _componentwise_ge(left: Sequence[Sequence[int]], right: Sequence[Sequence[int]]) -> bool:
    return all(x >= y for xs, ys in zip(left, right, strict=True) for x, y in zip(xs, ys, strict=True))


def _generic_profile(
    omega: OrbitGraph,
    read: Callable[[ConormalElement], tuple[tuple[int, ...], ...]],
    at_least: Callable[[Any, Any], bool],
    trials: int,
    bound: int,
    seed: int,
    retry_cap: int,
) -> tuple[tuple[int, ...], ...]:
    if trials < 1:
        msg = f"Need at least one trial, got {trials}"
        raise SteinbergValidationError(msg)
    current_bound = bound
    for attempt in range(retry_cap + 1):
        profiles = [
            read(sample_conormal(omega, current_bound, f"{seed}/{attempt}/{trial}"))
            for trial in range(trials)
        ]
        best = _dominant(profiles, at_least)
        if best is not None:
            return best
        logger.warning(
            "Incomparable samples for {} at bound {}, retrying with bound {}",
            omega,
            current_bound,
            current_bound * 2,
        )
        current_bound *= 2
    msg = f"No dominant sample for {omega} after {retry_cap} retries"
    raise SteinbergGenericityError(msg)


def _k_ranks(element: ConormalElement) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(block.power(k).rank() for k in range(1, block.nrows + 1))
        for block in (element.a, element.d)
    )


def oracle_phi_k(
    omega: OrbitGraph,
    trials: int = DEFAULT_TRIALS,
    bound: int = DEFAULT_BOUND,
    seed: int = DEFAULT_SEED,
    retry_cap: int = DEFAULT_RETRY_CAP,
) -> KTypePair:
    """Jordan types of the diagonal blocks of a generic conormal sample.

    The sample with the largest ranks of all powers wins.

    Raises:
        SteinbergGenericityError: if no sample dominates after ``retry_cap`` retries.

    """
    plus_ranks, minus_ranks = _generic_profile(
        omega, _k_ranks, _componentwise_ge, trials, bound, seed, retry_cap
    )
    return KTypePair(
        _partition_from_kernels([omega.p - rank for rank in plus_ranks]),
        _partition_from_kernels([omega.q - rank for rank in minus_ranks]),
    )


def _s_kernels(element: ConormalElement) -> tuple[tuple[int, ...], ...]:
    plus_cum, minus_cum = _signed_kernel_counts(element.x_s, element.omega.p, element.omega.q)
    return tuple(plus_cum), tuple(minus_cum)


def oracle_phi_s(
    omega: OrbitGraph,
    trials: int = DEFAULT_TRIALS,
    bound: int = DEFAULT_BOUND,
    seed: int = DEFAULT_SEED,
    retry_cap: int = DEFAULT_RETRY_CAP,
) -> SignedYoungDiagram:
    """Signed Jordan type of the off-diagonal part of a generic conormal sample.

    The sample with the smallest kernels of all powers wins.

    Raises:
        SteinbergGenericityError: if no sample dominates after ``retry_cap`` retries.

    """
    plus_cum, minus_cum = _generic_profile(
        omega,
        _s_kernels,
        lambda left, right: _componentwise_ge(right, left),
        trials,
        bound,
        seed,
        retry_cap,
    )
    return signed_diagram_from_counts(plus_cum, minus_cum, signature=(omega.p, omega.q))


def power_identity_check(element: ConormalElement, depth: int = DEFAULT_POWER_CHECK_DEPTH) -> bool:
    """Check the power identities of the off-diagonal part for m = 0..depth.

    (x_s)^(2m) = (-1)^m diag(a^(2m), d^(2m)), and the lower left block of
    (x_s)^(2m+1) is (-1)^m (c tau)^(2m) c.
    """
    p, q = element.omega.p, element.omega.q
    n = p + q
    x_s = element.x_s
    c_tau = element.c @ element.tau
    for m in range(depth + 1):
        sign = -1 if m % 2 else 1
        even = x_s.power(2 * m)
        expected_even = _block_matrix(
            element.a.power(2 * m),
            RationalMatrix.zeros(p, q),
            RationalMatrix.zeros(q, p),
            element.d.power(2 * m),
        ).scale(sign)
        if even != expected_even:
            logger.debug("Even power identity fails for {} at m={}", element.omega, m)
            return False
        odd_block = (even @ x_s).submatrix(range(p, n), range(p))
        if odd_block != (c_tau.power(2 * m) @ element.c).scale(sign):
            logger.debug("Odd power identity fails for {} at m={}", element.omega, m)
            return False
    return True
