"""Symmetrized and exotic Steinberg maps computed through RS insertion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from loguru import logger

from .exceptions import SteinbergInconsistencyError, SteinbergValidationError
from .orbit import OrbitGraph, derived_data
from .tableau import (
    BijectionWord,
    Partition,
    SignedYoungDiagram,
    StandardTableau,
    rs_correspondence,
    signed_diagram_from_counts,
    star,
)


@dataclass(frozen=True)
class KTypePair:
    """Pair (lambda, mu) of partitions of p and q labelling a nilpotent K-orbit in k."""

    lam: Partition
    mu: Partition

    def __post_init__(self) -> None:
        """Accept plain tuples for the two partitions."""
        if not isinstance(self.lam, Partition):
            object.__setattr__(self, "lam", Partition(tuple(self.lam)))
        if not isinstance(self.mu, Partition):
            object.__setattr__(self, "mu", Partition(tuple(self.mu)))

    def check_sizes(self, p: int, q: int) -> None:
        """Raise if the partitions do not have sizes p and q."""
        if (self.lam.size, self.mu.size) != (p, q):
            msg = f"Target {self} does not partition (p,q)=({p},{q})"
            raise SteinbergValidationError(msg)

    def swapped(self) -> KTypePair:
        """Return (mu, lambda)."""
        return KTypePair(self.mu, self.lam)

    def to_json(self) -> dict[str, list[int]]:
        """Return the JSON form."""
        return {"lambda": self.lam.to_json(), "mu": self.mu.to_json()}

    def __str__(self) -> str:
        """Return ``(2,1),(1,1)``."""
        return f"{self.lam},{self.mu}"


def wk_permutations(omega: OrbitGraph) -> tuple[BijectionWord, BijectionWord]:
    """Return the permutations w_k+ of 1..p and w_k- of 1..q.

    w_k+ lists L descending, then sigma(J) in increasing order of J, then L'
    descending. w_k- lists M descending, sigma^-1(I), then M' descending.
    """
    data = derived_data(omega)
    sigma = data.sigma.as_dict()
    sigma_inverse = data.sigma.inverse().as_dict()
    plus_word = [
        *reversed(data.marked_plus),
        *(sigma[j] for j in data.edge_minus),
        *reversed(data.free_plus),
    ]
    minus_word = [
        *reversed(data.marked_minus),
        *(sigma_inverse[i] for i in data.edge_plus),
        *reversed(data.free_minus),
    ]
    return BijectionWord.from_one_line(plus_word), BijectionWord.from_one_line(minus_word)


def ws_bijections(omega: OrbitGraph) -> tuple[BijectionWord, BijectionWord]:
    """Return the bijections w_s+ and w_s-.

    w_s+ sends the i-th element of M to -i, j in J to sigma(j) and q+i to
    the i-th largest element of L'. w_s- sends the i-th element of L to -i,
    i in I to sigma^-1(i) and p+i to the i-th largest element of M'.
    """
    data = derived_data(omega)
    plus_pairs = [(m, -index) for index, m in enumerate(data.marked_minus, start=1)]
    plus_pairs += list(data.sigma.pairs)
    plus_pairs += [
        (omega.q + index, free) for index, free in enumerate(reversed(data.free_plus), start=1)
    ]
    minus_pairs = [(ell, -index) for index, ell in enumerate(data.marked_plus, start=1)]
    minus_pairs += list(data.sigma.inverse().pairs)
    minus_pairs += [
        (omega.p + index, free) for index, free in enumerate(reversed(data.free_minus), start=1)
    ]
    return BijectionWord(tuple(plus_pairs)), BijectionWord(tuple(minus_pairs))


def _insertion_shape(word: BijectionWord) -> Partition:
    return rs_correspondence(word)[0].shape


def phi_k(omega: OrbitGraph) -> KTypePair:
    """Symmetrized Steinberg map: shapes of the insertion tableaux of w_k+ and w_k-."""
    plus_word, minus_word = wk_permutations(omega)
    return KTypePair(_insertion_shape(plus_word), _insertion_shape(minus_word))


def ws_shapes(omega: OrbitGraph) -> tuple[Partition, Partition]:
    """Return (lambda', mu'), the insertion shapes of w_s+ and w_s-."""
    plus_word, minus_word = ws_bijections(omega)
    return _insertion_shape(plus_word), _insertion_shape(minus_word)


def phi_s_column_counts(omega: OrbitGraph) -> tuple[list[int], list[int]]:
    """Cumulative plus and minus column counts of the exotic image, columns 1..C.

    Even columns read n_c(lambda), n_c(mu); odd columns read
    s - t + n_c(lambda') and t - s + n_c(mu').
    """
    target = phi_k(omega)
    lam_prime, mu_prime = ws_shapes(omega)
    s, t = len(omega.plus), len(omega.minus)
    columns = max(target.lam.part(0), target.mu.part(0), lam_prime.part(0), mu_prime.part(0)) + 1
    plus_cum: list[int] = []
    minus_cum: list[int] = []
    for c in range(1, columns + 1):
        if c % 2 == 0:
            plus_cum.append(target.lam.first_columns_count(c))
            minus_cum.append(target.mu.first_columns_count(c))
        else:
            plus_cum.append(s - t + lam_prime.first_columns_count(c))
            minus_cum.append(t - s + mu_prime.first_columns_count(c))
    return plus_cum, minus_cum


def phi_s(omega: OrbitGraph) -> SignedYoungDiagram:
    """Exotic Steinberg map: the signed Young diagram of signature (p, q).

    Raises:
        SteinbergInconsistencyError: if the column counts do not assemble into a diagram.

    """
    plus_cum, minus_cum = phi_s_column_counts(omega)
    diagram = signed_diagram_from_counts(plus_cum, minus_cum, signature=(omega.p, omega.q))
    if diagram.signature != (omega.p, omega.q):
        msg = f"Exotic image {diagram} of {omega} has signature {diagram.signature}"
        raise SteinbergInconsistencyError(msg)
    target = phi_k(omega)
    replus, reminus = diagram.column_counts(len(plus_cum))
    for c in range(2, len(plus_cum) + 1, 2):
        expected = (target.lam.first_columns_count(c), target.mu.first_columns_count(c))
        if (replus[c - 1], reminus[c - 1]) != expected:
            msg = f"Exotic image {diagram} of {omega} disagrees with {target} in column {c}"
            raise SteinbergInconsistencyError(msg)
    logger.trace("phi_s({}) = {}", omega, diagram)
    return diagram


def star_identity_tableaux(
    omega: OrbitGraph,
) -> tuple[tuple[StandardTableau, StandardTableau], tuple[StandardTableau, StandardTableau]]:
    """Return ([L]*RS1(sigma)*[L'], RS1(w_k+)) and ([M]*RS2(sigma)*[M'], RS1(w_k-)).

    Each pair must coincide.
    """
    data = derived_data(omega)
    sigma_insertion, sigma_recording = rs_correspondence(data.sigma)
    plus_word, minus_word = wk_permutations(omega)
    plus_product = star(
        StandardTableau.column(data.marked_plus),
        sigma_insertion,
        StandardTableau.column(data.free_plus),
    )
    minus_product = star(
        StandardTableau.column(data.marked_minus),
        sigma_recording,
        StandardTableau.column(data.free_minus),
    )
    return (
        (plus_product, rs_correspondence(plus_word)[0]),
        (minus_product, rs_correspondence(minus_word)[0]),
    )


def steinberg_json(omega: OrbitGraph) -> dict[str, Any]:
    """Return ``{"omega", "lambda", "mu", "Lambda"}``."""
    target = phi_k(omega)
    return {
        "omega": omega.canonical(),
        "lambda": target.lam.to_json(),
        "mu": target.mu.to_json(),
        "Lambda": phi_s(omega).to_json(),
    }
