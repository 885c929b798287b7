"""Generalized Robinson-Schensted correspondence, fibers and multiplicities."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import TYPE_CHECKING, Any

from loguru import logger

from .const import MAX_ENUMERATION_SIZE
from .exceptions import SteinbergBijectionError, SteinbergValidationError
from .orbit import OrbitGraph, derived_data, enumerate_parameters, kst_triples
from .steinberg import KTypePair, phi_k
from .tableau import (
    Partition,
    StandardTableau,
    count_standard_tableaux,
    is_column_strip,
    partitions,
    rs_correspondence,
    standard_tableaux,
    star,
)

if TYPE_CHECKING:
    from collections.abc import Iterator


@dataclass(frozen=True)
class GrsTuple:
    """The tuple (T1, T2; lambda', mu'; nu)."""

    t1: StandardTableau
    t2: StandardTableau
    lambda_prime: Partition
    mu_prime: Partition
    nu: Partition

    @property
    def target(self) -> KTypePair:
        """Shapes of the two tableaux."""
        return KTypePair(self.t1.shape, self.t2.shape)

    def check(self, r: int) -> None:
        """Check the tableau and column strip conditions for ``r``.

        Raises:
            SteinbergValidationError: if a condition fails.

        """
        p, q = self.t1.size, self.t2.size
        if self.t1.entries != frozenset(range(1, p + 1)) or self.t2.entries != frozenset(range(1, q + 1)):
            msg = f"Tableaux of {self} must be filled with 1..p and 1..q"
            raise SteinbergValidationError(msg)
        lam, mu = self.t1.shape, self.t2.shape
        chain_ok = (
            is_column_strip(self.nu, self.lambda_prime)
            and is_column_strip(self.lambda_prime, lam)
            and is_column_strip(self.nu, self.mu_prime)
            and is_column_strip(self.mu_prime, mu)
        )
        if not chain_ok:
            msg = f"Partitions of {self} do not form column strip chains inside {lam} and {mu}"
            raise SteinbergValidationError(msg)
        if self.lambda_prime.size + self.mu_prime.size != self.nu.size + r:
            msg = f"|lambda'|+|mu'| = {self.lambda_prime.size + self.mu_prime.size} differs from |nu|+r = {self.nu.size + r}"
            raise SteinbergValidationError(msg)

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {
            "T1": self.t1.to_json(),
            "T2": self.t2.to_json(),
            "lambdaPrime": self.lambda_prime.to_json(),
            "muPrime": self.mu_prime.to_json(),
            "nu": self.nu.to_json(),
        }

    def __str__(self) -> str:
        """Return a one-line rendering."""
        return f"({self.t1}; {self.t2}; {self.lambda_prime}; {self.mu_prime}; {self.nu})"


def grs_tuple_from_json(data: dict[str, Any]) -> GrsTuple:
    """Parse the JSON form of a tuple.

    Raises:
        SteinbergValidationError: if a field is missing or malformed.

    """
    try:
        return GrsTuple(
            t1=StandardTableau(tuple(tuple(row) for row in data["T1"])),
            t2=StandardTableau(tuple(tuple(row) for row in data["T2"])),
            lambda_prime=Partition(tuple(data["lambdaPrime"])),
            mu_prime=Partition(tuple(data["muPrime"])),
            nu=Partition(tuple(data["nu"])),
        )
    except SteinbergValidationError:
        raise
    except (KeyError, TypeError, ValueError) as ex:
        msg = f"Malformed gRS tuple JSON {data!r}"
        raise SteinbergValidationError(msg) from ex


def grs(omega: OrbitGraph) -> GrsTuple:
    """Return gRS(omega).

    T1 = [L]*RS1(sigma)*[L'], T2 = [M]*RS2(sigma)*[M'], lambda' and mu' are
    the shapes after the first star, and nu is the shape of RS1(sigma).
    """
    data = derived_data(omega)
    insertion, recording = rs_correspondence(data.sigma)
    plus_head = star(StandardTableau.column(data.marked_plus), insertion)
    minus_head = star(StandardTableau.column(data.marked_minus), recording)
    return GrsTuple(
        t1=star(plus_head, StandardTableau.column(data.free_plus)),
        t2=star(minus_head, StandardTableau.column(data.free_minus)),
        lambda_prime=plus_head.shape,
        mu_prime=minus_head.shape,
        nu=insertion.shape,
    )


@cache
def _grs_table(p: int, q: int, r: int, bound: int) -> dict[GrsTuple, tuple[OrbitGraph, ...]]:
    table: dict[GrsTuple, list[OrbitGraph]] = {}
    for omega in enumerate_parameters(p, q, r, bound):
        table.setdefault(grs(omega), []).append(omega)
    logger.debug("Tabulated gRS on {} parameters for ({},{},{})", sum(map(len, table.values())), p, q, r)
    return {key: tuple(value) for key, value in table.items()}


def grs_inverse(t: GrsTuple, r: int, bound: int = MAX_ENUMERATION_SIZE) -> OrbitGraph:
    """Return the unique omega with grs(omega) == t, by search over the parameters.

    Raises:
        SteinbergValidationError: if ``t`` violates the tuple conditions for ``r``.
        SteinbergBijectionError: if the search finds no preimage or several.

    """
    t.check(r)
    preimages = _grs_table(t.t1.size, t.t2.size, r, bound).get(t, ())
    if len(preimages) != 1:
        msg = f"gRS tuple {t} has {len(preimages)} preimages, expected exactly one"
        raise SteinbergBijectionError(msg)
    return preimages[0]


def fiber(p: int, q: int, r: int, target: KTypePair, bound: int = MAX_ENUMERATION_SIZE) -> list[OrbitGraph]:
    """Return every parameter whose symmetrized Steinberg image is ``target``."""
    target.check_sizes(p, q)
    return [omega for omega in enumerate_parameters(p, q, r, bound) if phi_k(omega) == target]


def _chains(
    k: int, s: int, t: int, lam: Partition, mu: Partition
) -> Iterator[tuple[Partition, Partition, Partition]]:
    lam_candidates = [x for x in partitions(k + s) if is_column_strip(x, lam)]
    mu_candidates = [x for x in partitions(k + t) if is_column_strip(x, mu)]
    for nu in partitions(k):
        for lam_prime in lam_candidates:
            if not is_column_strip(nu, lam_prime):
                continue
            for mu_prime in mu_candidates:
                if is_column_strip(nu, mu_prime):
                    yield nu, lam_prime, mu_prime


def multiplicity(k: int, s: int, t: int, lam: Partition, mu: Partition) -> int:
    """Count chains nu ⊆cs lambda' ⊆cs lambda and nu ⊆cs mu' ⊆cs mu with |nu|=k, |lambda'|=k+s, |mu'|=k+t."""
    if k + s > lam.size or k + t > mu.size:
        msg = f"(k,s,t)=({k},{s},{t}) does not fit inside {lam} and {mu}"
        raise SteinbergValidationError(msg)
    return sum(1 for _ in _chains(k, s, t, lam, mu))


def fiber_cardinality(lam: Partition, mu: Partition, r: int) -> int:
    """Size of the fiber over (lambda, mu), from multiplicities and tableau counts."""
    tableaux = count_standard_tableaux(lam) * count_standard_tableaux(mu)
    return sum(
        multiplicity(k, s, t, lam, mu) * tableaux
        for k, s, t in kst_triples(lam.size, mu.size, r)
    )


def grs_targets(p: int, q: int, r: int) -> list[GrsTuple]:
    """List every tuple satisfying the tableau and column strip conditions for (p, q, r)."""
    targets = []
    for lam in partitions(p):
        for mu in partitions(q):
            chains = [chain for k, s, t in kst_triples(p, q, r) for chain in _chains(k, s, t, lam, mu)]
            if not chains:
                continue
            for t1 in standard_tableaux(lam):
                for t2 in standard_tableaux(mu):
                    targets.extend(
                        GrsTuple(t1, t2, lam_prime, mu_prime, nu) for nu, lam_prime, mu_prime in chains
                    )
    return targets
