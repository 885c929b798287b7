"""Property sweep comparing the combinatorial maps with the matrix oracle."""

# pylint: disable=W0212, W0511

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

from .const import (
    DEFAULT_BOUND,
    DEFAULT_RANDOM_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    MAX_CROSS_CHECK_NODES,
)
from .exceptions import SteinbergError
from .grs import fiber, fiber_cardinality, grs, grs_inverse, grs_targets
from .models import CheckResult, VerifyPayload
from .oracle import (
    dual_element,
    is_conormal,
    oracle_phi_k,
    oracle_phi_s,
    power_identity_check,
    sample_conormal,
)
from .orbit import (
    OrbitGraph,
    ambient_dimension,
    classify_subspace,
    count_parameters,
    dense_orbit,
    dimension,
    dual,
    enumerate_parameters,
    omega_from_rank_matrix,
    rank_matrix,
    representative_matrix,
)
from .poset import hasse_diagram
from .steinberg import KTypePair, phi_k, phi_s, star_identity_tableaux, ws_bijections
from .tableau import partitions

if TYPE_CHECKING:
    from collections.abc import Callable

_LOGGER = logging.getLogger(__name__)

CheckOutcome = tuple[int, list[str]]


@dataclass(frozen=True)
class VerifyContext:
    """Sizes and sampling options of one sweep."""

    p: int
    q: int
    r_values: tuple[int, ...]
    seed: int = DEFAULT_SEED
    bound: int = DEFAULT_BOUND
    trials: int = DEFAULT_TRIALS
    random_samples: int = DEFAULT_RANDOM_SAMPLES

    @classmethod
    def for_sizes(cls, p: int, q: int, r: int | None = None, **options: int) -> VerifyContext:
        """Sweep one r, or every r from 0 to p+q when ``r`` is None."""
        r_values = tuple(range(p + q + 1)) if r is None else (r,)
        return cls(p, q, r_values, **options)

    @cached_property
    def parameters(self) -> dict[int, list[OrbitGraph]]:
        """Enumerated parameters per r."""
        return {r: enumerate_parameters(self.p, self.q, r) for r in self.r_values}

    @cached_property
    def all_parameters(self) -> list[OrbitGraph]:
        """Every enumerated parameter, r ascending."""
        return [omega for r in self.r_values for omega in self.parameters[r]]

    @cached_property
    def sampled_parameters(self) -> list[OrbitGraph]:
        """Parameters for the matrix checks: all, or a seeded random subset."""
        everything = self.all_parameters
        if not self.random_samples or self.random_samples >= len(everything):
            return everything
        rng = random.Random(self.seed)  # noqa: S311
        return rng.sample(everything, self.random_samples)


@dataclass(frozen=True, kw_only=True)
class PropertyCheckDescription:
    """Describes one property check of the sweep."""

    key: str
    name: str
    check_fn: Callable[[VerifyContext], CheckOutcome]


def _check_counts(context: VerifyContext) -> CheckOutcome:
    failures = []
    for r, graphs in context.parameters.items():
        formula = count_parameters(context.p, context.q, r)
        if formula != len(graphs):
            failures.append(f"r={r}: formula={formula} enumerated={len(graphs)}")
    return len(context.parameters), failures


def _check_rank_encoding(context: VerifyContext) -> CheckOutcome:
    failures = []
    for omega in context.all_parameters:
        if omega_from_rank_matrix(rank_matrix(omega)) != omega:
            failures.append(f"{omega}: rank matrix does not invert")
        if classify_subspace(representative_matrix(omega), omega.p, omega.q) != omega:
            failures.append(f"{omega}: representative classifies elsewhere")
    return len(context.all_parameters), failures


def _check_poset(context: VerifyContext) -> CheckOutcome:
    failures = []
    for r in context.r_values:
        cross_check = len(context.parameters[r]) <= MAX_CROSS_CHECK_NODES
        diagram = hasse_diagram(context.p, context.q, r, cross_check=cross_check)
        for upper, lower in diagram.cover_edges:
            if diagram.nodes[upper][1] != diagram.nodes[lower][1] + 1:
                failures.append(f"cover {diagram.nodes[upper][0]} > {diagram.nodes[lower][0]} skips a dimension")
        top = diagram.top()
        ambient = ambient_dimension(context.p, context.q, r)
        if dimension(top) != ambient or top != dense_orbit(context.p, context.q, r):
            failures.append(f"r={r}: maximum {top} is not the open orbit")
        failures.extend(
            f"{omega}: dimension {dim} reaches the ambient dimension"
            for omega, dim in diagram.nodes
            if omega != top and dim >= ambient
        )
    return len(context.r_values), failures


def _check_star_identities(context: VerifyContext) -> CheckOutcome:
    failures = []
    for omega in context.all_parameters:
        for product, insertion in star_identity_tableaux(omega):
            if product != insertion:
                failures.append(f"{omega}: star product {product} differs from {insertion}")
    return len(context.all_parameters), failures


def _check_duality(context: VerifyContext) -> CheckOutcome:
    failures = []
    for omega in context.all_parameters:
        mirrored = dual(omega)
        if dual(mirrored) != omega:
            failures.append(f"{omega}: duality is not an involution")
        if phi_k(mirrored) != phi_k(omega).swapped():
            failures.append(f"{omega}: symmetrized image does not swap under duality")
        if phi_s(mirrored) != phi_s(omega).star():
            failures.append(f"{omega}: exotic image does not flip signs under duality")
    return len(context.all_parameters), failures


def _check_ws_injective(context: VerifyContext) -> CheckOutcome:
    failures = []
    for r, graphs in context.parameters.items():
        seen: dict[tuple, OrbitGraph] = {}
        for omega in graphs:
            key = ws_bijections(omega)
            if key in seen:
                failures.append(f"r={r}: {omega} and {seen[key]} share exotic bijections")
            seen[key] = omega
    return len(context.all_parameters), failures


def _check_grs(context: VerifyContext) -> CheckOutcome:
    failures = []
    for r, graphs in context.parameters.items():
        image = set()
        for omega in graphs:
            t = grs(omega)
            image.add(t)
            if grs_inverse(t, r) != omega:
                failures.append(f"{omega}: gRS does not invert")
            if t.target != phi_k(omega):
                failures.append(f"{omega}: gRS shapes {t.target} differ from {phi_k(omega)}")
        if image != set(grs_targets(context.p, context.q, r)):
            failures.append(f"r={r}: gRS image differs from the tuple set")
    return len(context.all_parameters), failures


def _check_fibers(context: VerifyContext) -> CheckOutcome:
    failures = []
    checked = 0
    for r, graphs in context.parameters.items():
        total = 0
        for lam in partitions(context.p):
            for mu in partitions(context.q):
                target = KTypePair(lam, mu)
                expected = fiber_cardinality(lam, mu, r)
                found = len(fiber(context.p, context.q, r, target))
                checked += 1
                total += expected
                if expected != found:
                    failures.append(f"r={r} {target}: formula {expected}, enumerated {found}")
        if total != len(graphs):
            failures.append(f"r={r}: fibers sum to {total}, expected {len(graphs)}")
    return checked, failures


def _check_oracle(context: VerifyContext) -> CheckOutcome:
    failures = []
    for omega in context.sampled_parameters:
        options = {"trials": context.trials, "bound": context.bound, "seed": context.seed}
        found_k = oracle_phi_k(omega, **options)
        if found_k != phi_k(omega):
            failures.append(f"{omega}: oracle gives {found_k}, RS gives {phi_k(omega)}")
        found_s = oracle_phi_s(omega, **options)
        if found_s != phi_s(omega):
            failures.append(f"{omega}: oracle gives {found_s}, RS gives {phi_s(omega)}")
    return len(context.sampled_parameters), failures


def _check_power_identities(context: VerifyContext) -> CheckOutcome:
    failures = []
    for omega in context.sampled_parameters:
        element = sample_conormal(omega, context.bound, f"{context.seed}/powers")
        if not power_identity_check(element):
            failures.append(f"{omega}: power identities fail")
        mirrored = dual_element(element)
        if not is_conormal(mirrored.omega, mirrored.x):
            failures.append(f"{omega}: swapped sample is not conormal for {mirrored.omega}")
    return len(context.sampled_parameters), failures


CHECK_DESCRIPTIONS: tuple[PropertyCheckDescription, ...] = (
    PropertyCheckDescription(key="counts", name="Enumeration matches the counting formula", check_fn=_check_counts),
    PropertyCheckDescription(key="rank_encoding", name="Rank matrices and subspaces classify back", check_fn=_check_rank_encoding),
    PropertyCheckDescription(key="poset", name="Moves give the covers of the closure order", check_fn=_check_poset),
    PropertyCheckDescription(key="star", name="Star product identities", check_fn=_check_star_identities),
    PropertyCheckDescription(key="duality", name="Duality swaps and flips the images", check_fn=_check_duality),
    PropertyCheckDescription(key="ws_injective", name="Exotic bijections determine the parameter", check_fn=_check_ws_injective),
    PropertyCheckDescription(key="grs", name="gRS is a bijection onto the tuple set", check_fn=_check_grs),
    PropertyCheckDescription(key="fibers", name="Fiber sizes match the multiplicity formula", check_fn=_check_fibers),
    PropertyCheckDescription(key="oracle", name="Matrix oracle agrees with both Steinberg maps", check_fn=_check_oracle),
    PropertyCheckDescription(key="powers", name="Power identities of conormal samples", check_fn=_check_power_identities),
)


def run_check(description: PropertyCheckDescription, context: VerifyContext) -> CheckResult:
    """Run one check, turning library errors into failures."""
    try:
        checked, failures = description.check_fn(context)
    except SteinbergError as ex:
        _LOGGER.exception("Check %s raised", description.key)
        checked, failures = 0, [f"{type(ex).__name__}: {ex}"]
    level = logging.INFO if not failures else logging.WARNING
    _LOGGER.log(level, "%s: %d checked, %d failures", description.key, checked, len(failures))
    return CheckResult(key=description.key, name=description.name, checked=checked, failures=failures)


def run_verification(
    context: VerifyContext,
    descriptions: tuple[PropertyCheckDescription, ...] = CHECK_DESCRIPTIONS,
) -> VerifyPayload:
    """Run every check in order and collect the results."""
    _LOGGER.info(
        "Verifying (p,q)=(%d,%d), r in %s, seed=%d bound=%d trials=%d",
        context.p,
        context.q,
        list(context.r_values),
        context.seed,
        context.bound,
        context.trials,
    )
    return VerifyPayload(
        p=context.p,
        q=context.q,
        r=list(context.r_values),
        seed=context.seed,
        bound=context.bound,
        trials=context.trials,
        checks=[run_check(description, context) for description in descriptions],
    )
