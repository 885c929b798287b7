"""Text rendering helpers for command output."""

# pylint: disable=W0212, W0511

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .orbit import OrbitGraph, derived_data, dimension

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable

    from .models import CheckResult, CountPayload, FiberPayload, GrassmannPayload, VerifyPayload
    from .poset import HasseDiagram


@dataclass(frozen=True, kw_only=True)
class ColumnDescription:
    """Describes one ``key=value`` column of a listing line."""

    key: str
    value_fn: Callable[[OrbitGraph], int | str]


PARAMETER_COLUMNS: tuple[ColumnDescription, ...] = (
    ColumnDescription(key="dim", value_fn=dimension),
    ColumnDescription(key="a+", value_fn=lambda omega: derived_data(omega).a_plus),
    ColumnDescription(key="a-", value_fn=lambda omega: derived_data(omega).a_minus),
    ColumnDescription(key="b", value_fn=lambda omega: derived_data(omega).b),
    ColumnDescription(key="c", value_fn=lambda omega: derived_data(omega).c),
)


def format_parameter_line(
    omega: OrbitGraph,
    columns: Iterable[ColumnDescription] = PARAMETER_COLUMNS,
) -> str:
    """Render ``omega`` followed by its columns."""
    values = " ".join(f"{column.key}={column.value_fn(omega)}" for column in columns)
    return f"{omega.canonical()} {values}"


def format_parameter_lines(graphs: Iterable[OrbitGraph]) -> str:
    """One line per parameter."""
    return "".join(format_parameter_line(omega) + "\n" for omega in graphs)


def format_count(payload: CountPayload) -> str:
    """Return ``formula=34 enumerated=34 OK``."""
    verdict = "OK" if payload.ok else "MISMATCH"
    return f"formula={payload.formula} enumerated={payload.enumerated} {verdict}\n"


def format_fiber(payload: FiberPayload) -> str:
    """Summary line then the preimages."""
    lam = ",".join(map(str, payload.lam))
    mu = ",".join(map(str, payload.mu))
    header = (
        f"lambda=({lam}) mu=({mu}) formula={payload.formula} "
        f"enumerated={len(payload.parameters)}\n"
    )
    return header + "".join(f"{omega}\n" for omega in payload.parameters)


def format_hasse(diagram: HasseDiagram) -> str:
    """Nodes with dimensions, then cover lines ``upper > lower``."""
    lines = [f"{position} dim={dim} {omega.canonical()}" for position, (omega, dim) in enumerate(diagram.nodes)]
    lines.extend(
        f"{diagram.nodes[upper][0].canonical()} > {diagram.nodes[lower][0].canonical()}"
        for upper, lower in diagram.cover_edges
    )
    histogram = " ".join(f"{dim}:{count}" for dim, count in diagram.dimension_histogram().items())
    lines.append(f"dimensions {histogram}")
    return "\n".join(lines) + "\n"


def format_grassmann(payload: GrassmannPayload) -> str:
    """One line per K-orbit of subspaces."""
    return "".join(
        f"s={orbit.s} t={orbit.t} k={orbit.k} dim={orbit.dimension} {orbit.representative}\n"
        for orbit in payload.orbits
    )


def _format_check(check: CheckResult) -> list[str]:
    status = "PASS" if check.passed else "FAIL"
    lines = [f"{status} {check.key}: {check.name} (checked={check.checked})"]
    lines.extend(f"  {failure}" for failure in check.failures)
    return lines


def format_verify(payload: VerifyPayload) -> str:
    """Check by check verdicts and a final line."""
    lines = [line for check in payload.checks for line in _format_check(check)]
    failed = sum(not check.passed for check in payload.checks)
    lines.append("OK" if payload.passed else f"FAILED {failed} of {len(payload.checks)} checks")
    return "\n".join(lines) + "\n"
