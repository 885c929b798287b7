"""Command line interface of the orbit engine."""

# pylint: disable=W0212, W0511

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING

import voluptuous as vol
from pydantic import ValidationError

from .config import CommandConfig, build_config
from .const import (
    COMMAND_CLASSIFY,
    COMMAND_COUNT,
    COMMAND_ENUMERATE,
    COMMAND_FIBER,
    COMMAND_GRASSMANN,
    COMMAND_HASSE,
    COMMAND_REPORT,
    COMMAND_VERIFY,
    EXIT_INVALID,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    FORMAT_DOT,
    FORMAT_JSON,
    FORMAT_TEXT,
    NAME,
    STARTUP_MESSAGE,
)
from .exceptions import SteinbergError, SteinbergRefusalError, SteinbergValidationError
from .grs import fiber, fiber_cardinality, grs
from .models import (
    ClassifyPayload,
    CountPayload,
    EnumerationEntry,
    EnumerationPayload,
    FiberPayload,
    GrassmannEntry,
    GrassmannPayload,
    GrsPayload,
    HassePayload,
    MatrixInput,
    ReportPayload,
)
from .orbit import (
    ambient_dimension,
    classify_subspace,
    count_parameters,
    derived_data,
    dimension,
    dual,
    enumerate_parameters,
    grassmann_invariants,
    grassmann_orbits,
    parse_omega,
    rank_matrix,
)
from .poset import emit_dot, hasse_diagram, hasse_json
from .steinberg import KTypePair, phi_k, phi_s, wk_permutations, ws_bijections, ws_shapes
from .tableau import Partition
from .utils import (
    format_count,
    format_fiber,
    format_grassmann,
    format_hasse,
    format_parameter_lines,
    format_verify,
)
from .verify import VerifyContext, run_verification

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from .orbit import OrbitGraph

_LOGGER = logging.getLogger(__name__)

CommandResult = tuple[str, int]


def _parts(text: str) -> list[int]:
    """Parse ``2,1,1`` into a list of integers."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as ex:
        msg = f"invalid partition {text!r}"
        raise argparse.ArgumentTypeError(msg) from ex


def _add_sizes(parser: argparse.ArgumentParser, *, optional_r: bool = False) -> None:
    parser.add_argument("p", type=int)
    parser.add_argument("q", type=int)
    if optional_r:
        parser.add_argument("r", type=int, nargs="?", default=None, help="every r from 0 to p+q when omitted")
    else:
        parser.add_argument("r", type=int)


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[FORMAT_TEXT, FORMAT_JSON, FORMAT_DOT], default=None)
    common.add_argument("--output", default=None, help="write to this file instead of stdout")
    common.add_argument("--verbose", action="store_true", default=None)

    parser = argparse.ArgumentParser(prog="aiii-steinberg", description=NAME)
    subparsers = parser.add_subparsers(dest="command", required=True)

    for command, text in (
        (COMMAND_ENUMERATE, "list the parameters with dimensions and invariants"),
        (COMMAND_COUNT, "compare the counting formula with the enumeration"),
        (COMMAND_GRASSMANN, "list the K-orbits of the Grassmannian"),
    ):
        _add_sizes(subparsers.add_parser(command, parents=[common], help=text))

    hasse = subparsers.add_parser(COMMAND_HASSE, parents=[common], help="closure order Hasse diagram")
    _add_sizes(hasse)
    hasse.add_argument("--dot", action="store_true", default=None, help="emit Graphviz DOT")

    report = subparsers.add_parser(COMMAND_REPORT, parents=[common], help="everything about one parameter")
    report.add_argument("omega")

    fiber_parser = subparsers.add_parser(COMMAND_FIBER, parents=[common], help="preimages of (lambda, mu)")
    _add_sizes(fiber_parser)
    fiber_parser.add_argument("--lambda", dest="lambda", type=_parts, required=True)
    fiber_parser.add_argument("--mu", type=_parts, required=True)

    classify = subparsers.add_parser(COMMAND_CLASSIFY, parents=[common], help="parameter of a subspace")
    classify.add_argument("--matrix", required=True, help="file with a 'p q r' header and p+q rows")

    verify = subparsers.add_parser(COMMAND_VERIFY, parents=[common], help="run the property sweep")
    _add_sizes(verify, optional_r=True)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--bound", type=int, default=None)
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument(
        "--random-samples",
        dest="random_samples",
        type=int,
        default=None,
        help="run the matrix checks on this many seeded random parameters",
    )
    return parser


def _render(payload_text: str, text: str, config: CommandConfig) -> str:
    return payload_text + "\n" if config["format"] == FORMAT_JSON else text


def _enumeration_entry(omega: OrbitGraph) -> EnumerationEntry:
    data = derived_data(omega)
    return EnumerationEntry(
        omega=omega.canonical(),
        dimension=dimension(omega),
        a_plus=data.a_plus,
        a_minus=data.a_minus,
        b=data.b,
        c=data.c,
    )


def _enumerate(config: CommandConfig) -> CommandResult:
    graphs = enumerate_parameters(config["p"], config["q"], config["r"])
    payload = EnumerationPayload(
        p=config["p"],
        q=config["q"],
        r=config["r"],
        count=len(graphs),
        parameters=[_enumeration_entry(omega) for omega in graphs],
    )
    return _render(payload.dump(), format_parameter_lines(graphs), config), EXIT_OK


def _report(config: CommandConfig) -> CommandResult:
    omega = parse_omega(config["omega"])
    target = phi_k(omega)
    wk_plus, wk_minus = wk_permutations(omega)
    ws_plus, ws_minus = ws_bijections(omega)
    lam_prime, mu_prime = ws_shapes(omega)
    t = grs(omega)
    payload = ReportPayload(
        omega=omega.canonical(),
        p=omega.p,
        q=omega.q,
        r=omega.r,
        derived=derived_data(omega).to_json(),
        rank_matrix=rank_matrix(omega).to_json(),
        dimension=dimension(omega),
        ambient_dimension=ambient_dimension(omega.p, omega.q, omega.r),
        grassmann=grassmann_invariants(omega).to_json(),
        wk_plus=list(wk_plus.word),
        wk_minus=list(wk_minus.word),
        ws_plus=ws_plus.to_json(),
        ws_minus=ws_minus.to_json(),
        lam=target.lam.to_json(),
        mu=target.mu.to_json(),
        ws_shapes=[lam_prime.to_json(), mu_prime.to_json()],
        signed=phi_s(omega).to_json(),
        grs=GrsPayload.model_validate(t.to_json()),
        dual=dual(omega).canonical(),
    )
    # JSON in both formats
    return payload.dump() + "\n", EXIT_OK


def _hasse(config: CommandConfig) -> CommandResult:
    diagram = hasse_diagram(config["p"], config["q"], config["r"])
    if config["format"] == FORMAT_DOT:
        return emit_dot(diagram), EXIT_OK
    payload = HassePayload.model_validate(hasse_json(diagram))
    return _render(payload.dump(), format_hasse(diagram), config), EXIT_OK


def _fiber(config: CommandConfig) -> CommandResult:
    target = KTypePair(Partition(tuple(config["lam"])), Partition(tuple(config["mu"])))
    graphs = fiber(config["p"], config["q"], config["r"], target)
    payload = FiberPayload(
        p=config["p"],
        q=config["q"],
        r=config["r"],
        lam=config["lam"],
        mu=config["mu"],
        formula=fiber_cardinality(target.lam, target.mu, config["r"]),
        parameters=[omega.canonical() for omega in graphs],
    )
    return _render(payload.dump(), format_fiber(payload), config), EXIT_OK


def _count(config: CommandConfig) -> CommandResult:
    payload = CountPayload(
        p=config["p"],
        q=config["q"],
        r=config["r"],
        formula=count_parameters(config["p"], config["q"], config["r"]),
        enumerated=len(enumerate_parameters(config["p"], config["q"], config["r"])),
    )
    return _render(payload.dump(), format_count(payload), config), EXIT_OK if payload.ok else EXIT_MISMATCH


def _classify(config: CommandConfig) -> CommandResult:
    path = Path(config["matrix"])
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as ex:
        msg = f"Cannot read matrix file {path}: {ex}"
        raise SteinbergValidationError(msg) from ex
    matrix_input = MatrixInput.from_text(text)
    omega = classify_subspace(matrix_input.to_matrix(), matrix_input.p, matrix_input.q)
    payload = ClassifyPayload(
        omega=omega.canonical(),
        dimension=dimension(omega),
        rank_matrix=rank_matrix(omega).to_json(),
    )
    text_output = f"{payload.omega} dim={payload.dimension}\n"
    return _render(payload.dump(), text_output, config), EXIT_OK


def _grassmann(config: CommandConfig) -> CommandResult:
    payload = GrassmannPayload(
        p=config["p"],
        q=config["q"],
        r=config["r"],
        orbits=[
            GrassmannEntry.model_validate(orbit.to_json())
            for orbit in grassmann_orbits(config["p"], config["q"], config["r"])
        ],
    )
    return _render(payload.dump(), format_grassmann(payload), config), EXIT_OK


def _verify(config: CommandConfig) -> CommandResult:
    context = VerifyContext.for_sizes(
        config["p"],
        config["q"],
        config["r"],
        seed=config["seed"],
        bound=config["bound"],
        trials=config["trials"],
        random_samples=config["random_samples"],
    )
    payload = run_verification(context)
    code = EXIT_OK if payload.passed else EXIT_MISMATCH
    return _render(payload.dump(), format_verify(payload), config), code


COMMAND_HANDLERS: dict[str, Callable[[CommandConfig], CommandResult]] = {
    COMMAND_ENUMERATE: _enumerate,
    COMMAND_REPORT: _report,
    COMMAND_HASSE: _hasse,
    COMMAND_FIBER: _fiber,
    COMMAND_COUNT: _count,
    COMMAND_CLASSIFY: _classify,
    COMMAND_VERIFY: _verify,
    COMMAND_GRASSMANN: _grassmann,
}


def _configure_logging(*, verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    Path(output).write_text(text, encoding="utf-8")
    _LOGGER.info("Wrote %s", output)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the command and return the exit code.

    0 on success, 1 on a verification mismatch, 2 on a usage error and 3 on
    invalid input or a refused size.
    """
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_OK if ex.code in (0, None) else EXIT_USAGE

    _configure_logging(verbose=bool(namespace.verbose))
    _LOGGER.info(STARTUP_MESSAGE)

    try:
        config = build_config(vars(namespace))
    except vol.Invalid as ex:
        sys.stderr.write(f"invalid options: {ex}\n")
        return EXIT_INVALID

    try:
        text, code = COMMAND_HANDLERS[config["command"]](config)
    except (SteinbergValidationError, SteinbergRefusalError, ValidationError) as ex:
        sys.stderr.write(f"invalid input: {ex}\n")
        return EXIT_INVALID
    except SteinbergError as ex:
        _LOGGER.exception("Command %s failed", config["command"])
        sys.stderr.write(f"error: {ex}\n")
        return EXIT_MISMATCH

    try:
        _write(text, config.get("output"))
    except OSError as ex:
        sys.stderr.write(f"cannot write output: {ex}\n")
        return EXIT_INVALID
    return code


def main() -> None:
    """Console script entry point."""
    sys.exit(run())
