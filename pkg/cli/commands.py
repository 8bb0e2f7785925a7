"""
Command Line Interface

Every library operation as a click subcommand. Data goes to stdout (or --out),
logs and diagnostics go to stderr.

Exit codes:
    0  success
    2  usage error
    3  invalid state (positivity, trace or Hermiticity failure)
    4  I/O failure or unparseable input

Examples:
    python main.py basis --n 3
    python main.py classify state.json
    python main.py --format csv contour --level 0.6931 --res 200 --out contour.csv
    python main.py tables --n 4
"""

import io
import math
import sys
from typing import Any, Dict, List, Optional

import click
import numpy as np
import yaml
from pydantic import ValidationError

from chamber.models import OutOfSimplexError, Spectrum
from chamber.simplex import diagonal_state, spectrum_of
from core.config import get_config, override_config, reload_config
from core.logging_config import get_logger, setup_logging
from entropy.contours import entropy_surface, isentropic_contours
from entropy.functions import angles_to_spectrum, entropy, entropy_from_angles, line_entropy_profile
from entropy.models import AngleCoords
from invariants.casimirs import casimirs_from_spectrum, casimirs_from_traces, characteristic_residual
from reporting.exporters import CSVExporter
from reporting.generators import BaseReportGenerator, GeometryTablesGenerator, StateReportGenerator
from reporting.serialization import (
    StateParseError,
    basis_payload,
    coherence_payload,
    contour_payload,
    decode_payload,
    density_matrix_payload,
    dumps,
    parse_json,
    state_from_document,
    vector_from_document,
)
from states.coherence import decode, encode
from states.models import DensityMatrix, InvalidStateError
from states.sampling import random_density_matrix, random_pure_state
from su_basis.generators import build_basis
from su_basis.structure import structure_constants

logger = get_logger(__name__)

EXIT_INVALID_STATE = 3
EXIT_IO_FAILURE = 4

POSITIVE = click.FloatRange(min=0.0, min_open=True)


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read_document(path: str) -> Any:
    """Parsed JSON from a file path ('-' reads stdin)."""
    try:
        with click.open_file(path, "r", encoding="utf-8") as source:
            text = source.read()
    except OSError as e:
        _fail(f"cannot read {path}: {e}", EXIT_IO_FAILURE)
    except UnicodeDecodeError as e:
        _fail(f"{path} is not UTF-8 text: {e}", EXIT_IO_FAILURE)
    try:
        return parse_json(text)
    except StateParseError as e:
        _fail(str(e), EXIT_IO_FAILURE)


def _read_state(path: str):
    """DensityMatrix or Spectrum from a JSON file, with CLI exit codes on failure."""
    document = _read_document(path)
    try:
        return state_from_document(document)
    except InvalidStateError as e:
        details = []
        if e.min_eigenvalue is not None:
            details.append(f"min eigenvalue {e.min_eigenvalue:.6e}")
        if e.trace is not None:
            details.append(f"trace {e.trace.real:.12g}")
        if e.hermiticity_error is not None:
            details.append(f"hermiticity error {e.hermiticity_error:.3e}")
        logger.warning("invalid_state_input", error=str(e))
        _fail(f"invalid state: {e}" + (f" ({', '.join(details)})" if details else ""), EXIT_INVALID_STATE)
    except OutOfSimplexError as e:
        _fail(f"invalid spectrum: {e}", EXIT_INVALID_STATE)
    except StateParseError as e:
        _fail(str(e), EXIT_IO_FAILURE)


def _parse_spectrum_option(text: str) -> Spectrum:
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError as e:
        raise click.BadParameter(f"expected comma-separated numbers, got {text!r}") from e
    try:
        return Spectrum.from_values(values)
    except OutOfSimplexError as e:
        raise click.BadParameter(str(e)) from e


def _emit(payload: Dict[str, Any]) -> None:
    """Write a payload in the configured format to --out or stdout."""
    ctx = click.get_current_context()
    output = get_config().output
    if output.format == "csv":
        buffer = io.StringIO()
        CSVExporter().export(payload, buffer)
        text = buffer.getvalue()
    else:
        text = dumps(payload)

    out_path: Optional[str] = ctx.find_root().obj.get("out")
    if out_path is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out_path, "w", newline="") as handle:
            handle.write(text)
    except OSError as e:
        _fail(f"cannot write {out_path}: {e}", EXIT_IO_FAILURE)
    logger.info("output_written", path=out_path, format=output.format)


def _emit_report(generator: BaseReportGenerator, parameters: Dict[str, Any]) -> None:
    report = generator.generate(parameters)
    logger.debug("report_generated", title=generator.get_title(parameters))
    _emit(report)


def _entropy_in_unit(value) -> float:
    return value.in_base(get_config().output.log_base)


@click.group()
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write output to this file")
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default=None,
              help="Output format")
@click.option("--tol-pos", type=POSITIVE, default=None, help="Positivity tolerance")
@click.option("--tol-deg", type=POSITIVE, default=None, help="Degeneracy tolerance")
@click.option("--tol-alg", type=POSITIVE, default=None, help="Algebraic tolerance")
@click.option("--log-base", type=click.Choice(["nats", "bits"]), default=None, help="Entropy unit")
@click.option("--seed", type=int, default=None, help="Seed for random sampling")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="YAML configuration file")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
              case_sensitive=False), default=None, help="Log level (stderr)")
@click.pass_context
def cli(ctx, out, output_format, tol_pos, tol_deg, tol_alg, log_base, seed, config_path, log_level):
    """Geometry of N-level density states: bases, chambers, invariants, entropy."""
    try:
        reload_config(config_path)
    except FileNotFoundError as e:
        _fail(str(e), EXIT_IO_FAILURE)
    except (yaml.YAMLError, ValidationError) as e:
        _fail(f"invalid configuration: {e}", EXIT_IO_FAILURE)

    config = override_config(
        positivity=tol_pos,
        degeneracy=tol_deg,
        algebraic=tol_alg,
        output_format=output_format,
        log_base=log_base,
        seed=seed,
    )
    setup_logging(log_level=log_level or config.log_level, json_format=True, stream=sys.stderr)
    ctx.obj = {"out": out}


@cli.command()
@click.option("--n", "n_levels", type=click.IntRange(min=2), required=True, help="Number of levels")
@click.option("--structure", is_flag=True, help="Include nonzero f and d structure constants")
def basis(n_levels: int, structure: bool):
    """Generalized Gell-Mann basis of traceless Hermitian N x N matrices."""
    basis_set = build_basis(n_levels)
    payload = basis_payload(basis_set)
    if structure:
        try:
            constants = structure_constants(basis_set)
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint="--structure") from e
        payload["f"] = [list(entry) for entry in constants.nonzero("f")]
        payload["d"] = [list(entry) for entry in constants.nonzero("d")]
    _emit(payload)


@cli.command(name="encode")
@click.argument("state_file", type=click.Path(dir_okay=False, allow_dash=True))
def encode_command(state_file):
    """Coherence vector of a state (matrix JSON or spectrum list)."""
    state = _read_state(state_file)
    rho = diagonal_state(state) if isinstance(state, Spectrum) else state
    if rho.n_levels < 2:
        _fail("coherence vectors need N >= 2", EXIT_INVALID_STATE)
    _emit(coherence_payload(encode(rho, build_basis(rho.n_levels))))


@cli.command(name="decode")
@click.argument("vector_file", type=click.Path(dir_okay=False, allow_dash=True))
def decode_command(vector_file):
    """Density matrix of a coherence vector; exit 3 if it lies outside the state body."""
    document = _read_document(vector_file)
    try:
        vector = vector_from_document(document)
    except StateParseError as e:
        _fail(str(e), EXIT_IO_FAILURE)

    result = decode(vector, build_basis(vector.n_levels))
    _emit(decode_payload(result))
    if not result.is_valid:
        _fail(result.diagnostic, EXIT_INVALID_STATE)


@cli.command()
@click.argument("state_file", type=click.Path(dir_okay=False, allow_dash=True))
def classify(state_file):
    """Spectrum, stratum, Casimir invariants and entropy of a state."""
    _emit_report(StateReportGenerator(), {"state": _read_state(state_file)})


@cli.command()
@click.argument("state_file", type=click.Path(dir_okay=False, allow_dash=True))
def casimirs(state_file):
    """Casimir invariants from the spectrum and, for matrices, from power traces."""
    state = _read_state(state_file)
    if isinstance(state, DensityMatrix):
        spectrum = spectrum_of(state)
        from_traces = casimirs_from_traces(state)
        payload = {
            "n": state.n_levels,
            "I": casimirs_from_spectrum(spectrum).values,
            "I_from_traces": from_traces.values,
            "cayley_hamilton_residual": characteristic_residual(state, from_traces),
        }
    else:
        payload = {"n": state.n_levels, "I": casimirs_from_spectrum(state).values}
    _emit(payload)


@cli.command(name="entropy")
@click.argument("state_file", type=click.Path(dir_okay=False, allow_dash=True), required=False)
@click.option("--n", "n_levels", type=click.IntRange(2, 3), default=None, help="Levels for angle input (2 or 3)")
@click.option("--theta", type=click.FloatRange(0.0, math.pi), default=None, help="Polar angle in [0, pi]")
@click.option("--phi", type=click.FloatRange(0.0, math.pi), default=0.0, help="Second angle (N=3)")
def entropy_command(state_file, n_levels, theta, phi):
    """Von Neumann entropy of a state file or of angle coordinates."""
    if state_file is not None:
        state = _read_state(state_file)
        spectrum = spectrum_of(state) if isinstance(state, DensityMatrix) else state
        payload = {"n": spectrum.n_levels, "spectrum": spectrum.tolist()}
    elif theta is not None and n_levels is not None:
        angles = AngleCoords(theta=theta, phi=phi)
        spectrum = angles_to_spectrum(n_levels, angles)
        payload = {"n": n_levels, "theta": theta, "phi": phi, "spectrum": spectrum.tolist()}
        if n_levels == 2:
            payload["entropy_from_angles"] = _entropy_in_unit(entropy_from_angles(angles))
    else:
        raise click.UsageError("give a STATE_FILE or both --n and --theta")

    payload["entropy"] = _entropy_in_unit(entropy(spectrum))
    payload["unit"] = get_config().output.log_base
    _emit(payload)


@cli.command()
@click.option("--n", "n_levels", type=click.IntRange(3, 3), default=3, show_default=True, help="Levels (3 only)")
@click.option("--res", "resolution", type=click.IntRange(min=2), default=None, help="Grid subdivisions per edge")
def surface(n_levels: int, resolution: Optional[int]):
    """Entropy over the N=3 chamber grid as rows (x, y, z, eta)."""
    resolution = resolution if resolution is not None else get_config().contour.resolution
    rows = entropy_surface(n_levels, resolution)
    if get_config().output.log_base == "bits":
        rows[:, 3] = rows[:, 3] / math.log(2.0)
    _emit({"n": n_levels, "resolution": resolution, "unit": get_config().output.log_base, "surface": rows.tolist()})


@cli.command()
@click.option("--level", type=float, required=True, help="Entropy level, in the configured log base")
@click.option("--res", "resolution", type=click.IntRange(min=2), default=None, help="Grid subdivisions per edge")
@click.option("--refine/--no-refine", default=True, show_default=True,
              help="Bisect interpolated vertices onto the level set")
def contour(level: float, resolution: Optional[int], refine: bool):
    """Isentropic contour over the N=3 chamber."""
    if not math.isfinite(level):
        raise click.BadParameter(f"level must be finite, got {level}", param_hint="--level")
    level_nats = level * math.log(2.0) if get_config().output.log_base == "bits" else level
    contours = isentropic_contours(3, level_nats, resolution=resolution, refine=refine)
    deviation = contours.max_deviation

    if contours.is_empty:
        suffix = f"; degenerates to point {contours.degenerate_point}" if contours.degenerate_point else ""
        click.echo(f"warning: level {level} lies outside (0, log 3): empty contour{suffix}", err=True)
    if not contours.within_tolerance:
        limit = get_config().tolerances.contour
        click.echo(f"warning: max |eta - level| {deviation:.3e} exceeds the contour tolerance {limit:g}", err=True)
    _emit(contour_payload(contours))
    click.echo(f"points: {contours.point_count}  max |eta - level|: {deviation:.3e}", err=True)


@cli.command()
@click.option("--start", "start_text", required=True, help="Start spectrum, comma-separated")
@click.option("--end", "end_text", required=True, help="End spectrum, comma-separated")
@click.option("--samples", type=click.IntRange(min=2), default=101, show_default=True)
def profile(start_text: str, end_text: str, samples: int):
    """Entropy along the segment between two spectra."""
    start = _parse_spectrum_option(start_text)
    end = _parse_spectrum_option(end_text)
    if start.n_levels != end.n_levels:
        raise click.BadParameter(f"--start has N={start.n_levels} but --end has N={end.n_levels}")
    base = get_config().output.log_base
    scale = 1.0 / math.log(2.0) if base == "bits" else 1.0
    rows: List[List[float]] = [[t, eta * scale] for t, eta in line_entropy_profile(start, end, samples)]
    _emit({"n": start.n_levels, "unit": base, "start": start.tolist(), "end": end.tolist(), "profile": rows})


@cli.command()
@click.option("--n", "n_levels", type=click.IntRange(2, 8), required=True, help="Number of levels")
def tables(n_levels: int):
    """Special points, coherence distances and stratum census for N levels."""
    _emit_report(GeometryTablesGenerator(), {"n_levels": n_levels})


@cli.command()
@click.option("--n", "n_levels", type=click.IntRange(min=2), required=True, help="Number of levels")
@click.option("--count", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--pure", is_flag=True, help="Sample pure states instead of mixed states")
def sample(n_levels: int, count: int, pure: bool):
    """Random density matrices, reproducible from --seed."""
    rng = np.random.default_rng(get_config().sampling.seed)
    draw = random_pure_state if pure else random_density_matrix
    states = [density_matrix_payload(draw(n_levels, rng)) for _ in range(count)]
    logger.debug("states_sampled", n_levels=n_levels, count=count, pure=pure)
    _emit({"n": n_levels, "pure": pure, "seed": get_config().sampling.seed, "samples": states})
