"""
zz-lattice command line
ZZ spectrum sweeps, Stark-model estimates and the Grover routing benchmark
"""
import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Any, Dict, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from lattice.circuit import Circuit
from lattice.coupling_maps import TOPOLOGIES, build_topology, hybrid_grid_map
from lattice.grover import expand_mcx, grover_circuit
from routing.benchmark import DEPTH_COLUMNS, benchmark_grover, default_contention
from routing.router import route
from routing.scheduler import schedule_depth
from routing.verify import check_on_map, verify_routed
from spectrum.cluster import DEFAULT_DRIVE_DETUNING_GHZ, ensure_pair_drives
from spectrum.presets import PRESETS, preset_cluster
from spectrum.sweeps import (
    pair_peak_matrix,
    phase_swing,
    sweep_2d,
    sweep_amplitude,
    sweep_coupler,
    sweep_flux,
    sweep_phase,
)
from spectrum.zz import static_and_driven_zz, truncation_stability
from stark.shift import make_inputs, stark_report
from utils.batch_processor import BatchProcessor
from utils.cluster_config import cluster_to_document, load_cluster_config
from utils.errors import ConfigurationError, ResonantDriveError, VerificationError, exit_code_for
from utils.output_writer import write_artifacts


COMMANDS = (
    "sweep-phase", "sweep-coupler", "sweep-2d", "sweep-amplitude", "sweep-flux",
    "pair-matrix", "zz", "truncation", "stark", "bench-grover", "gen-map", "verify",
)
CLUSTER_COMMANDS = {
    "sweep-phase", "sweep-coupler", "sweep-2d", "sweep-amplitude", "sweep-flux",
    "pair-matrix", "zz", "truncation",
}
DRIVEN_COMMANDS = {"sweep-phase", "sweep-2d", "sweep-amplitude"}


class RunConfig(BaseModel):
    """
    Effective configuration of one command invocation

    Embedded verbatim in every output file.
    """

    model_config = ConfigDict(frozen=True)

    command: Literal[COMMANDS]
    cluster_file: Optional[str] = None
    preset: Optional[str] = None
    output: str
    seed: int = 0
    quiet: bool = False
    params: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("seed")
    @classmethod
    def _seed_non_negative(cls, v):
        if v < 0:
            raise ValueError("seed must be non-negative")
        return v

    @model_validator(mode="after")
    def _check_sources(self):
        if self.cluster_file is not None and self.preset is not None:
            raise ValueError("give either --cluster or --preset, not both")
        if self.cluster_file is not None and not Path(self.cluster_file).is_file():
            raise ValueError(f"cluster file not found: {self.cluster_file}")
        if self.preset is not None and self.preset not in PRESETS:
            raise ValueError(f"unknown preset {self.preset!r}, choose from {sorted(PRESETS)}")
        if self.command in CLUSTER_COMMANDS and self.cluster_file is None and self.preset is None:
            raise ValueError(f"{self.command} needs --cluster or --preset")
        if not self.output:
            raise ValueError("output prefix must not be empty")
        return self

    def param(self, name, default=None):
        return self.params.get(name, default)


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that reports usage problems as configuration errors (exit 1)"""

    def error(self, message):
        raise ConfigurationError(message)


# ============== Helpers ==============

def _say(config, message):
    if not config.quiet:
        print(message)


def _grid(start, stop, points, name):
    if points < 1:
        raise ConfigurationError(f"{name} grid needs at least one point, got {points}")
    return np.linspace(float(start), float(stop), int(points))


def _phase_grid(config):
    return _grid(config.param("phase_min", 0.0), config.param("phase_max", 2 * np.pi),
                 config.param("points", 64), "phase")


def _parse_range(text):
    """'2..6' -> [2..6], '2,4,6' -> [2, 4, 6]"""
    text = str(text).strip()
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            values = list(range(int(low), int(high) + 1))
        else:
            values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise ConfigurationError(f"cannot parse range {text!r}") from e
    if not values:
        raise ConfigurationError(f"range {text!r} is empty")
    return values


def _parse_names(text):
    names = [n.strip() for n in str(text).split(",") if n.strip()]
    unknown = [n for n in names if n not in TOPOLOGIES]
    if unknown:
        raise ConfigurationError(f"unknown topology {unknown}, choose from {sorted(TOPOLOGIES)}")
    if not names:
        raise ConfigurationError("no topologies given")
    return names


def _load_cluster(config):
    """ClusterSpec plus applied defaults from --cluster or --preset"""
    if config.cluster_file is not None:
        return load_cluster_config(config.cluster_file)
    return preset_cluster(config.preset), {"preset": config.preset}


def _pair(config):
    pair = config.param("pair", (0, 1))
    return int(pair[0]), int(pair[1])


def _effective(config, spec=None, defaults=None):
    payload = {"run": config.model_dump()}
    if spec is not None:
        payload["cluster"] = cluster_to_document(spec)
    if defaults:
        payload["defaults_applied"] = defaults
    return payload


def _comments(effective):
    return [f"config: {json.dumps(effective, sort_keys=True, default=str)}"]


def _emit(config, header, rows, payload, effective, extra_comments=()):
    payload = dict(payload)
    payload["config"] = effective
    csv_path, json_path = write_artifacts(
        config.output, header, rows, payload,
        comments=_comments(effective) + list(extra_comments)
    )
    _say(config, f"✅ Wrote {csv_path} and {json_path}")


def _processor(config):
    return BatchProcessor(label=config.command, verbose=not config.quiet)


# ============== Spectrum commands ==============

def _driven_cluster(config, pair):
    spec, defaults = _load_cluster(config)
    if config.command in DRIVEN_COMMANDS or config.param("phi_d", 0.0) != 0.0:
        spec, applied = ensure_pair_drives(spec, pair)
        defaults = {**defaults, **applied}
        for key in applied:
            _say(config, f"⚠️ No drive on {key[len('drive_'):]}, using default {applied[key]}")
    return spec, defaults


def _emit_sweep(config, result, spec, defaults):
    effective = _effective(config, spec, defaults)
    payload = {"result": result.to_dict()}
    if not result.is_2d:
        payload["zeta_swing_MHz"] = phase_swing(result)
    gaps = int((~result.label_ok).sum())
    if gaps:
        _say(config, f"⚠️ {gaps} point(s) left as gaps (ambiguous labeling or coupler in qubit band)")
    _say(config, f"   zero crossings: {len(result.zero_crossings)}")
    _emit(config, result.header, result.to_rows(), payload, effective)


def cmd_sweep_phase(config):
    pair = _pair(config)
    spec, defaults = _driven_cluster(config, pair)
    result = sweep_phase(spec, pair, _phase_grid(config), processor=_processor(config))
    _emit_sweep(config, result, spec, defaults)


def cmd_sweep_coupler(config):
    pair = _pair(config)
    spec, defaults = _driven_cluster(config, pair)
    start, stop = config.param("omega_c", (5.5, 6.5))
    grid = _grid(start, stop, config.param("points", 41), "omega_c")
    result = sweep_coupler(spec, pair, grid, phi_d=config.param("phi_d", 0.0), processor=_processor(config))
    _emit_sweep(config, result, spec, defaults)


def cmd_sweep_flux(config):
    pair = _pair(config)
    spec, defaults = _driven_cluster(config, pair)
    start, stop = config.param("flux", (0.0, 0.35))
    grid = _grid(start, stop, config.param("points", 41), "flux")
    result = sweep_flux(spec, pair, grid, phi_d=config.param("phi_d", 0.0), processor=_processor(config))
    _emit_sweep(config, result, spec, defaults)


def cmd_sweep_amplitude(config):
    pair = _pair(config)
    spec, defaults = _driven_cluster(config, pair)
    start, stop = config.param("amp", (0.0, 0.04))
    grid = _grid(start, stop, config.param("points", 41), "amplitude")
    result = sweep_amplitude(spec, pair, grid, phi_d=config.param("phi_d", 0.0), processor=_processor(config))
    _emit_sweep(config, result, spec, defaults)


def cmd_sweep_2d(config):
    pair = _pair(config)
    spec, defaults = _driven_cluster(config, pair)
    start, stop = config.param("omega_c", (5.5, 6.5))
    omega_grid = _grid(start, stop, config.param("omega_points", 21), "omega_c")
    result = sweep_2d(spec, pair, omega_grid, _phase_grid(config), processor=_processor(config))
    _emit_sweep(config, result, spec, defaults)


def cmd_pair_matrix(config):
    spec, defaults = _load_cluster(config)
    # shared drive frequency sits above the qubit band
    above_band = max(q.omega for q in spec.qubits) + DEFAULT_DRIVE_DETUNING_GHZ
    for other in range(1, spec.n_qubits):
        spec, applied = ensure_pair_drives(spec, (0, other), omega_d=above_band)
        defaults = {**defaults, **applied}
    matrix = pair_peak_matrix(spec, _phase_grid(config), processor=_processor(config))

    n = spec.n_qubits
    absent = [f"{p}-{q}" for p in range(n) for q in range(p + 1, n) if np.isnan(matrix[p, q])]
    if absent:
        _say(config, f"⚠️ No labelable phase point for pairs {', '.join(absent)}")
    rows = [[p, q, matrix[p, q]] for p in range(n) for q in range(p + 1, n)]
    effective = _effective(config, spec, defaults)
    _emit(config, ["p", "q", "peak_abs_zeta_MHz"], rows, {"matrix_MHz": matrix}, effective)


def cmd_zz(config):
    pair = _pair(config)
    spec, defaults = _load_cluster(config)
    values = static_and_driven_zz(spec, pair)
    _say(config, f"   zeta static {values['zeta_static_MHz']:.6g} MHz, driven {values['zeta_driven_MHz']:.6g} MHz")
    header = ["p", "q", "zeta_static_MHz", "zeta_driven_MHz", "zeta_drive_MHz"]
    row = [pair[0], pair[1], values["zeta_static_MHz"], values["zeta_driven_MHz"], values["zeta_drive_MHz"]]
    _emit(config, header, [row], values, _effective(config, spec, defaults))


def cmd_truncation(config):
    pair = _pair(config)
    spec, defaults = _load_cluster(config)
    report = truncation_stability(spec, pair, levels=config.param("levels", (3, 4)))
    if report["untrustworthy"]:
        _say(config, "⚠️ zeta changes by more than 10% between truncations")
    rows = [
        [int(n), z, report["relative_difference"].get(n)]
        for n, z in report["zeta_MHz"].items()
    ]
    _emit(config, ["levels", "zeta_MHz", "relative_difference"], rows, report,
          _effective(config, spec, defaults))


# ============== Stark command ==============

def cmd_stark(config):
    inputs = make_inputs(
        config.param("eps0"),
        config.param("eps1"),
        config.param("delta"),
        eps_t=config.param("epst", 0.0)
    )
    report = stark_report(inputs)
    for flag in report["validity_flags"]:
        _say(config, f"⚠️ {flag}")
    _say(config, f"   zeta_eq4 = {report['zeta_eq4']:.6g}")
    rows = [[key, value] for key, value in report.items() if isinstance(value, float)]
    _emit(config, ["quantity", "value"], rows, report, _effective(config))


# ============== Lattice commands ==============

def cmd_bench_grover(config):
    contention = {"on": True, "off": False, "auto": None}[config.param("contention", "auto")]
    n_range = _parse_range(config.param("n", "2..6"))
    topologies = _parse_names(config.param("topologies", "hybrid,heavyhex"))
    n_seeds = int(config.param("seeds", 8))
    if n_seeds < 1:
        raise ConfigurationError("--seeds must be at least 1")
    seeds = [config.seed + i for i in range(n_seeds)]

    _say(config, f"🚀 Routing Grover n={n_range} on {topologies} with {n_seeds} seeds")
    report = benchmark_grover(n_range, topologies, seeds, contention=contention,
                              processor=_processor(config))
    for n, pct in report.reduction_pct().items():
        _say(config, f"   n={n}: depth reduction {pct:.1f}%")
    effective = _effective(config)
    _emit(config, DEPTH_COLUMNS, report.to_rows(), report.to_dict(), effective,
          extra_comments=["measurements excluded from depth"])


def cmd_gen_map(config):
    rows_cols = config.param("grid")
    if rows_cols:
        cmap = hybrid_grid_map(*rows_cols)
    else:
        cmap = build_topology(config.param("topology", "hybrid"), int(config.param("n", 4)))
    cluster_of = cmap.cluster_of_edge()
    rows = [[u, v, cluster_of.get((u, v), "")] for u, v in cmap.edges]
    payload = {"map": cmap.to_dict(), "max_degree": cmap.max_degree()}
    _say(config, f"   {cmap.name}: {cmap.n_qubits} qubits, {len(cmap.edges)} edges, {len(cmap.clusters)} clusters")
    _emit(config, ["u", "v", "cluster"], rows, payload, _effective(config))


def _load_circuit(config):
    path = config.param("circuit")
    if path is None:
        return grover_circuit(int(config.param("n", 4)))
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"circuit file not found: {path}")
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"malformed circuit JSON at line {e.lineno}: {e.msg}") from e
    return expand_mcx(Circuit.from_dict(payload))


def cmd_verify(config):
    circuit = _load_circuit(config)
    topology = config.param("topology", "hybrid")
    cmap = build_topology(topology, circuit.n_qubits)
    routed = route(circuit, cmap, seed=config.seed)
    check_on_map(routed, cmap)
    result = verify_routed(circuit, routed, seed=config.seed)
    if not result.passed:
        raise VerificationError(
            f"routed circuit differs from the source on {topology}: max deviation {result.max_deviation:.3e}"
        )
    contention = default_contention(topology)
    depth = schedule_depth(routed, cmap, contention)
    _say(config, f"   {result.method} check passed, deviation {result.max_deviation:.2e}, depth {depth}")

    header = ["topology", "seed", "depth", "swaps", "passed", "max_deviation", "method"]
    row = [topology, config.seed, depth, routed.swaps_inserted, result.passed, result.max_deviation, result.method]
    payload = {"verification": result.to_dict(), "routed": routed.to_dict(), "depth": depth, "contention": contention}
    _emit(config, header, [row], payload, _effective(config))


HANDLERS = {
    "sweep-phase": cmd_sweep_phase,
    "sweep-coupler": cmd_sweep_coupler,
    "sweep-2d": cmd_sweep_2d,
    "sweep-amplitude": cmd_sweep_amplitude,
    "sweep-flux": cmd_sweep_flux,
    "pair-matrix": cmd_pair_matrix,
    "zz": cmd_zz,
    "truncation": cmd_truncation,
    "stark": cmd_stark,
    "bench-grover": cmd_bench_grover,
    "gen-map": cmd_gen_map,
    "verify": cmd_verify,
}


# ============== Entry points ==============

def report_error(error):
    code = exit_code_for(error)
    print(f"ERROR:{code}:{type(error).__name__}: {error}", file=sys.stderr)
    return code


def run(config):
    """
    Dispatch one command

    Args:
        config: RunConfig

    Returns:
        Exit code (0 ok, 1 validation, 2 physics, 3 verification)
    """
    _say(config, f"🚀 zz-lattice {config.command}")
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            HANDLERS[config.command](config)
        for warning in caught:
            _say(config, f"⚠️ {warning.message}")
        return 0
    except ResonantDriveError as e:
        return report_error(e)
    except (IndexError, KeyError) as e:
        print(f"ERROR:1:{type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        # ConfigurationError is a ValueError too and keeps its own code
        return report_error(e)
    except Exception as e:
        if hasattr(e, "exit_code"):
            return report_error(e)
        raise


def build_parser():
    parser = _ArgumentParser(description="ZZ spectra of coupled transmons and the Grover routing benchmark")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        # Input / output arguments
        p.add_argument("--cluster", type=str, default=None, help="ClusterSpec JSON file")
        p.add_argument("--preset", type=str, default=None, choices=sorted(PRESETS),
                       help="Built-in reference cell")
        p.add_argument("--output", type=str, default=None, help="Output path prefix")
        p.add_argument("--seed", type=int, default=0, help="Root seed")
        p.add_argument("--quiet", action="store_true", help="Suppress status lines")
        return p

    def pair(p):
        p.add_argument("--pair", type=int, nargs=2, default=[0, 1], metavar=("P", "Q"), help="Qubit pair")
        return p

    def phases(p, points=64):
        p.add_argument("--points", type=int, default=points, help="Grid points")
        p.add_argument("--phase-min", type=float, default=0.0, help="First Phi_d (rad)")
        p.add_argument("--phase-max", type=float, default=2 * np.pi, help="Last Phi_d (rad)")
        return p

    # Spectrum commands
    pair(phases(common(sub.add_parser("sweep-phase", help="zeta versus relative drive phase"))))

    p = pair(common(sub.add_parser("sweep-coupler", help="zeta versus coupler frequency")))
    p.add_argument("--omega-c", type=float, nargs=2, default=[5.5, 6.5], metavar=("START", "STOP"))
    p.add_argument("--points", type=int, default=41)
    p.add_argument("--phi-d", type=float, default=0.0, help="Relative drive phase (rad)")

    p = pair(common(sub.add_parser("sweep-flux", help="zeta versus coupler flux")))
    p.add_argument("--flux", type=float, nargs=2, default=[0.0, 0.35], metavar=("START", "STOP"))
    p.add_argument("--points", type=int, default=41)
    p.add_argument("--phi-d", type=float, default=0.0)

    p = pair(common(sub.add_parser("sweep-amplitude", help="zeta versus common drive amplitude")))
    p.add_argument("--amp", type=float, nargs=2, default=[0.0, 0.04], metavar=("START", "STOP"))
    p.add_argument("--points", type=int, default=41)
    p.add_argument("--phi-d", type=float, default=0.0)

    p = pair(phases(common(sub.add_parser("sweep-2d", help="zeta over coupler frequency and phase"))))
    p.add_argument("--omega-c", type=float, nargs=2, default=[5.5, 6.5], metavar=("START", "STOP"))
    p.add_argument("--omega-points", type=int, default=21)

    phases(common(sub.add_parser("pair-matrix", help="Peak |zeta| for every qubit pair")))
    pair(common(sub.add_parser("zz", help="Static and driven zeta of one pair")))

    p = pair(common(sub.add_parser("truncation", help="zeta across Fock truncations")))
    p.add_argument("--levels", type=int, nargs="+", default=[3, 4])

    # Stark model
    p = common(sub.add_parser("stark", help="Closed-form Stark-shift ZZ"))
    p.add_argument("--eps0", type=float, required=True, help="Effective drive with control in |0>")
    p.add_argument("--eps1", type=float, required=True, help="Effective drive with control in |1>")
    p.add_argument("--epst", type=float, default=0.0, help="Unconditional target drive")
    p.add_argument("--delta", type=float, required=True, help="Target-drive detuning (same unit)")

    # Lattice commands
    p = common(sub.add_parser("bench-grover", help="Grover depth on hybrid vs heavy-hex"))
    p.add_argument("--n", type=str, default="2..6", help="Sizes, '2..6' or '2,4,6'")
    p.add_argument("--topologies", type=str, default="hybrid,heavyhex")
    p.add_argument("--seeds", type=int, default=8, help="Seeds per point (seed, seed+1, ...)")
    p.add_argument("--contention", type=str, default="auto", choices=["auto", "on", "off"])

    p = common(sub.add_parser("gen-map", help="Write a coupling map"))
    p.add_argument("--topology", type=str, default="hybrid", choices=sorted(TOPOLOGIES))
    p.add_argument("--n", type=int, default=4, help="Qubits")
    p.add_argument("--grid", type=int, nargs=2, default=None, metavar=("ROWS", "COLS"),
                   help="Full hybrid king grid instead")

    p = common(sub.add_parser("verify", help="Route a circuit and check equivalence"))
    p.add_argument("--circuit", type=str, default=None, help="Circuit JSON (default: Grover --n)")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--topology", type=str, default="hybrid", choices=sorted(TOPOLOGIES))
    return parser


def config_from_args(args):
    """Fold parsed arguments into a RunConfig"""
    shared = {"command", "cluster", "preset", "output", "seed", "quiet"}
    params = {k: v for k, v in vars(args).items() if k not in shared and v is not None}
    for key, value in params.items():
        if isinstance(value, list):
            params[key] = tuple(value)
    return RunConfig(
        command=args.command,
        cluster_file=args.cluster,
        preset=args.preset,
        output=args.output or str(Path("results") / args.command),
        seed=args.seed,
        quiet=args.quiet,
        params=params
    )


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        config = config_from_args(args)
    except ValidationError as e:
        first = e.errors()[0]
        print(f"ERROR:1:ConfigurationError: {first['msg']}", file=sys.stderr)
        return 1
    except ConfigurationError as e:
        return report_error(e)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
