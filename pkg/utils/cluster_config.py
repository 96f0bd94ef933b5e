"""
ClusterSpec JSON ingestion and serialization

Document schema:
{
  "qubits":    [{"omega_GHz": float, "eta_GHz": float, "levels": int?}],
  "coupler":   {"omega_c_GHz": float} | {"omega_c_max_GHz": float, "flux": float},
               optional "omega_c_min_GHz", optional "eta_c_GHz",
  "eta_c_GHz": float?,
  "couplings": [{"qubit": int, "J_GHz": float}]?,
  "drives":    [{"target": int, "amp_GHz": float, "phase_rad": float?, "omega_d_GHz": float}]?
}
"""
import json
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, ValidationError

from spectrum.cluster import (
    DEFAULT_COUPLER_ETA_GHZ,
    DEFAULT_COUPLING_GHZ,
    DEFAULT_LEVELS,
    ClusterSpec,
    CouplerSpec,
    DriveSpec,
    TransmonSpec,
)
from utils.errors import ConfigParseError, ConfigurationError


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


class QubitDocument(_Document):
    omega_GHz: float
    eta_GHz: float
    levels: Optional[int] = None


class CouplerDocument(_Document):
    omega_c_GHz: Optional[float] = None
    omega_c_max_GHz: Optional[float] = None
    omega_c_min_GHz: Optional[float] = None
    flux: Optional[float] = None
    eta_c_GHz: Optional[float] = None


class CouplingDocument(_Document):
    qubit: int
    J_GHz: float


class DriveDocument(_Document):
    target: int
    amp_GHz: float
    phase_rad: Optional[float] = None
    omega_d_GHz: float


class ClusterDocument(_Document):
    qubits: List[QubitDocument]
    coupler: CouplerDocument
    eta_c_GHz: Optional[float] = None
    couplings: Optional[List[CouplingDocument]] = None
    drives: Optional[List[DriveDocument]] = None


def _field_of(error):
    first = error.errors()[0]
    location = ".".join(str(part) for part in first.get("loc", ())) or "<document>"
    return location, first.get("msg", str(error))


def _validated(build, what):
    """Run a model constructor, turning pydantic errors into ConfigurationError"""
    try:
        return build()
    except ValidationError as e:
        location, message = _field_of(e)
        raise ConfigurationError(f"{what}.{location}: {message}") from e
    except ValueError as e:
        raise ConfigurationError(f"{what}: {e}") from e


def _build_coupler(doc, eta_c, defaults):
    coupler = doc.coupler
    if coupler.omega_c_GHz is not None and coupler.flux is not None:
        raise ConfigParseError("coupler", "give either omega_c_GHz or flux, not both")

    if coupler.omega_c_GHz is not None:
        build = lambda: CouplerSpec(
            omega_c=coupler.omega_c_GHz,
            eta_c=eta_c,
            omega_c_max=coupler.omega_c_max_GHz,
            omega_c_min=coupler.omega_c_min_GHz
        )
    elif coupler.omega_c_max_GHz is not None and coupler.flux is not None:
        build = lambda: CouplerSpec.from_flux(
            coupler.omega_c_max_GHz,
            coupler.flux,
            eta_c=eta_c,
            omega_c_min=coupler.omega_c_min_GHz
        )
    else:
        raise ConfigParseError("coupler", "needs omega_c_GHz, or omega_c_max_GHz together with flux")

    spec = _validated(build, "coupler")
    if coupler.omega_c_GHz is None:
        defaults["coupler.omega_c_GHz (from flux)"] = spec.omega_c
    return spec


def parse_cluster_document(document):
    """
    Build a ClusterSpec from a decoded JSON document

    Args:
        document: Dict following the module schema

    Returns:
        Tuple of (ClusterSpec, dict of applied defaults)
    """
    try:
        doc = ClusterDocument.model_validate(document)
    except ValidationError as e:
        location, message = _field_of(e)
        raise ConfigParseError(location, message) from e

    defaults = {}

    qubits = []
    for i, q in enumerate(doc.qubits):
        levels = q.levels
        if levels is None:
            levels = DEFAULT_LEVELS
            defaults[f"qubits[{i}].levels"] = DEFAULT_LEVELS
        qubits.append(_validated(
            lambda: TransmonSpec(omega=q.omega_GHz, eta=q.eta_GHz, levels=levels),
            f"qubits[{i}]"
        ))

    eta_c = doc.coupler.eta_c_GHz if doc.coupler.eta_c_GHz is not None else doc.eta_c_GHz
    if eta_c is None:
        eta_c = DEFAULT_COUPLER_ETA_GHZ
        defaults["eta_c_GHz"] = DEFAULT_COUPLER_ETA_GHZ
    coupler = _build_coupler(doc, eta_c, defaults)

    if doc.couplings is None:
        couplings = [(i, DEFAULT_COUPLING_GHZ) for i in range(len(qubits))]
        defaults["couplings"] = [{"qubit": i, "J_GHz": J} for i, J in couplings]
    else:
        couplings = [(c.qubit, c.J_GHz) for c in doc.couplings]

    drives = []
    for k, d in enumerate(doc.drives or []):
        phase = d.phase_rad
        if phase is None:
            phase = 0.0
            defaults[f"drives[{k}].phase_rad"] = 0.0
        drives.append(_validated(
            lambda: DriveSpec(target=d.target, amplitude=d.amp_GHz, phase=phase, omega_d=d.omega_d_GHz),
            f"drives[{k}]"
        ))
    if not drives:
        defaults["drives"] = "none (lab frame)"

    if len({q.levels for q in qubits}) > 1:
        raise ConfigParseError("qubits", "all qubits must share one levels value")

    spec = _validated(
        lambda: ClusterSpec(qubits=qubits, coupler=coupler, couplings=couplings, drives=drives),
        "cluster"
    )
    return spec, defaults


def load_cluster_config(path):
    """
    Read and parse a ClusterSpec JSON file

    Returns:
        Tuple of (ClusterSpec, dict of applied defaults)
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"cluster file not found: {path}")
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigParseError("<document>", f"malformed JSON at line {e.lineno}: {e.msg}") from e
    if not isinstance(document, dict):
        raise ConfigParseError("<document>", "top level must be an object")
    return parse_cluster_document(document)


def parse_cluster_config(path):
    """Read a ClusterSpec JSON file (defaults applied)"""
    spec, _ = load_cluster_config(path)
    return spec


def cluster_to_document(spec):
    """
    Serialize a ClusterSpec to the document schema with every field explicit

    parse_cluster_document(cluster_to_document(spec)) reproduces spec.
    """
    coupler = {"eta_c_GHz": spec.coupler.eta_c}
    if spec.coupler.flux is not None and spec.coupler.omega_c_max is not None:
        coupler["omega_c_max_GHz"] = spec.coupler.omega_c_max
        coupler["flux"] = spec.coupler.flux
    else:
        coupler["omega_c_GHz"] = spec.coupler.omega_c
        if spec.coupler.omega_c_max is not None:
            coupler["omega_c_max_GHz"] = spec.coupler.omega_c_max
    if spec.coupler.omega_c_min is not None:
        coupler["omega_c_min_GHz"] = spec.coupler.omega_c_min

    return {
        "qubits": [
            {"omega_GHz": q.omega, "eta_GHz": q.eta, "levels": q.levels}
            for q in spec.qubits
        ],
        "coupler": coupler,
        "couplings": [{"qubit": i, "J_GHz": J} for i, J in spec.couplings],
        "drives": [
            {"target": d.target, "amp_GHz": d.amplitude, "phase_rad": d.phase, "omega_d_GHz": d.omega_d}
            for d in spec.drives
        ],
    }
