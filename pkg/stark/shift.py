"""
Closed-form conditional Stark shift and Stark-drive ZZ
All quantities in MHz.
"""
import warnings

from pydantic import BaseModel, ConfigDict, model_validator

from utils.errors import ConfigurationError, ResonantDriveError


WARN_RATIO = 0.2
REJECT_RATIO = 0.5
TARGET_DRIVE_RATIO = 0.1

FLAG_TARGET_BEYOND_LEADING_ORDER = "target_drive_beyond_leading_order"
FLAG_WEAK_DISPERSIVE = "effective_drive_ratio_above_0.2"


class PerturbativeValidityWarning(UserWarning):
    """Drive strength close to where the leading-order Stark model breaks down"""


class StarkInputs(BaseModel):
    """
    Effective drives seen by the target with the control in |0> and |1>,
    the unconditional target drive and the target-drive detuning
    """

    model_config = ConfigDict(frozen=True)

    eps0_tilde: float
    eps1_tilde: float
    eps_t: float = 0.0
    delta_t: float

    @model_validator(mode="after")
    def _perturbative(self):
        if self.delta_t == 0:
            raise ResonantDriveError("delta_t = 0: resonant drive is outside the Stark model")
        for name in ("eps0_tilde", "eps1_tilde"):
            ratio = abs(getattr(self, name)) / abs(self.delta_t)
            if ratio >= REJECT_RATIO:
                raise ValueError(f"|{name}|/|delta_t| = {ratio:.3f} is not perturbative (>= {REJECT_RATIO})")
            if ratio > WARN_RATIO:
                warnings.warn(
                    f"|{name}|/|delta_t| = {ratio:.3f} exceeds {WARN_RATIO}",
                    PerturbativeValidityWarning,
                    stacklevel=2
                )
        return self

    @property
    def mu(self):
        """ZX rate mu = eps0 * eps1 / 2 (MHz^2 scale)"""
        return self.eps0_tilde * self.eps1_tilde / 2.0

    def validity_flags(self):
        flags = []
        if max(abs(self.eps0_tilde), abs(self.eps1_tilde)) / abs(self.delta_t) > WARN_RATIO:
            flags.append(FLAG_WEAK_DISPERSIVE)
        if abs(self.eps_t) / abs(self.delta_t) > TARGET_DRIVE_RATIO:
            flags.append(FLAG_TARGET_BEYOND_LEADING_ORDER)
        return flags


def make_inputs(eps0_tilde, eps1_tilde, delta_t, eps_t=0.0):
    """StarkInputs with pydantic rejections surfaced as ConfigurationError"""
    try:
        return StarkInputs(eps0_tilde=eps0_tilde, eps1_tilde=eps1_tilde, eps_t=eps_t, delta_t=delta_t)
    except ResonantDriveError:
        raise
    except ValueError as e:
        raise ConfigurationError(str(e)) from e


def conditional_stark_shift(eps_n, delta_t):
    """
    AC Stark shift delta_n = eps_n^2 / delta_t

    Args:
        eps_n: Effective drive amplitude (MHz)
        delta_t: omega_t - omega_d (MHz)

    Returns:
        Stark shift (MHz)
    """
    if delta_t == 0:
        raise ResonantDriveError("delta_t = 0: resonant drive is outside the Stark model")
    return eps_n ** 2 / delta_t


def _mu_form(inputs):
    return 2.0 * inputs.mu * (inputs.eps0_tilde + inputs.eps1_tilde) / inputs.delta_t


def _difference_form(inputs):
    delta0 = conditional_stark_shift(inputs.eps0_tilde, inputs.delta_t)
    delta1 = conditional_stark_shift(inputs.eps1_tilde, inputs.delta_t)
    return delta0 - delta1


def zz_from_stark(inputs):
    """
    ZZ from the Stark-shift pair: 2 mu (eps0 + eps1) / delta_t

    The shift-difference form is evaluated separately by stark_report; the
    two printed forms coincide only for special (eps0, eps1).

    Args:
        inputs: StarkInputs with eps_t == 0

    Returns:
        zeta (MHz)
    """
    if inputs.eps_t != 0:
        raise ConfigurationError("zz_from_stark takes eps_t = 0; use zz_with_target_drive")
    return _mu_form(inputs)


def zz_with_target_drive(inputs):
    """
    Leading-order ZZ with an unconditional target drive

    zeta = (2 mu / delta_t) (eps0 + eps1 + 2 eps_t); the O(eps_t^2) term is dropped.
    """
    return (2.0 * inputs.mu / inputs.delta_t) * (inputs.eps0_tilde + inputs.eps1_tilde + 2.0 * inputs.eps_t)


def cancellation_drive(eps0_tilde, eps1_tilde):
    """Target drive eps_t = -(eps0 + eps1) / 2 that nulls the leading-order ZZ"""
    return -(eps0_tilde + eps1_tilde) / 2.0


def stark_report(inputs):
    """
    Every Stark-model quantity for one input set

    Args:
        inputs: StarkInputs

    Returns:
        Dict with delta0, delta1, mu, zeta_eq3_diff_form, zeta_eq3_mu_form,
        zeta_eq4, form_discrepancy, validity_flags
    """
    diff_form = _difference_form(inputs)
    mu_form = _mu_form(inputs)
    return {
        "inputs": inputs.model_dump(),
        "delta0": conditional_stark_shift(inputs.eps0_tilde, inputs.delta_t),
        "delta1": conditional_stark_shift(inputs.eps1_tilde, inputs.delta_t),
        "mu": inputs.mu,
        "zeta_eq3_diff_form": diff_form,
        "zeta_eq3_mu_form": mu_form,
        "zeta_eq4": zz_with_target_drive(inputs),
        "form_discrepancy": diff_form - mu_form,
        "cancellation_eps_t": cancellation_drive(inputs.eps0_tilde, inputs.eps1_tilde),
        "validity_flags": inputs.validity_flags(),
    }
