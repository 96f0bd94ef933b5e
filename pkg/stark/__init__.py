"""
Leading-order Stark-drive ZZ model
"""
from .shift import (
    PerturbativeValidityWarning,
    StarkInputs,
    cancellation_drive,
    conditional_stark_shift,
    make_inputs,
    stark_report,
    zz_from_stark,
    zz_with_target_drive,
)

__all__ = [
    'StarkInputs',
    'PerturbativeValidityWarning',
    'make_inputs',
    'conditional_stark_shift',
    'zz_from_stark',
    'zz_with_target_drive',
    'cancellation_drive',
    'stark_report',
]
