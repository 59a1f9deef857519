"""Minimal qudit codes for a qubit under phase damping.

Thin Python surface over the C++ core: generalized Pauli/Fourier operators,
the minimal amplitude and phase codes of dimension D = 4k+2, two
phase-damping channel models, syndrome-recovery maps and the input-output
fidelity sweeps.
"""

from ._core import (
    amplitude_codewords,
    apply_channel,
    bloch_average,
    code_dimension,
    conventional_kraus_operators,
    conventional_kraus_tail_bound,
    damping_factor,
    encode_logical,
    eta_grid,
    f_damp_avg,
    f_damp_state,
    f_rec_avg,
    f_rec_state,
    fourier_matrix,
    generalized_pauli,
    logical_flip,
    logical_phase,
    omega_coefficients,
    pauli_x,
    pauli_z,
    phase_codewords,
    recovery_kernel,
    recovery_map_amplitude,
    recovery_map_phase,
    recovery_unitary,
    repetition_fidelity,
    repetition_n_for_dim,
    root_of_unity,
    rotated_codewords,
    run_sweep,
    run_verification_suite,
    SweepRecord,
    verification_suite_names,
    weyl_kraus_operators,
)

__all__ = [
    "amplitude_codewords",
    "apply_channel",
    "bloch_average",
    "code_dimension",
    "conventional_kraus_operators",
    "conventional_kraus_tail_bound",
    "damping_factor",
    "encode_logical",
    "eta_grid",
    "f_damp_avg",
    "f_damp_state",
    "f_rec_avg",
    "f_rec_state",
    "fourier_matrix",
    "generalized_pauli",
    "logical_flip",
    "logical_phase",
    "omega_coefficients",
    "pauli_x",
    "pauli_z",
    "phase_codewords",
    "recovery_kernel",
    "recovery_map_amplitude",
    "recovery_map_phase",
    "recovery_unitary",
    "repetition_fidelity",
    "repetition_n_for_dim",
    "root_of_unity",
    "rotated_codewords",
    "run_sweep",
    "run_verification_suite",
    "SweepRecord",
    "verification_suite_names",
    "weyl_kraus_operators",
]

__version__ = "0.1.0"
