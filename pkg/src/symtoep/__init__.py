"""Spectra of flip-symmetrized Toeplitz matrices ``Y_n T_n[f]`` and their
absolute-value circulant preconditioning."""
from ._core import BACKEND
from .catalog import builtin
from .precond import (
    ClusterReport,
    SingularPreconditionerError,
    abs_circulant_eigs,
    apply_abs_inv_sqrt,
    apply_circulant_pinv,
    cluster_report,
    pinv_times_toeplitz_svs,
    preconditioned_spectrum,
)
from .spectral import (
    SparselyVanishingProfile,
    SpectrumReport,
    SymmetryError,
    antidiag_block_eigs,
    distribution_report,
    inertia,
    singular_values,
    sv_profile,
    sym_eigs,
    weyl_test,
)
from .structured import (
    CirculantSpec,
    build_block_toeplitz,
    build_hankel,
    build_toeplitz,
    chan_optimal_column,
    decompose_even,
    flip_kron_left,
    flip_left,
    strang_column,
)
from .symbols import (
    ClosedFormSeries,
    MatrixSymbol,
    PiecewiseConstant,
    TrigPolynomial,
    matrix_abs_eigs,
    phi_samples,
    psi_samples,
    psi_samples_block,
    symbol_grid,
    theta_squared,
)
from .transforms import circulant_eigs, dft

__version__ = "0.1.0"
