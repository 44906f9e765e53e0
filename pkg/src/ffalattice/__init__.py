"""Non-Hermitian Friedrichs-Fano-Anderson lattice model toolkit.

Self-energy with explicit branch structure, spectrum classification and
spectral-singularity detection, boundary-wave scattering, and time-domain
decay dynamics on a semi-infinite tight-binding lattice with a complex
impurity site.
"""

from .errors import (
    BandEdgeError,
    BranchCutError,
    ContourError,
    DomainError,
    HermitianInputError,
    InsufficientLatticeError,
    NonHermitianInputError,
    PoleProximityWarning,
    QuadratureError,
    RealSpectrumRequiredError,
    ReflectionDivergenceError,
    StepSizeError,
)
from .model import (
    ModelParams,
    band_energy,
    density_of_states,
    momentum_of_energy,
    spectral_coupling,
    spectral_density,
)
from .selfenergy import (
    Sheet,
    delta_quadrature_oracle,
    delta_shift,
    sigma,
    sigma_boundary,
    sigma_derivative,
    sigma_quadrature_oracle,
    sigma_second_sheet,
)
from .spectrum import (
    BoundStateReport,
    Singularity,
    SingularityKind,
    SingularityReport,
    biorthogonal_norm_factor,
    bound_states,
    fano_profile,
    fano_z,
    find_singularities,
    reality_domain_scan,
    singularity_constraint_residual,
    spectrum_is_real,
)
from .resolvent import (
    BromwichResult,
    Pole,
    PoleReport,
    SurvivalAsymptote,
    find_poles_second_sheet,
    g_aa,
    g_ak,
    g_ka,
    g_kk,
    survival_amplitude_bromwich,
    survival_asymptote,
)
from .scattering import (
    ReflectanceSample,
    StationaryState,
    default_k_grid,
    reflectance,
    reflectance_sample,
    reflectance_sweep,
    reflection_coefficient,
    singularity_from_scattering,
    stationary_state,
)
from .dynamics import (
    LatticeState,
    WavePacketResult,
    WavePacketSpec,
    default_time_step,
    dominant_frequency,
    finite_lattice_eigenvalues,
    finite_lattice_matrix,
    run_decay,
    run_wavepacket,
    step,
)

__version__ = "0.1.0"
