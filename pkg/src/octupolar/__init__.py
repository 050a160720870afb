"""Spectral and phase-surface analysis of octupolar (symmetric traceless
third-order) tensors: Z-eigenpairs, Macaulay resultants, the
E-characteristic polynomial, and the closed-form dome/separatrix surfaces
over the reduced parameter disk."""

from .errors import (
    DegenerateConfigurationError,
    DomainError,
    NumericalFailureError,
    OctupolarError,
    ParameterError,
)
from .tensor3 import (
    Rotation3,
    SymTensor3,
    build_symmetric,
    contract,
    is_traceless,
    rotate,
)
from .params import (
    AdmissibleResult,
    GeneralParams,
    NormalForm,
    OctupolarParams,
    PolarPoint,
    admissible,
    build_general,
    build_tensor,
    normal_form,
    polar_to_params,
)
from .resultants import (
    HomQuadratic,
    MacaulaySystem,
    UnivariatePoly,
    build_macaulay,
    echar_coeff_top,
    echar_poly,
    echar_quadratics,
    gradient_quadratics,
    poly_real_roots,
    resultant_closed_form,
    resultant_via_macaulay,
)
from .spectra import (
    HAVE_COMPILED,
    KIND_DEGENERATE,
    KIND_MAXIMUM,
    KIND_MINIMUM,
    KIND_SADDLE,
    SolverConfig,
    ZEigenpair,
    count_maxima,
    projected_hessian,
    sigma_invariant,
    z_eigenpairs,
)
from .surfaces import (
    CrossSection,
    DomeFactors,
    FLAG_DEGENERATE,
    FLAG_OUTSIDE_DISK,
    FLAG_SPURIOUS,
    SurfaceSample,
    cross_section,
    dome_alpha2,
    dome_factors,
    dome_poly,
    sample_disk,
    separatrix_alpha2,
    separatrix_poly,
)

__version__ = "0.1.0"
