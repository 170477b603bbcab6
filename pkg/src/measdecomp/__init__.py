"""Exact decompositions of measures along families of sets closed under unions."""

from .decompose import (
    Decomposition,
    dellacherie_decompose,
    g_atomic_support,
    hahn_decompose_via_positive_sets,
    lebesgue_decompose,
    minimal_support,
    null_family,
    null_sets,
    polar_set,
    radon_nikodym_density,
)
from .errors import (
    EigensolverError,
    EmptyFamilyError,
    IncompleteError,
    MeasureError,
    NonNormalError,
    NotHermitianError,
    NotIdempotentError,
    NotOrthogonalError,
    PreconditionError,
    ShapeMismatchError,
    SizeLimitError,
    SpaceMismatchError,
    SpectralAxiomError,
)
from .gaussian import GaussianRational
from .line import (
    ClosedSet,
    LineMeasure,
    LineSet,
    atomic_diffuse,
    evaluate_line,
    lebesgue_line,
    restrict_line,
    topological_support,
)
from .measure import (
    HahnJordan,
    Relation,
    SignedMeasure,
    evaluate,
    find_positive_subset,
    hahn_jordan,
    is_null_set,
    is_positive_set,
    lattice_inf,
    lattice_sup,
    positive_sets,
    positive_subset_steps,
    relation,
    total_variation,
    variation,
)
from .order import BandMembership, band_membership, band_project
from .space import AtomSet, FiniteSpace, SetFamily, family_join, family_meet, sigma_close
from .spectral import (
    ProjectionMeasure,
    SpectralMeasure,
    e_xy,
    from_normal_matrix,
    from_projections,
    spectral_control,
    spectral_decompose,
)
from .vector import VectorMeasure, control_measure, is_theta_null, vector_decompose

__version__ = "0.1.0"
