"""K-theory and SR-cohomology of reduced toric Deligne-Mumford stacks,
computed exactly from stacky fans."""

from .fan import (
    BoxElement,
    InvalidFanError,
    StackyFan,
    box_of_cone,
    box_of_fan,
    degree_of,
    lattice_points_of_degree_at_most,
    minimal_cone_containing,
    minimal_nonfaces,
    quotient_fan,
    validate_fan,
)
from .kth import KClass, KPresentation, k_dimension, k_normal_form, k_presentation
from .mor import (
    BlowupMorphism,
    MorphismError,
    RefinementMorphism,
    ReweightMorphism,
    codim1_reweight,
    pullback,
    push_class,
    push_codim1,
    push_codim1_series_check,
    push_hilbert_oracle,
    push_R_inverse_power,
    push_theorem_check,
    refinement_matrix,
    weighted_blowup,
)
from .srco import (
    chern_table,
    graded_dim_formula_check,
    sector_presentation,
    sr_dimension,
    sr_truncated_oracle,
)

__version__ = "0.1.0"
