"""cycontract: exact verification toolkit for Calabi-Yau threefold
contractions.

Subpackages and modules:

- ``poly``: sparse multivariate polynomials over Q and GF(p), weighted
  gradings, seeded generic elements, singular-locus generators
- ``series``: Hilbert series of weighted complete intersections, coefficient
  extraction, rational-function identities, section-count formulas
- ``chern``: Euler characteristics of complete intersections (weighted or in
  a general ambient with shipped Chern numbers) and of divisors on Fanos
- ``contraction``: Picard intersection products, smoothing Hodge/Euler
  bookkeeping, the end-to-end summary tables
- ``pfaffian``: Pfaffians and sub-Pfaffians of skew polynomial matrices
- ``groebner``: Buchberger over prime fields (compiled kernel with a pure
  fallback), node-count verification
- ``cli``: the ``cycontract`` command
"""

__version__ = "0.1.0"

from .poly import (
    MultiPoly,
    NonHomogeneousError,
    ParseError,
    PolyRing,
    RingMismatchError,
    jacobian_generators,
    poly_parse,
    poly_print,
    random_homogeneous,
    weighted_degree,
)
from .series import (
    HilbertData,
    RationalSeries,
    ci_hilbert_series,
    cover_section_dim,
    defect_quintic,
    embedding_dimension,
    image_degree,
    numerator_over_standard,
    riemann_roch_fano,
    series_coefficients,
    series_equal,
)
from .chern import (
    AmbientChernData,
    FanoModel,
    ci_euler_ambient,
    ci_euler_weighted,
    curve_euler_ci_fano,
    delpezzo_euler,
    grassmannian_g25_data,
    projective_chern_data,
    surface_euler_fano,
)
from .contraction import (
    ConstructionSpec,
    NotSmoothableError,
    RankTwoPicardModel,
    conifold_euler,
    contraction_euler,
    contraction_image_degree,
    double_cover_euler,
    hodge_shift,
    milnor_correction,
    smoothing_euler,
    smoothing_hodge,
    table1,
    table3,
    triple_product,
)
from .pfaffian import (
    SkewMatrix,
    build_bordered,
    expansion_identity_check,
    maximal_sub_pfaffians,
    pfaffian,
)
from .groebner import (
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    graded_piece_dim,
    is_zero_dimensional,
    normal_form,
    quotient_degree,
    separability_check,
)
