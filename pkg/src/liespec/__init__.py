"""Exact-arithmetic Lie algebra (co)homology and Taylor spectra."""

from .errors import ToolkitError
from .liealg import (
    Character,
    LieAlgebra,
    adjoint_rep,
    bracket,
    derived_subalgebra,
    is_nilpotent,
    is_semisimple,
    is_solvable,
    jordan_holder_values,
    killing_form,
    top_exterior_character,
    two_rho,
    zero_character,
)
from .linalg import (
    RatMatrix,
    Rational,
    Subspace,
    generalized_kernel,
    intersect,
    kernel,
    rank,
    rat,
    rational_eigenvalues,
)
from .homology import (
    BettiTable,
    ChainComplex,
    betti_cohomology,
    betti_homology,
    chain_complex,
    check_poincare,
    cochain_complex,
)
from .reps import (
    Representation,
    WeightTable,
    antipode,
    check_representation,
    coinvariants_dim,
    direct_sum,
    dual,
    has_one_dim_submodule_with_character,
    hom_dim,
    invariants_dim,
    one_dim_module,
    tensor,
    top_module,
    trivial_module,
    twist,
    weights,
)
from .spectrum import (
    SpectrumReport,
    check_dual_spectrum,
    check_two_rho_symmetry,
    in_spectrum,
    spectrum_nilpotent,
    spectrum_semisimple,
    spectrum_solvable,
)
from .roots import (
    RootSystem,
    WeylElement,
    borel_spectrum_formula,
    check_kostant,
    check_semidirect_formula,
    kostant_weights,
    rho,
    weyl_group,
)
from .extensions import (
    Extension,
    ExtensionSpec,
    build_extension,
    check_extension_spectrum,
    pullback,
)
from .catalog import CatalogEntry, get, restrict, sl2_irrep, subalgebra_of

__version__ = "0.1.0"
