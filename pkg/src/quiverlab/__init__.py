"""quiverlab: exact-integer workbench for exchange-matrix mutation,
c-vectors, quasi-Cartan companions, and their executable properties."""

from .errors import (
    BoundsExceeded,
    DimensionMismatch,
    MalformedInput,
    MixedSigns,
    NoSymmetrizer,
    NotACompanion,
    NotAcyclic,
    NotAdmissible,
    NotSignSkewSymmetric,
    NotSkewSymmetric,
    NotUnitNorm,
    QuiverlabError,
    SignCoherenceLost,
    ZeroVector,
)
from .exchange import (
    Cycle,
    Diagram,
    ExchangeMatrix,
    MutationClassReport,
    canonical_form,
    chordless_cycles,
    diagram,
    directed_paths,
    induced_directed_paths,
    is_acyclic,
    mutate_along,
    mutate_matrix,
    mutation_class,
    permute_matrix,
    validate,
)
from .yseed import (
    WalkRecord,
    YSeed,
    apply_walk,
    initial_seed,
    mutate_seed,
    permute_seed,
    sign_of,
)
from .rootsys import (
    CartanMatrix,
    RealRootIndex,
    RootCertificate,
    RootQuery,
    bilinear,
    cartan_of,
    is_real_root,
    reflect_in_root,
    reflect_simple,
)
from .companion import (
    AdmissibleCut,
    CompanionSearch,
    EpsilonMutation,
    ParityCertificate,
    QuasiCartan,
    admissible_cut,
    check_path_property,
    companion_from_cvectors,
    companion_from_signs,
    epsilon_mutate,
    exhaustive_admissible_companions,
    find_admissible_companion,
    generalized_cartan,
    is_admissible,
    is_companion_of,
    make_companion,
    mutate_basis,
    sign_change,
    sign_equivalent,
    triangle_condition,
)
from .verify import (
    VerificationReport,
    conjecture_search,
    fuzz,
    verify_prop_pm,
    verify_walk,
)
from .fixtures import PRESETS, preset

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
