"""Pure bipartite LOCC transformations and entanglement catalysis.

Decides and quantifies what local operations and classical communication
can do to a pure bipartite state, working entirely on ordered Schmidt
coefficients: majorization checks, optimal conversion probabilities,
catalyst screening / verification / bounds, and catalyst search with an
exact non-existence certificate in the 2x2 case.

The hot kernels live in a compiled extension with a pure numpy fallback;
``entcat.kernels.BACKEND`` reports which one is active.
"""

from .errors import (
    DimTooSmallError,
    EmptyInputError,
    EntcatError,
    InvalidProbabilityError,
    NegativeEntryError,
    NotIncomparableError,
    NotNormalizedError,
    SizeCapExceededError,
)
from .spectra import (
    DEFAULT_CONFIG,
    DEFAULT_SIZE_CAP,
    NumericConfig,
    SchmidtSpectrum,
    entropy,
    majorizes,
    make_spectrum,
    pad_to,
    tensor,
    tensor_power,
)
from .transform import (
    TransformClassification,
    TransformReport,
    classify,
    monotone_tails,
    nielsen_transformable,
    pmax,
    pmax_multicopy,
    pmax_witness,
    transform_report,
    uniform_spectrum,
)
from .catalysis import (
    CatalystVerdict,
    NecessaryConditionsReport,
    catalyst_bound,
    is_catalyst,
    multicopy_check,
    necessary_conditions,
    quasi_catalyst_bound,
    quasi_pmax,
)
from .search import (
    Found,
    FoundInterval,
    NonExistence,
    NotFound,
    SearchConfig,
    SearchMode,
    SearchOutcome,
    TrivialAlreadyTransformable,
    sample_simplex,
    search_exact_p2,
    search_random,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CatalystVerdict",
    "DEFAULT_CONFIG",
    "DEFAULT_SIZE_CAP",
    "DimTooSmallError",
    "EmptyInputError",
    "EntcatError",
    "Found",
    "FoundInterval",
    "InvalidProbabilityError",
    "NecessaryConditionsReport",
    "NegativeEntryError",
    "NonExistence",
    "NotFound",
    "NotIncomparableError",
    "NotNormalizedError",
    "NumericConfig",
    "SchmidtSpectrum",
    "SearchConfig",
    "SearchMode",
    "SearchOutcome",
    "SizeCapExceededError",
    "TransformClassification",
    "TransformReport",
    "TrivialAlreadyTransformable",
    "catalyst_bound",
    "classify",
    "entropy",
    "is_catalyst",
    "majorizes",
    "make_spectrum",
    "monotone_tails",
    "multicopy_check",
    "necessary_conditions",
    "nielsen_transformable",
    "pad_to",
    "pmax",
    "pmax_multicopy",
    "pmax_witness",
    "quasi_catalyst_bound",
    "quasi_pmax",
    "sample_simplex",
    "search_exact_p2",
    "search_random",
    "tensor",
    "tensor_power",
    "transform_report",
    "uniform_spectrum",
]
