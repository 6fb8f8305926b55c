"""Skeletal braided ribbon categories: exact checks, modularity and condensation."""

from .catalog import CATALOG_NAMES, deligne_product, load_named
from .condense import (
    CondensationResult,
    condense,
    condense_general,
    condense_pointed,
    extended_hom,
    orbits_and_stabilizers,
    verify_condensation,
)
from .errors import *  # noqa: F403
from .exactnum import CycloNum, root_of_unity, zeta
from .exchange import ExchangeDocument, load_document, parse_document
from .fusion import FusionRingData, fp_dims, validate_ring
from .kernels import BACKEND
from .ribbon import CategorySpec, centre, is_degenerate, is_modular, s_matrix, validate_ribbon, verlinde_check
from .tannakian import (
    CharacterTable,
    FiniteGroup,
    TannakianSubcat,
    h2_group,
    maximal_tannakian,
    named_group,
    recognize_group,
)

__version__ = "0.1.0"
