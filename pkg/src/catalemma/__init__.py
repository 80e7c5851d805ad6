"""catalemma: exact verification workbench for Catalan-number identities.

Two independent proof routes are mechanized for each identity: brute-force
enumeration (alternating composition sums, labeled-tree involutions) and
algebraic certification (Gosper antidifferences, creative telescoping),
with machine-checkable certificates connecting them.
"""

from ._kernels import backend as kernel_backend
from .identities import (
    Composition,
    IdentityReport,
    a_recurrence_eval,
    a_recurrence_table,
    binomial_gen,
    catalan,
    compositions,
    f_value,
    lhs_identity1,
    lhs_identity2prime,
    lhs_identity3,
    rhs_identity3,
)
from .summation import (
    BivariateHyperTerm,
    GosperCertificate,
    HyperTerm,
    NoRecurrenceFound,
    NotGosperSummable,
    TelescopedRecurrence,
    bivariate_hyperterm,
    gosper,
    hyperterm,
    telescope_definite,
    verify_gosper,
    verify_zeilberger,
    zeilberger,
)
from .termparse import ParseError, TermExpression, parse_term, ratio_of
from .trees import (
    FIXED_POINT,
    LEAF,
    SURVIVOR,
    CreaturePair,
    LabeledTree,
    Node,
    SizeLimitError,
    enumerate_creatures1,
    enumerate_creatures3,
    enumerate_trees,
    involution1,
    involution3,
    survivor_count,
)

__version__ = "0.1.0"

__all__ = [
    "BivariateHyperTerm",
    "Composition",
    "CreaturePair",
    "FIXED_POINT",
    "GosperCertificate",
    "HyperTerm",
    "IdentityReport",
    "LEAF",
    "LabeledTree",
    "NoRecurrenceFound",
    "Node",
    "NotGosperSummable",
    "ParseError",
    "SURVIVOR",
    "SizeLimitError",
    "TelescopedRecurrence",
    "TermExpression",
    "a_recurrence_eval",
    "a_recurrence_table",
    "binomial_gen",
    "bivariate_hyperterm",
    "catalan",
    "compositions",
    "enumerate_creatures1",
    "enumerate_creatures3",
    "enumerate_trees",
    "f_value",
    "gosper",
    "hyperterm",
    "involution1",
    "involution3",
    "kernel_backend",
    "lhs_identity1",
    "lhs_identity2prime",
    "lhs_identity3",
    "parse_term",
    "ratio_of",
    "rhs_identity3",
    "survivor_count",
    "telescope_definite",
    "verify_gosper",
    "verify_zeilberger",
    "zeilberger",
    "__version__",
]
