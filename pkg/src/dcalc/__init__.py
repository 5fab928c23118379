"""Exact oscillation and difference-of-closed-sets norms on finite tree spaces."""

from .errors import (
    DcalcError,
    InvariantViolation,
    PreconditionError,
    SearchBudgetExceeded,
    StructuralError,
)
from .space import (
    NodeSet,
    SetClassification,
    Space,
    TreeSpace,
    boundary_rel,
    build_space,
    classify_set,
    closure,
    interior_rel,
    is_nowhere_dense,
    path_space,
    star_space,
    subspace,
)
from .values import NodeFunction

__version__ = "0.1.0"

__all__ = [
    "DcalcError",
    "InvariantViolation",
    "NodeFunction",
    "NodeSet",
    "PreconditionError",
    "SearchBudgetExceeded",
    "SetClassification",
    "Space",
    "StructuralError",
    "TreeSpace",
    "boundary_rel",
    "build_space",
    "classify_set",
    "closure",
    "interior_rel",
    "is_nowhere_dense",
    "path_space",
    "star_space",
    "subspace",
]
