"""Abstract argumentation toolkit: semantics, graph classes, QBF/MINSAT reductions."""
from argkit.errors import ArgkitError, CapacityError, ParseError, UsageError
from argkit.framework import ArgSet, Framework
from argkit.graph_classes import GraphClassId, distance, is_member, simple_cycles, verify_deletion
from argkit.logic import CnfFormula, Literal, MinsatInstance, Qbf2Formula, minsat_member, qbf2_valid
from argkit.reductions import ReductionArtifact, reduce
from argkit.semantics import SemanticsId, credulous, extensions, grounded, skeptical

__version__ = "0.1.0"

__all__ = [
    "ArgkitError", "CapacityError", "ParseError", "UsageError",
    "ArgSet", "Framework",
    "GraphClassId", "distance", "is_member", "simple_cycles", "verify_deletion",
    "CnfFormula", "Literal", "MinsatInstance", "Qbf2Formula", "minsat_member", "qbf2_valid",
    "ReductionArtifact", "reduce",
    "SemanticsId", "credulous", "extensions", "grounded", "skeptical",
]
