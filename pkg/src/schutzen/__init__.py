"""Schützenberger group presentations and homotopy bases for finitely
presented monoids, checked against a brute-force oracle."""

from .engine import CompleteSystem, MonoidUniverse, critical_circuits, enumerate_universe, equal, knuth_bendix, reduce
from .errors import (ActionKilled, CapExceeded, ConstructionError, InputError, LimitExceeded,
                     NotAGroup, NotPointwiseStabilizer, OrderTooLarge, ParseError,
                     PreconditionViolated, SchutzenError, SearchExhausted)
from .green import compute_green, lambda_action, schutz_direct, star_action
from .grouptools import enumerate_group, isomorphic
from .paths import DGEdge, DGPath
from .pipeline import Caps, Instance
from .schutz import build_presentation, choose_representatives, kappa, phi, pi, psi, verify_relation
from .words import Alphabet, MonoidPresentation, Rule, parse_presentation

__version__ = "0.1.0"

__all__ = [
    "ActionKilled", "Alphabet", "CapExceeded", "Caps", "CompleteSystem", "ConstructionError",
    "DGEdge", "DGPath", "InputError", "Instance", "LimitExceeded", "MonoidPresentation",
    "MonoidUniverse", "NotAGroup", "NotPointwiseStabilizer", "OrderTooLarge", "ParseError",
    "PreconditionViolated", "Rule", "SchutzenError", "SearchExhausted", "build_presentation",
    "choose_representatives", "compute_green", "critical_circuits", "enumerate_group",
    "enumerate_universe", "equal", "isomorphic", "kappa", "knuth_bendix", "lambda_action",
    "parse_presentation", "phi", "pi", "psi", "reduce", "schutz_direct", "star_action",
    "verify_relation",
]
