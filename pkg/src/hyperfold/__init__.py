"""Hyperoperations, twice over: rewrite equations vs. fold forms.

Ackermann, Knuth's up-arrows and Conway's chained arrows, each evaluated
both from their self-referential equations and from equivalent fold
expressions, under a step/digit-budgeted big-integer engine, with an
arrow-notation parser and a CLI (``hyperfold``).
"""

from .budget import (
    Budget,
    BudgetExceeded,
    ConstructionLimit,
    DomainError,
    EvalStats,
    HyperError,
    MagnitudeExceeded,
)
from .folds import (
    ChurchNat,
    church_fold,
    church_from_natural,
    church_succ,
    church_to_natural,
    church_zero,
    foldn,
    foldr_seq,
)
from .hyperops import (
    Chain,
    ack_prim,
    ack_ref,
    cback_prim,
    conway_prim,
    conway_ref,
    cpow,
    knuth_prim,
    knuth_ref,
)
from .notation import (
    Ack,
    ChainE,
    ConwayCall,
    Expr,
    Knuth,
    MismatchError,
    NatLit,
    ParseError,
    SourcePos,
    evaluate,
    parse,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "EvalStats",
    "HyperError",
    "BudgetExceeded",
    "MagnitudeExceeded",
    "DomainError",
    "ConstructionLimit",
    "foldn",
    "foldr_seq",
    "ChurchNat",
    "church_zero",
    "church_succ",
    "church_from_natural",
    "church_to_natural",
    "church_fold",
    "Chain",
    "ack_ref",
    "ack_prim",
    "knuth_ref",
    "knuth_prim",
    "conway_ref",
    "conway_prim",
    "cback_prim",
    "cpow",
    "Expr",
    "NatLit",
    "Ack",
    "Knuth",
    "ChainE",
    "ConwayCall",
    "SourcePos",
    "ParseError",
    "MismatchError",
    "parse",
    "render",
    "evaluate",
]
