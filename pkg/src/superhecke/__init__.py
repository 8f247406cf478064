"""Exact character values of cyclotomic Hecke algebras H_{m,n}(q,Q) and the
wreath products G(m,1,n), computed two independent ways: tableau weights of
an RSK-style superinsertion, and expansion of deformed power sums in the
supersymmetric Schur basis."""

from .combinatorics import (
    HookParams,
    HookTableau,
    Multipartition,
    Partition,
    StandardTableau,
    enumerate_multipartitions,
    enumerate_partitions,
    hook_tableaux,
    standard_tableaux,
)
from .exactalg import Cyclotomic, MPoly, Universe, parse_poly
from .sequences import ParitySequence, mu_weight_sequence, updown_peak
from .superfunctions import P_mu, q_mu, schur_super
from .rsk import (
    InsertionTrace,
    certify,
    insert_sequence,
    reverse_insertion,
    tableau_weight,
    verify_bijection,
)

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "HookParams",
    "HookTableau",
    "InsertionTrace",
    "MPoly",
    "Multipartition",
    "ParitySequence",
    "Partition",
    "P_mu",
    "StandardTableau",
    "Universe",
    "certify",
    "enumerate_multipartitions",
    "enumerate_partitions",
    "hook_tableaux",
    "insert_sequence",
    "mu_weight_sequence",
    "parse_poly",
    "q_mu",
    "reverse_insertion",
    "schur_super",
    "standard_tableaux",
    "tableau_weight",
    "updown_peak",
    "verify_bijection",
]
