"""Módulo de invariantes en característica positiva"""
from .thresholds import NuRecord, ThresholdEstimate, f_threshold, nu, regularity_bound
from .purity import (
    SplittingIdealRecord,
    b_invariant,
    fedder_is_f_pure,
    splitting_ideal,
    strong_f_regularity_witness,
)
from .fpt import check_fpt_equals_cm, fpt_estimate
from .multiplicities import (
    FSignatureEstimate,
    HKSequence,
    a0_socle_degree,
    a_top_complete_intersection,
    colength,
    f_signature_sequence,
    hilbert_kunz_sequence,
    hilbert_samuel_multiplicity,
)
from .relations import InvariantReport, verify_relations
from .orchestrator import CommandParams, InvariantOrchestrator

__all__ = [
    'NuRecord',
    'ThresholdEstimate',
    'f_threshold',
    'nu',
    'regularity_bound',
    'SplittingIdealRecord',
    'b_invariant',
    'fedder_is_f_pure',
    'splitting_ideal',
    'strong_f_regularity_witness',
    'check_fpt_equals_cm',
    'fpt_estimate',
    'FSignatureEstimate',
    'HKSequence',
    'a0_socle_degree',
    'a_top_complete_intersection',
    'colength',
    'f_signature_sequence',
    'hilbert_kunz_sequence',
    'hilbert_samuel_multiplicity',
    'InvariantReport',
    'verify_relations',
    'CommandParams',
    'InvariantOrchestrator',
]
