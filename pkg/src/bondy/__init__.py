"""Bondy and non-Bondy set systems on small ground sets.

A system of subsets of {1..s} is Bondy when some element can be deleted
without collapsing two members into one, and non-Bondy when every
element is covered by a pair of members differing in just that element.
This package computes the covering operators, decides Bondy status,
minimality, and slenderness, builds slender systems of every feasible
size, and enumerates all isomorphism classes exhaustively on grounds of
size at most 5.
"""

from .builders import (
    VARIANT_NO_EMPTY,
    VARIANT_NO_FULL,
    BuildTrace,
    SpectrumTarget,
    base_2s,
    build_maximal_bondy,
    build_slender,
    build_slender_2s,
    disjoint_union,
    extend,
    fixture,
    fixture_ids,
    replay,
    slender_2s_trace,
    slender_trace,
)
from .core import (
    MAX_GROUND_SIZE,
    BondyVerdict,
    ElementSet,
    GroundSet,
    SetSystem,
    SubsetMask,
    adjacent_members,
    bondy_verdict,
    complement_system,
    covered_elements,
    extract_witness_pairs,
    is_bondy,
    is_inclusion_minimal_non_bondy,
    is_non_bondy,
    is_slender,
    minimize,
    once_covered_elements,
)
from .documents import (
    SystemDocument,
    format_json,
    format_text,
    load_path,
    parse_json,
    parse_text,
    save_path,
)
from .enumeration import (
    KIND_MINIMAL,
    KIND_SLENDER,
    CanonicalForm,
    SpectrumReport,
    canonical_form,
    certify_spectrum,
    enumerate_minimal,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_GROUND_SIZE",
    "GroundSet",
    "SubsetMask",
    "ElementSet",
    "SetSystem",
    "BondyVerdict",
    "covered_elements",
    "once_covered_elements",
    "adjacent_members",
    "bondy_verdict",
    "is_bondy",
    "is_non_bondy",
    "complement_system",
    "is_inclusion_minimal_non_bondy",
    "is_slender",
    "minimize",
    "extract_witness_pairs",
    "BuildTrace",
    "SpectrumTarget",
    "VARIANT_NO_EMPTY",
    "VARIANT_NO_FULL",
    "fixture",
    "fixture_ids",
    "disjoint_union",
    "extend",
    "base_2s",
    "build_slender_2s",
    "build_slender",
    "build_maximal_bondy",
    "slender_trace",
    "slender_2s_trace",
    "replay",
    "SystemDocument",
    "parse_text",
    "format_text",
    "parse_json",
    "format_json",
    "load_path",
    "save_path",
    "CanonicalForm",
    "SpectrumReport",
    "KIND_MINIMAL",
    "KIND_SLENDER",
    "canonical_form",
    "enumerate_minimal",
    "spectrum",
    "certify_spectrum",
    "__version__",
]
