"""Trigonometry over Galois fields and the finite field Hartley transform."""

from .errors import GaloisHartleyError
from .ffht import (
    Signal,
    Spectrum,
    TransformPlan,
    convolve_naive,
    convolve_spectral,
    dc_term,
    forward,
    initial_value,
    inverse,
    make_plan,
    reverse,
    rotate,
    shift_spectrum,
    time_reverse,
)
from .gaussian_ext import GaussianElement, GaussianField, conj, embed, frobenius
from .gf_core import (
    FieldElement,
    FieldSpec,
    element_order,
    find_element_of_order,
    is_primitive_modulus,
    is_quadratic_residue,
    make_field,
)
from .ktrig import TrigContext, cas_k, cos_k, make_trig_context, sin_k, trig_table
from .spectra import (
    CyclotomicPartition,
    cyclotomic_classes,
    expand_spectrum,
    free_components,
    is_valid_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "GaloisHartleyError",
    "FieldSpec",
    "FieldElement",
    "make_field",
    "element_order",
    "find_element_of_order",
    "is_primitive_modulus",
    "is_quadratic_residue",
    "GaussianField",
    "GaussianElement",
    "embed",
    "conj",
    "frobenius",
    "TrigContext",
    "make_trig_context",
    "cos_k",
    "sin_k",
    "cas_k",
    "trig_table",
    "TransformPlan",
    "Signal",
    "Spectrum",
    "make_plan",
    "forward",
    "inverse",
    "convolve_spectral",
    "convolve_naive",
    "shift_spectrum",
    "dc_term",
    "initial_value",
    "reverse",
    "rotate",
    "time_reverse",
    "CyclotomicPartition",
    "cyclotomic_classes",
    "free_components",
    "is_valid_spectrum",
    "expand_spectrum",
]
