"""Exact intersection numbers on towers of projectivized jet bundles.

The package computes tautological intersection numbers on iterated
projectivizations (Demailly-type towers) over a small family of base
geometries, three independent ways:

* ``integrate_stepwise`` - level-by-level fiber integration with twisted
  Segre multipliers (the reference pipeline),
* ``integrate_phi_form`` - one truncated universal polynomial against the
  pushed-forward generating function,
* ``integrate_residue``  - iterated Laurent expansion of the universal
  rational factors with certified windows.

All arithmetic is exact rational; the three results must agree to the last
digit, and the CLI treats any disagreement as a hard error.
"""

from .graded_ring import (
    BaseGeometry,
    CohClass,
    Generator,
    RingMismatchError,
    RingSpec,
    chern_of_geometry,
    integrate_base,
    ring_inv_unit,
    ring_mul,
)
from .laurent import (
    LaurentPoly,
    TruncatedSeries,
    Window,
    WindowError,
    cauchy_mul,
    coeff,
    expand_geometric,
    expand_rational_product,
)
from .demailly import (
    TowerConfig,
    TowerPolynomial,
    base_integral,
    change_of_variables,
    fiber_integrate_once,
    integrate_phi_form,
    integrate_residue,
    integrate_stepwise,
    phi_i_product,
    phi_kl,
    phi_kl_truncated,
    phi_poly,
    residue_phi_rational,
    segre_gen,
    twisted_segre_recursion,
)
from .morse import (
    DegreeScan,
    MorseReport,
    PipelineDisagreementError,
    WeightVector,
    minimal_degree_search,
    morse_class,
    morse_number,
    weights_valid_L,
    weights_valid_demailly,
)

__all__ = [
    "BaseGeometry",
    "CohClass",
    "DegreeScan",
    "Generator",
    "LaurentPoly",
    "MorseReport",
    "PipelineDisagreementError",
    "RingMismatchError",
    "RingSpec",
    "TowerConfig",
    "TowerPolynomial",
    "TruncatedSeries",
    "WeightVector",
    "Window",
    "WindowError",
    "base_integral",
    "cauchy_mul",
    "change_of_variables",
    "chern_of_geometry",
    "coeff",
    "expand_geometric",
    "expand_rational_product",
    "fiber_integrate_once",
    "integrate_base",
    "integrate_phi_form",
    "integrate_residue",
    "integrate_stepwise",
    "minimal_degree_search",
    "morse_class",
    "morse_number",
    "phi_i_product",
    "phi_kl",
    "phi_kl_truncated",
    "phi_poly",
    "residue_phi_rational",
    "ring_inv_unit",
    "ring_mul",
    "segre_gen",
    "twisted_segre_recursion",
    "weights_valid_L",
    "weights_valid_demailly",
]

__version__ = "0.1.0"
