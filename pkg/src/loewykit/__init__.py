"""Exact computation of Loewy diagrams and of induction along simple current algebras."""
from .exactlin import GF, KERNEL, QQ, PrimeField, RationalField
from .algcore import Algebra, check_algebra, jacobson_radical, quotient_algebra, regular_module, smash_product
from .modth import (
    ModuleRep,
    composition_factors,
    decompose_semisimple,
    hom_space,
    is_isomorphic,
    is_simple,
    quotient_module,
    radical,
    radical_series,
    socle,
    socle_series,
    spin,
    splits,
)
from .loewy import LoewyDiagram, diagrams_match, emit, loewy_diagram, non_split_ext_exists
from .braided import (
    AlgebraObject,
    HopfAlgebra,
    braiding,
    check_algebra_object,
    current_decomposition,
    dual_module,
    fixed_point_free,
    frobenius_dims,
    induce,
    induce_morphism,
    is_invertible,
    restrict,
    tensor_module,
    verify_hypotheses,
    verify_preservation,
)

__version__ = "0.1.0"
