"""Exact computations with twisted generalized Weyl constructions and algebras."""

from .constructions import (QWeylParams, TqmuParams, build_quantized_weyl,
                            build_tqmu, build_type_A2_example, qweyl_relations,
                            tqmu_min_poly, tqmu_min_poly_qbinomial,
                            verify_theorem_5_3)
from .errors import (CapExceededError, InputError, InternalInconsistencyError,
                     ParseError, TGWAError)
from .locfin import (PolyCartanMatrix, cartan_of, check_serre,
                     independence_bound, minimal_polynomial,
                     poly_cartan_matrix, serre_element, serre_elements,
                     vij_closure)
from .parsing import (parse_element, parse_polynomial, parse_scalar,
                      parse_tgwc_spec, print_tgwc_spec)
from .polyring import Polynomial, RingCtx, RingMap
from .rank2 import (SerrePair, check_P1a, check_P1b, check_P2,
                    inversion_length, presentation, reduce_rank2,
                    serre_pair_from_cartan)
from .scalars import QQ, QQ_q, Field, RatFunc, q, qbinomial, qint
from .tgwc import (GradedElement, TGWCData, equal_in_A, ideal_witness,
                   is_in_ideal, multiply, project_to_base, reduce_to_spanning,
                   shapovalov, spanning_monomials, star, validate_tgwc)

__version__ = "0.1.0"

__all__ = [
    "QWeylParams", "TqmuParams", "build_quantized_weyl", "build_tqmu",
    "build_type_A2_example", "qweyl_relations", "tqmu_min_poly",
    "tqmu_min_poly_qbinomial", "verify_theorem_5_3", "CapExceededError", "InputError",
    "InternalInconsistencyError", "ParseError", "TGWAError", "PolyCartanMatrix",
    "cartan_of", "check_serre", "independence_bound", "minimal_polynomial",
    "poly_cartan_matrix", "serre_element", "serre_elements", "vij_closure",
    "parse_element", "parse_polynomial", "parse_scalar", "parse_tgwc_spec",
    "print_tgwc_spec", "Polynomial", "RingCtx", "RingMap", "SerrePair", "check_P1a",
    "check_P1b", "check_P2", "inversion_length", "presentation", "reduce_rank2",
    "serre_pair_from_cartan", "QQ", "QQ_q", "Field", "RatFunc", "q", "qbinomial",
    "qint", "GradedElement", "TGWCData", "equal_in_A", "ideal_witness", "is_in_ideal",
    "multiply", "project_to_base", "reduce_to_spanning", "shapovalov",
    "spanning_monomials", "star", "validate_tgwc",
]
