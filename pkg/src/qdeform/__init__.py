"""qdeform: exact symbolic and numeric verification for rank-2
q-deformed algebras.

The package models presentations of q-deformed algebras (GL_q(2) and
its relatives, sl_q(2), the q-oscillator family, reflection-equation
algebras) as weighted rewrite systems over an exact coefficient field
Q(q^(1/2)), equips them with Hopf/comodule structure, realizes the
oscillator algebras on Fock spaces, and verifies the structural maps
connecting them: Gauss decomposition, bosonization, and
reflection-equation transport.
"""

from .scalars import (ExponentOverflow, QScalar, lam, qeval, qnum,
                      qreduce)
from .freealg import (DEFAULT_STEP_BUDGET, Element, MorphismMap,
                      Presentation, RewriteBudgetExceeded, compose,
                      format_element)
from .parser import ParseError, parse_expression
from .catalog import (build_presentation, catalog_names, central_elements,
                      presentation_from_json, presentation_to_json,
                      quantum_determinant, star_structure)
from .rmat import (QMatrix, eps_q, hecke_residual, r_hat, r_matrix,
                   re_relations, rtt_relations, yang_baxter_residual)
from .hopf import (Comodule, HopfStructure, TensorElement, comodule,
                   dual_pairing, format_tensor, hopf_structure,
                   pairing_element)
from .fock import (central_values, contraction_probe, fock_rep,
                   rep_residual, schwinger_decompose, singular_rep)
from .structmaps import (bosonization_catalog, bosonization_report,
                         gauss_maps, rea_transport, verify_gauss)
from .reports import PACKAGE_VERSION, build_report, validate_report
from .suites import run_suite, suite_names

__version__ = PACKAGE_VERSION

__all__ = [
    "ExponentOverflow", "QScalar", "lam", "qeval", "qnum", "qreduce",
    "DEFAULT_STEP_BUDGET", "Element", "MorphismMap", "Presentation",
    "RewriteBudgetExceeded", "compose", "format_element",
    "ParseError", "parse_expression",
    "build_presentation", "catalog_names", "central_elements",
    "presentation_from_json", "presentation_to_json",
    "quantum_determinant", "star_structure",
    "QMatrix", "eps_q", "hecke_residual", "r_hat", "r_matrix",
    "re_relations", "rtt_relations", "yang_baxter_residual",
    "Comodule", "HopfStructure", "TensorElement", "comodule",
    "dual_pairing", "format_tensor", "hopf_structure", "pairing_element",
    "central_values", "contraction_probe", "fock_rep", "rep_residual",
    "schwinger_decompose", "singular_rep",
    "bosonization_catalog", "bosonization_report", "gauss_maps",
    "rea_transport", "verify_gauss",
    "PACKAGE_VERSION", "build_report", "validate_report",
    "run_suite", "suite_names",
    "__version__",
]
