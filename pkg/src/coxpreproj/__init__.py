"""Admissible words, preprojective roots and weak order for Coxeter elements."""

from .admissible import (
    AdmissibleWord,
    PrincipalWord,
    admissible,
    complete_word,
    independent_decomposition,
    is_admissible,
    join,
    meet,
    principal_word,
)
from .coxgraph import (
    INF,
    CoxeterGraph,
    Orientation,
    opposite,
    orientation_from_order,
    preset,
    validate_matrix,
)
from .errors import CoxeterError
from .preproj import (
    Finiteness,
    PsiSet,
    enumerate_preprojective,
    finiteness_probe,
    projective_roots,
    w_alpha,
    w_psi,
)
from .rootsys import element_of_word, form_matrix
from .tracemon import TraceWord, parse_word
from .weakorder import approximate, classify_admissible, is_reduced, leq_L

__all__ = [
    "AdmissibleWord", "PrincipalWord", "admissible", "complete_word",
    "independent_decomposition", "is_admissible", "join", "meet", "principal_word",
    "INF", "CoxeterGraph", "Orientation", "opposite", "orientation_from_order",
    "preset", "validate_matrix", "CoxeterError", "Finiteness", "PsiSet",
    "enumerate_preprojective", "finiteness_probe", "projective_roots", "w_alpha",
    "w_psi", "element_of_word", "form_matrix", "TraceWord", "parse_word",
    "approximate", "classify_admissible", "is_reduced", "leq_L",
]
