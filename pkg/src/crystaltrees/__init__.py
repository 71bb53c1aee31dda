"""Crystal-type structures on words: plactic, hypoplactic, sylvester and Baxter monoids."""
from .words import (
    descent_composition, descent_set, format_word, invert, parse_word, standardize, weight,
)
from .operators import (
    e_crystal, e_quasi, eps_crystal, f_crystal, f_quasi, is_highest_weight_crystal,
    is_highest_weight_quasi, phi_crystal,
)
from .trees import Tree, TwinPair
from .congruence import check_identity, count_factorizations, equiv, rewrite_closure

__version__ = "0.1.0"

__all__ = [
    "descent_composition", "descent_set", "format_word", "invert", "parse_word", "standardize",
    "weight", "e_crystal", "e_quasi", "eps_crystal", "f_crystal", "f_quasi",
    "is_highest_weight_crystal", "is_highest_weight_quasi", "phi_crystal", "Tree", "TwinPair",
    "check_identity", "count_factorizations", "equiv", "rewrite_closure",
]
