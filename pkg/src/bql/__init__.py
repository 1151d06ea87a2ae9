"""Coset enumeration, Garside normal forms and permutation counting for the
minimal-quotient lemmas of the braid commutator subgroup B'_n."""

from .braid import BraidWord, normal_form, permutation_image, words_equal
from .cosets import enumerate_cosets
from .fpres import Presentation, abelianization, artin_presentation
from .perm import Permutation, PermGroup
from .word import Word

__all__ = [
    "BraidWord", "Permutation", "PermGroup", "Presentation", "Word",
    "abelianization", "artin_presentation", "enumerate_cosets", "normal_form",
    "permutation_image", "words_equal",
]
