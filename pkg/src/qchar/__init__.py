"""q-characters of type A Kirillov-Reshetikhin modules, their cyclic folds,
and a Frenkel-Mukhin style characterization engine."""

from .cartan import CartanDatum, CyclicA, InfiniteA, WindowA, a_monomial, cartan_entry, simple_root
from .character import (
    QCharacter,
    a_factorization,
    affine_weight,
    classical_character,
    depth_of,
    fold_monomial,
    fold_qcharacter,
    fold_weight,
    root_content,
)
from .fm import decompose_into_simples, dominant_monomials, fm_generate, verify_characterization, verify_ki
from .monomial import ONE, Monomial, Weight, Y, parse_monomial, weight_of
from .sl2 import QString, i_expansion, string_decompose, string_expansion
from .tableaux import Depth, KRDescriptor, Tableau, Window, enumerate_by_depth, enumerate_window, kr_qcharacter

__version__ = "0.1.0"
