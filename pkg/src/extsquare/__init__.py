"""Exact exterior-square matrix calculus over commutative rings.

The package builds the second compound (Cauchy-Binet) image of invertible
matrices, the transvection calculus of the compound group (expansions,
monomial moves, column/row stabilizers, short Plucker relations and the
membership criterion, congruence levels), and a verified engine expressing
exterior transvections with level-generator arguments as products of
exactly 8, 16, 24 or 48 elementary conjugates of a matrix and its inverse.
"""

from .indexing import ambient_rank, dim, height, pairs, rank, shuffle_sign, sign, unrank
from .matrices import InvPair, Matrix, commutator, conjugate, identity, identity_pair
from .rings import (
    IntegerRing,
    ModularRing,
    NonUnitError,
    PolynomialRing,
    RingElement,
    RingMismatchError,
)
from .words import ConjWord, ExtWord, PairWord, TransvWord, ext_letter_matrix
from .exterior import cauchy_binet, compound_pair, ext_transvection, p_element
from .plucker import PairVector, a_sum, column_satisfies, is_member, plucker_poly
from .stabilizer import column_stabilizer, plucker_stabilizer, row_stabilizer
from .level import congruence_class, ideal_contains, level_generators, reduce_matrix
from .rdu import (
    CertificateError,
    Decomposition,
    DecompositionError,
    GeneratorTarget,
    HeightError,
    MembershipError,
    RankError,
    ReverseDecomposer,
    verify,
)

__version__ = "0.1.0"
