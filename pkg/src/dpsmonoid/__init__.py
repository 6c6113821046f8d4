"""Partial isometries of star graphs: the inverse monoid DPS_n.

Membership, enumeration, cardinality, Green's relations, generators and
rank, and verification of a finite presentation through a quotient
enumerator for finitely presented monoids.
"""

from .core_maps import (
    PartialInjection,
    PartialTransformation,
    compose,
    identity,
    invert,
    make_partial_injection,
)
from .generation import closure, find_generating_set, standard_generators
from .green import GreenClassification, green_classify, j_related
from .kernels import BACKEND
from .monoid import (
    dps_count,
    embed_psi,
    enumerate_dps,
    enumerate_symmetric_inverse,
    symmetric_inverse_count,
    units,
)
from .presentations import (
    GeneratorAssignment,
    Presentation,
    Relation,
    apply_tietze,
    check_relations,
    dps_presentation,
    eval_word,
    symmetric_inverse_presentation,
)
from .quotient import MonoidTable, enumerate_quotient, verify_presentation_defines, word_class
from .star_metric import is_dps_member, is_partial_isometry, star_distance

__version__ = "0.1.0"
