"""Exact toolkit for poset ideals of isotone maps and their monomial ideals.

Core objects: finite posets, the poset Hom(P, N) of isotone maps and its
ideals, letterplace and co-letterplace monomial ideals with Alexander duality,
stability notions over a poset, the chain-case duality of strongly stable
ideals, and staircase determinantal ideals with letterplace initial ideals.
"""

from .determinantal import (
    LSequence,
    build_matrix,
    i_sequence,
    ideal_gens,
    l_from_i,
    ly_ideal,
    terrace,
    verify_main,
)
from .groebner import (
    Polynomial,
    TermOrder,
    buchberger,
    diagonal_order,
    grevlex_order,
    initial_ideal,
    lex_order,
    reduce,
)
from .homset import HomIdeal, Marker, enumerate_isotone, minimal_of
from .ideals import (
    ascent,
    coletterplace_ideal,
    hull_map,
    letterplace_ideal,
    principal_letterplace_gens,
    support,
)
from .monomial import (
    IntPoly,
    Monomial,
    MonomialIdeal,
    Var,
    alexander_dual,
    associated_primes,
    elem_var,
    height,
    hilbert_numerator,
    minimalize,
    nat_var,
    pair_var,
)
from .poset import Poset, antichain, chain, poset_from_covers
from .pstable import (
    is_p_stable,
    lambda_bar,
    lambda_bar_inv,
    longest_b_chain,
    max_ideal_power_stable,
)
from .quotient import FiberMap, fiber_kind, project_ideal, regular_quotient_check
from .stable import (
    borel_closure,
    dualize_ss,
    dualize_ss_bounded,
    homideal_from_ss,
    is_strongly_stable,
    ss_from_homideal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
