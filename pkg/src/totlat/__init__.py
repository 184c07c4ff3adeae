"""totlat: exact computation of the total-order central idempotent in the
endomorphism algebra of a finite lattice, with an exhaustive verification
suite for every algebraic property it is supposed to satisfy."""

from .algebra import (
    FormalSum,
    Ring,
    ZZ,
    embed,
    f_of_chain,
    idempotent_direct,
    idempotent_original,
    identity_sum,
    j_upper,
    mu_chain_infinity,
    mu_chain_infinity_oracle,
    mu_family,
)
from .lattices import (
    Lattice,
    boolean_lattice,
    chain_lattice,
    diamond_lattice,
    divisor_lattice,
    generate,
    lattice_from_poset,
    partition_lattice,
    pentagon_lattice,
    product_lattice,
)
from .morphisms import (
    FamilyOverChain,
    JoinMap,
    alpha_of_chain,
    compose,
    constant_bottom,
    enumerate_join_endomorphisms,
    families_over_chain,
    identity_map,
    image_chain,
    j_of_family,
    make_join_map,
    opposite_morphism,
    pi_of_chain,
)
from .posets import Chain, Poset, poset_from_covers

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
