#!/usr/bin/env python3
"""Survey the idempotent across the corpus: term counts, chain counts, and
the size of the family-construction sum before cancellation."""

from totlat.algebra import idempotent_direct
from totlat.checks import DEFAULT_CORPUS
from totlat.lattices import generate
from totlat.morphisms import families_over_chain


def main():
    header = f"{'lattice':>28s} {'|T|':>4s} {'N':>3s} {'Z-chains':>9s} {'terms':>6s} {'raw family terms':>17s}"
    print(header)
    print("-" * len(header))
    for spec in DEFAULT_CORPUS:
        L = generate(spec)
        e = idempotent_direct(L)
        z_count = len(L.chain_family("Z"))
        raw = sum(
            len(families_over_chain(L, B))
            for n in range(L.max_chain_length + 1)
            for B in L.chain_family("B", n)
        )
        print(
            f"{spec:>28s} {L.n:>4d} {L.max_chain_length:>3d} "
            f"{z_count:>9d} {len(e.terms):>6d} {raw:>17d}"
        )


if __name__ == "__main__":
    main()
