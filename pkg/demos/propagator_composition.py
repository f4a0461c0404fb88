"""Path-integral kernels and their exact composition law.

The finite-partition path integral of the constant-field system is
evaluated by folding exact Gauss compositions over the subintervals.
The result is independent of the partition -- an exact rational
identity, demonstrated here for a p-adically ordered partition -- and
the kernels satisfy the semigroup property on the nose.
"""

import random
from fractions import Fraction as F
from functools import cmp_to_key

from padicqm import (
    PartitionSpec,
    Place,
    finite_n_propagator,
    k_constant_field,
    k_free,
    semigroup_residual,
)
from padicqm.places import place_less


def main():
    print("=== free-particle kernel across places, T = 1, 0 -> 1 ===")
    for place in (Place.real(), Place.prime(2), Place.prime(3), Place.prime(5)):
        amp = k_free(place, 1, 0, 1)
        print(f"  v = {place}: |.|^2 = {amp.modulus_sq}, phase = {amp.phase}")

    print("\n=== partition independence at p = 3 (a = 2, 0 -> 1) ===")
    place = Place.prime(3)
    rng = random.Random(5)
    points = {F(0), F(1)}
    while len(points) < 9:
        points.add(F(rng.randint(-30, 30), rng.randint(1, 30)))
    ordered = sorted(points, key=cmp_to_key(
        lambda x, y: -1 if place_less(x, y, place) else 1))
    print("  partition in 3-adic digit order:")
    print("   ", " < ".join(str(t) for t in ordered))
    part = PartitionSpec(place, tuple(ordered))
    total_time = ordered[-1] - ordered[0]
    folded = finite_n_propagator(place, 2, part, 0, 1)
    direct = k_constant_field(place, 2, total_time, 0, 1)
    print(f"  N = {part.n_steps} fold : |.|^2 = {folded.modulus_sq}, phase = {folded.phase}")
    print(f"  one-shot T = {total_time}: |.|^2 = {direct.modulus_sq}, phase = {direct.phase}")
    print(f"  exactly equal: {folded == direct}")

    print("\n=== semigroup property (exact zero residual) ===")
    for place in (Place.real(), Place.prime(5)):
        residual = semigroup_residual(place, F(1, 2), 0, F(1, 3), 2, 0, 1)
        print(f"  v = {place}: residual is the canonical zero: {residual.is_zero}")


if __name__ == "__main__":
    main()
