#!/usr/bin/env python3
"""Exact quantum predictions for Pauli measurements on graph states.

Walks through building graphs, classifying measurements through the
stabilizer structure, and cross-checking against a dense state vector.
"""

import itertools

from graphlhv import (
    Measurement,
    chain,
    classify,
    enumerate_stabilizer_measurements,
    generator,
    generator_product,
    grid,
    ring,
    statevector_verdict,
)

# A graph state is fixed by one generator per node: X there, Z on neighbors.
g = chain(10)
print("chain(10) generator at site 2:", generator(g, 2))

# Products of generators form the stabilizer group; signs matter.
sites = {1, 2, 3, 5, 6, 9}
a = [1 if j in sites else 0 for j in range(1, 11)]
word = generator_product(g, a)
print(f"product of generators {sorted(sites)}:", word)

# Measuring a word in the group gives its sign with certainty; +/-
# everything else is a coin flip.
print("\nverdicts on ring(12):")
r = ring(12)
for letters in ("IXIXIXIXIXIX", "YXYIYXYIYXYI", "ZIIIIIIIIIII"):
    print(f"  {letters} ->", classify(r, Measurement(letters)))

# The state-vector oracle recomputes the same answers from 2^n amplitudes,
# sharing no code with the classification above.
print("\nstabilizer vs state vector on grid(2,2), all 256 measurements:")
g22 = grid(2, 2)
agree = sum(
    classify(g22, Measurement("".join(p))) == statevector_verdict(g22, Measurement("".join(p)))
    for p in itertools.product("IXYZ", repeat=4)
)
print(f"  {agree}/256 agree")

# The full signed stabilizer group of a two-node graph:
print("\nstabilizer words of the two-node graph state:")
for m, sign in enumerate_stabilizer_measurements(chain(2)):
    print(f"  {'+' if sign == 1 else '-'}{m}")
