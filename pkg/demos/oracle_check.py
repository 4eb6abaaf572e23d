"""
Brute force against the closed combinatorics
============================================

Build the Grassmann code from its Plücker points over a small prime field
and recover the hierarchy by enumerating subcodes.
"""

import time

from grassmann_weights import hierarchy
from grassmann_weights.oracle import (
    brute_hierarchy,
    codeword_weight_distribution,
    generator_matrix,
    grassmann_points,
    schubert_union_points,
    span_dimension,
)

pts = grassmann_points(4, 2)
print(pts.index)          # coordinates in colex order
print(pts.points[:5])   # each normalised so its last nonzero entry is 1

g = generator_matrix(pts)
print(g.matrix.shape, codeword_weight_distribution(g))

t = time.perf_counter()
brute = brute_hierarchy(g)
print(brute, brute == hierarchy(4, 2).weights, f"{time.perf_counter() - t:.2f}s")

# a union given by its corners: the points on it and the span of its cone
g52 = grassmann_points(5, 2)
corners = [(1, 5), (2, 4)]
print(schubert_union_points(g52, corners), span_dimension(g52, corners))

# the full grid is the whole Grassmannian
print(schubert_union_points(g52, [(4, 5)]) == len(g52))
