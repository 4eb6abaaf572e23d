"""
Higher weights of C(2,m)
========================

Compute a weight hierarchy, look at the optimal Schubert unions behind it,
and compare the exact engine with the two-candidate shortcut.
"""

from grassmann_weights import hierarchy, lr_choice
from grassmann_weights.engine import Method, method_differences

# the code C(2,5) over F_2 has length 155 and dimension 10
h = hierarchy(5, 2)
print(f"n={h.n} k={h.k}")
for i in range(1, h.k + 1):
    wit = h.witnesses[i - 1]
    print(f"d_{i:<2} = {h.d(i):>4}   max union of area {h.k - i}: {[p.heights for p in wit]}")

# d_1 is always q^(2m-4)
print(hierarchy(9, 3).d(1) == 3 ** 14)

# the left/right candidates for one spanning dimension
c = lr_choice(5, 4)
print(c.winner.value, c.gL, "vs", c.gR)

# at large q the shortcut agrees with the exact answer
print(hierarchy(8, 101).weights == hierarchy(8, 101, Method.LR).weights)
print("small-q disagreements for m=8, q=2:", method_differences(8, 2))

# big m is cheap; values are exact integers
big = hierarchy(30, 101)
print(len(str(big.n)), "digits in n for m=30")
