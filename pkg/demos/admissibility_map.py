"""
Which grid points can sit on top of an optimal union
=====================================================

Print the cost of every grid point for m=15 and mark the ones that cannot
be the highest point of a best union.
"""

from grassmann_weights.engine import C_of_d, admissibility_map, admissible_by_lemma, is_admissible
from grassmann_weights.cli import main

main(["admissible", "--m", "15", "--format", "text"])

# the smallest cost on each diagonal
print([C_of_d(15, d) for d in range(27)])

rows = admissibility_map(15)
print(sum(r["admissible"] for r in rows), "of", len(rows), "points admissible")

# the closed-form rule is only a necessary condition on some diagonals
for p in [(7, 10), (5, 11)]:
    print(p, is_admissible(15, p), admissible_by_lemma(15, p))

# the lone exception when m=11
print(is_admissible(11, (4, 9)))
