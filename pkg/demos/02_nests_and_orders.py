"""
Nests and the orders they induce
================================
"""
from nestlab import (FiniteSpace, classify_order, enumerate_nests, induced_order,
                     is_interlocking, is_nest, reverse, scatters, separation_kind)

X = FiniteSpace(3)
L = X.family([[0], [0, 1]])
print(L, "nest:", is_nest(L))

# x comes before y when some member holds x but not y
r = induced_order(L)
print("pairs:", r.pairs(), classify_order(r))
print("separation:", separation_kind(L).name)

# complements give the reverse order
print("reversed:", reverse(r).pairs())

# X itself is a member here, so the meet of its strict supersets is
# the empty meet and the family is not interlocking
M = X.family([[0], [0, 1, 2]])
print(M, "interlocking:", is_interlocking(M), "|", L, "interlocking:", is_interlocking(L))

print("scatters (raw):", scatters(L), " with X adjoined:", scatters(L, adjoin_universe=True))

print("nests on 3 points:", sum(1 for _ in enumerate_nests(X)))
