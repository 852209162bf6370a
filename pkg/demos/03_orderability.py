"""
Orderability: two nests, one order
==================================

Two nests whose union separates points T1 generate an order topology.
"""
from nestlab import (FiniteSpace, Topology, cardinal_scatter_check, generate_topology,
                     neight, ordinal_profile, ray_nests, vdw_verdict)

X = FiniteSpace(2)
L, R = X.family([[0]]), X.family([[1]])
v = vdw_verdict(X, L, R)
print("hypothesis:", v.hypothesis, "claims:", v.claims)

# the other direction: a linear order gives back its ray nests
r = v.order
print(ray_nests(r))

# a topology where the five conditions agree on False
s = generate_topology(X, X.family([[0]]))
print(ordinal_profile(s).conditions)
print("scatter check:", cardinal_scatter_check(s), cardinal_scatter_check(s, adjoin_universe=True))

# fewest nests whose union generates the topology
for t in (Topology.indiscrete(X), s, Topology.discrete(FiniteSpace(3))):
    k, nests = neight(t)
    print(t, "neight:", k, nests)
