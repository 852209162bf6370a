"""
Finite spaces and their topologies
==================================

Points are 0..n-1 and subsets are bitmasks under the hood.
"""
from nestlab import (FiniteSpace, Topology, are_homeomorphic, enumerate_topologies,
                     find_homeomorphism, generate_topology, is_connected)

X = FiniteSpace(3)

# a subbase generates the smallest topology containing it
sub = X.family([[0], [0, 1]])
t = generate_topology(X, sub)
print(t)
print("connected:", is_connected(t))

# a chain of opens is connected, the discrete space is not
print("discrete connected:", is_connected(Topology.discrete(X)))

# topologies counted up to n=4: 1, 4, 29, 355
for n in range(1, 5):
    print(n, sum(1 for _ in enumerate_topologies(FiniteSpace(n))))

# relabelling points gives a homeomorphic copy
u = generate_topology(X, X.family([[2], [1, 2]]))
print("homeomorphic:", are_homeomorphic(t, u), find_homeomorphism(t, u))
