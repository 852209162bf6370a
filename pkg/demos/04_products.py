"""
Nests on products and function spaces
=====================================
"""
from nestlab import (FiniteSpace, ProductSpace, function_space, is_interlocking, is_weakly_t0,
                     point_nest, preimage_nest, project_nest, projection_condition)
from nestlab.products import box_family, product_topology

X = FiniteSpace(2)
P = ProductSpace.power(X, 2)
L = X.family([[0]])

# pull a nest back along a coordinate and push it forward again
up = preimage_nest(L, 0, P)
print([sorted(P.decode(x) for x in range(P.size) if m >> x & 1) for m in up.masks])
print("weakly T0 in coordinate 0:", is_weakly_t0(up, 0))
print("projection condition:", projection_condition(up, 0))
print("projects back to:", project_nest(up, 0).as_lists())
print("interlocking survives:", is_interlocking(L), is_interlocking(up))

print("box topology:", product_topology(L, X.family([[1]]), P))
print(len(box_family(L, X.family([[1]]), P)), "boxes")

# X^I with pointwise nests
F = function_space(2, X)
print(F.size, "functions;", point_nest(0, L, F))
