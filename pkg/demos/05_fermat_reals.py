"""
Fermat reals
============

Polynomials in t with exponents in (0, 1] over a rational standard part.
Anything of order t^p with p > 1 is zero.
"""
from fractions import Fraction

from nestlab import compare, is_interlocking, sample_at, sample_order
from nestlab.fermat import parse, T
from nestlab.orderability import ray_nests

h = parse("t^(1/2)")
print(h * h, "|", h * parse("t^(2/3)"), "|", parse("1 + t^2 + 2*t - t"))

# t is infinitesimally smaller than t^(1/2)
print(compare(T, h))

# exact evaluation of a representative
print(sample_at(parse("t^(1/2) - t^(1/3)"), Fraction(1, 64)))

# a finite pool of Fermat reals is linearly ordered and its rays interlock
pool = [parse(s) for s in ["0", "t", "t^(1/2)", "-t", "1"]]
r = sample_order(pool)
l, rr = ray_nests(r)
print(r.pairs())
print(is_interlocking(l), is_interlocking(rr))
