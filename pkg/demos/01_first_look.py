"""
A first look at Gamma_{a,r}
===========================

Gamma_{a,r}(s) generalizes s * Gamma(s) from the sequence 1, 2, 3, ... to any
arithmetic progression a, a + r, a + 2r, ...  This script evaluates it,
compares it with the classical function and tabulates a few values.
"""

import math

import numpy as np

from gengamma import ArithParams, gamma_ar, sin_ar
from gengamma.classical import gamma_fn

# With a = r = 1 the progression is 1, 2, 3, ... and Gamma_{1,1}(s) = s Gamma(s),
# so integer arguments give factorials.
unit = ArithParams(1, 1)
for n in range(5):
    print(f"Gamma_11({n}) = {gamma_ar(unit, n).real:g}   {n}! = {math.factorial(n)}")

# Complex arguments work too.
s = 0.4 + 1.3j
print("\ns Gamma(s)     =", s * gamma_fn(s))
print("Gamma_11(s)    =", gamma_ar(unit, s))

# The odd numbers 1, 3, 5, ... correspond to a = 1, r = 2.
odd = ArithParams(1, 2)
xs = np.linspace(-0.9, 3.0, 8)
print("\n   s      Gamma_12(s)")
for x in xs:
    print(f"{x:6.3f}  {gamma_ar(odd, x).real: .10f}")

# sin_{a,r} is the even product over the same progression.  For a = r = 1
# it is sin(pi s)/(pi s); for a = 1/2, r = 1 it is cos(pi s).
half = ArithParams(0.5, 1)
for x in (0.25, 0.5, 1 / 3):
    print(f"\nsin_11({x:.4f}) = {sin_ar(unit, x).real:.12f}   sin(pi x)/(pi x) = {math.sin(math.pi * x) / (math.pi * x):.12f}")
    print(f"sin_h1({x:.4f}) = {sin_ar(half, x).real:.12f}   cos(pi x)         = {math.cos(math.pi * x):.12f}")
