"""
Truncated products with error bounds
====================================

Every generalized gamma is an infinite product.  ``gamma_seq`` multiplies
finitely many factors and reports a rigorous bound on what it left out, so
the closed form can be checked against the definition without trusting
either one blindly.
"""

from gengamma import ArithParams, gamma_ar
from gengamma import seqgamma as sq

p = ArithParams(3, 2)
s = 0.7 - 0.4j
exact = gamma_ar(p, s)

# Halving the tolerance roughly doubles the number of factors: the tail of
# these products decays like 1/N.
print(" tol       terms      |error|     bound     status")
for tol in (1e-3, 1e-5, 1e-7):
    res = sq.gamma_seq(sq.arithmetic(p.a, p.r), s, sq.TruncationPolicy(tol=tol))
    print(f"{tol:5.0e} {res.terms_used:10d}  {abs(res.value - exact):.2e}  {res.abs_error_bound:.2e}  {res.status.value}")

# A term cap that is too small still returns a usable answer, flagged as such.
res = sq.gamma_seq(sq.arithmetic(p.a, p.r), s, sq.TruncationPolicy(tol=1e-12, max_terms=1000))
print("\ncapped:", res.status.value, f"bound {res.abs_error_bound:.2e}")

# Other sequences use the same machinery.  For the squares 1, 4, 9, ... the
# product has a closed form in terms of sinh.
sq_spec = sq.power_sequence(1.0, 2)
res = sq.gamma_seq(sq_spec, 0.5, sq.TruncationPolicy(tol=1e-8))
print("\nsquares at s = 1/2:", res.value.real, "+/-", f"{res.abs_error_bound:.1e}")

# The generalized Euler constant comes from the product with s = 1 stripped
# of its exponential factor.
res = sq.euler_constant_seq(sq.naturals(), sq.TruncationPolicy(tol=1e-7))
print("Euler constant from the product:", res.value, f"({res.terms_used} terms)")
