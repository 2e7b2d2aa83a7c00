"""The closed-form optimum: alpha, eta, and the speedup coefficient c.

For K blocks and large block size the cheapest schedule costs
pi*sqrt(N)/4 - c_K*sqrt(b) queries; c_K = eta_K - alpha_K comes from a
pair of coupled stationarity conditions.  This script prints the solved
table,
shows the constraint curve that ties eta to alpha, and checks the
large-K expansion against the exact solution.
"""

import math

from pgsearch import asymptotic_expansion, asymptotic_optimum, eta_from_alpha

print("   K      alpha        eta          c = eta - alpha")
for k in [2, 3, 4, 5, 10, 100, math.inf]:
    opt = asymptotic_optimum(k)
    label = "inf" if math.isinf(k) else f"{int(k)}"
    print(f"{label:>4}   {opt.alpha:.9f}  {opt.eta:.9f}  {opt.c:.9f}")
print()
print("c grows with K but saturates: even infinitely many blocks only buy")
print(f"c = {asymptotic_optimum(math.inf).c:.6f} per sqrt(b).")
print()

k = 4
opt = asymptotic_optimum(k)
print(f"constraint curve at K={k}: eta(alpha) with the optimum at the top")
for offset in (-0.10, -0.05, 0.0, 0.05, 0.10):
    alpha = opt.alpha + offset
    eta = eta_from_alpha(k, alpha)
    c = eta - alpha
    marker = " <- stationary point" if offset == 0.0 else ""
    print(f"  alpha = {alpha:.6f}:  eta = {eta:.6f},  c = {c:.9f}{marker}")
print("(c is maximal at the solved alpha: any move along the curve loses)")
print()

print("large-K expansion vs. exact solution:")
print("   K     alpha error    eta error     1/K^3")
for k in (10, 50, 100, 500):
    a_exp, e_exp = asymptotic_expansion(k)
    exact = asymptotic_optimum(k)
    print(
        f"{k:>5}   {abs(a_exp - exact.alpha):.3e}    "
        f"{abs(e_exp - exact.eta):.3e}    {1.0 / k**3:.3e}"
    )
