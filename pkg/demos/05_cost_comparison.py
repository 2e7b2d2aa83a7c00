"""When is blockwise search worth it, and when should you just guess?

Three strategies per sqrt(N): the optimized blockwise schedule
(s_coeff), randomly discarding one block and running full search on the
rest (r_coeff), and interrupting a full search at the crossover point.
Plus the query lower bounds that frame what is achievable.
"""

import math

from pgsearch import (
    comparison_table,
    interrupted_probability,
    lower_bound_queries,
    make_geometry,
    operating_range,
    partial_search_coefficient,
)

print("cost table, queries / sqrt(N):")
print("   K    optimized   random pick   p(interrupted)")
for row in comparison_table(2, 10):
    flag = "  *" if row.note else ""
    print(
        f"{row.n_blocks:>4}    {row.s_coeff:.6f}    {row.r_coeff:.6f}"
        f"      {row.p_interrupted:.6f}{flag}"
    )
note = comparison_table(4, 4)[0].note
print(f"\n  * {note}")
print()

print("above K=2 the optimized schedule always beats the random pick:")
for k in (3, 10, 100, 1000):
    s = partial_search_coefficient(k)
    r = math.pi / 4.0 * math.sqrt((k - 1.0) / k)
    print(f"  K={k:<5} s={s:.6f}  r={r:.6f}  margin {r - s:.6f}")
print()

print("interrupting a full search at the blockwise crossover point finds")
print("the right block with probability (K-2)^2 / (K(K-1)):")
for k in (3, 5, 10, 30, 100):
    print(f"  K={k:<4} p = {interrupted_probability(k):.6f}")
rng = operating_range(0.9)
print(
    f"\nto keep that probability at or under 0.9, operate at K from "
    f"{rng.k_min} to {rng.k_max}"
)
print(f"(largest K passing the exact law: {rng.k_max_exact})")
print()

g = make_geometry(1024, 4)
print(f"query bounds at N={g.n_items}, K={g.n_blocks}:")
for variant in ("basic", "tighter", "alpha_exact"):
    print(f"  {variant:<12} {lower_bound_queries(g, variant):.4f}")
achieved = partial_search_coefficient(4) * math.sqrt(g.n_items)
print(f"  achieved     {achieved:.4f}  (asymptotic cost of the real schedule)")
