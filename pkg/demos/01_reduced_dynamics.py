"""Walk through the reduced 3-class engine on a small database.

The search state of N items in K blocks only ever visits a 3-dimensional
subspace: target amplitude, the shared amplitude of the other items in
the target's block, and the shared amplitude of everything outside.
This script iterates both reflections and shows the rotation picture.
"""

import math

from pgsearch import (
    Schedule,
    apply_global,
    apply_local,
    block_success_probability,
    item_success_probability,
    make_geometry,
    norm_squared,
    run_schedule,
    uniform_state,
)

g = make_geometry(1024, 4)
print(f"database: N={g.n_items} items, K={g.n_blocks} blocks of b={g.block_size}")
print(f"theta1 = {g.theta1:.6f}  (global rotation half-angle, sin^2 = 1/N)")
print(f"theta2 = {g.theta2:.6f}  (local rotation half-angle,  sin^2 = 1/b)")
print()

s = uniform_state(g)
print("global iterations rotate the target amplitude as sin((2j+1)*theta1):")
for j in range(6):
    predicted = math.sin((2 * j + 1) * g.theta1)
    print(
        f"  j={j}: amp_target = {s.amp_target:+.9f}"
        f"   closed form {predicted:+.9f}"
    )
    s = apply_global(s, g)
print()

print("local iterations leave the outside amplitude untouched, bit for bit:")
s = uniform_state(g)
for j in range(4):
    print(f"  after {j} locals: amp_nb = {s.amp_nb!r}")
    s = apply_local(s, g)
print()

schedule = Schedule(j1=10, j2=10, trailing_global=True)
final = run_schedule(g, schedule)
print(f"schedule j1={schedule.j1}, j2={schedule.j2}, trailing global -> "
      f"{schedule.queries} oracle queries")
print(f"  block success: {block_success_probability(final, g):.6f}")
print(f"  item success:  {item_success_probability(final):.6f}")
print(f"  norm drift:    {abs(norm_squared(final, g) - 1.0):.2e}")
print()

print("query budget vs. block success (trailing global always on):")
for j1 in range(0, 26, 5):
    final = run_schedule(g, Schedule(j1, 10, True))
    p = block_success_probability(final, g)
    print(f"  j1={j1:2d}, j2=10:  {p:.6f}")
