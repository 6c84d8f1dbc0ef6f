"""
The involution and the symmetric distribution
=============================================

Iterating ``phi`` (or its inverse) swaps the number of returns with
``n - ldr``.  Counting paths by rise set and these two numbers therefore
gives a table that is symmetric in the last two coordinates.
"""

from dyckstat import big_phi, big_phi_trace, compute_stats, enumerate_dyck, joint_distribution
from dyckstat.verify import check_involution, check_switch_symmetry

for word, label in big_phi_trace("NNENNNEEENEENE"):
    print(word, label)

n = 4
for D in enumerate_dyck(n):
    image = big_phi(D)
    s, t = compute_stats(D), compute_stats(image)
    print(f"{D} -> {image}   (returns, n-ldr): ({s.returns}, {n - s.ldr}) -> ({t.returns}, {n - t.ldr})")

table = joint_distribution(n)
print(table.is_swap_symmetric(), sorted(table.entries.items()))

# Exhaustive checks; raise max_n to 12 for the full run (about a minute).
print(check_switch_symmetry(8).to_json())
print(check_involution(8).to_json())
