"""
321-avoiding permutations
=========================

Left-to-right maxima become north runs.  Blocks become returns, and the last
descent of the inverse becomes the height of the last double rise.
"""

from dyckstat import compute_stats, enumerate_avoiders, perm_stats, to_dyck
from dyckstat.verify import check_bijection_laws

for p in enumerate_avoiders(4):
    D = to_dyck(p)
    ps, ds = perm_stats(p), compute_stats(D)
    print(f"{str(p):8} {D}  lrmax={sorted(ps.lrmax)} rises={sorted(ds.rises)}  "
          f"blocks={ps.blocks} returns={ds.returns}  ldes(inv)={ps.ldes_inverse} ldr={ds.ldr}")

print(check_bijection_laws(7).to_json())
