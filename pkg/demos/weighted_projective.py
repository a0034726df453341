"""Weighted projective stacks from their weights and back."""
from itertools import product

from toricstack import (dg_group, dm_torus, recognize_wps, torus_split, verify_pic_sequences,
                        wps_stacky_fan)

for w in [(1, 1, 1), (6, 4), (2, 4, 6), (1, 2, 2, 3)]:
    sf = wps_stacky_fan(w)
    print(w, "N torsion", sf.torsion_orders, "Pic", dg_group(sf).pic,
          "torus", dm_torus(sf), "recognized", recognize_wps(sf))

# every weight vector up to length 3 with entries <= 5
bad = [w for n in (2, 3) for w in product(range(1, 6), repeat=n)
       if sorted(recognize_wps(wps_stacky_fan(w))) != sorted(w)]
print("mismatches:", bad)

# P(2) is B mu_2, a gerbe over a point
core, torus_rank, gerbe = torus_split(0, [2], [], [])
print("B mu_2: torus rank", torus_rank, "gerbe", gerbe)
print("P(2) sequences:", verify_pic_sequences(wps_stacky_fan((2,))).passed)
