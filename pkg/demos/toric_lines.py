"""Complete toric lines: P^1 with roots of order a1, a2 at the two points."""
from fractions import Fraction

from toricstack import classify_toric_line, line_stacky_fan, recognize_wps

print(" a1 a2  Pic           weights  (k1, k2)   wps?")
for a1, a2 in [(1, 1), (2, 2), (2, 3), (4, 6), (3, 9), (5, 2)]:
    r = classify_toric_line(line_stacky_fan(a1, a2))
    k1, k2 = r.k
    assert Fraction(k1, a1) + Fraction(k2, a2) == Fraction(1, r.lcm)
    w = recognize_wps(line_stacky_fan(a1, a2))
    print(f"{a1:3d}{a2:3d}  {str(r.pic):12s}  {str(r.weights):8s} {str(r.k):10s} {w}")

# with gcd(a1, a2) = d > 1 the Picard group picks up Z/d and the line is no longer P(w)
