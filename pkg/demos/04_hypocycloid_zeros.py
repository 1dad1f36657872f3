#!/usr/bin/env python3
"""Hypocycloid Faber polynomials and where their zeros live.

w + 1/(m w^m) maps |w| > 1 onto the exterior of an (m+1)-cusped
hypocycloid.  Its Faber polynomials have an explicit binomial-factorial
form, collapse to doubled Chebyshev polynomials at m = 1, and all their
zeros sit on the rays joining the origin to the cusps.
"""

import math

from faberpoly import chebyshev_scaled, hypocycloid_faber_closed_form

# -- the m = 1 case is the Chebyshev family on [-2, 2] -------------------------

print("m = 1 closed form vs doubled Chebyshev on the half scale:")
for j in (2, 3, 4, 8):
    closed = hypocycloid_faber_closed_form(1, j)
    cheb = chebyshev_scaled(j)
    print(f"  F_{j}(z) = {closed}   (deviation {closed.coefficient_deviation(cheb):.1e})")
print()

# -- zeros on cusp rays ---------------------------------------------------------

for m in (2, 3):
    directions = [2 * math.pi * v / (m + 1) for v in range(m + 1)]
    print(f"m = {m}: cusp rays at angles "
          f"{[f'{d * 180 / math.pi:.0f}deg' for d in directions]}")
    for j in (7, 12):
        roots = hypocycloid_faber_closed_form(m, j).roots()
        print(f"  zeros of F_{j}:")
        for r in sorted(roots, key=lambda r: (round(abs(r), 6), math.atan2(r.imag, r.real))):
            if abs(r) <= 1e-8:
                print(f"    |r| = 0 (origin, multiplicity from j mod (m+1))")
                continue
            angle = math.atan2(r.imag, r.real) % (2 * math.pi)
            off = min(min(abs(angle - d), 2 * math.pi - abs(angle - d))
                      for d in directions)
            print(f"    |r| = {abs(r):.4f}, angle = {angle * 180 / math.pi:7.2f}deg, "
                  f"off-ray by {off:.1e} rad")
    print()
