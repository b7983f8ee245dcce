'''Tabulate shifted Hankel determinants for the fourth and third powers.

The integer sequences repeat with a small period; the polynomial
versions concentrate all weight near the top degree t^binom(N,2).
'''
from catalan_hankel import catalan_det, narayana_det, render_poly

print("integer determinants, N = 0..11")
for k, shift in [(4, -2), (4, 0), (3, -1), (3, 0)]:
    seq = [catalan_det(k, shift, n) for n in range(12)]
    print(f"  D_{{{k},{shift}}}: {seq}")

print()
print("polynomial determinants for the cubic family, shift 0")
for n in range(7):
    print(f"  N={n}: {render_poly(narayana_det(3, 0, n))}")

print()
print("polynomial determinants for the quartic family, shift -2")
for n in range(8):
    print(f"  N={n}: {render_poly(narayana_det(4, -2, n))}")
