'''Count nonnegative lattice paths by down-steps landing at odd height.

The weighted count of paths from the origin to (2n+k-1, k-1) matches the
n-th mixed Narayana convolution power, giving the polynomials a direct
combinatorial meaning.
'''
from catalan_hankel import (
    enumerate_paths,
    narayana_conv,
    path_weight,
    path_weight_sum,
    path_weight_sum_table,
    render_poly,
)

# list every path of length 5 ending at height 1, with its weight
print("paths of length 5 to height 1")
for steps in enumerate_paths(5, 1):
    print(f"  {steps}: {render_poly(path_weight(steps))}")

print()
print("weighted totals vs convolution coefficients")
for k in range(1, 4):
    for n in range(0, 5):
        length, height = 2 * n + k - 1, k - 1
        total = path_weight_sum(length, height)
        target = narayana_conv(k, n)
        mark = "ok" if total == target else "MISMATCH"
        print(f"  k={k} n={n}: {render_poly(total)}  [{mark}]")
        assert total == target

# the table recurrence reproduces the brute force enumeration
for length in range(13):
    for height in range(7):
        assert path_weight_sum_table(length, height) == path_weight_sum(
            length, height
        )
print()
print("recurrence agrees with enumeration through length 12")
