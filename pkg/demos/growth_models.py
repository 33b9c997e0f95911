"""How fast the two divisor multiples grow, against their models.

The flex multiple follows n_d ~ 2^(4d+1) / (pi d^2) and the Yau-Zaslow
multiple follows yz_d ~ e^(4 pi sqrt(d)) / (sqrt(2) d^(27/4)).  The
integers quickly reach thousands of digits, so the comparison runs on
logarithms computed straight from the exact integers.
"""

from flexk3 import asym_flex, asym_yz

print("Flex multiple vs model (log_ratio = ln n_d - ln model):")
print(f"{'d':>5}  {'ln n_d':>14}  {'ln model':>14}  {'log_ratio':>12}")
for d in (50, 100, 200, 400, 500):
    rep = asym_flex(d)
    print(f"{d:>5}  {rep.log_exact:>14.6f}  {rep.log_model:>14.6f}  {rep.log_ratio:>12.6f}")

print()
print("Yau-Zaslow multiple vs model:")
print(f"{'d':>5}  {'ln yz_d':>14}  {'ln model':>14}  {'log_ratio':>12}")
for d in (100, 400, 900, 1000):
    rep = asym_yz(d)
    print(f"{d:>5}  {rep.log_exact:>14.6f}  {rep.log_model:>14.6f}  {rep.log_ratio:>12.6f}")

print()
print("Both error columns shrink as d grows: the models are asymptotically")
print("exact, just approached at very different speeds (power law vs sqrt).")
