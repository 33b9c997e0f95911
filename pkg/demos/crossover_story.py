"""Where the flex multiple overtakes the Yau-Zaslow multiple.

Both divisors are multiples of the polarization L: the flex divisor sits
in |n_d L| and the rational-curve divisor in |yz_d L| with
yz_d = [q^(d+1)] prod (1-q^n)^(-24).  The rational-curve multiple starts
far ahead but only grows like e^(4 pi sqrt(d)); the flex multiple grows
like 16^d and eventually wins.  This script locates the switch.
"""

from flexk3 import crossover

report = crossover(14)

print(f"{'d':>2}  {'n_d (flex)':>14}  {'yz_d (rational curves)':>22}  leader")
for row in report.rows:
    leader = "flex" if row.flex_larger else "yz"
    print(f"{row.d:>2}  {row.n_d:>14}  {row.yz_d:>22}  {leader}")

print()
print(f"first d with n_d > yz_d (exact coefficients): {report.first_flex_dominant}")
print(f"first d where the growth models cross:        {report.model_first_flex_dominant}")
print()
print("The switch is often quoted as happening between d=8 and d=9; the")
print("exact coefficients say d=10, and the growth models alone say d=11.")
print("At d=9 the rational-curve multiple is still narrowly ahead.")
