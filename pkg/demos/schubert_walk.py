"""A short walk in the cohomology ring of a small Grassmannian.

The ring is generated by sigma1 (hyperplane class) and sigma2 (point
class); both act on the two-row Schur basis by adding boxes.  Everything
here happens inside the 2 x d box, classes that grow out of it vanish.
"""

from flexk3 import SchubertElement, catalan, monomial_integral

d = 3
print(f"Box size d = {d} (Grassmannian dimension {2 * d})")
print()

elem = SchubertElement.one(d)
print("start:", elem)
for step in range(1, 2 * d + 1):
    elem = elem.pieri_sigma1()
    print(f"after sigma1 ^ {step}:", elem)

print()
print("The top coefficient after 2d steps is the degree of the Grassmannian")
print(f"in its Pluecker embedding, the Catalan number C({d}) = {catalan(d)}:")
print("  integrate:", elem.integrate())
print("  monomial_integral(2d, 0, d):", monomial_integral(2 * d, 0, d))

print()
print("sigma2 adds a full column, so d applications fill the box exactly once:")
elem = SchubertElement.one(d)
for _ in range(d):
    elem = elem.mul_sigma2()
print("  sigma2^d applied to s_(0,0):", elem, "-> integrate:", elem.integrate())

print()
print("Mixed monomials of top degree, iterated operators vs closed form:")
for n in range(d + 1):
    m = 2 * d - 2 * n
    elem = SchubertElement.one(d)
    for _ in range(n):
        elem = elem.mul_sigma2()
    for _ in range(m):
        elem = elem.pieri_sigma1()
    print(f"  sigma1^{m} sigma2^{n}: pieri={elem.integrate()}  formula={monomial_integral(m, n, d)}")
