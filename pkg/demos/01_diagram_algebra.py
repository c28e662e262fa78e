"""The Temperley-Lieb diagram algebra at loop parameter 2.

A walk through the basics: diagrams as non-crossing matchings, the
generators u_i, multiplication with loop removal, the star reflection, the
image of the symmetric group, Jucys-Murphy elements, and the cell modules
spanned by half diagrams.
"""

from tlexact.diagrams import (
    CellVector,
    TLElement,
    catalan,
    all_matchings,
    cell_action,
    element_to_str,
    jm_element,
    phi,
)

n = 3
print(f"TL_{n} has Catalan({n}) = {catalan(n)} basis diagrams:")
for d in all_matchings(n):
    print("  ", element_to_str(TLElement(n, {d: 1})), "  pairing", list(d))

u1 = TLElement.generator(1, n)
u2 = TLElement.generator(2, n)
print("\nthe defining relations:")
print("  u1 u1      =", element_to_str(u1 * u1), "   (a closed loop counts 2)")
print("  u1 u2 u1   =", element_to_str(u1 * u2 * u1))
print("  star(u1u2) =", element_to_str((u1 * u2).star()))

print("\nthe symmetric group maps onto TL_n by s_i -> u_i - 1;")
kernel = [(1, (1, 2, 1)), (1, (1, 2)), (1, (2, 1)), (1, (1,)), (1, (2,)), (1, ())]
print("  the kernel generator maps to:", element_to_str(phi(kernel, n)))

print("\nJucys-Murphy elements (images of transposition sums):")
for i in range(1, n + 1):
    print(f"  L_{i} =", element_to_str(jm_element(i, n)))
l2, l3 = jm_element(2, n), jm_element(3, n)
print("  commute:", l2 * l3 == l3 * l2, " star-invariant:", l2.star() == l2)

print("\ncell module of shape (2,1), basis indexed by standard tableaux:")
td, tu = (1, 1, 2), (1, 2, 1)
v = CellVector.basis_vector(td)
print("  C_112 . u2 =", cell_action(v, u2))
print("  C_112 . u1 =", cell_action(v, u1))
