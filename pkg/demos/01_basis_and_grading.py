"""The index set of basis classes and its grading.

IG(2, 2n+1) has one basis class tau[l1,l2] for each pair in the index set;
degrees run from 0 to 4n-3 and the quantum parameter q carries degree 2n.
The degree-slice sizes are symmetric around the middle and the top degree
holds a single class.
"""
from osglines import betti_numbers, enumerate_basis, enumerate_degree, max_degree, top_class

for n in (2, 3, 4):
    basis = enumerate_basis(n)
    print(f"n={n}: {len(basis)} classes, top degree {max_degree(n)}, "
          f"top class tau[{top_class(n)[0]},{top_class(n)[1]}]")
    print(f"  slice sizes: {betti_numbers(n)}")

print()
print("degree-4 slice at n=3:")
for lam in enumerate_degree(3, 4):
    print(f"  tau[{lam[0]},{lam[1]}]")
