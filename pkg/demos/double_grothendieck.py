"""Double Grothendieck polynomials by descending from the longest permutation.

For every permutation of S_4 the polynomial is obtained from the product
formula at w0 by isobaric Demazure operators.  Grassmannian permutations
recover the factorial Grothendieck determinants.

Run with ``python3 demos/double_grothendieck.py``.
"""

from eqschubert import check_grassmannian_match, double_grothendieck
from eqschubert.combinat import is_grassmannian, iterate_sk

n = 4
for w in iterate_sk(n):
    g = double_grothendieck(w)
    notes = []
    for k in range(1, n):
        if is_grassmannian(w, k) and w.length():
            check = check_grassmannian_match(w, k)
            notes.append(f"k={k} lam={check.partition} {'matches' if check.ok else 'MISMATCH'}")
    print(f"{str(w):>8}  length {w.length()}  {len(g):4d} terms  {'; '.join(notes)}")

print()
print("G_{2,1,3} =", double_grothendieck((2, 1, 3)))
