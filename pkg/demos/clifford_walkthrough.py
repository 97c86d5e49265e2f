"""Walk through the spinor decomposition and Clifford multiplication at n=2.

The 16-dimensional spinor space of an 8-dimensional quaternionic Kähler
space splits into three summands of ranks 5, 8, 3.  A tangent vector acts
through the square-root-of-2 combination of a symmetric multiplication
paired with a contraction and vice versa, moving each grade to its two
neighbours, and squares to minus the metric.
"""

from fractions import Fraction

from qkspin import sparsemat
from qkspin.spinor import SpinorSpace, kraines_eigenvalue, rank_formula

n = 2
spin = SpinorSpace(n)

print("summand ranks:", [spin.grade_dim(r) for r in range(n + 1)],
      "| formula:", [rank_formula(n, r) for r in range(n + 1)],
      "| total:", spin.dim, "= 4^n")

# one basis spinor per grade, pushed around by a tangent vector
x = {(0, 0): Fraction(1)}                      # h_0 tensor e_0
for r in range(n + 1):
    image = next(img for key in spin.grade_basis(r)
                 if (img := spin.mu(x, {key: Fraction(1)})))
    print(f"mu(X) on a grade-{r} basis spinor lands in grades",
          sorted({k[0] for k in image}))

# the anticommutation relation on a null and a non-null pair
y = {(1, n): Fraction(1)}                      # h_1 tensor e_n, g(X, Y) = 1
mx, my = spin.mu_matrix(x), spin.mu_matrix(y)
anti = sparsemat.madd(sparsemat.compose(mx, my), sparsemat.compose(my, mx))
print("mu(X)mu(Y) + mu(Y)mu(X) = -2 g(X,Y) id:",
      sparsemat.is_scalar_multiple(anti, spin.dim, Fraction(-2)))

mxx = sparsemat.compose(mx, mx)
print("mu(X)^2 = 0 on the isotropic direction X:", not mxx)

# the parallel 4-form acts on each summand through the sp(1) Casimir
for r in range(n + 1):
    cas = spin.casimir_matrix(r)
    combined = sparsemat.madd(sparsemat.identity(r + 1, Fraction(6 * n)),
                              sparsemat.mscale(cas, Fraction(4)))
    value = kraines_eigenvalue(n, r)
    print(f"grade {r}: 6n + 4C acts as {value}",
          "(verified)" if sparsemat.is_scalar_multiple(
              combined, r + 1, value) else "(MISMATCH)")
