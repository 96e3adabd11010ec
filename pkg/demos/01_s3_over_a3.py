# # Inducing a character of A3 up to S3
#
# S3 has a normal subgroup A3 of order 3.  Inducing the character that sends a
# 3-cycle to omega = exp(2 pi i / 3) gives the two-dimensional irreducible
# representation of S3.  This script builds it step by step.

# %%
import warnings

import numpy as np

from induced_fourier import builtin_instance, c_tensor_all, coefficient_integrals, induce

np.set_printoptions(precision=3, suppress=True)

inst = builtin_instance("S3>A3")
G, K = inst.G, inst.K
print(G, "K =", sorted(K.members))

# %% [markdown]
# Elements are the permutations of (0, 1, 2) in lexicographic order, so 1, 2
# and 5 are transpositions and 3, 4 are the 3-cycles.

# %%
print([G.element_order(g) for g in range(G.order)])

# %%
omega = inst.sigmas["cyclic:3:chi1"]
U = induce(G, K, omega)
print("N =", U.N, " irreducibility index =", round(U.irreducibility_index, 12))
for t in range(G.order):
    print(t, U.operator(t).round(3).tolist())

# %% [markdown]
# Transpositions swap the two cosets, so their matrices are antidiagonal.
# The coefficient integrals reproduce the orthogonality pattern: the
# integral of u_ij conj(u_lm) is c_ijlm / d_sigma, and c is the identity pattern
# because U is irreducible.

# %%
X = coefficient_integrals(U, U)
c = c_tensor_all(U)
print("max |X - c/d| =", np.abs(X - c / U.d_sigma).max())
print("c[i, j, i, j] =", [round(float(c[i, j, i, j].real), 12) for i in range(2) for j in range(2)])

# %% [markdown]
# Inducing omega^2 instead gives an equivalent representation.  The cross
# integrals between the two are not all zero, so orthogonality across distinct
# sigma needs the inductions themselves to be inequivalent.

# %%
V = induce(G, K, inst.sigmas["cyclic:3:chi2"])
cross = coefficient_integrals(U, V)
print("largest cross integral:", np.abs(cross).max())

# %% [markdown]
# Inducing the trivial character gives trivial + sign, which is reducible.

# %%
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    W = induce(G, K, inst.sigmas["cyclic:3:chi0"])
print("trivial induced: index", W.irreducibility_index)
