# # Transforming vector measures and inverting on the coefficient span
#
# A measure on G with values in C^d_A is transformed block by block, one block
# per induced representation.  On a complete system of irreducibles every
# function is recovered from its transform and the L2 norm is preserved.

# %%
import numpy as np

from induced_fourier import VectorFunction, VectorMeasure, builtin_instance, fourier_field, induce, snorm, synthesize
from induced_fourier.transform import inequivalent_irreducible, lam_weights, project_span

rng = np.random.default_rng(1)

inst = builtin_instance("D4>D4")
reps = {label: induce(inst.G, inst.K, L) for label, L in inst.sigmas.items()}
span = inequivalent_irreducible(reps)
print({label: U.N for label, U in span.items()})

# %% [markdown]
# Four characters and one two-dimensional irrep: 1 + 1 + 1 + 1 + 4 = 8 = |D4|.

# %%
lam = lam_weights(next(iter(span.values())))
f = VectorFunction(inst.G, rng.standard_normal((8, 3)) + 1j * rng.standard_normal((8, 3)), lam)
fhat = fourier_field(f, span)
print("inversion error:", (synthesize(fhat) - f).norm(2))
print("||f||_2^2 =", f.norm(2) ** 2, " ||f_hat||_S2^2 =", snorm(fhat, 2).value ** 2)

# %% [markdown]
# The point mass at the identity has the identity pattern in every block and
# attains the bound ||m_hat||_inf <= ||m||.

# %%
m = VectorMeasure.dirac(inst.G, inst.G.identity, [3.0, 4.0, 0.0])
mhat = fourier_field(m, reps)
print("||m|| =", m.norm(), " sup-norm of transform =", snorm(mhat, np.inf).value)

# %% [markdown]
# With a subgroup K smaller than G the span of the induced coefficients is a
# proper subspace.  On S3 over A3 the sign character is orthogonal to it.

# %%
s3 = builtin_instance("S3>A3")
U = induce(s3.G, s3.K, s3.sigmas["cyclic:3:chi1"])
sign = np.array([[1.0] if s3.G.element_order(g) != 2 else [-1.0] for g in range(6)])
g = VectorFunction(s3.G, sign, lam_weights(U))
proj, dist = project_span(g, {"omega": U})
print("distance of sign to the span:", dist, "=", g.norm(2))
