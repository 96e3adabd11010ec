# # Weighted sequence norms on spectral fields
#
# ||Phi||_p sums d_sigma-weighted entry norms; ||Phi||_inf is the largest
# entry norm.  With that choice the norms decrease in p.  The operator norm of
# a block does not fit into the chain, as the all-ones block shows.

# %%
import itertools

import numpy as np

from induced_fourier import SpectralBlock, SpectralField, monotonicity_check, snorm, truncate

ones = SpectralField({"a": SpectralBlock(np.ones((2, 2, 1)), 1)})
for p in (1, 1.5, 2, 3, np.inf):
    print(p, snorm(ones, p).value)
print("operator-norm sup:", snorm(ones, np.inf, kind="op").value)

# %%
rng = np.random.default_rng(3)
phi = SpectralField({f"s{k}": SpectralBlock(rng.standard_normal((2, 2, 2)) * 10 ** -k, 1) for k in range(4)})
for p, q in itertools.combinations([1, 2, 3, np.inf], 2):
    ok, a, b = monotonicity_check(phi, p, q)
    print(f"p={p}, q={q}: {b:.4f} <= {a:.4f}  {ok}")

# %% [markdown]
# Truncation keeps the blocks of norm at least 1/n, so the error is below 1/n.

# %%
for n in (1, 10, 100, 1000):
    err = snorm(truncate(phi, n) - phi, np.inf).value
    print(n, err, err < 1 / n)
