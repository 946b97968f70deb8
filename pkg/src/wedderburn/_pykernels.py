"""Pure-numpy fallback for the row-reduction hot kernel.

Same contract as the compiled `_speedups` module; selected at import time
when the extension is unavailable (see `linalg.set_backend`).
"""

import numpy as np

BACKEND_NAME = "python"


def rref_inplace(M, p, pivot_cols):
    """Reduced row echelon form of M mod p, in place.

    M must be a C-contiguous int64 2-D array with entries in [0, p).  Pivots
    are searched only within the first `pivot_cols` columns; any remaining
    columns are carried along (augmented systems).  Returns the pivot column
    indices in increasing order.
    """
    rows = M.shape[0]
    pivots = []
    r = 0
    for c in range(pivot_cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        piv = int(M[r, c])
        if piv != 1:
            inv = pow(piv, p - 2, p)
            M[r] = (M[r] * inv) % p
        colvals = M[:, c].copy()
        colvals[r] = 0
        hit = np.nonzero(colvals)[0]
        if hit.size:
            M[hit] = (M[hit] - colvals[hit, None] * M[r]) % p
        pivots.append(c)
        r += 1
    return pivots
