"""Test-corpus constructors with planted ground truth.

Group algebras from Cayley tables, matrix algebras over F_p and its
extensions, direct sums, and invertible basis scrambles.  A planted
construction records the block multiset the decomposition must recover.
"""

import random
from dataclasses import dataclass

import numpy as np

from . import linalg, poly
from .algebra import Algebra
from .errors import (
    InternalSamplingFailure,
    InvalidCayley,
    ModulusMismatch,
    ReduciblePolynomial,
)

SCRAMBLE_DRAW_CAP = 64


@dataclass
class Planted:
    """A presentation together with the block multiset it was built from."""

    spec: list  # sorted list of (n_i, d_i)
    algebra: Algebra
    scramble_matrix: np.ndarray = None


# -- Cayley tables ---------------------------------------------------------------


def validate_cayley(doc):
    """Check a Cayley document; returns (order, identity, table) or raises."""
    if not isinstance(doc, dict):
        raise InvalidCayley("Cayley document must be an object")
    for key in ("order", "identity", "table"):
        if key not in doc:
            raise InvalidCayley(f"Cayley document missing {key!r}")
    m = doc["order"]
    ident = doc["identity"]
    table = doc["table"]
    if not isinstance(m, int) or m < 1:
        raise InvalidCayley("order must be a positive integer")
    if not isinstance(ident, int) or not 0 <= ident < m:
        raise InvalidCayley("identity index out of range")
    if (not isinstance(table, list) or len(table) != m
            or any(not isinstance(row, list) or len(row) != m for row in table)):
        raise InvalidCayley(f"table must be {m}x{m}")
    for row in table:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < m:
                raise InvalidCayley("table entries must be indices in range")
    for g in range(m):
        if sorted(table[g]) != list(range(m)):
            raise InvalidCayley(f"row {g} is not a permutation")
        if sorted(table[h][g] for h in range(m)) != list(range(m)):
            raise InvalidCayley(f"column {g} is not a permutation")
    for g in range(m):
        if table[ident][g] != g or table[g][ident] != g:
            raise InvalidCayley("declared identity is not an identity")
    for g in range(m):
        for h in range(m):
            for k in range(m):
                if table[table[g][h]][k] != table[g][table[h][k]]:
                    raise InvalidCayley(
                        f"associativity fails at triple ({g},{h},{k})"
                    )
    return m, ident, table


def _cyclic_table(m):
    return {
        "order": m,
        "identity": 0,
        "table": [[(i + j) % m for j in range(m)] for i in range(m)],
    }


def _s3_table():
    import itertools

    perms = sorted(itertools.permutations(range(3)))
    index = {s: i for i, s in enumerate(perms)}
    table = [
        [index[tuple(a[b[x]] for x in range(3))] for b in perms]
        for a in perms
    ]
    return {"order": 6, "identity": index[(0, 1, 2)], "table": table}


def _d4_table():
    # elements r^a s^b indexed a + 4b; s r = r^-1 s
    def mul(x, y):
        a, b = x % 4, x // 4
        c, d = y % 4, y // 4
        return (a + (c if b == 0 else -c)) % 4 + 4 * ((b + d) % 2)

    return {
        "order": 8,
        "identity": 0,
        "table": [[mul(x, y) for y in range(8)] for x in range(8)],
    }


def _q8_table():
    # elements: index = 2*axis + sign with axes (1, i, j, k)
    rules = {
        (1, 1): (0, 1), (2, 2): (0, 1), (3, 3): (0, 1),
        (1, 2): (3, 0), (2, 1): (3, 1),
        (2, 3): (1, 0), (3, 2): (1, 1),
        (3, 1): (2, 0), (1, 3): (2, 1),
    }

    def mul(x, y):
        ax, sx = x // 2, x % 2
        ay, sy = y // 2, y % 2
        if ax == 0:
            az, sz = ay, 0
        elif ay == 0:
            az, sz = ax, 0
        else:
            az, sz = rules[(ax, ay)]
        return 2 * az + (sx ^ sy ^ sz)

    return {
        "order": 8,
        "identity": 0,
        "table": [[mul(x, y) for y in range(8)] for x in range(8)],
    }


_FIXTURES = {
    "C2": lambda: _cyclic_table(2),
    "C3": lambda: _cyclic_table(3),
    "C4": lambda: _cyclic_table(4),
    "S3": _s3_table,
    "D4": _d4_table,
    "Q8": _q8_table,
}

FIXTURE_NAMES = tuple(sorted(_FIXTURES))


def cayley_fixture(name):
    """Built-in Cayley document for C2, C3, C4, S3, D4 or Q8."""
    try:
        doc = _FIXTURES[name]()
    except KeyError:
        raise InvalidCayley(
            f"unknown fixture {name!r}; choices: {sorted(_FIXTURES)}"
        ) from None
    validate_cayley(doc)
    return doc


def group_algebra(table_doc, p):
    """Group algebra F_p[G] from a Cayley document."""
    m, ident, table = validate_cayley(table_doc)
    sc = np.zeros((m, m, m), dtype=np.int64)
    for g in range(m):
        for h in range(m):
            sc[g, h, table[g][h]] = 1
    one = np.zeros(m, dtype=np.int64)
    one[ident] = 1
    labels = [f"g{i}" for i in range(m)]
    return Algebra(p, sc, identity=one, labels=labels)


# -- matrix algebras and sums ------------------------------------------------------


def matrix_algebra(p, n, ext_poly=None):
    """M_n over F_p[T]/(ext_poly); default extension degree 1.

    Basis E[a,b]*T^t ordered (a, b, t); returns a Planted with spec [(n, d)].
    """
    if n < 1:
        raise ValueError("matrix size must be at least 1")
    if ext_poly is None:
        f = np.array([0, 1], dtype=np.int64)  # T, giving the prime field
    else:
        f = poly.monic(poly.normalize(ext_poly, p), p)
    d = poly.degree(f)
    if d is poly.NEG_INF or d < 1:
        raise ReduciblePolynomial("extension polynomial must have degree >= 1")
    if not poly.is_irreducible(f, p):
        raise ReduciblePolynomial(
            f"extension polynomial {f.tolist()} factors over F_{p}"
        )
    d = int(d)
    # residue products T^(s+t) mod f
    prod_tbl = np.zeros((d, d, d), dtype=np.int64)
    for s in range(d):
        for t in range(d):
            m = np.zeros(s + t + 1, dtype=np.int64)
            m[s + t] = 1
            r = poly.divmod_poly(m, f, p)[1]
            prod_tbl[s, t, : len(r)] = r
    dim = n * n * d

    def pos(a, b, t):
        return (a * n + b) * d + t

    sc = np.zeros((dim, dim, dim), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for s in range(d):
                    for t in range(d):
                        for u in range(d):
                            v = prod_tbl[s, t, u]
                            if v:
                                sc[pos(a, b, s), pos(b, c, t), pos(a, c, u)] = v
    one = np.zeros(dim, dtype=np.int64)
    for a in range(n):
        one[pos(a, a, 0)] = 1
    labels = [
        f"E[{a},{b}]T^{t}" if d > 1 else f"E[{a},{b}]"
        for a in range(n) for b in range(n) for t in range(d)
    ]
    algebra = Algebra(p, sc, identity=one, labels=labels)
    return Planted(spec=[(n, d)], algebra=algebra)


def direct_sum(parts):
    """Block-diagonal sum of presentations over the same prime field."""
    if not parts:
        raise ValueError("direct_sum needs at least one part")
    p = parts[0].p
    for part in parts[1:]:
        if part.p != p:
            raise ModulusMismatch(
                f"cannot sum presentations over F_{p} and F_{part.p}"
            )
    dim = sum(part.dim for part in parts)
    sc = np.zeros((dim, dim, dim), dtype=np.int64)
    one = np.zeros(dim, dtype=np.int64)
    labels = []
    off = 0
    for idx, part in enumerate(parts):
        k = part.dim
        sc[off : off + k, off : off + k, off : off + k] = part.sc
        one[off : off + k] = part.one
        part_labels = part.labels or [f"b{i}" for i in range(k)]
        labels.extend(f"s{idx}:{lab}" for lab in part_labels)
        off += k
    return Algebra(p, sc, identity=one, labels=labels)


def build_planted(spec, p):
    """Planted direct sum for a list of (n_i, d_i) pairs."""
    parts = []
    for n_i, d_i in spec:
        f = poly.find_irreducible(d_i, p) if d_i > 1 else None
        parts.append(matrix_algebra(p, n_i, f).algebra)
    algebra = direct_sum(parts) if len(parts) > 1 else parts[0]
    return Planted(spec=sorted(spec), algebra=algebra)


# -- scrambling ---------------------------------------------------------------------


def scramble(A, seed):
    """Random invertible change of basis; new basis b'_j = sum_i S[i,j] b_i.

    Returns (scrambled presentation, S).  Rejection-samples S until it is
    invertible, capped at SCRAMBLE_DRAW_CAP draws.
    """
    rng = random.Random(seed)
    n, p = A.dim, A.p
    S = Sinv = None
    for _ in range(SCRAMBLE_DRAW_CAP):
        cand = np.array(
            [[rng.randrange(p) for _ in range(n)] for _ in range(n)],
            dtype=np.int64,
        )
        inv = linalg.inverse(cand, p)
        if inv is not None:
            S, Sinv = cand, inv
            break
    if S is None:
        raise InternalSamplingFailure(
            f"no invertible matrix found in {SCRAMBLE_DRAW_CAP} draws"
        )
    St = np.ascontiguousarray(S.T)
    X = linalg.matmul_mod(St, A.sc.reshape(n, n * n), p).reshape(n, n, n)
    Xt = np.ascontiguousarray(X.transpose(1, 0, 2)).reshape(n, n * n)
    Y = (
        linalg.matmul_mod(St, Xt, p)
        .reshape(n, n, n)
        .transpose(1, 0, 2)
    )
    Z = linalg.matmul_mod(
        np.ascontiguousarray(Y).reshape(n * n, n),
        np.ascontiguousarray(Sinv.T),
        p,
    ).reshape(n, n, n)
    one = linalg.matmul_mod(Sinv, A.one[:, None], p)[:, 0]
    return Algebra(p, Z, identity=one), S
