"""Block structure of a semisimple algebra and the explicit isomorphism.

Pipeline: group the primitive idempotents into equivalence classes, form
the central idempotent of each class, build connecting elements and matrix
units, present each corner e1*A*e1 as the entry field of its block, and
assemble the global linear map sending x to the tuple of block matrices
(a_mu * x * b_nu).  Everything is re-verified exactly after construction;
the serialized report contains enough data to re-prove the isomorphism
without re-running any of the search.
"""

from dataclasses import dataclass, field

import numpy as np

from . import idempotents, linalg, radical
from .algebra import Algebra, Subalgebra
from .errors import (
    CentralityViolation,
    EntryOutsideCorner,
    InvalidDocument,
    MatrixUnitViolation,
    NonBijective,
    ShapeMismatch,
)


@dataclass
class ConnectingFamily:
    """One equivalence class with its connecting elements.

    members[0] is the class representative (lexicographically smallest
    coordinate vector in the class); a[mu] lies in rep*A*e_mu and b[mu] in
    e_mu*A*rep with a[mu]*b[mu] = rep and b[mu]*a[mu] = e_mu; in particular
    a[0] = b[0] = rep.
    """

    rep: idempotents.Idempotent
    members: list
    a: list
    b: list


@dataclass
class MatrixUnitSystem:
    units: list  # units[mu][nu] = b[mu] * a[nu], coordinate vectors
    block_identity: np.ndarray


@dataclass
class DivisionAlgebra:
    """Corner rep*A*rep certified to be a field (the block's entry ring)."""

    corner: Subalgebra
    degree: int


@dataclass
class Block:
    index: int
    n: int
    D: DivisionAlgebra
    c: np.ndarray
    family: ConnectingFamily
    units: MatrixUnitSystem


@dataclass
class VerificationReport:
    bijective: bool
    unit: bool
    multiplicative: bool  # None when the all-pairs check was skipped
    orthogonality: bool
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        checks = [self.bijective, self.unit, self.orthogonality]
        if self.multiplicative is not None:
            checks.append(self.multiplicative)
        return all(checks)


@dataclass
class DecompositionResult:
    blocks: list
    iso: np.ndarray
    iso_inverse: np.ndarray
    layout: list  # rows (block index, mu, nu, D-basis index)
    p: int
    dim: int
    seed: int


def group_by_equivalence(A, decomposition):
    """Partition primitive parts into classes with connecting witnesses."""
    classes = []  # lists of part indices, discovery order
    parts = decomposition.parts
    for idx, part in enumerate(parts):
        placed = False
        for cls in classes:
            probe = parts[cls[0]]
            if A.hom_space(probe.coords, part.coords).shape[0] > 0:
                cls.append(idx)
                placed = True
                break
        if not placed:
            classes.append([idx])
    families = []
    for cls in classes:
        rep_idx = min(cls, key=lambda i: tuple(int(c) for c in parts[i].coords))
        ordered = [rep_idx] + [i for i in cls if i != rep_idx]
        members = [parts[i] for i in ordered]
        rep = members[0]
        a_list, b_list = [], []
        for member in members:
            w = idempotents.equivalence_witness(A, member, rep)
            assert w is not None, "class member lost its witness"
            a_list.append(w.a.coords)
            b_list.append(w.b.coords)
        families.append(
            ConnectingFamily(rep=rep, members=members, a=a_list, b=b_list)
        )
    return families


def central_idempotent(A, family):
    """Sum of the class members; verified central and idempotent."""
    c = np.zeros(A.dim, dtype=np.int64)
    for member in family.members:
        c = (c + member.coords) % A.p
    if not np.array_equal(A.mul_vec(c, c), c):
        raise CentralityViolation("class sum is not idempotent")
    if not np.array_equal(A.lmat(c), A.rmat(c)):
        raise CentralityViolation("class sum is not central")
    return c


def matrix_units(A, family, block_identity):
    """Grid b[mu]*a[nu]; every product relation is checked exhaustively."""
    n_i = len(family.members)
    units = [
        [A.mul_vec(family.b[mu], family.a[nu]) for nu in range(n_i)]
        for mu in range(n_i)
    ]
    diag_sum = np.zeros(A.dim, dtype=np.int64)
    for mu in range(n_i):
        diag_sum = (diag_sum + units[mu][mu]) % A.p
    if not np.array_equal(diag_sum, block_identity):
        raise MatrixUnitViolation("diagonal units do not sum to the block identity")
    for mu in range(n_i):
        for nu in range(n_i):
            for xi in range(n_i):
                for eta in range(n_i):
                    got = A.mul_vec(units[mu][nu], units[xi][eta])
                    want = units[mu][eta] if nu == xi else np.zeros(
                        A.dim, dtype=np.int64
                    )
                    if not np.array_equal(got, want):
                        raise MatrixUnitViolation(
                            f"unit relation ({mu},{nu})*({xi},{eta}) fails"
                        )
    return MatrixUnitSystem(units=units, block_identity=block_identity)


def division_presentation(A, family):
    """The corner at the class representative, certified commutative field."""
    corner = A.corner(family.rep.coords)
    B = corner.algebra
    B.require_commutative()
    fixed = idempotents._fixed_space(corner)
    assert fixed.shape[0] == 1, "corner at a primitive part is not a field"
    return DivisionAlgebra(corner=corner, degree=B.dim)


def block_map(A, block, x):
    """Image of x in block: grid of D-coordinates of a[mu]*x*b[nu]."""
    fam, D = block.family, block.D
    grid = []
    for mu in range(block.n):
        row = []
        ax = A.mul_vec(fam.a[mu], x)
        for nu in range(block.n):
            entry = A.mul_vec(ax, fam.b[nu])
            coords = D.corner.from_parent(entry)
            if coords is None:
                raise EntryOutsideCorner(
                    f"entry ({mu},{nu}) escapes the corner field"
                )
            row.append(coords)
        grid.append(row)
    return grid


def full_isomorphism(A, seed=0, cap=idempotents.DEFAULT_SPLIT_CAP):
    """End-to-end decomposition with the assembled invertible map."""
    radical.require_semisimple(A)
    decomposition = idempotents.decompose_identity(A, seed=seed, cap=cap)
    families = group_by_equivalence(A, decomposition)

    staged = []
    for fam in families:
        c = central_idempotent(A, fam)
        D = division_presentation(A, fam)
        units = matrix_units(A, fam, c)
        staged.append((len(fam.members), D.degree, tuple(int(v) for v in c),
                       fam, c, D, units))
    staged.sort(key=lambda s: s[:3])

    blocks = []
    layout = []
    total = 0
    for index, (n_i, d_i, _, fam, c, D, units) in enumerate(staged):
        blk = Block(index=index, n=n_i, D=D, c=c, family=fam, units=units)
        lc_rank = linalg.rank(A.lmat(c), A.p)
        assert lc_rank == n_i * n_i * d_i, (
            f"block {index} spans {lc_rank}, expected {n_i * n_i * d_i}"
        )
        blocks.append(blk)
        for mu in range(n_i):
            for nu in range(n_i):
                for t in range(d_i):
                    layout.append((index, mu, nu, t))
        total += n_i * n_i * d_i
    assert total == A.dim, "block dimensions do not add up"

    iso = np.zeros((A.dim, A.dim), dtype=np.int64)
    row = 0
    for blk in blocks:
        fam, D = blk.family, blk.D
        for mu in range(blk.n):
            La = A.lmat(fam.a[mu])
            for nu in range(blk.n):
                T = linalg.matmul_mod(A.rmat(fam.b[nu]), La, A.p)
                coords = linalg.solve_batch(D.corner.rows.T, T, A.p)
                if coords is None:
                    raise EntryOutsideCorner(
                        f"block {blk.index} entry ({mu},{nu}) escapes the corner"
                    )
                iso[row : row + D.degree] = coords
                row += D.degree
    iso_inv = linalg.inverse(iso, A.p)
    if iso_inv is None:
        raise NonBijective("assembled block map is singular")
    return DecompositionResult(
        blocks=blocks,
        iso=iso,
        iso_inverse=iso_inv,
        layout=layout,
        p=A.p,
        dim=A.dim,
        seed=seed,
    )


def codomain_algebra(result):
    """Presentation of the block direct sum in the flattened coordinates."""
    p, n = result.p, result.dim
    sc = np.zeros((n, n, n), dtype=np.int64)
    one = np.zeros(n, dtype=np.int64)
    offset = 0
    for blk in result.blocks:
        d = blk.D.degree
        dsc = blk.D.corner.algebra.sc
        done = blk.D.corner.algebra.one
        size = blk.n * blk.n * d

        def pos(mu, nu, t):
            return offset + (mu * blk.n + nu) * d + t

        for mu in range(blk.n):
            for nu in range(blk.n):
                for eta in range(blk.n):
                    for s in range(d):
                        for t in range(d):
                            # (E[mu,nu] x_s) (E[nu,eta] x_t)
                            #   = E[mu,eta] (x_s x_t)
                            for u in range(d):
                                v = dsc[s, t, u]
                                if v:
                                    sc[
                                        pos(mu, nu, s),
                                        pos(nu, eta, t),
                                        pos(mu, eta, u),
                                    ] = v
            for t in range(d):
                one[pos(mu, mu, t)] = done[t]
        offset += size
    return Algebra(p, sc, identity=one, validate=False)


def _target_identity(result):
    one = np.zeros(result.dim, dtype=np.int64)
    row = 0
    for blk in result.blocks:
        d = blk.D.degree
        done = blk.D.corner.algebra.one
        for mu in range(blk.n):
            for nu in range(blk.n):
                if mu == nu:
                    one[row : row + d] = done
                row += d
    return one


def verify_isomorphism(A, result, check_multiplicative=True):
    """Exact re-proof that the assembled map is a unital ring isomorphism."""
    failures = []
    p, n = A.p, A.dim
    eye = np.eye(n, dtype=np.int64)

    prod = linalg.matmul_mod(result.iso, result.iso_inverse, p)
    bijective = np.array_equal(prod, eye) and np.array_equal(
        linalg.matmul_mod(result.iso_inverse, result.iso, p), eye
    )
    if not bijective:
        failures.append("iso and iso_inverse are not mutually inverse")

    target_one = _target_identity(result)
    unit = np.array_equal(
        linalg.matmul_mod(result.iso, A.one[:, None], p)[:, 0], target_one
    )
    if not unit:
        failures.append("image of the identity is not the block identity")

    orthogonality = True
    row = 0
    for blk in result.blocks:
        size = blk.n * blk.n * blk.D.degree
        image = linalg.matmul_mod(result.iso, blk.c[:, None], p)[:, 0]
        expected = np.zeros(n, dtype=np.int64)
        expected[row : row + size] = target_one[row : row + size]
        if not np.array_equal(image, expected):
            orthogonality = False
            failures.append(
                f"central idempotent of block {blk.index} does not map to "
                "its block identity"
            )
        row += size

    multiplicative = None
    if check_multiplicative:
        multiplicative = True
        target = codomain_algebra(result)
        U = result.iso
        left = linalg.matmul_mod(
            A.sc.reshape(n * n, n), U.T, p
        ).reshape(n, n, n)
        Ut = np.ascontiguousarray(U.T)
        for m in range(n):
            rhs_m = linalg.matmul_mod(
                linalg.matmul_mod(Ut, np.ascontiguousarray(target.sc[:, :, m]), p),
                U,
                p,
            )
            if not np.array_equal(left[:, :, m], rhs_m):
                bad = np.argwhere(left[:, :, m] != rhs_m)[0]
                failures.append(
                    f"multiplicativity fails at basis pair "
                    f"({int(bad[0])},{int(bad[1])})"
                )
                multiplicative = False
                break

    return VerificationReport(
        bijective=bijective,
        unit=unit,
        multiplicative=multiplicative,
        orthogonality=orthogonality,
        failures=failures,
    )


def apply_iso(result, x):
    """Flat target coordinates of x, reshaped per block into entry grids."""
    flat = linalg.matmul_mod(result.iso, np.asarray(x, dtype=np.int64)[:, None],
                             result.p)[:, 0]
    return unflatten(result, flat)


def unflatten(result, flat):
    grids = []
    row = 0
    for blk in result.blocks:
        d = blk.D.degree
        grid = []
        for mu in range(blk.n):
            grow = []
            for nu in range(blk.n):
                grow.append(flat[row : row + d].copy())
                row += d
            grid.append(grow)
        grids.append(grid)
    return grids


def flatten(result, grids):
    flat = np.zeros(result.dim, dtype=np.int64)
    row = 0
    if len(grids) != len(result.blocks):
        raise ShapeMismatch("wrong number of blocks")
    for blk, grid in zip(result.blocks, grids):
        d = blk.D.degree
        if len(grid) != blk.n or any(len(r) != blk.n for r in grid):
            raise ShapeMismatch(f"block {blk.index} grid is not {blk.n}x{blk.n}")
        for mu in range(blk.n):
            for nu in range(blk.n):
                entry = np.asarray(grid[mu][nu], dtype=np.int64)
                if entry.shape != (d,):
                    raise ShapeMismatch(
                        f"block {blk.index} entry ({mu},{nu}) has wrong length"
                    )
                flat[row : row + d] = entry % result.p
                row += d
    return flat


def target_multiply(result, X, Y):
    """Blockwise matrix product with entries multiplied in each block's D."""
    if len(X) != len(result.blocks) or len(Y) != len(result.blocks):
        raise ShapeMismatch("operand block count differs from the layout")
    out = []
    for blk, Xb, Yb in zip(result.blocks, X, Y):
        n_i, d = blk.n, blk.D.degree
        D = blk.D.corner.algebra
        for grid in (Xb, Yb):
            if len(grid) != n_i or any(len(r) != n_i for r in grid):
                raise ShapeMismatch(f"block {blk.index} operand is not {n_i}x{n_i}")
            for r in grid:
                for entry in r:
                    if np.asarray(entry).shape != (d,):
                        raise ShapeMismatch(
                            f"block {blk.index} entry has wrong length"
                        )
        prod = []
        for mu in range(n_i):
            prow = []
            for eta in range(n_i):
                acc = np.zeros(d, dtype=np.int64)
                for nu in range(n_i):
                    acc = (acc + D.mul_vec(
                        np.asarray(Xb[mu][nu], dtype=np.int64) % result.p,
                        np.asarray(Yb[nu][eta], dtype=np.int64) % result.p,
                    )) % result.p
                prow.append(acc)
            prod.append(prow)
        out.append(prod)
    return out


# -- serialization -------------------------------------------------------------


def _doc_vec(x, n, p, what):
    try:
        arr = np.asarray(x, dtype=np.int64)
    except (TypeError, ValueError):
        raise InvalidDocument(f"{what} is not an integer vector") from None
    if arr.shape != (n,):
        raise InvalidDocument(f"{what} has shape {arr.shape}, expected ({n},)")
    return arr % p


def _doc_mat(x, shape, p, what):
    try:
        arr = np.asarray(x, dtype=np.int64)
    except (TypeError, ValueError):
        raise InvalidDocument(f"{what} is not an integer matrix") from None
    if arr.shape != shape:
        raise InvalidDocument(f"{what} has shape {arr.shape}, expected {shape}")
    return arr % p


def verify_report_doc(A, doc):
    """Re-prove a serialized report against its algebra document.

    Returns the list of failed-relation messages (empty means the report
    verifies).  Structural problems (wrong shapes, mismatched modulus)
    raise InvalidDocument instead, since they are input errors rather than
    disproofs.  Nothing from the original decomposition search is re-run;
    every check works from the serialized witnesses alone.
    """
    if not isinstance(doc, dict):
        raise InvalidDocument("report document must be an object")
    for key in ("p", "dim", "blocks", "iso_matrix", "iso_inverse", "layout"):
        if key not in doc:
            raise InvalidDocument(f"report document missing {key!r}")
    if doc["p"] != A.p:
        raise InvalidDocument(
            f"report modulus {doc['p']} does not match algebra modulus {A.p}"
        )
    if doc["dim"] != A.dim:
        raise InvalidDocument(
            f"report dimension {doc['dim']} does not match algebra dimension {A.dim}"
        )
    p, n = A.p, A.dim
    msgs = []
    zero = np.zeros(n, dtype=np.int64)

    staged = []
    for bi, bdoc in enumerate(doc["blocks"]):
        if not isinstance(bdoc, dict):
            raise InvalidDocument(f"block {bi} is not an object")
        for key in ("n", "division_degree", "central_idempotent",
                    "representative_idempotent", "connecting_a",
                    "connecting_b", "matrix_units", "division_basis"):
            if key not in bdoc:
                raise InvalidDocument(f"block {bi} missing {key!r}")
        n_i = bdoc["n"]
        d_i = bdoc["division_degree"]
        if not (isinstance(n_i, int) and n_i >= 1
                and isinstance(d_i, int) and d_i >= 1):
            raise InvalidDocument(f"block {bi} has invalid sizes")
        rep = _doc_vec(bdoc["representative_idempotent"], n, p,
                       f"block {bi} representative")
        c = _doc_vec(bdoc["central_idempotent"], n, p, f"block {bi} center")
        if len(bdoc["connecting_a"]) != n_i or len(bdoc["connecting_b"]) != n_i:
            raise InvalidDocument(f"block {bi} connecting family has wrong size")
        avecs = [_doc_vec(v, n, p, f"block {bi} a[{mu}]")
                 for mu, v in enumerate(bdoc["connecting_a"])]
        bvecs = [_doc_vec(v, n, p, f"block {bi} b[{mu}]")
                 for mu, v in enumerate(bdoc["connecting_b"])]
        units = _doc_mat(bdoc["matrix_units"], (n_i, n_i, n), p,
                         f"block {bi} matrix units")
        rows = _doc_mat(bdoc["division_basis"], (d_i, n), p,
                        f"block {bi} division basis")

        if not np.array_equal(A.mul_vec(rep, rep), rep):
            msgs.append(f"block {bi}: representative is not idempotent")
        if not (np.array_equal(avecs[0], rep) and np.array_equal(bvecs[0], rep)):
            msgs.append(f"block {bi}: a[0], b[0] differ from the representative")
        members = []
        for mu in range(n_i):
            e_mu = A.mul_vec(bvecs[mu], avecs[mu])
            members.append(e_mu)
            if not np.array_equal(A.mul_vec(avecs[mu], bvecs[mu]), rep):
                msgs.append(f"block {bi}: a[{mu}]*b[{mu}] != representative")
            if not np.array_equal(A.mul_vec(e_mu, e_mu), e_mu):
                msgs.append(f"block {bi}: b[{mu}]*a[{mu}] is not idempotent")
            sandwich = A.mul_vec(A.mul_vec(rep, avecs[mu]), e_mu)
            if not np.array_equal(sandwich, avecs[mu]):
                msgs.append(f"block {bi}: a[{mu}] is not in rep*A*e[{mu}]")
            sandwich = A.mul_vec(A.mul_vec(e_mu, bvecs[mu]), rep)
            if not np.array_equal(sandwich, bvecs[mu]):
                msgs.append(f"block {bi}: b[{mu}] is not in e[{mu}]*A*rep")
        for mu in range(n_i):
            for nu in range(n_i):
                if not np.array_equal(
                    units[mu, nu], A.mul_vec(bvecs[mu], avecs[nu])
                ):
                    msgs.append(
                        f"block {bi}: matrix unit ({mu},{nu}) != b[{mu}]*a[{nu}]"
                    )
        for mu in range(n_i):
            for nu in range(n_i):
                for xi in range(n_i):
                    for eta in range(n_i):
                        got = A.mul_vec(units[mu, nu], units[xi, eta])
                        want = units[mu, eta] if nu == xi else zero
                        if not np.array_equal(got, want):
                            msgs.append(
                                f"block {bi}: unit relation "
                                f"({mu},{nu})*({xi},{eta}) fails"
                            )
        csum = members[0].copy()
        for e_mu in members[1:]:
            csum = (csum + e_mu) % p
        if not np.array_equal(csum, c):
            msgs.append(f"block {bi}: central idempotent is not the member sum")
        if not np.array_equal(A.mul_vec(c, c), c):
            msgs.append(f"block {bi}: central idempotent is not idempotent")
        if not np.array_equal(A.lmat(c), A.rmat(c)):
            msgs.append(f"block {bi}: central idempotent is not central")

        if linalg.rank(rows, p) != d_i:
            msgs.append(f"block {bi}: division basis is not independent")
        local_one = linalg.solve(rows.T, rep, p)
        if local_one is None:
            msgs.append(f"block {bi}: representative outside its division basis")
        staged.append((bi, n_i, d_i, rep, c, avecs, bvecs, units, rows, members))

    if msgs:
        return msgs

    # cross-block orthogonality and completeness
    all_members = []
    for s in staged:
        bi, members = s[0], s[9]
        for mu, e in enumerate(members):
            all_members.append((bi, mu, e))
    total = np.zeros(n, dtype=np.int64)
    for _, _, e in all_members:
        total = (total + e) % p
    if not np.array_equal(total, A.one):
        msgs.append("primitive parts do not sum to the identity")
    for i, (bi, mu, e) in enumerate(all_members):
        for bj, nu, f in all_members[i + 1:]:
            if A.mul_vec(e, f).any() or A.mul_vec(f, e).any():
                msgs.append(
                    f"parts ({bi},{mu}) and ({bj},{nu}) are not orthogonal"
                )
    ctotal = np.zeros(n, dtype=np.int64)
    for s in staged:
        ctotal = (ctotal + s[4]) % p
    if not np.array_equal(ctotal, A.one):
        msgs.append("central idempotents do not sum to the identity")
    for i, si in enumerate(staged):
        for sj in staged[i + 1:]:
            if A.mul_vec(si[4], sj[4]).any():
                msgs.append(
                    f"central idempotents of blocks {si[0]} and {sj[0]} overlap"
                )

    expected_layout = []
    for bi, n_i, d_i, *_ in staged:
        for mu in range(n_i):
            for nu in range(n_i):
                for t in range(d_i):
                    expected_layout.append([bi, mu, nu, t])
    if [list(map(int, e)) for e in doc["layout"]] != expected_layout:
        msgs.append("layout does not enumerate the blocks canonically")
    if sum(n_i * n_i * d_i for _, n_i, d_i, *_ in staged) != n:
        msgs.append("block dimensions do not sum to the algebra dimension")
    if msgs:
        return msgs

    # rebuild block objects to reuse the isomorphism checks
    iso = _doc_mat(doc["iso_matrix"], (n, n), p, "iso_matrix")
    iso_inv = _doc_mat(doc["iso_inverse"], (n, n), p, "iso_inverse")
    rebuilt = []
    for bi, n_i, d_i, rep, c, avecs, bvecs, units, rows, members in staged:
        prods = np.concatenate(
            [linalg.matmul_mod(A.lmat(rows[i]), rows.T, p).T
             for i in range(d_i)]
        )
        if linalg.solve_batch(rows.T, prods.T, p) is None:
            msgs.append(f"block {bi}: division basis is not closed under product")
            return msgs
        corner = Subalgebra(A, rows, identity_parent=rep)
        D = DivisionAlgebra(corner=corner, degree=d_i)
        if not D.corner.algebra.is_commutative():
            msgs.append(f"block {bi}: division corner is not commutative")
            return msgs
        if idempotents._fixed_space(corner).shape[0] != 1:
            msgs.append(f"block {bi}: division corner is not a field")
            return msgs
        fam = ConnectingFamily(
            rep=idempotents.Idempotent(A.element(rep)),
            members=[idempotents.Idempotent(A.element(e)) for e in members],
            a=avecs,
            b=bvecs,
        )
        us = MatrixUnitSystem(
            units=[[units[mu, nu] for nu in range(n_i)] for mu in range(n_i)],
            block_identity=c,
        )
        rebuilt.append(Block(index=bi, n=n_i, D=D, c=c, family=fam, units=us))
    result = DecompositionResult(
        blocks=rebuilt, iso=iso, iso_inverse=iso_inv,
        layout=[tuple(e) for e in expected_layout],
        p=p, dim=n, seed=doc.get("seed", 0),
    )

    # the serialized matrix must agree with the map the witnesses define
    row = 0
    for blk in rebuilt:
        for mu in range(blk.n):
            La = A.lmat(blk.family.a[mu])
            for nu in range(blk.n):
                T = linalg.matmul_mod(A.rmat(blk.family.b[nu]), La, p)
                coords = linalg.solve_batch(blk.D.corner.rows.T, T, p)
                if coords is None:
                    msgs.append(
                        f"block {blk.index}: entry ({mu},{nu}) escapes the corner"
                    )
                    return msgs
                if not np.array_equal(iso[row : row + blk.D.degree], coords):
                    msgs.append(
                        f"iso_matrix rows for block {blk.index} entry "
                        f"({mu},{nu}) do not match the connecting elements"
                    )
                row += blk.D.degree
    if msgs:
        return msgs

    report = verify_isomorphism(A, result, check_multiplicative=True)
    msgs.extend(report.failures)
    return msgs


def result_to_doc(result, verification):
    blocks = []
    for blk in result.blocks:
        blocks.append({
            "n": int(blk.n),
            "division_degree": int(blk.D.degree),
            "central_idempotent": blk.c.tolist(),
            "representative_idempotent": blk.family.rep.coords.tolist(),
            "connecting_a": [v.tolist() for v in blk.family.a],
            "connecting_b": [v.tolist() for v in blk.family.b],
            "matrix_units": [
                [u.tolist() for u in row] for row in blk.units.units
            ],
            "division_basis": blk.D.corner.rows.tolist(),
        })
    return {
        "p": int(result.p),
        "dim": int(result.dim),
        "seed": int(result.seed),
        "blocks": blocks,
        "iso_matrix": result.iso.tolist(),
        "iso_inverse": result.iso_inverse.tolist(),
        "layout": [list(map(int, entry)) for entry in result.layout],
        "verification": {
            "bijective": verification.bijective,
            "unit": verification.unit,
            "multiplicative": verification.multiplicative,
            "orthogonality": verification.orthogonality,
        },
    }
