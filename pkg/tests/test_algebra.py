"""Structure-constant presentations: validation, products, corners, documents."""

import numpy as np
import pytest

from wedderburn import (
    Algebra,
    cayley_fixture,
    from_doc,
    group_algebra,
    make_presentation,
    matrix_algebra,
)
from wedderburn.errors import (
    InvalidDocument,
    NoIdentity,
    NotAssociative,
    NotCommutative,
    NotIdempotent,
    ParentMismatch,
)


def oracle_mul(sc, x, y, p):
    """Textbook double sum, no matrix tricks."""
    n = len(x)
    out = [0] * n
    for i in range(n):
        for j in range(n):
            if x[i] and y[j]:
                for k in range(n):
                    out[k] = (out[k] + x[i] * y[j] * sc[i][j][k]) % p
    return out


def oracle_associative(sc, p):
    n = len(sc)
    basis = [[int(i == t) for t in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            ij = oracle_mul(sc, basis[i], basis[j], p)
            for k in range(n):
                lhs = oracle_mul(sc, ij, basis[k], p)
                jk = oracle_mul(sc, basis[j], basis[k], p)
                rhs = oracle_mul(sc, basis[i], jk, p)
                if lhs != rhs:
                    return False
    return True


def c3_algebra(p=5):
    return group_algebra(cayley_fixture("C3"), p)


def m2(p=7):
    return matrix_algebra(p, 2).algebra


# -- construction ----------------------------------------------------------


def test_rejects_non_cube():
    with pytest.raises(InvalidDocument):
        make_presentation(5, np.zeros((2, 3, 2), dtype=int))


def test_rejects_non_associative_and_oracle_agrees():
    sc = np.array(m2().sc)
    sc[1, 2, 0] = (sc[1, 2, 0] + 1) % 7  # corrupt one constant
    assert not oracle_associative(sc.tolist(), 7)
    with pytest.raises(NotAssociative) as info:
        make_presentation(7, sc)
    i, j, k = info.value.witness
    # the witness triple really does violate associativity
    n = 4
    basis = [[int(t == s) for s in range(n)] for t in range(n)]
    lhs = oracle_mul(sc.tolist(), oracle_mul(sc.tolist(), basis[i], basis[j], 7), basis[k], 7)
    rhs = oracle_mul(sc.tolist(), basis[i], oracle_mul(sc.tolist(), basis[j], basis[k], 7), 7)
    assert lhs != rhs


def test_accepted_presentations_pass_oracle():
    for A in (c3_algebra(), m2(), group_algebra(cayley_fixture("S3"), 5)):
        assert oracle_associative(A.sc.tolist(), A.p)


def test_no_identity_rejected():
    # 1-dimensional algebra with b*b = 0 has no unit
    with pytest.raises(NoIdentity):
        make_presentation(5, np.zeros((1, 1, 1), dtype=int))


def test_identity_located():
    A = c3_algebra()
    assert A.one.tolist() == [1, 0, 0]
    assert m2().one.tolist() == [1, 0, 0, 1]  # E11 + E22


def test_wrong_declared_identity_rejected():
    with pytest.raises(NoIdentity):
        Algebra(5, c3_algebra().sc, identity=[0, 1, 0])


def test_label_length_checked():
    with pytest.raises(InvalidDocument):
        Algebra(5, c3_algebra().sc, labels=["a", "b"])


# -- products ---------------------------------------------------------------


def test_mul_matches_oracle():
    import random

    rng = random.Random(5)
    for A in (c3_algebra(), m2(), group_algebra(cayley_fixture("D4"), 7)):
        for _ in range(10):
            x = np.array([rng.randrange(A.p) for _ in range(A.dim)])
            y = np.array([rng.randrange(A.p) for _ in range(A.dim)])
            want = oracle_mul(A.sc.tolist(), x.tolist(), y.tolist(), A.p)
            assert A.mul_vec(x, y).tolist() == want


def test_lmat_rmat_columns_are_products():
    A = m2()
    x = np.array([1, 2, 3, 4])
    L, R = A.lmat(x), A.rmat(x)
    for j in range(A.dim):
        e = np.eye(A.dim, dtype=int)[j]
        assert L[:, j].tolist() == A.mul_vec(x, e).tolist()
        assert R[:, j].tolist() == A.mul_vec(e, x).tolist()


def test_element_arithmetic():
    A = c3_algebra()
    g = A.element([0, 1, 0])
    assert (g * g).coords.tolist() == [0, 0, 1]
    assert (g**3).coords.tolist() == [1, 0, 0]
    assert (g + g).coords.tolist() == [0, 2, 0]
    assert (2 * g - g).coords.tolist() == (g).coords.tolist()
    assert (g - g).is_zero()
    assert A.identity().is_idempotent()
    with pytest.raises(ParentMismatch):
        g * m2().element([1, 0, 0, 0])


def test_min_poly_vec():
    A = c3_algebra()
    g = np.array([0, 1, 0])
    # g has order 3: minimal polynomial T^3 - 1
    assert A.min_poly_vec(g).tolist() == [4, 0, 0, 1]


def test_center_of_matrix_algebra_is_scalars():
    A = m2()
    Z = A.center_basis()
    assert len(Z) == 1 and Z[0].tolist() == [1, 0, 0, 1]
    assert not A.is_commutative()
    with pytest.raises(NotCommutative):
        A.require_commutative()


def test_center_of_group_algebra_of_abelian_group_is_everything():
    A = c3_algebra()
    assert len(A.center_basis()) == 3 and A.is_commutative()


def test_frobenius_fixed_space_counts_blocks():
    from wedderburn import linalg

    # over F_5, C3 splits into 2 blocks; over F_7 into 3
    for p, want in [(5, 2), (7, 3)]:
        A = c3_algebra(p)
        F = A.frobenius_matrix()
        eye = np.eye(A.dim, dtype=int)
        assert len(linalg.kernel((F - eye) % p, p)) == want


# -- corners and hom spaces --------------------------------------------------


def test_corner_of_e11():
    A = m2()
    e11 = np.array([1, 0, 0, 0])
    sub = A.corner(e11)
    assert sub.dim == 1
    assert sub.rows.tolist() == [[1, 0, 0, 0]]
    assert sub.identity_parent.tolist() == e11.tolist()
    # corner algebra is the ground field
    assert sub.algebra.sc.tolist() == [[[1]]]


def test_corner_of_identity_is_whole_algebra():
    A = m2()
    sub = A.corner(A.one)
    assert sub.dim == 4


def test_corner_of_zero_is_zero_algebra():
    A = m2()
    sub = A.corner(np.zeros(4, dtype=int))
    assert sub.dim == 0


def test_corner_requires_idempotent():
    A = m2()
    with pytest.raises(NotIdempotent):
        A.corner(np.array([0, 1, 0, 0]))  # E12 squares to zero


def test_hom_space_between_diagonal_idempotents():
    A = m2()
    e11 = np.array([1, 0, 0, 0])
    e22 = np.array([0, 0, 0, 1])
    # f A e with f = E11, e = E22 is spanned by E12
    H = A.hom_space(e11, e22)
    assert H.tolist() == [[0, 1, 0, 0]]
    H2 = A.hom_space(e22, e11)
    assert H2.tolist() == [[0, 0, 1, 0]]
    # e A e back to itself
    assert A.hom_space(e11, e11).tolist() == [[1, 0, 0, 0]]


def test_subalgebra_round_trip():
    A = m2()
    sub = A.corner(np.array([1, 0, 0, 0]))
    local = sub.from_parent(np.array([3, 0, 0, 0]))
    assert local.tolist() == [3]
    assert sub.to_parent(local).tolist() == [3, 0, 0, 0]
    assert sub.from_parent(np.array([0, 1, 0, 0])) is None  # outside


# -- documents ----------------------------------------------------------------


def test_doc_round_trip():
    A = group_algebra(cayley_fixture("S3"), 5)
    doc = A.to_doc()
    assert doc["p"] == 5 and doc["dim"] == 6
    B = from_doc(doc)
    assert B.same_presentation(A)


def test_from_doc_validates():
    with pytest.raises(InvalidDocument):
        from_doc({"p": 5, "dim": 2})  # missing constants
    with pytest.raises(InvalidDocument):
        from_doc({"p": 5, "dim": 3, "structure_constants": [[[0]]],
                  "identity": [1]})  # dim mismatch
    doc = c3_algebra().to_doc()
    doc["structure_constants"][0][0][0] = "x"
    with pytest.raises(InvalidDocument):
        from_doc(doc)
