from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from loewykit import _kernels_py, exactlin
from loewykit.errors import DimensionMismatch, SchemaError
from loewykit.exactlin import GF, QQ, PrimeField, field_from_json

from conftest import FIELDS


def matrices(F, max_rows=6, max_cols=6):
    entries = st.integers(-5, 5) if F is QQ else st.integers(0, F.p - 1)

    @st.composite
    def build(draw):
        r = draw(st.integers(0, max_rows))
        c = draw(st.integers(1, max_cols))
        data = draw(st.lists(entries, min_size=r * c, max_size=r * c))
        return F.asarray(np.array(data, dtype=np.int64).reshape(r, c))

    return build()


field_param = pytest.mark.parametrize("F", FIELDS, ids=repr)


# -- spec examples -----------------------------------------------------------------

@field_param
def test_rref_identity_and_zero(F):
    r, piv, rank = F.rref(F.eye(2))
    assert np.array_equal(r, F.eye(2)) and piv == [0, 1] and rank == 2
    r, piv, rank = F.rref(F.zeros(3, 2))
    assert not np.any(r != 0) and piv == [] and rank == 0


def test_rref_f2_rank_one():
    F = GF(2)
    r, piv, rank = F.rref([[1, 1], [1, 1]])
    assert r.tolist() == [[1, 1], [0, 0]] and piv == [0] and rank == 1


@field_param
def test_kernel_examples(F):
    assert F.kernel(F.eye(3)).shape == (0, 3)
    assert F.kernel(F.zeros(2, 3)).shape == (3, 3)


def test_kernel_f3():
    assert GF(3).kernel([[1, 2]]).tolist() == [[1, 1]]


@field_param
def test_solve_examples(F):
    b = F.asarray(np.array([[1, 2], [0, 1]]))
    assert np.array_equal(F.solve(F.eye(2), b), b)
    assert F.solve(F.zeros(2, 2), F.asarray(np.array([[1], [0]]))) is None
    with pytest.raises(DimensionMismatch):
        F.solve(F.eye(2), F.eye(3))


def test_solve_rational_half():
    assert QQ.solve([[2]], [[1]]).tolist() == [[Fraction(1, 2)]]


@field_param
def test_subspace_examples(F):
    u = F.span([[1, 0, 1], [0, 1, 1]], 3)
    assert np.array_equal(F.subspace_sum(u, u), u)
    assert np.array_equal(F.subspace_intersect(u, F.eye(3)), u)
    with pytest.raises(DimensionMismatch):
        F.subspace_sum(u, F.eye(2))


def test_subspace_sum_full_f2():
    F = GF(2)
    assert np.array_equal(F.subspace_sum([[1, 0]], [[0, 1]]), F.eye(2))


def test_subspace_intersect_and_contains():
    F = GF(5)
    u = F.span([[1, 0, 0], [0, 1, 0]], 3)
    v = F.span([[0, 1, 0], [0, 0, 1]], 3)
    assert F.subspace_intersect(u, v).tolist() == [[0, 1, 0]]
    assert F.subspace_contains(u, [[1, 1, 0]]) and not F.subspace_contains(u, [[0, 0, 1]])


@field_param
def test_kron_examples(F):
    assert np.array_equal(F.kron(F.eye(2), F.eye(3)), F.eye(6))
    assert not np.any(F.kron(F.asarray([[1, 2], [3, 4]]), F.zeros(2, 2)))


def test_kron_rational_and_pairing():
    assert QQ.kron([[2]], [[3]]).tolist() == [[Fraction(6)]]
    F = GF(7)
    a = F.asarray([[1, 2], [3, 4]])
    b = F.asarray([[0, 1], [1, 0]])
    k = F.kron(a, b)
    for i in range(2):
        for j in range(2):
            for r in range(2):
                for c in range(2):
                    assert k[i * 2 + r, j * 2 + c] == a[i, j] * b[r, c] % 7


# -- properties --------------------------------------------------------------------

@pytest.mark.parametrize("F", [GF(2), GF(5), QQ], ids=repr)
@given(data=st.data())
def test_rref_idempotent_and_rank_nullity(F, data):
    m = data.draw(matrices(F))
    r, piv, rank = F.rref(m)
    r2, piv2, rank2 = F.rref(r)
    assert np.array_equal(r, r2) and piv == piv2 and rank == rank2
    k = F.kernel(m)
    assert rank + k.shape[0] == m.shape[1]
    if k.shape[0] and m.shape[0]:
        assert not np.any(F.matmul(m, k.T))


@pytest.mark.parametrize("F", [GF(3), GF(2_147_483_647), QQ], ids=repr)
@given(data=st.data())
def test_solve_is_exact(F, data):
    a = data.draw(matrices(F, 5, 5))
    x0 = data.draw(matrices(F, 0, 2))
    if a.shape[0] == 0:
        return
    x0 = F.asarray(np.resize(x0, (a.shape[1], 2)) if x0.size else np.zeros((a.shape[1], 2), dtype=np.int64))
    b = F.matmul(a, x0)
    x = F.solve(a, b)
    assert x is not None and np.array_equal(F.matmul(a, x), b)


@pytest.mark.parametrize("F", [GF(5), QQ], ids=repr)
@given(data=st.data())
def test_kron_associative(F, data):
    a, b, c = (data.draw(matrices(F, 3, 3)) for _ in range(3))
    assert np.array_equal(F.kron(F.kron(a, b), c), F.kron(a, F.kron(b, c)))


@given(data=st.data())
def test_kernels_agree(data):
    p = data.draw(st.sampled_from([2, 3, 7, 65521, 2_147_483_647]))
    F = PrimeField(p)
    m = data.draw(matrices(F, 8, 8))
    r1, p1 = _kernels_py.rref_modp(m, p)
    r2, p2, _ = F.rref(m)
    assert np.array_equal(r1, r2) and list(p1) == list(p2)


def test_large_prime_matmul_exact():
    F = GF(2_147_483_647)
    a = F.asarray(np.full((3, 3), 2_147_483_646))
    assert F.matmul(a, a).tolist() == [[3] * 3] * 3


def test_json_round_trip():
    for F in (GF(7), QQ):
        m = F.asarray(np.array([[1, -2], [3, 4]]))
        if F is QQ:
            m[0, 0] = Fraction(2, 3)
        again = F.load(F.dump(m))
        assert np.array_equal(again, m)
        assert field_from_json(F.to_json()) == F
    assert GF(7).dump([[5]]) == [["5"]]
    assert QQ.dump(QQ.asarray([[Fraction(2, 3)]])) == [["2/3"]]
    with pytest.raises(SchemaError):
        GF(7).load([["x"]])
    with pytest.raises(SchemaError):
        field_from_json({"kind": "prime", "p": 8})


def test_rejects_bad_fields():
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ValueError):
        PrimeField(2_147_483_659)
    with pytest.raises(TypeError):
        QQ.asarray([0.5])


def test_kernel_backend_reported():
    assert exactlin.KERNEL in ("cython", "python")
