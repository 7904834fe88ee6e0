import numpy as np
import pytest

from loewykit import braided, corpus, modth, oracle
from loewykit.algcore import (
    Algebra,
    check_algebra,
    ideal_power_dims,
    jacobson_radical,
    make_ideal,
    quotient_algebra,
    regular_module,
    smash_product,
)
from loewykit.errors import AxiomError, NotInvariant, UnsupportedCharacteristic
from loewykit.exactlin import GF, QQ


def z2_algebra(F, unit=(1, 0)):
    sc = np.zeros((2, 2, 2), dtype=np.int64)
    sc[0, 0, 0] = sc[0, 1, 1] = sc[1, 0, 1] = sc[1, 1, 0] = 1
    return Algebra(F, sc, np.array(unit), name="kZ2")


def test_check_algebra_valid_examples():
    assert check_algebra(corpus.truncated_polynomial(GF(2), 2)) == []
    assert check_algebra(corpus.group_algebra(GF(7), (3, 2))) == []
    assert check_algebra(corpus.matrix_algebra(QQ, 2)) == []


def test_check_algebra_reports_wrong_unit():
    problems = check_algebra(z2_algebra(GF(5), unit=(0, 1)))
    assert problems and any("unit" in p for p in problems)
    assert not any("associativity" in p for p in problems)


def test_check_algebra_names_associativity_triple():
    F = GF(3)
    a = corpus.truncated_polynomial(F, 3)
    sc = a.sc.copy()
    sc[2, 1, 1] = 1  # x^2 * x = x makes (x x) x != x (x x)
    problems = check_algebra(Algebra(F, sc, a.unit))
    assert any("associativity fails at (i,j,k)=" in p for p in problems)


def test_regular_module_examples():
    a = corpus.truncated_polynomial(GF(2), 2)
    reg = regular_module(a)
    assert reg.dim == 2 and modth.check_module(reg) == []
    x = reg.action[1]
    assert x.tolist() == [[0, 0], [1, 0]]
    assert modth.check_module(regular_module(corpus.group_algebra(GF(7), (3,)))) == []


def test_radical_examples():
    F = GF(5)
    j = jacobson_radical(corpus.truncated_polynomial(F, 3))
    assert j.basis.tolist() == [[0, 1, 0], [0, 0, 1]]
    assert jacobson_radical(corpus.group_algebra(F, (2,))).dim == 0
    assert jacobson_radical(corpus.group_algebra(F, (5,))).dim == 4
    assert jacobson_radical(corpus.truncated_polynomial(QQ, 3)).dim == 2


def test_radical_sweedler():
    h = corpus.sweedler_hopf(5, 1)
    j = jacobson_radical(h.algebra)
    # J = span(x, gx)
    assert j.basis.tolist() == [[0, 0, 1, 0], [0, 0, 0, 1]]


def test_trace_method_precondition():
    a = corpus.truncated_polynomial(GF(2), 3)
    with pytest.raises(UnsupportedCharacteristic):
        jacobson_radical(a, method="trace")
    assert jacobson_radical(corpus.truncated_polynomial(GF(7), 3), method="trace").dim == 2


@pytest.mark.parametrize("alg", corpus.small_f2_algebras(), ids=lambda a: a.name)
def test_radical_matches_brute_force(alg):
    fast = jacobson_radical(alg).basis
    slow = oracle.radical(alg)
    assert np.array_equal(fast, slow)


def test_radical_brute_force_odd_characteristic():
    for alg in (corpus.group_algebra(GF(3), (3,)), corpus.upper_triangular(GF(3)),
                corpus.sweedler_hopf(3, 1).algebra):
        assert np.array_equal(jacobson_radical(alg).basis, oracle.radical(alg))


def test_radical_powers_and_quotient():
    a = corpus.truncated_polynomial(GF(3), 4)
    j = jacobson_radical(a)
    assert ideal_power_dims(a, j) == [3, 2, 1, 0]
    q, proj = quotient_algebra(a, j)
    assert q.dim == 1 and check_algebra(q) == []
    assert proj.shape == (1, 4)


def test_quotient_by_non_ideal_rejected():
    a = corpus.upper_triangular(GF(3))
    with pytest.raises(NotInvariant):
        make_ideal(a, [[1, 0, 0]])
    with pytest.raises(NotInvariant):
        quotient_algebra(a, type(jacobson_radical(a))(a, GF(3).asarray([[1, 0, 0]])))


def test_quotient_of_group_algebra_by_augmentation_square():
    a = corpus.group_algebra(GF(3), (3,))
    q, _ = quotient_algebra(a, jacobson_radical(a))
    assert q.dim == 1
    assert jacobson_radical(q).dim == 0


def test_smash_with_unit_object_is_h():
    inst = corpus.modular_currents(3, 2)
    h = inst.hopf
    one = braided.unit_algebra_object(h)
    s = smash_product(h, one)
    assert s.dim == h.dim
    assert np.array_equal(s.sc, h.algebra.sc)


def test_smash_z2_currents_is_matrix_algebra():
    F = GF(5)
    h = corpus.group_hopf(F, (2,))
    chars = [corpus.character_module(h, (2,), (v,)) for v in (1, -1)]
    mu = np.zeros((2, 4), dtype=np.int64)
    mu[0, 0] = mu[1, 1] = mu[1, 2] = mu[0, 3] = 1
    obj = braided.AlgebraObject(modth.direct_sum(*chars), F.asarray(mu), F.asarray([1, 0]))
    s = smash_product(h, obj)
    assert s.dim == 4 and check_algebra(s) == []
    # semisimple with one 2-dimensional simple: M_2(F_5)
    assert jacobson_radical(s).dim == 0
    assert np.array_equal(oracle.radical(s), F.zeros(0, 4))
    simples = modth.simple_modules(s)
    assert [m.dim for m in simples] == [2]
    # not commutative, so it cannot be k[Z/2] (x) k[Z/2]
    assert np.any(s.sc != np.transpose(s.sc, (1, 0, 2)))


@pytest.mark.parametrize("p,m", [(3, 2), (5, 2), (5, 4), (7, 3)])
def test_smash_currents_dimension(p, m):
    inst = corpus.modular_currents(p, m)
    s = braided.smash(inst.hopf, inst.obj)
    assert s.dim == p * m * m
    assert check_algebra(s) == []


def test_smash_rejects_broken_object():
    inst = corpus.modular_currents(3, 2)
    bad = braided.AlgebraObject(inst.obj.carrier, inst.obj.mu, GF(3).asarray([0, 1]))
    with pytest.raises(AxiomError):
        smash_product(inst.hopf, bad)


def test_json_round_trip():
    a = corpus.sweedler_hopf(7, 1).algebra
    b = Algebra.from_json(a.to_json())
    assert np.array_equal(a.sc, b.sc) and np.array_equal(a.unit, b.unit)
