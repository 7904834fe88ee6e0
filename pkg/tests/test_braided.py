from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loewykit import braided, corpus, modth
from loewykit.algcore import Algebra
from loewykit.braided import AlgebraObject, HopfAlgebra
from loewykit.errors import AlgebraMismatch, PreconditionError
from loewykit.exactlin import GF


def s3_hopf(F):
    """F[S_3] from permutation composition; the identity is basis vector 0."""
    elems = sorted(permutations(range(3)))
    idx = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    sc = np.zeros((n, n, n), dtype=np.int64)
    comul = np.zeros((n * n, n), dtype=np.int64)
    anti = np.zeros((n, n), dtype=np.int64)
    for g in elems:
        for h in elems:
            sc[idx[g], idx[h], idx[tuple(g[h[k]] for k in range(3))]] = 1
        comul[idx[g] * n + idx[g], idx[g]] = 1
        inv = tuple(sorted(range(3), key=lambda k: g[k]))
        anti[idx[inv], idx[g]] = 1
    unit = np.eye(n, dtype=np.int64)[0]
    rmat = np.zeros(n * n, dtype=np.int64)
    rmat[0] = 1
    h = HopfAlgebra(Algebra(F, sc, unit, name="kS3"), comul, np.ones(n), anti, rmat)
    return h, elems


@pytest.fixture(scope="module")
def h4():
    return corpus.sweedler(5, 1)


@pytest.fixture(scope="module")
def cur54():
    return corpus.modular_currents(5, 4)


@pytest.mark.parametrize("q,lam", [(5, 0), (5, 1), (7, 0), (7, 1), (3, 2)])
def test_sweedler_is_quasitriangular(q, lam):
    assert braided.check_hopf(corpus.sweedler_hopf(q, lam)) == []


def test_group_hopf_valid():
    assert braided.check_hopf(corpus.group_hopf(GF(5), (5, 4))) == []
    assert braided.check_hopf(s3_hopf(GF(5))[0]) == []


def test_check_hopf_catches_wrong_r():
    h = corpus.sweedler_hopf(5, 1)
    bad = HopfAlgebra(h.algebra, h.comul, h.counit, h.antipode, h.field.kron(h.algebra.unit, h.algebra.unit))
    assert bad.r_is_trivial()
    assert braided.check_hopf(bad)  # H4 is not cocommutative


def test_tensor_with_unit(h4):
    one = braided.unit_module(h4.hopf)
    for m in h4.modules.values():
        t = braided.tensor_module(h4.hopf, one, m)
        assert modth.check_module(t) == [] and modth.is_isomorphic(t, m)


def test_tensor_of_currents(cur54):
    h, us = cur54.hopf, cur54.twist_modules
    for i in range(4):
        for j in range(4):
            assert modth.is_isomorphic(braided.tensor_module(h, us[i], us[j]), us[(i + j) % 4])


def test_braiding_scalars(h4):
    h = h4.hopf
    kp, km = h4.simples
    assert braided.braiding(h, km, km).tolist() == [[h.field.p - 1]]
    assert braided.braiding(h, kp, km).tolist() == [[1]]
    assert braided.braiding(h, kp, kp).tolist() == [[1]]


def test_braiding_is_h_linear(h4):
    h = h4.hopf
    mods = list(h4.modules.values()) + h4.simples
    for m in mods:
        for n in mods:
            c = braided.braiding(h, m, n)
            src = braided.tensor_module(h, m, n)
            dst = braided.tensor_module(h, n, m)
            assert modth.is_intertwiner(c, src, dst) and h.field.is_invertible(c)


def test_braiding_without_r_matrix():
    h = corpus.group_hopf(GF(5), (2,))
    h.rmatrix = None
    one = braided.unit_module(h)
    with pytest.raises(PreconditionError):
        braided.braiding(h, one, one)


def test_dual_of_current(cur54):
    h, us = cur54.hopf, cur54.twist_modules
    for j in range(4):
        dual, _, _ = braided.dual_module(h, us[j])
        assert modth.is_isomorphic(dual, us[(-j) % 4])


@pytest.mark.parametrize("name", ["regular", "P+", "P-"])
def test_duality_snake(h4, name):
    assert braided.check_duality(h4.hopf, h4.module(name)) == []


def test_twisting_simples_of_h4(h4):
    h = h4.hopf
    for u in h4.simples:
        for s in h4.simples:
            assert modth.is_simple(braided.tensor_module(h, u, s))
            assert modth.is_simple(braided.tensor_module(h, s, u))


def test_is_invertible(h4, cur54):
    assert all(braided.is_invertible(cur54.hopf, u) for u in cur54.twist_modules)
    assert all(braided.is_invertible(h4.hopf, s) for s in h4.simples)
    assert not braided.is_invertible(h4.hopf, h4.module("P+"))
    assert not braided.is_invertible(cur54.hopf, cur54.module("J2.0"))


def test_is_invertible_rejects_foreign_module(h4, cur54):
    with pytest.raises(AlgebraMismatch):
        braided.is_invertible(h4.hopf, cur54.twist_modules[0])


def test_fixed_point_free(cur54):
    h = cur54.hopf
    assert braided.fixed_point_free(h, cur54.twist_modules, cur54.simples)


def test_fixed_point_on_s3_standard_module():
    F = GF(5)
    h, elems = s3_hopf(F)
    sign = modth.ModuleRep(
        h.algebra,
        F.asarray(np.array([_parity(g) for g in elems]).reshape(-1, 1, 1)),
    )
    simples = modth.simple_modules(h.algebra)
    assert sorted(s.dim for s in simples) == [1, 1, 2]
    assert braided.is_invertible(h, sign)
    assert not braided.fixed_point_free(h, [sign], simples)
    assert braided.fixed_point_free(h, [sign], [s for s in simples if s.dim == 1])


def _parity(g):
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if g[i] > g[j])
    return -1 if inv % 2 else 1


def test_algebra_object_examples(h4, cur54):
    assert braided.check_algebra_object(cur54.hopf, cur54.obj) == []
    problems = braided.check_algebra_object(h4.hopf, h4.obj)
    assert problems and all(p.startswith("commutativity") for p in problems)


def test_idempotent_product_on_currents(cur54):
    F = GF(5)
    m = 4
    mu = np.zeros((m, m * m), dtype=np.int64)
    for i in range(m):
        mu[i, i * m + i] = 1
    bad = AlgebraObject(cur54.obj.carrier, F.asarray(mu), F.asarray(np.ones(m)))
    problems = braided.check_algebra_object(cur54.hopf, bad)
    assert "mu is not H-linear" in problems
    assert not any("unit" in p or "commutativity" in p or "associativity" in p for p in problems)


def test_current_decomposition(cur54):
    dec = braided.current_decomposition(cur54.hopf, cur54.obj)
    assert len(dec.summands) == 4 and dec.closed
    assert braided.is_unit_object(cur54.hopf, dec.summands[dec.unit_index][0])
    assert dec.products[(1, 3)] == 0


def test_duplicate_unit_fails_hypotheses():
    inst = corpus.modular_currents(5, 2)
    h = inst.hopf
    F = h.field
    one = braided.unit_module(h)
    mu = np.zeros((2, 4), dtype=np.int64)
    mu[0, 0] = mu[1, 3] = 1
    obj = AlgebraObject(modth.direct_sum(one, one), F.asarray(mu), F.asarray([1, 1]))
    hyp = braided.verify_hypotheses(h, obj)
    assert hyp["checks"]["algebra_object_axioms"]["pass"]
    assert not hyp["checks"]["simple_over_itself"]["pass"]
    assert not hyp["pass"]
    with pytest.raises(PreconditionError):
        braided.verify_preservation(h, obj, inst.module("J2.0"), hypotheses=hyp)


def test_hypotheses_hold_on_corpus(h4, cur54):
    for inst in (h4, cur54, corpus.modular_currents(3, 2)):
        hyp = braided.verify_hypotheses(inst.hopf, inst.obj)
        assert hyp["pass"], hyp
    assert not braided.verify_hypotheses(h4.hopf, h4.obj)["commutative"]["pass"]


def regular_object_module(h, a):
    """A as a module over the smash product: (a_i # h_j) b = a_i (h_j . b)."""
    F, na, nh = h.field, a.dim, h.dim
    s = braided.smash(h, a)
    act = F.zeros(s.dim, na, na)
    for i in range(na):
        lmu = a.mu[:, i * na:(i + 1) * na]
        for j in range(nh):
            act[i * nh + j] = F.matmul(lmu, a.carrier.action[j])
    return modth.ModuleRep(s, act)


@pytest.mark.parametrize("which", ["h4", "cur54"])
def test_induce_unit_is_regular_object(which, h4, cur54):
    inst = {"h4": h4, "cur54": cur54}[which]
    h, a = inst.hopf, inst.obj
    fa = braided.induce(h, a, braided.unit_module(h))
    reg = regular_object_module(h, a)
    assert modth.check_module(reg) == [] and modth.check_module(fa) == []
    assert modth.is_isomorphic(fa, reg)


def test_restrict_induce(cur54):
    h, a = cur54.hopf, cur54.obj
    for name in ("J3.1", "J5.2"):
        m = cur54.module(name)
        g = braided.restrict(h, a, braided.induce(h, a, m))
        expected = modth.direct_sum(*(braided.tensor_module(h, u, m) for u in cur54.twist_modules))
        assert modth.is_isomorphic(g, expected)


def test_restrict_rejects_h_modules(cur54):
    with pytest.raises(AlgebraMismatch):
        braided.restrict(cur54.hopf, cur54.obj, cur54.module("J1.0"))


def test_frobenius_unit_case(cur54, h4):
    for inst in (cur54, h4):
        h, a = inst.hopf, inst.obj
        one = braided.unit_module(h)
        assert braided.frobenius_dims(h, a, one, braided.induce(h, a, one)) == (1, 1)


def test_induce_morphism_functorial(cur54):
    h, a = cur54.hopf, cur54.obj
    F = h.field
    j2, j3, j4 = (cur54.module(f"J{n}.1") for n in (2, 3, 4))
    f = modth.hom_space(j2, j3)
    g = modth.hom_space(j3, j4)
    for x in f:
        for y in g:
            lhs = braided.induce_morphism(h, a, F.matmul(y, x))
            rhs = F.matmul(braided.induce_morphism(h, a, y), braided.induce_morphism(h, a, x))
            assert np.array_equal(lhs, rhs)
    for x in f:
        fx = braided.induce_morphism(h, a, x, j2, j3)
        assert modth.is_intertwiner(fx, braided.induce(h, a, j2), braided.induce(h, a, j3))
        assert F.kernel(fx).shape[0] == a.dim * F.kernel(x).shape[0]


def test_induce_morphism_checks_linearity(cur54):
    h, a = cur54.hopf, cur54.obj
    j2 = cur54.module("J2.0")
    with pytest.raises(PreconditionError):
        braided.induce_morphism(h, a, h.field.asarray([[1, 0], [0, 2]]), j2, j2)


def test_induced_simples_and_orbits(cur54):
    h, a = cur54.hopf, cur54.obj
    us = cur54.twist_modules
    ind = [braided.induce(h, a, s) for s in cur54.simples]
    assert all(modth.is_simple(x) for x in ind)
    for i, s in enumerate(cur54.simples):
        for j, t in enumerate(cur54.simples):
            twisted = any(modth.is_isomorphic(t, braided.tensor_module(h, u, s)) for u in us)
            assert modth.is_isomorphic(ind[i], ind[j]) == twisted


def test_twisting_preserves_simplicity_and_induction(cur54):
    h, a = cur54.hopf, cur54.obj
    for u in cur54.twist_modules:
        for s in cur54.simples:
            assert modth.is_simple(braided.tensor_module(h, u, s))
            assert modth.is_simple(braided.tensor_module(h, s, u))
        for name in ("J2.1", "J4.3"):
            m = cur54.module(name)
            assert modth.is_isomorphic(braided.induce(h, a, braided.tensor_module(h, u, m)), braided.induce(h, a, m))


def test_json_round_trips(h4):
    h = braided.HopfAlgebra.from_json(h4.hopf.to_json())
    assert braided.check_hopf(h) == []
    obj = AlgebraObject.from_json(h4.obj.to_json(), h)
    assert np.array_equal(obj.mu, h4.obj.mu)


@settings(max_examples=15)
@given(st.lists(st.tuples(st.integers(1, 3), st.integers(0, 1)), min_size=1, max_size=2),
       st.lists(st.tuples(st.integers(1, 3), st.integers(0, 1)), min_size=1, max_size=2))
def test_frobenius_reciprocity_property(left, right):
    inst = corpus.modular_currents(3, 2)
    h, a = inst.hopf, inst.obj
    m = modth.direct_sum(*(inst.module(f"J{n}.{t}") for n, t in left))
    x = modth.direct_sum(*(inst.module(f"J{n}.{t}") for n, t in right))
    n = braided.induce(h, a, x)
    d1, d2 = braided.frobenius_dims(h, a, m, n)
    assert d1 == d2
