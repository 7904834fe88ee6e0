from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from loewykit import corpus, modth, oracle
from loewykit.algcore import regular_module
from loewykit.errors import AlgebraMismatch, NotInvariant
from loewykit.exactlin import GF
from loewykit.modth import ModuleRep

F5 = GF(5)
H_Z5 = corpus.group_hopf(F5, (5,))


def jordan(length):
    return corpus.group_module(H_Z5, (5,), [corpus.jordan_block(F5, length)], name=f"J{length}")


def conjugate(m, g):
    F = m.field
    gi = F.inv(g)
    return ModuleRep(m.alg, F.matmul(F.matmul(g, m.action), gi), name=m.name)


def random_invertible(F, d, rng):
    while True:
        g = F.random(rng, (d, d))
        if F.is_invertible(g):
            return g


@st.composite
def z5_modules(draw, max_blocks=3):
    lengths = draw(st.lists(st.integers(1, 5), min_size=1, max_size=max_blocks))
    seed = draw(st.integers(0, 2**32 - 1))
    m = modth.direct_sum(*(jordan(n) for n in lengths))
    g = random_invertible(F5, m.dim, np.random.default_rng(seed))
    return conjugate(m, g), sorted(lengths)


# -- basic constructions -------------------------------------------------------------

def test_spin_examples():
    reg = regular_module(corpus.truncated_polynomial(F5, 3))
    assert np.array_equal(modth.spin(reg, [[1, 0, 0]]), F5.eye(3))
    assert modth.spin(reg, [[0, 0, 1]]).tolist() == [[0, 0, 1]]
    assert modth.spin(reg, F5.zeros(0, 3)).shape == (0, 3)


def test_submodule_and_quotient():
    reg = regular_module(corpus.truncated_polynomial(F5, 3))
    sub, inc = modth.submodule(reg, [[0, 1, 0], [0, 0, 1]])
    assert sub.dim == 2 and modth.check_module(sub) == []
    assert modth.is_intertwiner(inc, sub, reg)
    q, proj = modth.quotient_module(reg, [[0, 0, 1]])
    assert q.dim == 2 and modth.check_module(q) == []
    assert modth.is_intertwiner(proj, reg, q)
    with pytest.raises(NotInvariant):
        modth.submodule(reg, [[1, 0, 0]])
    with pytest.raises(NotInvariant):
        modth.quotient_module(reg, [[1, 0, 0]])


def test_direct_sum_rejects_mixed_algebras():
    with pytest.raises(AlgebraMismatch):
        modth.direct_sum(jordan(1), regular_module(corpus.truncated_polynomial(F5, 2)))


def test_socle_and_radical_examples():
    reg = regular_module(corpus.truncated_polynomial(F5, 3))
    assert modth.socle(reg).tolist() == [[0, 0, 1]]
    assert modth.radical(reg).tolist() == [[0, 1, 0], [0, 0, 1]]
    ss = regular_module(corpus.group_algebra(F5, (2,)))
    assert np.array_equal(modth.socle(ss), F5.eye(2))
    assert modth.radical(ss).shape == (0, 2)


def test_series_examples():
    reg = regular_module(corpus.truncated_polynomial(F5, 4))
    for kind in ("socle", "radical"):
        f = modth.series(reg, kind)
        assert [c.shape[0] for c in f.chain] == [0, 1, 2, 3, 4]
        assert all(f.layer(k).dim == 1 for k in range(1, 5))
    z = modth.zero_module(reg.alg)
    assert modth.socle_series(z).length == 0 and modth.radical_series(z).length == 0


def test_h4_regular_series():
    inst = corpus.sweedler(5, 1)
    f = modth.socle_series(inst.module("regular"))
    assert [c.shape[0] for c in f.chain] == [0, 2, 4]


def test_hom_examples():
    j2, j3 = jordan(2), jordan(3)
    assert modth.hom_space(j2, j3).shape == (2, 3, 2)
    assert modth.end_algebra(j3).shape[0] == 3
    one = jordan(1)
    assert modth.hom_space(one, j3).shape[0] == 1
    k2 = corpus.group_hopf(F5, (2,))
    triv = corpus.character_module(k2, (2,), (1,))
    sign = corpus.character_module(k2, (2,), (4,))
    assert modth.hom_space(triv, sign).shape[0] == 0


def test_is_isomorphic_examples(rng):
    j3 = jordan(3)
    assert modth.is_isomorphic(j3, conjugate(j3, random_invertible(F5, 3, rng)))
    assert not modth.is_isomorphic(j3, modth.direct_sum(jordan(2), jordan(1)))
    assert not modth.is_isomorphic(jordan(2), jordan(3))


def test_is_simple_examples():
    F2 = GF(2)
    h = corpus.group_hopf(F2, (3,))
    c = F2.asarray([[0, 1], [1, 1]])
    s2 = corpus.group_module(h, (3,), [c])
    assert modth.is_simple(s2) and oracle.is_simple(s2)
    reg = regular_module(corpus.truncated_polynomial(F5, 2))
    assert not modth.is_simple(reg) and not oracle.is_simple(reg)
    m2 = corpus.matrix_algebra(GF(3), 2)
    col = modth.submodule(regular_module(m2), modth.spin(regular_module(m2), [[1, 0, 0, 0]]))[0]
    assert col.dim == 2 and modth.is_simple(col) and oracle.is_simple(col)
    assert not modth.is_simple(modth.direct_sum(s2, s2))


@pytest.mark.parametrize("alg", corpus.small_f2_algebras(), ids=lambda a: a.name)
def test_is_simple_matches_brute_force(alg):
    for d in (1, 2, 3):
        for m in oracle.modules_up_to_iso(alg, d):
            assert modth.is_simple(m) == oracle.is_simple(m)


def test_decompose_h4_top():
    inst = corpus.sweedler(5, 1)
    reg = inst.module("regular")
    top, _ = modth.quotient_module(reg, modth.radical(reg))
    counts = modth.decompose_semisimple(top, inst.algebra.catalog)
    assert {lab.name: n for lab, n in counts.items()} == {"k+": 1, "k-": 1}
    kp, km = inst.simples
    doubled = modth.direct_sum(kp, km, kp, km)
    counts = modth.decompose_semisimple(doubled, inst.algebra.catalog)
    assert {lab.name: n for lab, n in counts.items()} == {"k+": 2, "k-": 2}


def test_composition_factors():
    inst = corpus.sweedler(7, 0)
    cf = modth.composition_factors(inst.module("regular"), inst.algebra.catalog)
    assert {lab.name: n for lab, n in cf.items()} == {"k+": 2, "k-": 2}
    cf = modth.composition_factors(jordan(4))
    assert sum(cf.values()) == 4 and len(cf) == 1


def test_simple_modules_counts():
    assert len(modth.simple_modules(corpus.sweedler_hopf(5, 1).algebra)) == 2
    assert len(modth.simple_modules(corpus.group_algebra(F5, (5, 4)))) == 4
    assert [s.dim for s in modth.simple_modules(corpus.matrix_algebra(GF(2), 2))] == [2]


def test_splits_examples():
    j2 = jordan(2)
    one = jordan(1)
    sub, inc = modth.submodule(j2, modth.socle(j2))
    assert not modth.splits(inc, sub, j2)
    s = modth.direct_sum(one, one)
    sub, inc = modth.submodule(s, [[1, 0]])
    assert modth.splits(inc, sub, s)


@pytest.mark.parametrize("alg", corpus.small_f2_algebras()[:7], ids=lambda a: a.name)
def test_splits_matches_brute_force(alg):
    checked = 0
    for d in (2, 3):
        for m in oracle.modules_up_to_iso(alg, d):
            for rows in oracle.submodules(m):
                if 0 < rows.shape[0] < m.dim:
                    sub, inc = modth.submodule(m, rows)
                    assert modth.splits(inc, sub, m) == oracle.splits(inc, sub, m)
                    checked += 1
    assert checked or alg.dim == 1


@pytest.mark.parametrize("alg", corpus.small_f2_algebras(), ids=lambda a: a.name)
def test_hom_and_socle_match_brute_force(alg):
    mods = [m for d in (1, 2) for m in oracle.modules_up_to_iso(alg, d)]
    for m in mods:
        assert np.array_equal(modth.socle(m), oracle.socle(m))
        for n in mods:
            assert 2 ** modth.hom_space(m, n).shape[0] == oracle.intertwiners(m, n).shape[0]
            assert modth.is_isomorphic(m, n) == oracle.isomorphic(m, n)


def test_json_round_trip():
    j3 = jordan(3)
    again = ModuleRep.from_json(j3.to_json())
    assert np.array_equal(again.action, j3.action)


# -- properties ----------------------------------------------------------------------

@given(z5_modules())
def test_series_have_equal_length(mod):
    m, lengths = mod
    assert modth.socle_series(m).length == modth.radical_series(m).length == max(lengths)


@given(z5_modules())
def test_radical_series_is_descending_and_semisimple_layers(mod):
    m, _ = mod
    for kind in ("socle", "radical"):
        f = modth.series(m, kind)
        for k in range(1, f.length + 1):
            assert m.field.subspace_contains(f.chain[k], f.chain[k - 1])
            layer = f.layer(k)
            assert modth.radical(layer).shape[0] == 0 and layer.dim > 0


@given(z5_modules())
def test_socle_series_dominates_radical_series(mod):
    m, _ = mod
    s, r = modth.socle_series(m), modth.radical_series(m)
    for a, b in zip(r.chain, s.chain):
        assert m.field.subspace_contains(b, a)


@given(z5_modules(max_blocks=2), st.integers(0, 2**32 - 1))
def test_isomorphism_invariance(mod, seed):
    m, lengths = mod
    g = random_invertible(F5, m.dim, np.random.default_rng(seed))
    n = conjugate(m, g)
    assert modth.is_isomorphic(m, n)
    f = modth.find_isomorphism(m, n)
    assert f is not None and modth.is_intertwiner(f, m, n) and F5.is_invertible(f)
    assert [c.shape[0] for c in modth.socle_series(m).chain] == [c.shape[0] for c in modth.socle_series(n).chain]


@given(z5_modules(max_blocks=2), z5_modules(max_blocks=2))
def test_hom_dimension_formula(a, b):
    m, la = a
    n, lb = b
    expected = sum(min(x, y) for x in la for y in lb)
    hom = modth.hom_space(m, n)
    assert hom.shape[0] == expected
    assert all(modth.is_intertwiner(f, m, n) for f in hom)


@given(z5_modules())
def test_socle_layers_are_images_of_intertwining_monomorphisms(mod):
    # soc^k M is the sum of images of all maps from modules of Loewy length <= k
    m, lengths = mod
    f = modth.socle_series(m)
    for k in range(1, f.length + 1):
        jk = jordan(k)
        hom = modth.hom_space(jk, m)
        images = np.transpose(hom, (0, 2, 1)).reshape(-1, m.dim)
        assert np.array_equal(F5.span(images, m.dim), f.chain[k])


@given(z5_modules())
def test_composition_factor_count(mod):
    m, lengths = mod
    assert sum(modth.composition_factors(m).values()) == sum(lengths)
