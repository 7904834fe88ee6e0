"""Named, parameterized instances used by the tests and the command line.

Generators (version 1):

``nilpotent:n,p``
    k[x]/(x^n) over F_p with its regular module.  When n <= p the algebra is
    a quotient of F_p[Z/p] (x = g - 1), so the module is also a module over
    that group algebra and the Hopf layer is F_p[Z/p] with A = 1.
``modular-currents:p,m``
    H = F_p[Z/p] (x) F_p[Z/m] with m | p - 1, R = 1 (x) 1, and A the group
    algebra of the character group of Z/m (one summand per character).
``sweedler:q,lam``
    Sweedler's 4-dimensional Hopf algebra over F_q (q odd) with R-matrix
    R_lam and A = 1 + sigma, sigma the sign character, mu the Z/2 law.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from . import braided, modth
from .algcore import Algebra, regular_module
from .braided import AlgebraObject, HopfAlgebra
from .errors import SchemaError
from .exactlin import GF, Field
from .modth import ModuleRep

GENERATOR_VERSION = 1


@dataclass(eq=False)
class Instance:
    name: str
    algebra: Algebra
    modules: dict  # name -> ModuleRep over ``algebra``
    hopf: HopfAlgebra | None = None
    obj: AlgebraObject | None = None
    simples: list = field(default_factory=list)
    twist_modules: list = field(default_factory=list)  # the currents U_i

    def module(self, name: str) -> ModuleRep:
        try:
            return self.modules[name]
        except KeyError:
            raise SchemaError(f"{self.name} has no module {name!r}; choose from {sorted(self.modules)}") from None


# -- algebras ------------------------------------------------------------------

def truncated_polynomial(F: Field, n: int) -> Algebra:
    """k[x]/(x^n) in the basis 1, x, ..., x^{n-1}."""
    sc = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n - i):
            sc[i, j, i + j] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    return Algebra(F, sc, unit, name=f"k[x]/(x^{n})")


def group_algebra(F: Field, orders) -> Algebra:
    """F[Z/o_1 x ... x Z/o_r]; basis index is the mixed-radix word, first factor major."""
    orders = tuple(orders)
    n = int(np.prod(orders))
    sc = np.zeros((n, n, n), dtype=np.int64)
    words = [np.unravel_index(i, orders) for i in range(n)]
    for i, wi in enumerate(words):
        for j, wj in enumerate(words):
            k = np.ravel_multi_index(tuple((a + b) % o for a, b, o in zip(wi, wj, orders)), orders)
            sc[i, j, k] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    return Algebra(F, sc, unit, name="k[" + "x".join(f"Z{o}" for o in orders) + "]")


def group_hopf(F: Field, orders) -> HopfAlgebra:
    orders = tuple(orders)
    alg = group_algebra(F, orders)
    n = alg.dim
    comul = np.zeros((n * n, n), dtype=np.int64)
    anti = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        comul[j * n + j, j] = 1
        w = np.unravel_index(j, orders)
        anti[np.ravel_multi_index(tuple((-a) % o for a, o in zip(w, orders)), orders), j] = 1
    counit = np.ones(n, dtype=np.int64)
    rmat = np.zeros(n * n, dtype=np.int64)
    rmat[0] = 1
    return HopfAlgebra(alg, comul, counit, anti, rmat, name=alg.name)


def character_module(h: HopfAlgebra, orders, values, name=None) -> ModuleRep:
    """1-dimensional module where generator r of the group acts by values[r]."""
    F = h.field
    n = h.dim
    act = np.zeros((n, 1, 1), dtype=object)
    for i in range(n):
        w = np.unravel_index(i, orders)
        x = 1
        for a, v in zip(w, values):
            x = x * pow(int(v), int(a), F.p)
        act[i, 0, 0] = x
    return ModuleRep(h.algebra, F.asarray(act), name=name)


def group_module(h: HopfAlgebra, orders, gen_mats, name=None) -> ModuleRep:
    """Module with commuting generator matrices ``gen_mats`` (one per factor)."""
    F = h.field
    d = np.asarray(gen_mats[0]).shape[0]
    act = F.zeros(h.dim, d, d)
    for i in range(h.dim):
        w = np.unravel_index(i, orders)
        mat = F.eye(d)
        for a, g in zip(w, gen_mats):
            for _ in range(int(a)):
                mat = F.matmul(mat, F.asarray(g))
        act[i] = mat
    return ModuleRep(h.algebra, act, name=name)


def primitive_root(p: int, m: int) -> int:
    """An element of exact multiplicative order m in F_p."""
    if (p - 1) % m:
        raise ValueError(f"F_{p} has no primitive {m}-th root of unity")
    for z in range(1, p):
        if pow(z, m, p) == 1 and all(pow(z, m // q, p) != 1 for q in _prime_factors(m)):
            return z
    raise ValueError("unreachable")


def _prime_factors(m: int):
    out, f = set(), 2
    while f * f <= m:
        while m % f == 0:
            out.add(f)
            m //= f
        f += 1
    if m > 1:
        out.add(m)
    return out


def jordan_block(F: Field, length: int):
    """Unipotent Jordan block I + N of the given size."""
    j = np.eye(length, dtype=np.int64)
    for i in range(length - 1):
        j[i + 1, i] = 1
    return F.asarray(j)


# -- generators ------------------------------------------------------------------

def nilpotent(n: int, p: int) -> Instance:
    F = GF(p)
    alg = truncated_polynomial(F, n)
    mods = {"regular": regular_module(alg)}
    inst = Instance(f"nilpotent:n={n},p={p}", alg, mods)
    triv = ModuleRep(alg, F.asarray(np.eye(n, dtype=np.int64)[:, :1].reshape(n, 1, 1)), name="k")
    inst.simples = [triv]
    alg.catalog.add(triv, name="k")
    if n <= p:
        h = group_hopf(F, (p,))
        J = jordan_block(F, n)
        reg = group_module(h, (p,), [J], name=f"J{n}")
        one = braided.unit_module(h)
        h.algebra.catalog.add(one, name="k")
        inst.hopf = h
        inst.obj = braided.unit_algebra_object(h)
        inst.simples = [one]
        inst.twist_modules = [one]
        inst.modules = {"regular": mods["regular"], "jordan": reg}
    return inst


def modular_currents(p: int, m: int) -> Instance:
    F = GF(p)
    orders = (p, m)
    h = group_hopf(F, orders)
    z = primitive_root(p, m)
    chars = [character_module(h, orders, (1, pow(z, j, p)), name=f"U{j}") for j in range(m)]
    for j, u in enumerate(chars):
        h.algebra.catalog.add(u, name=f"U{j}", check=False)
    # A = sum_j U_j with u_i u_j = u_{i+j}
    carrier = modth.direct_sum(*chars)
    carrier.name = "A"
    mu = np.zeros((m, m * m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            mu[(i + j) % m, i * m + j] = 1
    iota = np.zeros(m, dtype=np.int64)
    iota[0] = 1
    obj = AlgebraObject(carrier, F.asarray(mu), F.asarray(iota), name=f"A_Z{m}")
    mods = {"regular": regular_module(h.algebra)}
    for length in range(1, p + 1):
        for j in range(m):
            mods[f"J{length}.{j}"] = jordan_module(h, p, m, length, j)
    inst = Instance(f"modular-currents:p={p},m={m}", h.algebra, mods, h, obj, simples=chars, twist_modules=chars)
    # F_A(J_p) is faithful over the smash product, which keeps the radical cheap
    S = braided.smash(h, obj)
    S.set_faithful_rep(braided.induce(h, obj, mods[f"J{p}.0"]).action)
    return inst


def jordan_module(h: HopfAlgebra, p: int, m: int, length: int, twist: int) -> ModuleRep:
    """g acts by a unipotent Jordan block, the Z/m generator by zeta^twist."""
    F = h.field
    z = pow(primitive_root(p, m), twist, p)
    return group_module(h, (p, m), [jordan_block(F, length), F.asarray(z * np.eye(length, dtype=np.int64))],
                        name=f"J{length}.{twist}")


def sweedler_hopf(q: int, lam: int) -> HopfAlgebra:
    """Sweedler's algebra, basis 1, g, x, gx; g^2 = 1, x^2 = 0, xg = -gx."""
    F = GF(q)
    if q == 2:
        raise ValueError("Sweedler's algebra needs odd characteristic")

    def idx(a, b):
        return a + 2 * b

    sc = np.zeros((4, 4, 4), dtype=np.int64)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    if b + d >= 2:
                        continue
                    sign = -1 if (b * c) % 2 else 1
                    sc[idx(a, b), idx(c, d), idx((a + c) % 2, b + d)] = sign
    unit = np.array([1, 0, 0, 0])
    alg = Algebra(F, sc, unit, name="H4")
    one, g, x, gx = range(4)

    def t(u, v):
        return u * 4 + v

    comul = np.zeros((16, 4), dtype=np.int64)
    comul[t(one, one), one] = 1
    comul[t(g, g), g] = 1
    comul[t(x, one), x] = 1
    comul[t(g, x), x] = 1
    comul[t(gx, g), gx] = 1
    comul[t(one, gx), gx] = 1
    counit = np.array([1, 1, 0, 0])
    anti = np.zeros((4, 4), dtype=np.int64)
    anti[one, one] = 1
    anti[g, g] = 1
    anti[gx, x] = -1
    anti[x, gx] = 1
    half = pow(2, -1, q)
    r = np.zeros(16, dtype=object)
    r[t(one, one)] += half
    r[t(one, g)] += half
    r[t(g, one)] += half
    r[t(g, g)] -= half
    r[t(x, x)] += lam * half
    r[t(x, gx)] -= lam * half
    r[t(gx, x)] += lam * half
    r[t(gx, gx)] += lam * half
    return HopfAlgebra(alg, F.asarray(comul), F.asarray(counit), F.asarray(anti), F.asarray(r), name=f"H4[lam={lam}]")


def sweedler(q: int, lam: int) -> Instance:
    h = sweedler_hopf(q, lam)
    F = h.field
    alg = h.algebra
    kp = ModuleRep(alg, F.asarray(np.array([1, 1, 0, 0]).reshape(4, 1, 1)), name="k+")
    km = ModuleRep(alg, F.asarray(np.array([1, -1, 0, 0]).reshape(4, 1, 1)), name="k-")
    alg.catalog.add(kp, name="k+", check=False)
    alg.catalog.add(km, name="k-", check=False)
    carrier = modth.direct_sum(kp, km)
    carrier.name = "A"
    mu = np.zeros((2, 4), dtype=np.int64)
    mu[0, 0] = mu[1, 1] = mu[1, 2] = mu[0, 3] = 1
    obj = AlgebraObject(carrier, F.asarray(mu), F.asarray(np.array([1, 0])), name="1+sigma")
    reg = regular_module(alg)
    half = pow(2, -1, q)
    e_plus = F.asarray(np.array([half, half, 0, 0]))
    e_minus = F.asarray(np.array([half, -half, 0, 0]))
    mods = {"regular": reg}
    for nm, e in (("P+", e_plus), ("P-", e_minus)):
        rows = modth.spin(reg, alg.products(F.eye(4), e))
        sub, _ = modth.submodule(reg, rows)
        sub.name = nm
        mods[nm] = sub
    return Instance(f"sweedler:q={q},lam={lam}", alg, mods, h, obj, simples=[kp, km], twist_modules=[kp, km])


# -- name parsing ---------------------------------------------------------------------

_GENERATORS = {
    "nilpotent": (nilpotent, ("n", "p")),
    "modular-currents": (modular_currents, ("p", "m")),
    "sweedler": (sweedler, ("q", "lam")),
}


def parse_generator(spec: str):
    """``"name:key=val,..."`` -> (name, kwargs)."""
    m = re.fullmatch(r"\s*([a-z-]+)\s*(?::(.*))?", spec)
    if not m or m.group(1) not in _GENERATORS:
        raise SchemaError(f"unknown generator {spec!r}; known: {sorted(_GENERATORS)}")
    name = m.group(1)
    _, keys = _GENERATORS[name]
    kwargs = {}
    if m.group(2):
        for part in m.group(2).split(","):
            if "=" not in part:
                raise SchemaError(f"generator parameter {part!r} is not key=value")
            k, v = (s.strip() for s in part.split("=", 1))
            if k not in keys:
                raise SchemaError(f"{name} takes parameters {keys}, got {k!r}")
            try:
                kwargs[k] = int(v)
            except ValueError:
                raise SchemaError(f"parameter {k} must be an integer, got {v!r}") from None
    missing = [k for k in keys if k not in kwargs]
    if missing:
        raise SchemaError(f"{name} needs parameters {missing}")
    return name, kwargs


def build(spec: str) -> Instance:
    name, kwargs = parse_generator(spec)
    fn, _ = _GENERATORS[name]
    try:
        return fn(**kwargs)
    except ValueError as exc:
        raise SchemaError(f"invalid parameters for {name}: {exc}") from exc


def upper_triangular(F: Field) -> Algebra:
    """Upper triangular 2 x 2 matrices: basis e11, e22, e12."""
    sc = np.zeros((3, 3, 3), dtype=np.int64)
    e11, e22, e12 = range(3)
    sc[e11, e11, e11] = 1
    sc[e22, e22, e22] = 1
    sc[e11, e12, e12] = 1
    sc[e12, e22, e12] = 1
    return Algebra(F, sc, np.array([1, 1, 0]), name="T2")


def matrix_algebra(F: Field, n: int) -> Algebra:
    """M_n(F) with basis E_ij at index i * n + j."""
    d = n * n
    sc = np.zeros((d, d, d), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                sc[i * n + j, j * n + k, i * n + k] = 1
    unit = np.eye(n, dtype=np.int64).reshape(-1)
    # the elementary matrices E_{i,i+1} and E_{i+1,i} generate
    gens = []
    for i in range(n - 1):
        for r, c in ((i, i + 1), (i + 1, i)):
            g = np.zeros(d, dtype=np.int64)
            g[r * n + c] = 1
            gens.append(g)
    return Algebra(F, sc, unit, name=f"M{n}", generators=np.array(gens).reshape(-1, d) if gens else None)


def small_f2_algebras() -> list:
    """Small algebras over F_2 (dimension at most 4) for the arrow oracle."""
    F = GF(2)
    return ([truncated_polynomial(F, n) for n in (1, 2, 3, 4)]
            + [group_algebra(F, (2, 2)), group_algebra(F, (3,)), upper_triangular(F), matrix_algebra(F, 2)])
