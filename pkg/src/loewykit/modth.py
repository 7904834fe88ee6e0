"""Left modules over an :class:`~loewykit.algcore.Algebra`.

A module is a stack of action matrices, one per algebra basis element, acting
on column vectors.  Submodules are rref row bases in the module's own
coordinates.  Homomorphisms ``M -> N`` are ``(dim N, dim M)`` matrices.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from dataclasses import dataclass, field

import numpy as np

from .algcore import Algebra, complement_projection, jacobson_radical
from .errors import (
    AlgebraMismatch,
    DimensionMismatch,
    Inconclusive,
    NotInvariant,
    NotSemisimple,
    PreconditionError,
    SchemaError,
)

DEFAULT_SEED = 0
ISO_ATTEMPTS = 256
EXHAUSTIVE_LIMIT = 2**16


class ModuleRep:
    def __init__(self, alg: Algebra, action, name: str | None = None):
        self.alg = alg
        self.field = alg.field
        action = self.field.asarray(action)
        if action.ndim != 3 or action.shape[0] != alg.dim or action.shape[1] != action.shape[2]:
            raise DimensionMismatch(
                f"action must have shape ({alg.dim}, d, d), got {action.shape}"
            )
        self.action = action
        self.dim = action.shape[1]
        self.name = name
        self._cache: dict = {}

    def __repr__(self):
        return f"ModuleRep({self.name or '?'}, dim={self.dim}, over {self.alg.name})"

    @property
    def gen_actions(self):
        """Action matrices of the algebra's generators."""
        if "gens" not in self._cache:
            F, n, d = self.field, self.alg.dim, self.dim
            g = self.alg.generators
            self._cache["gens"] = F.matmul(g, self.action.reshape(n, d * d)).reshape(-1, d, d)
        return self._cache["gens"]

    def act(self, x):
        F, n, d = self.field, self.alg.dim, self.dim
        return F.matmul(F.asarray(x).reshape(1, n), self.action.reshape(n, d * d)).reshape(d, d)

    @property
    def rad_actions(self):
        """Actions of a basis of the Jacobson radical of the algebra."""
        if "rad" not in self._cache:
            F, n, d = self.field, self.alg.dim, self.dim
            J = jacobson_radical(self.alg).basis
            self._cache["rad"] = F.matmul(J, self.action.reshape(n, d * d)).reshape(-1, d, d)
        return self._cache["rad"]

    def to_json(self, algebra_ref=None) -> dict:
        F = self.field
        return {
            "algebra": algebra_ref if algebra_ref is not None else self.alg.to_json(),
            "dim": self.dim,
            "action": F.dump(self.action),
        }

    @classmethod
    def from_json(cls, data, alg: Algebra | None = None) -> "ModuleRep":
        try:
            if alg is None:
                if not isinstance(data["algebra"], dict):
                    raise SchemaError("module references an algebra that was not supplied")
                alg = Algebra.from_json(data["algebra"])
            d = int(data["dim"])
            action = alg.field.load(data["action"]) if d else alg.field.zeros(alg.dim, 0, 0)
        except KeyError as exc:
            raise SchemaError(f"module is missing key {exc}") from exc
        if action.shape != (alg.dim, d, d):
            raise SchemaError(f"action has shape {action.shape}, expected ({alg.dim}, {d}, {d})")
        return cls(alg, action, name=data.get("name"))


def check_module(m: ModuleRep) -> list[str]:
    """Violations of rho(b_i) rho(b_j) = sum_k sc[i,j,k] rho(b_k) and rho(1) = I."""
    F, n, d = m.field, m.alg.dim, m.dim
    problems = []
    flat = m.action.reshape(n, d * d)
    for i in range(n):
        lhs = F.matmul(m.action[i], m.action)
        rhs = F.matmul(m.alg.sc[i], flat).reshape(n, d, d)
        for j in np.flatnonzero(np.any((lhs != rhs).reshape(n, -1), axis=1)):
            problems.append(f"rho(b_{i}) rho(b_{j}) != rho(b_{i} b_{j})")
    if d and np.any(m.act(m.alg.unit) != F.eye(d)):
        problems.append("unit does not act as the identity")
    return problems


def zero_module(alg: Algebra) -> ModuleRep:
    return ModuleRep(alg, alg.field.zeros(alg.dim, 0, 0), name="0")


def direct_sum(*mods: ModuleRep) -> ModuleRep:
    if not mods:
        raise ValueError("direct_sum needs at least one module")
    alg = mods[0].alg
    for m in mods:
        if m.alg is not alg:
            raise AlgebraMismatch("direct sum of modules over different algebras")
    F = alg.field
    d = sum(m.dim for m in mods)
    act = F.zeros(alg.dim, d, d)
    off = 0
    for m in mods:
        act[:, off:off + m.dim, off:off + m.dim] = m.action
        off += m.dim
    return ModuleRep(alg, act, name="+".join(m.name or "?" for m in mods))


def _same_alg(m: ModuleRep, n: ModuleRep):
    if m.alg is not n.alg:
        raise AlgebraMismatch(f"{m!r} and {n!r} are modules over different algebras")


# -- subspaces ---------------------------------------------------------------

def _apply_all(m: ModuleRep, rows, actions=None):
    """Images of row vectors under every matrix in ``actions``, as rows."""
    F = m.field
    actions = m.gen_actions if actions is None else actions
    if rows.shape[0] == 0 or actions.shape[0] == 0:
        return F.zeros(0, m.dim)
    img = F.matmul(actions, rows.T)  # (g, d, k)
    return np.transpose(img, (0, 2, 1)).reshape(-1, m.dim)


def spin(m: ModuleRep, vectors) -> np.ndarray:
    """Smallest submodule containing ``vectors`` (rref row basis)."""
    F, d = m.field, m.dim
    w = F.span(F.asarray(vectors).reshape(-1, d), d)
    while w.shape[0] and w.shape[0] < d:
        new = F.span(np.concatenate([w, _apply_all(m, w)]), d)
        if new.shape[0] == w.shape[0]:
            break
        w = new
    return w


def is_invariant(m: ModuleRep, rows) -> bool:
    F = m.field
    rows = F.asarray(rows).reshape(-1, m.dim)
    return F.subspace_contains(rows, _apply_all(m, rows))


def full_space(m: ModuleRep):
    return m.field.eye(m.dim)


def submodule(m: ModuleRep, rows, check: bool = True):
    """Restrict ``m`` to an invariant subspace; returns (module, inclusion)."""
    F, d = m.field, m.dim
    basis = F.span(rows, d)
    if check and not is_invariant(m, basis):
        raise NotInvariant("subspace is not a submodule")
    k = basis.shape[0]
    piv = F.rref(basis)[1] if k else []
    img = F.matmul(m.action, basis.T)  # (n, d, k)
    act = img[:, piv, :] if k else F.zeros(m.alg.dim, 0, 0)
    return ModuleRep(m.alg, act, name=f"sub({m.name})"), F.asarray(basis.T)


def quotient_module(m: ModuleRep, rows, check: bool = True):
    """``(m / span(rows), projection)`` with the complement on non-pivot coordinates."""
    F, d = m.field, m.dim
    basis = F.span(rows, d)
    if check and not is_invariant(m, basis):
        raise NotInvariant("cannot quotient by a non-invariant subspace")
    proj, lift = complement_projection(F, basis, d)
    act = F.matmul(F.matmul(proj, m.action), lift) if proj.shape[0] else F.zeros(m.alg.dim, 0, 0)
    q = ModuleRep(m.alg, act, name=f"{m.name}/sub")
    q._cache["lift"] = lift
    return q, proj


def preimage(m: ModuleRep, lower, proj, lift, rows_in_quotient):
    """Preimage in ``m`` of a subspace of ``m / lower``."""
    F = m.field
    up = F.matmul(F.asarray(rows_in_quotient), lift.T) if rows_in_quotient.shape[0] else F.zeros(0, m.dim)
    return F.subspace_sum(lower, up)


def subquotient(m: ModuleRep, upper, lower) -> ModuleRep:
    """The module ``upper / lower`` for submodules lower <= upper of m."""
    F = m.field
    sub, inc = submodule(m, upper, check=False)
    if lower.shape[0] == 0:
        return sub
    # express lower in the coordinates of upper
    piv = F.rref(F.span(upper, m.dim))[1]
    low = F.asarray(lower)[:, piv]
    q, _ = quotient_module(sub, low, check=False)
    return q


# -- radical, socle, series ----------------------------------------------------

def radical(m: ModuleRep) -> np.ndarray:
    """J . M as a row basis."""
    F = m.field
    if m.dim == 0:
        return F.zeros(0, 0)
    return F.span(_apply_all(m, full_space(m), m.rad_actions), m.dim)


def radical_of(m: ModuleRep, rows) -> np.ndarray:
    """J . W for a submodule W given by rows (ambient coordinates)."""
    F = m.field
    return F.span(_apply_all(m, F.asarray(rows).reshape(-1, m.dim), m.rad_actions), m.dim)


def socle(m: ModuleRep) -> np.ndarray:
    """{v : J v = 0} as a row basis."""
    F, d = m.field, m.dim
    if d == 0:
        return F.zeros(0, 0)
    ra = m.rad_actions
    if ra.shape[0] == 0:
        return F.eye(d)
    return F.kernel(ra.reshape(-1, d))


@dataclass(eq=False)
class Filtration:
    """0 = F_0 < F_1 < ... < F_n = M, each F_k an rref row basis."""

    module: ModuleRep
    chain: list
    kind: str
    projections: list = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    def layer(self, k: int) -> ModuleRep:
        """F_k / F_{k-1} for k = 1..n."""
        return subquotient(self.module, self.chain[k], self.chain[k - 1])

    def to_json(self):
        F = self.module.field
        return {"kind": self.kind, "chain": [F.dump(c) for c in self.chain]}


def socle_series(m: ModuleRep) -> Filtration:
    F, d = m.field, m.dim
    chain = [F.zeros(0, d)]
    projections = []
    while chain[-1].shape[0] < d:
        q, proj = quotient_module(m, chain[-1], check=False)
        projections.append(proj)
        nxt = preimage(m, chain[-1], proj, q._cache["lift"], socle(q))
        if nxt.shape[0] == chain[-1].shape[0]:
            raise NotInvariant("socle series stalled")
        chain.append(nxt)
    return Filtration(m, chain, "socle", projections)


def radical_series(m: ModuleRep) -> Filtration:
    F, d = m.field, m.dim
    desc = [F.eye(d)] if d else []
    while desc and desc[-1].shape[0]:
        nxt = radical_of(m, desc[-1])
        if nxt.shape[0] == desc[-1].shape[0]:
            raise NotInvariant("radical series stalled")
        desc.append(nxt)
    chain = list(reversed(desc)) if d else [F.zeros(0, 0)]
    return Filtration(m, chain, "radical")


def series(m: ModuleRep, kind: str) -> Filtration:
    if kind == "socle":
        return socle_series(m)
    if kind == "radical":
        return radical_series(m)
    raise ValueError(f"unknown filtration kind {kind!r}")


def loewy_length(m: ModuleRep) -> int:
    return radical_series(m).length


# -- homomorphisms -------------------------------------------------------------

class _Echelon:
    """Incremental membership test for a growing set of vectors."""

    def __init__(self, F, d):
        self.F = F
        self.rows = []  # (pivot, normalised row)

    def reduce(self, v):
        F = self.F
        v = F.asarray(v).copy()
        for c, row in self.rows:
            if v[c] != 0:
                v = F.asarray(v - v[c] * row)
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        nz = np.flatnonzero(v != 0)
        if nz.size == 0:
            return False
        c = nz[0]
        self.rows.append((c, self.F.asarray(v * self.F.inv_scalar(v[c]))))
        return True


def _spin_tree(m: ModuleRep):
    """A basis of m grown by spinning standard vectors, with its word tree."""
    if "tree" in m._cache:
        return m._cache["tree"]
    F, d = m.field, m.dim
    X = m.gen_actions
    ech = _Echelon(F, d)
    vecs, parent, seeds = [], [], []
    eye = F.eye(d)
    for i in range(d):
        if len(vecs) == d:
            break
        if not ech.add(eye[i]):
            continue
        start = len(vecs)
        vecs.append(eye[i])
        parent.append((-1, len(seeds)))
        seeds.append(i)
        t = start
        while t < len(vecs) and len(vecs) < d:
            for g in range(X.shape[0]):
                w = F.matmul(X[g], vecs[t].reshape(-1, 1)).reshape(-1)
                if ech.add(w):
                    vecs.append(w)
                    parent.append((t, g))
            t += 1
    basis = F.asarray(np.array(vecs).T.reshape(d, d)) if d else F.zeros(0, 0)
    binv = F.inv(basis)
    tree = (basis, binv, parent, len(seeds))
    m._cache["tree"] = tree
    return tree


def hom_space(m: ModuleRep, n: ModuleRep) -> np.ndarray:
    """Basis of Hom_A(m, n), shape (h, dim n, dim m).

    A homomorphism is fixed by the images of the seed vectors of a spinning
    basis of ``m``; the unknowns are those images and the constraints are the
    generator relations in the spinning basis.
    """
    _same_alg(m, n)
    F = m.field
    d1, d2 = m.dim, n.dim
    if d1 == 0 or d2 == 0:
        return F.zeros(0, d2, d1)
    basis, binv, parent, r = _spin_tree(m)
    X, Y = m.gen_actions, n.gen_actions
    u = r * d2
    T = F.zeros(d1, d2, u)
    eye2 = F.eye(d2)
    for t, (par, g) in enumerate(parent):
        if par < 0:
            T[t, :, g * d2:(g + 1) * d2] = eye2
        else:
            T[t] = F.matmul(Y[g], T[par])
    rows = []
    flatT = T.reshape(d1, d2 * u)
    for g in range(X.shape[0]):
        C = F.matmul(F.matmul(binv, X[g]), basis)  # X_g in the spinning basis
        yt = F.matmul(Y[g], T).reshape(d1, d2 * u)
        ct = F.matmul(C.T, flatT)
        rows.append(F.asarray(yt - ct).reshape(d1 * d2, u))
    if rows:
        sol = F.kernel(np.concatenate(rows))
    else:
        sol = F.eye(u)
    if sol.shape[0] == 0:
        return F.zeros(0, d2, d1)
    spun = F.matmul(T, sol.T)  # (t, d2, h): column t of hom k is T_t w_k
    homs = np.transpose(spun, (2, 1, 0))  # (h, d2, t)
    return F.matmul(homs, binv)


def end_algebra(m: ModuleRep) -> np.ndarray:
    return hom_space(m, m)


def is_intertwiner(f, m: ModuleRep, n: ModuleRep) -> bool:
    F = m.field
    f = F.asarray(f)
    return bool(np.all(F.matmul(f, m.gen_actions) == F.matmul(n.gen_actions, f)))


def _combos(F, hom, rng, attempts):
    """Candidate elements of a hom space: basis, pairwise sums, then random or exhaustive."""
    h = hom.shape[0]
    for k in range(h):
        yield hom[k], False
    for a in range(h):
        for b in range(a + 1, h):
            yield F.asarray(hom[a] + hom[b]), False
    q = F.order
    if q is not None and q**h <= EXHAUSTIVE_LIMIT:
        for idx in range(1, q**h):
            coeffs = []
            x = idx
            for _ in range(h):
                coeffs.append(x % q)
                x //= q
            c = F.asarray(np.array(coeffs, dtype=np.int64))
            yield F.matmul(c, hom.reshape(h, -1)).reshape(hom.shape[1:]), True
        return
    for _ in range(attempts):
        c = F.random(rng, (h,))
        yield F.matmul(c, hom.reshape(h, -1)).reshape(hom.shape[1:]), False


def _rad_layer_dims(m: ModuleRep) -> list[int]:
    return [c.shape[0] for c in radical_series(m).chain]


def find_isomorphism(m: ModuleRep, n: ModuleRep, rng=None, attempts: int = ISO_ATTEMPTS):
    """An invertible intertwiner m -> n, or None when none exists.

    ``None`` is only returned with a proof: dimension or radical-layer
    mismatch, Hom dimension mismatch, or an exhausted complete search.
    Raises :class:`Inconclusive` when a random search fails.
    """
    _same_alg(m, n)
    F = m.field
    if m.dim != n.dim:
        return None
    if m.dim == 0:
        return F.zeros(0, 0)
    if _rad_layer_dims(m) != _rad_layer_dims(n):
        return None
    hom = hom_space(m, n)
    if hom.shape[0] == 0:
        return None
    if hom.shape[0] != end_algebra(m).shape[0] or hom.shape[0] != end_algebra(n).shape[0]:
        return None
    rng = rng if rng is not None else np.random.default_rng(DEFAULT_SEED)
    exhaustive = False
    for cand, ex in _combos(F, hom, rng, attempts):
        exhaustive = exhaustive or ex
        if F.is_invertible(cand):
            return cand
    if exhaustive:
        return None
    raise Inconclusive(
        f"no invertible intertwiner found in {attempts} random attempts (hom dim {hom.shape[0]})"
    )


def is_isomorphic(m: ModuleRep, n: ModuleRep, rng=None) -> bool:
    if m.dim != n.dim:
        return False
    if "simple" in m._cache and "simple" in n._cache and m._cache["simple"] and n._cache["simple"]:
        return hom_space(m, n).shape[0] > 0
    return find_isomorphism(m, n, rng=rng) is not None


# -- simplicity ------------------------------------------------------------------

def _min_poly(F, x):
    """Coefficients (low to high, monic) of the minimal polynomial of matrix x."""
    d = x.shape[0]
    powers = [F.eye(d).reshape(-1)]
    cur = F.eye(d)
    while True:
        cur = F.matmul(cur, x)
        mat = F.asarray(np.array(powers).T)
        sol = F.solve(mat, cur.reshape(-1))
        if sol is not None:
            return [F.asarray(-sol[i:i + 1])[0] for i in range(len(powers))] + [F.scalar(1)]
        powers.append(cur.reshape(-1))


def _poly_at(F, coeffs, x):
    d = x.shape[0]
    out = F.zeros(d, d)
    for c in reversed(coeffs):
        out = F.asarray(F.matmul(out, x) + F.eye(d) * c)
    return out


def _factor_once(F, coeffs):
    """A proper monic factor of the polynomial, or None if it is irreducible."""
    if len(coeffs) <= 2:
        return None
    if F.characteristic:
        from sympy import ZZ
        from sympy.polys.galoistools import gf_factor

        p = F.characteristic
        f = [int(c) % p for c in reversed(coeffs)]
        _, factors = gf_factor(f, p, ZZ)
        if len(factors) == 1 and factors[0][1] == 1:
            return None
        g = factors[0][0]
        return [F.scalar(int(c)) for c in reversed(g)]
    import sympy

    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs])), t)
    _, factors = poly.factor_list()
    if len(factors) == 1 and factors[0][1] == 1:
        return None
    g = factors[0][0].monic()
    return [F.scalar(Fraction(int(c.p), int(c.q))) for c in reversed(g.all_coeffs())]


def _is_commutative(F, mats) -> bool:
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            if np.any(F.matmul(mats[a], mats[b]) != F.matmul(mats[b], mats[a])):
                return False
    return True


def _zero_divisor(F, end, rng, attempts=64):
    """A nonzero singular element of a semisimple endomorphism algebra, or None.

    ``None`` means the algebra is certified to be a field, i.e. the module is
    simple.  Uses minimal polynomials: a reducible one yields g(x) singular.
    """
    e = end.shape[0]
    commutative = _is_commutative(F, end)
    cands = [end[k] for k in range(e)]
    for _ in range(attempts):
        c = F.random(rng, (e,))
        cands.append(F.matmul(c, end.reshape(e, -1)).reshape(end.shape[1:]))
    for x in cands:
        if not F.is_invertible(x) and np.any(x != 0):
            return x
        coeffs = _min_poly(F, x)
        g = _factor_once(F, coeffs)
        if g is not None:
            return _poly_at(F, g, x)
        if commutative and len(coeffs) - 1 == e:
            return None
    raise Inconclusive("could not decide whether the endomorphism algebra is a field")


def proper_submodule(m: ModuleRep, rng=None):
    """A proper nonzero submodule (row basis), or None when m is simple."""
    if m.dim == 0:
        raise PreconditionError("the zero module is neither simple nor reducible")
    if m.dim == 1:
        return None
    F = m.field
    rad = radical(m)
    if rad.shape[0]:
        return rad
    end = end_algebra(m)
    if end.shape[0] == 1:
        return None
    rng = rng if rng is not None else np.random.default_rng(DEFAULT_SEED)
    z = _zero_divisor(F, end, rng)
    if z is None:
        return None
    return F.span(z.T, m.dim)


def is_simple(m: ModuleRep, rng=None) -> bool:
    if "simple" not in m._cache:
        m._cache["simple"] = proper_submodule(m, rng) is None
    return m._cache["simple"]


def find_simple_submodule(m: ModuleRep, start=None, rng=None):
    """A simple submodule (row basis in m's coordinates).

    Starts from the spin of ``start`` (default: the lowest-index standard
    basis vector) and shrinks through proper submodules.
    """
    F, d = m.field, m.dim
    if d == 0:
        raise PreconditionError("zero module has no simple submodule")
    v = F.eye(d)[0] if start is None else start
    cur = spin(m, v)
    while True:
        sub, inc = submodule(m, cur, check=False)
        inner = proper_submodule(sub, rng)
        if inner is None:
            return cur
        cur = F.span(F.matmul(inner, inc.T), d)


# -- simple labels ---------------------------------------------------------------

class SimpleLabel:
    def __init__(self, catalog, index, module, name):
        self.catalog = catalog
        self.index = index
        self.module = module
        self.name = name
        self.end_dim = end_algebra(module).shape[0]

    def __repr__(self):
        return f"SimpleLabel({self.name})"

    def __lt__(self, other):
        return self.name < other.name


class SimpleCatalog:
    """Isomorphism classes of simple modules met so far over one algebra."""

    def __init__(self, alg: Algebra):
        self.alg = alg
        self.labels: list[SimpleLabel] = []

    def find(self, s: ModuleRep):
        for lab in self.labels:
            if lab.module.dim == s.dim and hom_space(lab.module, s).shape[0]:
                return lab
        return None

    def add(self, s: ModuleRep, name: str | None = None, check: bool = True) -> SimpleLabel:
        if s.alg is not self.alg:
            raise AlgebraMismatch("simple module over a different algebra")
        found = self.find(s)
        if found is not None:
            return found
        if check and not is_simple(s):
            raise NotSemisimple("catalog entries must be simple modules")
        s._cache["simple"] = True
        name = name or f"S{len(self.labels)}"
        if any(lab.name == name for lab in self.labels):
            name = f"{name}#{len(self.labels)}"
        lab = SimpleLabel(self, len(self.labels), s, name)
        self.labels.append(lab)
        return lab

    def by_name(self, name: str) -> SimpleLabel:
        for lab in self.labels:
            if lab.name == name:
                return lab
        raise KeyError(name)


def decompose_semisimple(m: ModuleRep, catalog: SimpleCatalog | None = None, rng=None) -> Counter:
    """Multiset of simple labels of a semisimple module."""
    catalog = catalog or m.alg.catalog
    F = m.field
    if m.dim and radical(m).shape[0]:
        raise NotSemisimple("decompose_semisimple needs a module with zero radical")
    counts: Counter = Counter()
    rem = m
    while rem.dim:
        iso = F.zeros(0, rem.dim)
        for lab in catalog.labels:
            if lab.module.dim > rem.dim:
                continue
            hom = hom_space(lab.module, rem)
            if hom.shape[0]:
                counts[lab] += hom.shape[0] // lab.end_dim
                imgs = np.transpose(hom, (0, 2, 1)).reshape(-1, rem.dim)
                iso = F.subspace_sum(iso, imgs)
        if iso.shape[0] == rem.dim:
            break
        if iso.shape[0]:
            rem, _ = quotient_module(rem, iso, check=False)
        s_rows = find_simple_submodule(rem, rng=rng)
        s, _ = submodule(rem, s_rows, check=False)
        catalog.add(s, check=False)
    return counts


def simple_modules(alg: Algebra) -> list[ModuleRep]:
    """Representatives of every simple module, read off the regular top."""
    if "simples" not in alg._cache:
        from .algcore import regular_module

        reg = regular_module(alg)
        top, _ = quotient_module(reg, radical(reg), check=False)
        counts = decompose_semisimple(top, alg.catalog)
        alg._cache["simples"] = [lab.module for lab in sorted(counts, key=lambda lab: lab.index)]
    return alg._cache["simples"]


def composition_factors(m: ModuleRep, catalog: SimpleCatalog | None = None) -> Counter:
    total: Counter = Counter()
    filt = radical_series(m)
    for k in range(1, filt.length + 1):
        total += decompose_semisimple(filt.layer(k), catalog)
    return total


# -- splitting -------------------------------------------------------------------

def splits(f, m_sub: ModuleRep, m: ModuleRep) -> bool:
    """Does the monomorphism f: m_sub -> m admit an intertwining retraction?"""
    _same_alg(m_sub, m)
    F = m.field
    f = F.asarray(f).reshape(m.dim, m_sub.dim)
    if m_sub.dim == 0:
        return True
    if F.rank(f) != m_sub.dim:
        raise PreconditionError("splits: f is not injective")
    if not is_intertwiner(f, m_sub, m):
        raise PreconditionError("splits: f does not intertwine the actions")
    hom = hom_space(m, m_sub)
    if hom.shape[0] == 0:
        return False
    comp = F.matmul(hom, f)  # (h, ds, ds)
    lhs = comp.reshape(hom.shape[0], -1).T
    return F.solve(lhs, F.eye(m_sub.dim).reshape(-1)) is not None
