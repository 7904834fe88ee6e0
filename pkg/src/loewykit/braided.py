"""Braided categories as module categories of quasitriangular Hopf algebras.

Modules over ``h.algebra`` are the objects.  Tensor products use the
coproduct with the left-factor-major index pairing of :mod:`exactlin`;
associators and unitors are identity matrices.  An algebra object ``A`` is a
module with H-linear ``mu`` and ``iota``; its modules are realized as modules
over the smash product ``A # H``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import modth
from .algcore import Algebra, check_algebra, smash_product
from .errors import (
    AlgebraMismatch,
    AxiomError,
    LoewyError,
    NotSemisimple,
    PreconditionError,
    SchemaError,
)
from .modth import ModuleRep


class HopfAlgebra:
    """Hopf algebra data on top of an :class:`Algebra`.

    ``comul`` has shape (n*n, n): column j holds the coordinates of Delta(b_j)
    with ``b_u (x) b_v`` at row ``u * n + v``.  ``antipode`` column j is S(b_j).
    ``rmatrix`` (optional) is a vector of length n*n in the same pairing.
    """

    def __init__(self, algebra: Algebra, comul, counit, antipode, rmatrix=None, name=None):
        F, n = algebra.field, algebra.dim
        self.algebra = algebra
        self.field = F
        self.comul = F.asarray(comul).reshape(n * n, n)
        self.counit = F.asarray(counit).reshape(n)
        self.antipode = F.asarray(antipode).reshape(n, n)
        self.rmatrix = None if rmatrix is None else F.asarray(rmatrix).reshape(n * n)
        self.name = name or algebra.name
        self._cache: dict = {}

    @property
    def underlying(self) -> Algebra:
        return self.algebra

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __repr__(self):
        return f"HopfAlgebra({self.name!r}, dim={self.dim})"

    def require_r(self):
        if self.rmatrix is None:
            raise PreconditionError(f"{self.name} has no R-matrix; braiding is unavailable")
        return self.rmatrix

    def r_is_trivial(self) -> bool:
        if self.rmatrix is None:
            return False
        return bool(np.all(self.rmatrix == self.field.kron(self.algebra.unit, self.algebra.unit)))

    def to_json(self) -> dict:
        F = self.field
        out = {
            "algebra": self.algebra.to_json(),
            "comul": F.dump(self.comul),
            "counit": F.dump(self.counit),
            "antipode": F.dump(self.antipode),
        }
        if self.rmatrix is not None:
            out["rmatrix"] = F.dump(self.rmatrix)
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data) -> "HopfAlgebra":
        try:
            alg = Algebra.from_json(data["algebra"])
            F, n = alg.field, alg.dim
            comul = F.load(data["comul"])
            counit = F.load(data["counit"])
            antipode = F.load(data["antipode"])
            rmat = F.load(data["rmatrix"]) if data.get("rmatrix") is not None else None
        except KeyError as exc:
            raise SchemaError(f"hopf algebra is missing key {exc}") from exc
        expect = {"comul": (comul, n * n * n), "counit": (counit, n), "antipode": (antipode, n * n)}
        if rmat is not None:
            expect["rmatrix"] = (rmat, n * n)
        for key, (arr, size) in expect.items():
            if arr.size != size:
                raise SchemaError(f"{key} has {arr.size} entries, expected {size}")
        return cls(alg, comul, counit, antipode, rmat, name=data.get("name"))


# -- tensor powers of H as plain vectors ------------------------------------------

def _left_mult_tensor(h: HopfAlgebra, x, k: int):
    """Matrix of left multiplication by x in H^(x)k, x given as a flat vector."""
    F, n = h.field, h.dim
    L = h.algebra.left_mult
    x = F.asarray(x).reshape(-1)
    out = F.zeros(n**k, n**k)
    for idx in np.flatnonzero(x):
        digits = np.unravel_index(idx, (n,) * k)
        mat = L[digits[0]]
        for d in digits[1:]:
            mat = F.kron(mat, L[d])
        out = F.asarray(out + x[idx] * mat)
    return out


def _tensor_mul(h: HopfAlgebra, x, y, k: int):
    return h.field.matmul(_left_mult_tensor(h, x, k), h.field.asarray(y).reshape(-1, 1)).reshape(-1)


def _flip_vector(n: int, x, F):
    return F.asarray(F.asarray(x).reshape(n, n).T.reshape(-1))


def check_hopf(h: HopfAlgebra) -> list[str]:
    """Violated Hopf and quasitriangular axioms; empty iff valid."""
    F, n = h.field, h.dim
    H = h.algebra
    problems = [f"algebra: {p}" for p in check_algebra(H)]
    D, eps, S = h.comul, h.counit, h.antipode
    eye = F.eye(n)
    if np.any(F.matmul(F.kron(D, eye), D) != F.matmul(F.kron(eye, D), D)):
        problems.append("coassociativity fails")
    if np.any(F.matmul(F.kron(eps.reshape(1, n), eye), D) != eye):
        problems.append("left counit law fails")
    if np.any(F.matmul(F.kron(eye, eps.reshape(1, n)), D) != eye):
        problems.append("right counit law fails")
    one = H.unit
    if np.any(F.matmul(D, one.reshape(n, 1)).reshape(-1) != F.kron(one, one)):
        problems.append("Delta(1) != 1 (x) 1")
    if F.matmul(eps.reshape(1, n), one.reshape(n, 1))[0, 0] != 1:
        problems.append("counit(1) != 1")
    if np.any(F.matmul(H.sc, eps.reshape(n, 1)).reshape(n, n) != F.matmul(eps.reshape(n, 1), eps.reshape(1, n))):
        problems.append("counit is not multiplicative")
    for i in range(n):
        lhs = F.matmul(_left_mult_tensor(h, D[:, i], 2), D)
        rhs = F.matmul(D, H.sc[i].T)
        bad = np.flatnonzero(np.any(lhs != rhs, axis=0))
        for j in bad[:5]:
            problems.append(f"Delta(b_{i} b_{j}) != Delta(b_{i}) Delta(b_{j})")
    sc_flat = H.sc.reshape(n, n * n)
    X = F.matmul(S.T, sc_flat).reshape(n * n, n)  # S(b_u) b_v at row (u, v)
    Y = np.transpose(F.matmul(S.T, np.transpose(H.sc, (1, 0, 2)).reshape(n, n * n)).reshape(n, n, n), (1, 0, 2))
    target = F.matmul(eps.reshape(n, 1), one.reshape(1, n))
    if np.any(F.matmul(D.T, X) != target):
        problems.append("antipode law m(S (x) id)Delta = 1 eps fails")
    if np.any(F.matmul(D.T, Y.reshape(n * n, n)) != target):
        problems.append("antipode law m(id (x) S)Delta = 1 eps fails")
    if h.rmatrix is not None:
        problems += _check_r(h)
    return problems


def _check_r(h: HopfAlgebra) -> list[str]:
    F, n = h.field, h.dim
    D = h.comul
    R = h.rmatrix
    problems = []
    if h.r_is_trivial():
        # R = 1 (x) 1: quasitriangularity is cocommutativity
        flipped = np.transpose(D.reshape(n, n, n), (1, 0, 2)).reshape(n * n, n)
        if np.any(flipped != D):
            problems.append("R = 1 (x) 1 but the coproduct is not cocommutative")
        return problems
    LR = _left_mult_tensor(h, R, 2)
    if F.rank(LR) != n * n:
        problems.append("R is not invertible")
    eye = F.eye(n)
    one = h.algebra.unit
    Rm = R.reshape(n, n)
    r12 = F.kron(R, one)
    r23 = F.kron(one, R)
    r13 = F.asarray(np.einsum("uv,w->uwv", Rm, one).reshape(-1)) if F.characteristic else \
        F.asarray(np.einsum("uv,w->uwv", Rm.astype(object), one.astype(object)).reshape(-1))
    lhs1 = F.matmul(F.kron(D, eye), R.reshape(-1, 1)).reshape(-1)
    if np.any(lhs1 != _tensor_mul(h, r13, r23, 3)):
        problems.append("(Delta (x) id)(R) != R13 R23")
    lhs2 = F.matmul(F.kron(eye, D), R.reshape(-1, 1)).reshape(-1)
    if np.any(lhs2 != _tensor_mul(h, r13, r12, 3)):
        problems.append("(id (x) Delta)(R) != R13 R12")
    for b in range(n):
        left = F.matmul(LR, D[:, b].reshape(-1, 1)).reshape(-1)
        right = _tensor_mul(h, _flip_vector(n, D[:, b], F), R, 2)
        if np.any(left != right):
            problems.append(f"R Delta(b_{b}) != Delta^op(b_{b}) R")
    return problems


def require_hopf(h: HopfAlgebra):
    problems = check_hopf(h)
    if problems:
        raise AxiomError("Hopf algebra axioms fail", problems)


# -- the monoidal structure ------------------------------------------------------

def _check_over(h: HopfAlgebra, *mods: ModuleRep):
    for m in mods:
        if m.alg is not h.algebra:
            raise AlgebraMismatch(f"{m!r} is not a module over {h.name}")


def _pair_action(h: HopfAlgebra, coeffs, m: ModuleRep, n: ModuleRep):
    """sum_{u,v} coeffs[(u,v), k] rho_m(b_u) (x) rho_n(b_v) for every column k."""
    F = h.field
    nh = h.dim
    coeffs = F.asarray(coeffs).reshape(nh * nh, -1)
    d = m.dim * n.dim
    out = F.zeros(coeffs.shape[1], d, d)
    for u, v in {(int(r) // nh, int(r) % nh) for r in np.flatnonzero(np.any(coeffs != 0, axis=1))}:
        kr = F.kron(m.action[u], n.action[v]).reshape(1, d * d)
        col = coeffs[u * nh + v].reshape(-1, 1)
        out = F.asarray(out + F.matmul(col, kr).reshape(-1, d, d))
    return out


def tensor_module(h: HopfAlgebra, m: ModuleRep, n: ModuleRep) -> ModuleRep:
    _check_over(h, m, n)
    act = _pair_action(h, h.comul, m, n)
    return ModuleRep(h.algebra, act, name=f"({m.name})x({n.name})")


def unit_module(h: HopfAlgebra) -> ModuleRep:
    if "unit" not in h._cache:
        h._cache["unit"] = ModuleRep(h.algebra, h.counit.reshape(-1, 1, 1), name="1")
    return h._cache["unit"]


def flip_matrix(F, d1: int, d2: int):
    """The swap V (x) W -> W (x) V."""
    P = F.zeros(d1 * d2, d1 * d2)
    for i in range(d1):
        for j in range(d2):
            P[j * d1 + i, i * d2 + j] = F.scalar(1)
    return P


def braiding(h: HopfAlgebra, m: ModuleRep, n: ModuleRep):
    """c_{M,N} = flip o (action of R), an isomorphism M (x) N -> N (x) M."""
    R = h.require_r()
    _check_over(h, m, n)
    F = h.field
    rm = _pair_action(h, R.reshape(-1, 1), m, n)[0]
    return F.matmul(flip_matrix(F, m.dim, n.dim), rm)


def dual_module(h: HopfAlgebra, m: ModuleRep):
    """(M*, ev, coev); ev: M* (x) M -> 1 and coev: 1 -> M (x) M*."""
    _check_over(h, m)
    F, nh, d = h.field, h.dim, m.dim
    s_act = F.matmul(h.antipode.T, m.action.reshape(nh, d * d)).reshape(nh, d, d)
    dual = ModuleRep(h.algebra, np.ascontiguousarray(np.transpose(s_act, (0, 2, 1))), name=f"({m.name})*")
    ev = F.eye(d).reshape(1, d * d)
    coev = F.eye(d).reshape(d * d, 1)
    return dual, ev, coev


def check_duality(h: HopfAlgebra, m: ModuleRep) -> list[str]:
    """Snake identities and H-linearity of ev and coev."""
    F, d = h.field, m.dim
    dual, ev, coev = dual_module(h, m)
    problems = []
    one = unit_module(h)
    if not modth.is_intertwiner(ev, tensor_module(h, dual, m), one):
        problems.append("ev is not H-linear")
    if not modth.is_intertwiner(coev, one, tensor_module(h, m, dual)):
        problems.append("coev is not H-linear")
    eye = F.eye(d)
    snake1 = F.matmul(F.kron(eye, ev), F.kron(coev, eye))
    if np.any(snake1 != eye):
        problems.append("(id (x) ev)(coev (x) id) != id_M")
    snake2 = F.matmul(F.kron(ev, eye), F.kron(eye, coev))
    if np.any(snake2 != eye):
        problems.append("(ev (x) id)(id (x) coev) != id_M*")
    return problems


def is_invertible(h: HopfAlgebra, u: ModuleRep) -> bool:
    """ev_U and coev_U invertible; cross-checked against U (x) U* = 1."""
    _check_over(h, u)
    F = h.field
    _, ev, coev = dual_module(h, u)
    by_ev = bool(u.dim) and F.is_invertible(ev) and F.is_invertible(coev)
    by_dual = u.dim == 1 and modth.is_isomorphic(tensor_module(h, u, dual_module(h, u)[0]), unit_module(h))
    if by_ev != by_dual:
        raise LoewyError(f"invertibility checks disagree on {u!r}")
    return by_ev


def is_unit_object(h: HopfAlgebra, u: ModuleRep) -> bool:
    return u.dim == 1 and bool(np.all(u.action.reshape(-1) == h.counit))


def fixed_point_free(h: HopfAlgebra, family, simples) -> bool:
    """No non-unit U in ``family`` has U (x) N = N for a listed simple N."""
    for u in family:
        if not is_invertible(h, u):
            raise PreconditionError("fixed_point_free needs an invertible family")
        if modth.is_isomorphic(u, unit_module(h)):
            continue
        for s in simples:
            if modth.is_isomorphic(tensor_module(h, u, s), s):
                return False
    return True


# -- algebra objects ---------------------------------------------------------------

@dataclass(eq=False)
class AlgebraObject:
    """An algebra (A, mu, iota) in the module category of a Hopf algebra.

    ``mu`` has shape (dim A, dim A * dim A) with ``a_i (x) a_j`` at column
    ``i * dim A + j``; ``iota`` is the vector of the unit.
    """

    carrier: ModuleRep
    mu: np.ndarray
    iota: np.ndarray
    name: str = "A"
    _smash: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        F, d = self.carrier.field, self.carrier.dim
        self.mu = F.asarray(self.mu).reshape(d, d * d)
        self.iota = F.asarray(self.iota).reshape(d)

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def to_json(self) -> dict:
        F = self.carrier.field
        return {
            "carrier": self.carrier.to_json(algebra_ref="hopf"),
            "mu": F.dump(self.mu),
            "iota": F.dump(self.iota),
            "name": self.name,
        }

    @classmethod
    def from_json(cls, data, h: HopfAlgebra) -> "AlgebraObject":
        try:
            carrier = ModuleRep.from_json(data["carrier"], alg=h.algebra)
            F, d = h.field, carrier.dim
            mu = F.load(data["mu"])
            iota = F.load(data["iota"])
        except KeyError as exc:
            raise SchemaError(f"algebra object is missing key {exc}") from exc
        if mu.size != d**3 or iota.size != d:
            raise SchemaError("mu or iota has the wrong size for the carrier")
        return cls(carrier, mu, iota, name=data.get("name", "A"))


def unit_algebra_object(h: HopfAlgebra) -> AlgebraObject:
    F = h.field
    return AlgebraObject(unit_module(h), F.eye(1), F.eye(1).reshape(1), name="1")


def check_algebra_object(h: HopfAlgebra, a: AlgebraObject) -> list[str]:
    """Violated algebra-object axioms, commutativity included; empty iff valid."""
    F, d = h.field, a.dim
    car = a.carrier
    problems = []
    if car.alg is not h.algebra:
        return ["carrier is not a module over the Hopf algebra"]
    problems += [f"carrier: {p}" for p in modth.check_module(car)]
    aa = tensor_module(h, car, car)
    if not modth.is_intertwiner(a.mu, aa, car):
        problems.append("mu is not H-linear")
    if not modth.is_intertwiner(a.iota.reshape(d, 1), unit_module(h), car):
        problems.append("iota is not H-linear")
    eye = F.eye(d)
    if np.any(F.matmul(a.mu, F.kron(a.mu, eye)) != F.matmul(a.mu, F.kron(eye, a.mu))):
        problems.append("associativity mu(mu (x) id) = mu(id (x) mu) fails")
    if np.any(F.matmul(a.mu, F.kron(a.iota.reshape(d, 1), eye)) != eye):
        problems.append("left unit law mu(iota (x) id) = id fails")
    if np.any(F.matmul(a.mu, F.kron(eye, a.iota.reshape(d, 1))) != eye):
        problems.append("right unit law mu(id (x) iota) = id fails")
    if h.rmatrix is None:
        problems.append("commutativity: no R-matrix, braiding undefined")
    else:
        c = braiding(h, car, car)
        if np.any(F.matmul(a.mu, c) != a.mu):
            bad = np.argwhere(F.matmul(a.mu, c) != a.mu)
            i, j = divmod(int(bad[0][1]), d)
            problems.append(f"commutativity mu o c_(A,A) = mu fails (first at a_{i} (x) a_{j})")
    return problems


def smash(h: HopfAlgebra, a: AlgebraObject) -> Algebra:
    """The (cached) smash product realizing Rep A."""
    key = id(h)
    if key not in a._smash:
        a._smash[key] = smash_product(h, a)
    return a._smash[key]


@dataclass(eq=False)
class CurrentDecomposition:
    summands: list  # (ModuleRep, inclusion (dA x 1), projection (1 x dA))
    unit_index: int
    closed: bool
    products: dict  # (i, j) -> k with U_i (x) U_j = U_k, or None

    def modules(self):
        return [s[0] for s in self.summands]


def current_decomposition(h: HopfAlgebra, a: AlgebraObject) -> CurrentDecomposition:
    """Split the carrier into invertible summands and locate the unit."""
    F, d = h.field, a.dim
    car = a.carrier
    if modth.radical(car).shape[0]:
        raise NotSemisimple("carrier of the algebra object is not semisimple")
    counts = modth.decompose_semisimple(car, h.algebra.catalog)
    one = unit_module(h)
    cols, mods, unit_index = [], [], None
    for lab in sorted(counts, key=lambda lab: lab.index):
        s = lab.module
        if s.dim != 1 or not is_invertible(h, s):
            raise NotSemisimple(f"summand {lab.name} of dimension {s.dim} is not invertible")
        hom = modth.hom_space(s, car)  # (r, d, 1)
        vecs = hom[:, :, 0]
        if modth.is_isomorphic(s, one):
            # iota spans the first unit copy; extend greedily to the isotypic part
            basis = [a.iota]
            for v in vecs:
                if F.rank(np.array(basis + [v])) == len(basis) + 1:
                    basis.append(v)
            vecs = F.asarray(np.array(basis))
            if unit_index is None:
                unit_index = len(mods)
        for v in vecs:
            cols.append(v)
            mods.append(s)
    if unit_index is None:
        raise PreconditionError("algebra object has no unit summand")
    B = F.asarray(np.array(cols).T.reshape(d, len(cols)))
    Binv = F.inv(B)
    if Binv is None:
        raise LoewyError("summand inclusions do not form a basis")
    summands = [(mods[k], B[:, k:k + 1], Binv[k:k + 1, :]) for k in range(d)]
    products, closed = {}, True
    for i in range(d):
        for j in range(d):
            t = tensor_module(h, mods[i], mods[j])
            hit = next((k for k in range(d) if modth.is_isomorphic(t, mods[k])), None)
            products[(i, j)] = hit
            closed = closed and hit is not None
    return CurrentDecomposition(summands, unit_index, closed, products)


# -- induction ---------------------------------------------------------------------

def induce(h: HopfAlgebra, a: AlgebraObject, m: ModuleRep) -> ModuleRep:
    """F_A(M) = A (x) M as a module over the smash product."""
    _check_over(h, m)
    S = smash(h, a)
    F, na, nh, dm = h.field, a.dim, h.dim, m.dim
    diag = tensor_module(h, a.carrier, m).action  # (nh, na*dm, na*dm)
    lmu = np.transpose(a.mu.reshape(na, na, na), (1, 0, 2))  # lmu[i][s, t] = coeff of a_s in a_i a_t
    eye = F.eye(dm)
    act = F.zeros(S.dim, na * dm, na * dm)
    for i in range(na):
        li = F.kron(lmu[i], eye)
        act[i * nh:(i + 1) * nh] = F.matmul(li, diag)
    out = ModuleRep(S, F.asarray(act), name=f"F({m.name})")
    return out


def induce_morphism(h: HopfAlgebra, a: AlgebraObject, f, source: ModuleRep | None = None,
                    target: ModuleRep | None = None):
    """F_A(f) = id_A (x) f; checks H-linearity when the modules are given."""
    F = h.field
    f = F.asarray(f)
    if source is not None and target is not None and not modth.is_intertwiner(f, source, target):
        raise PreconditionError("induce_morphism: f is not H-linear")
    return F.kron(F.eye(a.dim), f)


def restrict(h: HopfAlgebra, a: AlgebraObject, n: ModuleRep) -> ModuleRep:
    """Forget the A-action: H acts through iota (x) h."""
    S = smash(h, a)
    if n.alg is not S:
        raise AlgebraMismatch("restrict expects a module over the smash product")
    F, nh, d = h.field, h.dim, n.dim
    emb = F.kron(a.iota.reshape(1, -1), F.eye(nh))  # (nh, dim S)
    act = F.matmul(emb, n.action.reshape(S.dim, d * d)).reshape(nh, d, d)
    return ModuleRep(h.algebra, act, name=f"G({n.name})")


def frobenius_dims(h: HopfAlgebra, a: AlgebraObject, m: ModuleRep, n: ModuleRep):
    d1 = modth.hom_space(induce(h, a, m), n).shape[0]
    d2 = modth.hom_space(m, restrict(h, a, n)).shape[0]
    return d1, d2


# -- verification --------------------------------------------------------------------

def _check(ok, detail=None):
    out = {"pass": bool(ok)}
    if detail is not None:
        out["detail"] = detail
    return out


def verify_hypotheses(h: HopfAlgebra, a: AlgebraObject, simples=None) -> dict:
    """Checks (i) A simple over itself, (ii) no fixed points on simples,
    (iii) a unit summand, (iv) all summands simple and invertible, closed family,
    plus the non-commutative algebra-object axioms.

    Commutativity is reported under ``"commutative"`` and does not enter
    ``"pass"``: induction and the smash product only use the other axioms.
    """
    simples = modth.simple_modules(h.algebra) if simples is None else simples
    checks = {}
    problems = check_algebra_object(h, a)
    axioms = [p for p in problems if not p.startswith("commutativity")]
    comm = [p for p in problems if p.startswith("commutativity")]
    checks["algebra_object_axioms"] = _check(not axioms, axioms or None)
    commutative = _check(not comm, comm or None)
    if axioms:
        return {"pass": False, "checks": checks, "commutative": commutative}
    regA = induce(h, a, unit_module(h))
    checks["simple_over_itself"] = _check(modth.is_simple(regA))
    try:
        dec = current_decomposition(h, a)
    except (NotSemisimple, PreconditionError) as exc:
        checks["unit_summand"] = _check(False, str(exc))
        checks["summands_simple_invertible"] = _check(False, str(exc))
        checks["fixed_point_free"] = _check(False, "no current decomposition")
        return {"pass": False, "checks": checks, "commutative": commutative}
    fam = dec.modules()
    checks["unit_summand"] = _check(True, {"unit_index": dec.unit_index})
    checks["summands_simple_invertible"] = _check(
        all(modth.is_simple(u) and is_invertible(h, u) for u in fam) and dec.closed,
        {"closed": dec.closed},
    )
    checks["fixed_point_free"] = _check(fixed_point_free(h, fam, simples))
    return {"pass": all(c["pass"] for c in checks.values()), "checks": checks, "commutative": commutative}


def induced_label_map(h: HopfAlgebra, a: AlgebraObject, labels):
    """SimpleLabel of H -> SimpleLabel of the smash product, via induction."""
    S = smash(h, a)
    out = {}
    for lab in labels:
        ind = induce(h, a, lab.module)
        out[lab] = S.catalog.add(ind, name=f"F({lab.name})")
    return out


def _induce_subspace(F, na: int, rows):
    """Rows of A (x) W inside A (x) M for a row basis W of M."""
    return F.span(F.kron(F.eye(na), rows), na * rows.shape[1]) if rows.shape[0] else F.zeros(0, na * rows.shape[1])


def sample_submodules(m: ModuleRep, rng, count: int):
    """Submodules of m: both series, then spins of random vectors."""
    F = m.field
    subs = []
    seen = set()

    def add(rows):
        key = F.span(rows, m.dim).tobytes() if rows.shape[0] else b""
        if key not in seen:
            seen.add(key)
            subs.append(F.span(rows, m.dim) if rows.shape[0] else F.zeros(0, m.dim))

    for c in modth.socle_series(m).chain + modth.radical_series(m).chain:
        add(c)
    tries = 0
    while len(subs) < count and tries < 4 * count:
        tries += 1
        k = int(rng.integers(1, 3))
        add(modth.spin(m, F.random(rng, (k, m.dim))))
    return subs[:count] if len(subs) > count else subs


def hom_count_sides(h: HopfAlgebra, a: AlgebraObject, x: ModuleRep, fx: ModuleRep | None = None):
    """Both sides of sum_{F(S) simple} dim Hom(F(S), F(X)) = sum_S dim Hom(S, X)."""
    simples = modth.simple_modules(h.algebra)
    fx = induce(h, a, x) if fx is None else fx
    S = smash(h, a)
    reps = {}
    for s in simples:
        lab = S.catalog.add(induce(h, a, s), name=f"F({s.name})")
        reps.setdefault(lab.index, lab.module)
    lhs = sum(modth.hom_space(r, fx).shape[0] for r in reps.values())
    rhs = sum(modth.hom_space(s, x).shape[0] for s in simples)
    return lhs, rhs


def verify_preservation(h: HopfAlgebra, a: AlgebraObject, m: ModuleRep, kind: str = "both",
                        rng=None, samples: int = 12, hypotheses: dict | None = None) -> dict:
    """Executable preservation checks for F_A on one module.

    (a) F(Soc M) = Soc F(M) and F(Rad M) = Rad F(M) as subspaces of A (x) M;
    (b) the whole socle / radical series is carried over, layer by layer;
    (c) Loewy diagrams match under the induced label map;
    (d) splits(f) iff splits(F f) on sampled submodule inclusions;
    (e) the Hom-counting identity on Soc M and Rad M.
    """
    from . import loewy

    hyp = verify_hypotheses(h, a) if hypotheses is None else hypotheses
    if not hyp["pass"]:
        raise PreconditionError("verify_preservation: hypotheses fail")
    rng = rng if rng is not None else np.random.default_rng(0)
    F, na = h.field, a.dim
    kinds = ["socle", "radical"] if kind == "both" else [kind]
    fm = induce(h, a, m)
    checks = {}

    soc_ok = bool(np.array_equal(_induce_subspace(F, na, modth.socle(m)), modth.socle(fm)))
    rad_ok = bool(np.array_equal(_induce_subspace(F, na, modth.radical(m)), modth.radical(fm)))
    checks["a_socle_radical"] = _check(soc_ok and rad_ok, {"socle": soc_ok, "radical": rad_ok})

    series_ok = {}
    for k in ("socle", "radical"):
        s_m = modth.series(m, k)
        s_f = modth.series(fm, k)
        same_len = s_m.length == s_f.length
        same = same_len and all(
            np.array_equal(_induce_subspace(F, na, c1), c2) for c1, c2 in zip(s_m.chain, s_f.chain)
        )
        series_ok[k] = same
    checks["b_filtrations"] = _check(all(series_ok.values()), series_ok)

    labels = set()
    diags = {}
    for k in kinds:
        d_m = loewy.loewy_diagram(m, k)
        d_f = loewy.loewy_diagram(fm, k)
        diags[k] = (d_m, d_f)
        labels |= set(d_m.labels.values())
    lmap = induced_label_map(h, a, sorted(labels, key=lambda lab: lab.index))
    name_map = {lab.name: lmap[lab].name for lab in lmap}
    match = {k: loewy.diagrams_match(dm, df, name_map) for k, (dm, df) in diags.items()}
    checks["c_diagrams"] = _check(all(match.values()), match)

    subs = sample_submodules(m, rng, samples)
    mismatches = []
    for rows in subs:
        if rows.shape[0] == 0:
            continue
        sub, inc = modth.submodule(m, rows, check=False)
        fsub = induce(h, a, sub)
        finc = induce_morphism(h, a, inc)
        s1 = modth.splits(inc, sub, m)
        s2 = modth.splits(finc, fsub, fm)
        if s1 != s2:
            mismatches.append({"dim": int(rows.shape[0]), "splits": s1, "induced_splits": s2})
    checks["d_strong_exact"] = _check(not mismatches, {"tested": len(subs), "mismatches": mismatches})

    counts = {}
    for k, rows in (("socle", modth.socle(m)), ("radical", modth.radical(m)), ("module", None)):
        if rows is None:
            x, fx = m, fm
        else:
            x, _ = modth.submodule(m, rows, check=False)
            fx = None
        if x.dim == 0:
            counts[k] = [0, 0]
            continue
        counts[k] = list(hom_count_sides(h, a, x, fx))
    checks["e_hom_count"] = _check(all(l == r for l, r in counts.values()), counts)
    return {"pass": all(c["pass"] for c in checks.values()), "checks": checks}
