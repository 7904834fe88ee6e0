"""Finite-dimensional associative unital algebras given by structure constants.

``sc[i, j, k]`` is the coefficient of ``b_k`` in ``b_i * b_j``.  The left
regular representation has ``L_i[k, j] = sc[i, j, k]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AxiomError, LoewyError, NotInvariant, UnsupportedCharacteristic
from .exactlin import Field, field_from_json


class Algebra:
    """An algebra over a prime field or the rationals.

    Instances are treated as immutable.  Derived data (radical, generators,
    simple-module catalog) is cached on the instance.
    """

    def __init__(self, field: Field, sc, unit, name: str | None = None, generators=None):
        self.field = field
        self.sc = field.asarray(sc)
        n = self.sc.shape[0]
        if self.sc.shape != (n, n, n):
            raise AxiomError(f"structure constants must have shape (n, n, n), got {self.sc.shape}")
        self.unit = field.asarray(unit).reshape(-1)
        if self.unit.shape != (n,):
            raise AxiomError(f"unit has length {self.unit.shape[0]}, expected {n}")
        self.dim = n
        self.name = name or f"alg{n}"
        self._cache: dict = {}
        if generators is not None:
            self._cache["generators"] = field.asarray(generators).reshape(-1, n)

    def __repr__(self):
        return f"Algebra({self.name!r}, dim={self.dim}, field={self.field!r})"

    def basis_vector(self, i: int):
        v = self.field.zeros(self.dim)
        v[i] = self.field.scalar(1)
        return v

    @property
    def left_mult(self):
        """Stack of left-multiplication matrices, shape (n, n, n)."""
        if "L" not in self._cache:
            self._cache["L"] = np.ascontiguousarray(np.transpose(self.sc, (0, 2, 1)))
        return self._cache["L"]

    @property
    def right_mult(self):
        if "R" not in self._cache:
            self._cache["R"] = np.ascontiguousarray(np.transpose(self.sc, (1, 2, 0)))
        return self._cache["R"]

    def element_matrix(self, x):
        """Left multiplication by the element with coordinates ``x``."""
        n = self.dim
        return self.field.matmul(self.field.asarray(x).reshape(1, n), self.left_mult.reshape(n, n * n)).reshape(n, n)

    def mul(self, x, y):
        return self.field.matmul(self.element_matrix(x), self.field.asarray(y).reshape(-1, 1)).reshape(-1)

    def products(self, u, v):
        """All products u_a * v_b of row bases, as rows (len(u)*len(v), n)."""
        F, n = self.field, self.dim
        u, v = F.asarray(u).reshape(-1, n), F.asarray(v).reshape(-1, n)
        lu = F.matmul(u, self.left_mult.reshape(n, n * n)).reshape(-1, n, n)
        out = F.matmul(lu, v.T)  # (a, n, b)
        return np.transpose(out, (0, 2, 1)).reshape(-1, n)

    def subalgebra(self, gens):
        """Row basis of the unital subalgebra generated by ``gens``."""
        F, n = self.field, self.dim
        w = F.span(self.unit.reshape(1, n), n)
        gens = F.asarray(gens).reshape(-1, n)
        if gens.shape[0] == 0:
            return w
        while True:
            new = F.span(np.concatenate([w, gens, self.products(w, gens)]), n)
            if new.shape[0] == w.shape[0]:
                return new
            w = new

    @property
    def generators(self):
        """A small generating set, picked greedily from the basis."""
        if "generators" not in self._cache:
            F, n = self.field, self.dim
            gens = []
            sub = self.subalgebra(F.zeros(0, n))
            for i in range(n):
                if sub.shape[0] == n:
                    break
                e = self.basis_vector(i)
                if F.subspace_contains(sub, e.reshape(1, n)):
                    continue
                gens.append(e)
                sub = self.subalgebra(np.array(gens))
            self._cache["generators"] = F.asarray(np.array(gens).reshape(-1, n)) if gens else F.zeros(0, n)
        return self._cache["generators"]

    @property
    def catalog(self):
        if "catalog" not in self._cache:
            from .modth import SimpleCatalog

            self._cache["catalog"] = SimpleCatalog(self)
        return self._cache["catalog"]

    def set_faithful_rep(self, action):
        """Record a faithful representation used to speed up the radical."""
        F = self.field
        action = F.asarray(action)
        if action.shape[0] != self.dim or F.rank(action.reshape(self.dim, -1)) != self.dim:
            raise ValueError("representation is not faithful")
        self._cache["faithful"] = action

    def to_json(self) -> dict:
        F = self.field
        return {"field": F.to_json(), "dim": self.dim, "sc": F.dump(self.sc), "unit": F.dump(self.unit)}

    @classmethod
    def from_json(cls, data, name=None) -> "Algebra":
        from .errors import SchemaError

        try:
            field = field_from_json(data["field"])
            n = int(data["dim"])
            sc = field.load(data["sc"])
            unit = field.load(data["unit"])
        except KeyError as exc:
            raise SchemaError(f"algebra is missing key {exc}") from exc
        if sc.shape != (n, n, n):
            raise SchemaError(f"sc has shape {sc.shape}, expected ({n}, {n}, {n})")
        return cls(field, sc, unit, name=name or data.get("name"))


@dataclass(frozen=True, eq=False)
class Ideal:
    parent: Algebra
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


def check_algebra(a: Algebra) -> list[str]:
    """Every violated associativity triple and unit law; empty iff valid."""
    F, n = a.field, a.dim
    problems = []
    L = a.left_mult
    flat = L.reshape(n, n * n)
    bad = []
    for i in range(n):
        # rho(b_i) rho(b_j) == sum_k sc[i,j,k] rho(b_k) is associativity on triples (i, j, *)
        lhs = F.matmul(L[i], L)  # (j, n, n)
        rhs = F.matmul(a.sc[i], flat).reshape(n, n, n)
        for j, k in np.argwhere(np.any(lhs != rhs, axis=1)):
            bad.append((i, j, k))
    for i, j, k in bad[:50]:
        problems.append(f"associativity fails at (i,j,k)=({i},{j},{k})")
    if len(bad) > 50:
        problems.append(f"... {len(bad) - 50} more associativity failures")
    lu = a.element_matrix(a.unit)
    ru = F.matmul(a.unit.reshape(1, n), a.right_mult.reshape(n, n * n)).reshape(n, n)
    eye = F.eye(n)
    for i in np.flatnonzero(np.any(lu != eye, axis=0)):
        problems.append(f"unit*b_{i} != b_{i}")
    for i in np.flatnonzero(np.any(ru != eye, axis=0)):
        problems.append(f"b_{i}*unit != b_{i}")
    return problems


def regular_module(a: Algebra):
    from .modth import ModuleRep

    return ModuleRep(a, a.left_mult, name=f"{a.name}-regular")


def _two_sided_violation(a: Algebra, basis) -> str | None:
    F, n = a.field, a.dim
    if basis.shape[0] == 0:
        return None
    left = np.transpose(F.matmul(a.left_mult, basis.T), (0, 2, 1)).reshape(-1, n)
    right = np.transpose(F.matmul(a.right_mult, basis.T), (0, 2, 1)).reshape(-1, n)
    if not F.subspace_contains(basis, left):
        return "not closed under left multiplication"
    if not F.subspace_contains(basis, right):
        return "not closed under right multiplication"
    return None


def make_ideal(a: Algebra, rows) -> Ideal:
    basis = a.field.span(rows, a.dim)
    why = _two_sided_violation(a, basis)
    if why:
        raise NotInvariant(f"subspace is not a two-sided ideal: {why}")
    return Ideal(a, basis)


def ideal_power_dims(a: Algebra, ideal: Ideal) -> list[int]:
    """Dimensions of I, I^2, I^3, ... until the chain stabilises."""
    F, n = a.field, a.dim
    dims = [ideal.dim]
    cur = ideal.basis
    while cur.shape[0]:
        nxt = F.span(a.products(ideal.basis, cur), n)
        if nxt.shape[0] == cur.shape[0]:
            break
        dims.append(nxt.shape[0])
        cur = nxt
    if cur.shape[0] == 0 and dims[-1] != 0:
        dims.append(0)
    return dims


def _lifted_trace_power(F, mats, i: int):
    """g_i on a batch of matrices: Tr(lift(z)^(p^i)) / p^i mod p."""
    p = F.characteristic
    mod = p ** (i + 1)
    z = np.asarray(mats, dtype=np.int64)
    d = z.shape[-1]
    use_float = d * (mod - 1) ** 2 < 2**53

    def mm(x, y):
        if use_float:
            return np.mod(np.rint(np.matmul(x.astype(np.float64), y.astype(np.float64))).astype(np.int64), mod)
        return np.mod(np.matmul(x.astype(object), y.astype(object)), mod).astype(np.int64)

    def power(x, e):
        result = None
        base = x
        while e:
            if e & 1:
                result = base if result is None else mm(result, base)
            e >>= 1
            if e:
                base = mm(base, base)
        return result

    x = z
    for _ in range(i):
        x = power(x, p)
    tr = np.mod(np.trace(x, axis1=-2, axis2=-1), mod)
    if np.any(tr % (p**i)):
        raise LoewyError("generalized trace is not divisible; radical iteration broken")
    return (tr // (p**i)) % p


def jacobson_radical(a: Algebra, method: str = "auto", certify: bool = True) -> Ideal:
    """The Jacobson radical J(a).

    ``method="trace"`` is the plain trace-form kernel, valid in characteristic
    0 or p > dim.  ``method="auto"`` uses the iterated generalized traces of
    Cohen, Ivanyos and Wales over F_p, which agree with the trace form when
    p > dim and stay correct for every p.  The answer is certified (two-sided,
    nilpotent, semisimple quotient) unless ``certify`` is false.
    """
    key = "radical"
    if method == "auto" and key in a._cache:
        return a._cache[key]
    F, n = a.field, a.dim
    p = F.characteristic
    if method == "trace" and p and p <= n:
        raise UnsupportedCharacteristic(
            f"trace-form radical needs char 0 or p > dim; got p={p}, dim={n}"
        )
    if method not in ("auto", "trace"):
        raise ValueError(f"unknown radical method {method!r}")
    rep = a._cache.get("faithful", a.left_mult)
    d = rep.shape[1]
    if p == 0 or method == "trace":
        levels = [0]
    else:
        levels = list(range(int(math.floor(math.log(d, p) + 1e-9)) + 1)) if d > 1 else [0]
    cur = F.eye(n)
    for i in levels:
        if cur.shape[0] == 0:
            break
        rc = F.matmul(cur, rep.reshape(n, d * d)).reshape(-1, d, d)
        if i == 0:
            # Tr(rep(c_k) rep(b_j)) as one product of flattened matrices
            g = F.matmul(rc.reshape(-1, d * d), np.transpose(rep, (0, 2, 1)).reshape(n, d * d).T)
        else:
            chunk = max(1, 2_000_000 // (n * d * d))
            parts = []
            for lo in range(0, rc.shape[0], chunk):
                prods = F.matmul(rc[lo:lo + chunk, None, :, :], rep[None, :, :, :])
                parts.append(_lifted_trace_power(F, prods, i))
            g = F.asarray(np.concatenate(parts, axis=0))
        coeffs = F.kernel(g.T)
        cur = F.span(F.matmul(coeffs, cur), n) if coeffs.shape[0] else F.zeros(0, n)
    ideal = Ideal(a, cur)
    if certify:
        certify_radical(a, ideal)
    if method == "auto":
        a._cache[key] = ideal
    return ideal


def certify_radical(a: Algebra, ideal: Ideal) -> None:
    """Raise unless ``ideal`` is two-sided, nilpotent, with semisimple quotient."""
    why = _two_sided_violation(a, ideal.basis)
    if why:
        raise LoewyError(f"radical certification failed: {why}")
    dims = ideal_power_dims(a, ideal)
    if dims[-1] != 0:
        raise LoewyError(f"radical certification failed: not nilpotent (powers {dims})")
    if ideal.dim:
        q, _ = quotient_algebra(a, ideal)
        if jacobson_radical(q, certify=False).dim:
            raise LoewyError("radical certification failed: quotient is not semisimple")


def quotient_algebra(a: Algebra, ideal: Ideal):
    """``(a / ideal, projection)``; complement = non-pivot coordinates."""
    F, n = a.field, a.dim
    basis = F.span(ideal.basis, n)
    why = _two_sided_violation(a, basis)
    if why:
        raise NotInvariant(f"cannot form quotient algebra: {why}")
    proj, lift = complement_projection(F, basis, n)
    q = proj.shape[0]
    # product of lifted basis vectors, projected back
    lifted = lift.T  # rows: lifted basis vectors
    prod = a.products(lifted, lifted).reshape(q, q, n)
    sc = F.matmul(prod, proj.T)  # (q, q, q)
    unit = F.matmul(proj, a.unit.reshape(n, 1)).reshape(-1)
    quo = Algebra(F, sc, unit, name=f"{a.name}/I")
    if a.generators.shape[0]:
        quo._cache["generators"] = F.span(F.matmul(a.generators, proj.T), q) if q else F.zeros(0, 0)
    return quo, proj


def complement_projection(F: Field, basis, n: int):
    """Projection onto the non-pivot coordinates of an rref ``basis`` and its lift.

    Returns ``(P, L)`` with ``P`` of shape (q, n), ``L`` of shape (n, q),
    ``P @ L = I`` and ``ker P = span(basis)``.
    """
    piv = F.rref(basis)[1] if basis.shape[0] else []
    free = [c for c in range(n) if c not in set(piv)]
    q = len(free)
    reducer = F.eye(n)
    if basis.shape[0]:
        sel = F.zeros(len(piv), n)
        for r, c in enumerate(piv):
            sel[r, c] = F.scalar(1)
        # v -> v - basis^T v[piv]
        reducer = F.asarray(F.eye(n) - F.matmul(basis.T, sel))
    proj = reducer[free, :] if q else F.zeros(0, n)
    lift = F.zeros(n, q)
    for j, c in enumerate(free):
        lift[c, j] = F.scalar(1)
    return F.asarray(proj), F.asarray(lift)


def algebra_of_object(obj) -> Algebra:
    """The underlying k-algebra of an algebra object (mu, iota)."""
    F = obj.carrier.field
    na = obj.carrier.dim
    sc = np.transpose(obj.mu.reshape(na, na, na), (1, 2, 0))
    return Algebra(F, sc, obj.iota, name="A")


def smash_product(h, obj, check: bool = True) -> Algebra:
    """The smash product A # H whose modules are the A-modules internal to Rep H.

    Basis ``a_i (x) h_j`` at index ``i * dim H + j``; the product is
    ``(a (x) h)(b (x) k) = sum a (h_(1) . b) (x) h_(2) k``.  Only the module
    algebra axioms of ``obj`` are required; commutativity is not.
    """
    from .braided import check_algebra_object

    if check:
        problems = [p for p in check_algebra_object(h, obj) if not p.startswith("commutativity")]
        if problems:
            raise AxiomError("algebra object fails its axioms", problems)
    F = h.algebra.field
    H = h.algebra
    nh, na = H.dim, obj.carrier.dim
    sc_a = np.transpose(obj.mu.reshape(na, na, na), (1, 2, 0))  # sc_a[i, t, s]
    rho = obj.carrier.action  # (nh, na, na): rho[u][t, k] = coeff of a_t in h_u . a_k
    # w[u, i, k, s] = coefficient of a_s in a_i (h_u . a_k)
    w = F.matmul(np.transpose(rho, (0, 2, 1)).reshape(nh * na, na), sc_a.transpose(1, 0, 2).reshape(na, na * na))
    w = np.transpose(w.reshape(nh, na, na, na), (0, 2, 1, 3))  # (u, i, k, s)
    small = F.characteristic and F.characteristic < 2**20
    dtype = np.int64 if small else object
    res = np.zeros((na, nh, na, nh, na, nh), dtype=dtype)
    comul = h.comul.reshape(nh, nh, nh)  # [u, v, j]
    for u, v, j in np.argwhere(comul != 0):
        c = comul[u, v, j]
        term = np.multiply.outer(w[u].astype(dtype) * c, H.sc[v].astype(dtype))  # (i, k, s, l, r)
        res[:, j, :, :, :, :] += np.transpose(term, (0, 1, 3, 2, 4))
        if small:
            res[:, j] %= F.characteristic
    n = na * nh
    sc = F.asarray(res.reshape(n, n, n))
    unit = F.kron(obj.iota, H.unit)
    alg_a = algebra_of_object(obj)
    gens = [F.kron(g, H.unit) for g in alg_a.generators] + [F.kron(obj.iota, g) for g in H.generators]
    out = Algebra(F, sc, unit, name=f"{obj.name}#{H.name}" if getattr(obj, "name", None) else f"A#{H.name}",
                  generators=np.array(gens).reshape(-1, n) if gens else F.zeros(0, n))
    if check:
        problems = check_algebra(out)
        if problems:
            raise AxiomError("smash product is not associative/unital", problems)
    return out
