"""Brute-force reference answers over small prime fields.

Nothing here calls the algorithms of :mod:`modth` or :mod:`loewy`; every
answer comes from exhaustive enumeration of vectors, matrices or subspaces,
so agreement with the fast routes is a genuine cross-check.  Enumeration is
capped by ``LOEWY_MAX_ORACLE_DIM`` (default 4) on module dimension.
"""
from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

from .algcore import Algebra, complement_projection
from .errors import PreconditionError
from .modth import ModuleRep

MAX_ENUM = 2**20


def max_oracle_dim() -> int:
    return int(os.environ.get("LOEWY_MAX_ORACLE_DIM", "4"))


def _require_dim(*mods):
    cap = max_oracle_dim()
    for m in mods:
        if m.dim > cap:
            raise PreconditionError(f"module of dimension {m.dim} exceeds LOEWY_MAX_ORACLE_DIM={cap}")


def _require_small(F, count_exp: int, what: str):
    if not F.characteristic:
        raise PreconditionError("brute-force enumeration needs a finite field")
    if F.p ** count_exp > MAX_ENUM:
        raise PreconditionError(f"{what}: {F.p}^{count_exp} candidates exceed the enumeration cap")


@lru_cache(maxsize=None)
def all_vectors(p: int, d: int) -> np.ndarray:
    """Every vector of F_p^d, shape (p^d, d), in mixed-radix order."""
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((p,) * d).reshape(d, -1).T
    return np.ascontiguousarray(grid[:, ::-1]).astype(np.int64)


def all_matrices(p: int, r: int, c: int) -> np.ndarray:
    return all_vectors(p, r * c).reshape(-1, r, c)


@lru_cache(maxsize=None)
def general_linear(p: int, d: int) -> np.ndarray:
    """All invertible d x d matrices over F_p."""
    mats = all_matrices(p, d, d)
    keep = [i for i, m in enumerate(mats) if _rank_mod(m, p) == d]
    return mats[keep]


def _rank_mod(m, p) -> int:
    m = np.array(m, dtype=np.int64) % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i, c]), None)
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        r += 1
    return r


# -- module-level brute force ---------------------------------------------------------

def intertwiners(m: ModuleRep, n: ModuleRep) -> np.ndarray:
    """Every matrix f (dim n x dim m) with f rho_m(b) = rho_n(b) f for all basis b."""
    F = m.field
    _require_dim(m, n)
    _require_small(F, m.dim * n.dim, "intertwiner enumeration")
    p = F.p
    cand = all_matrices(p, n.dim, m.dim)
    ok = np.ones(cand.shape[0], dtype=bool)
    for b in range(m.alg.dim):
        lhs = np.einsum("kij,jl->kil", cand, m.action[b]) % p
        rhs = np.einsum("ij,kjl->kil", n.action[b], cand) % p
        ok &= np.all((lhs == rhs).reshape(cand.shape[0], -1), axis=1)
    return cand[ok]


def splits(f, m_sub: ModuleRep, m: ModuleRep) -> bool:
    """Some intertwiner h: m -> m_sub with h f = id, by enumeration."""
    p = m.field.p
    f = np.asarray(f, dtype=np.int64) % p
    if m_sub.dim == 0:
        return True
    homs = intertwiners(m, m_sub)
    comp = np.einsum("kij,jl->kil", homs, f) % p
    return bool(np.any(np.all((comp == np.eye(m_sub.dim, dtype=np.int64)).reshape(len(homs), -1), axis=1)))


def isomorphic(m: ModuleRep, n: ModuleRep) -> bool:
    if m.dim != n.dim:
        return False
    if m.dim == 0:
        return True
    p = m.field.p
    homs = intertwiners(m, n)
    return any(_rank_mod(h, p) == m.dim for h in homs)


def _close(m: ModuleRep, rows) -> np.ndarray:
    """Span closed under every action matrix, as an rref basis."""
    F = m.field
    w = F.span(rows, m.dim)
    while True:
        imgs = np.einsum("bij,kj->bki", m.action, w).reshape(-1, m.dim) if w.shape[0] else w
        new = F.span(np.concatenate([w, imgs]) if w.shape[0] else w, m.dim)
        if new.shape[0] == w.shape[0]:
            return new
        w = new


def submodules(m: ModuleRep) -> list:
    """All submodules of m (rref bases), via cyclic spins and their sums."""
    F = m.field
    d = m.dim
    _require_dim(m)
    _require_small(F, d, "vector enumeration")
    found = {}
    zero = F.zeros(0, d)
    found[zero.tobytes()] = zero
    cyclic = {}
    for v in all_vectors(F.p, d)[1:]:
        s = _close(m, v.reshape(1, d))
        cyclic[s.tobytes() + bytes([s.shape[0]])] = s
    for s in cyclic.values():
        found.setdefault(s.tobytes() + bytes([s.shape[0]]), s)
    changed = True
    while changed:
        changed = False
        items = list(found.values())
        for a, b in itertools.combinations(items, 2):
            s = F.span(np.concatenate([a, b]), d) if a.shape[0] + b.shape[0] else zero
            key = s.tobytes() + bytes([s.shape[0]])
            if key not in found:
                found[key] = s
                changed = True
    return sorted(found.values(), key=lambda s: (s.shape[0], s.tobytes()))


def _contains(F, big, small) -> bool:
    if small.shape[0] == 0:
        return True
    return F.rank(np.concatenate([big, small])) == big.shape[0]


def _subquotient(m: ModuleRep, upper, lower) -> tuple:
    """(upper/lower as a module, matrix of lower-complement coordinates)."""
    F = m.field
    # coordinates: express upper in its own rref basis, then quotient
    piv = F.rref(upper)[1]
    act_up = np.einsum("bij,kj->bki", m.action, upper)[:, :, piv]  # (b, k, r): image of row k in coords
    act_up = np.transpose(act_up, (0, 2, 1)) % F.p  # column convention
    low = lower[:, piv] if lower.shape[0] else F.zeros(0, upper.shape[0])
    proj, lift = complement_projection(F, F.span(low, upper.shape[0]), upper.shape[0])
    act = np.einsum("ij,bjk,kl->bil", proj, act_up, lift) % F.p
    return ModuleRep(m.alg, F.asarray(act)), proj


def ext_exists(n: ModuleRep, s: ModuleRep, s_prime: ModuleRep) -> bool:
    """Some subquotient V/U of n with a non-split 0 -> s' -> V/U -> s -> 0."""
    F = n.field
    subs = submodules(n)
    need = s.dim + s_prime.dim
    for V in subs:
        for U in subs:
            if V.shape[0] - U.shape[0] != need or not _contains(F, V, U):
                continue
            for W in subs:
                if W.shape[0] - U.shape[0] != s_prime.dim:
                    continue
                if not (_contains(F, W, U) and _contains(F, V, W)):
                    continue
                x, _ = _subquotient(n, V, U)
                w, _ = _subquotient(n, W, U)
                top, _ = _subquotient(n, V, W)
                if not (isomorphic(w, s_prime) and isomorphic(top, s)):
                    continue
                # inclusion W/U -> V/U in the quotient coordinates of V/U
                f = _inclusion(F, V, U, W)
                if not splits(f, w, x):
                    return True
    return False


def _inclusion(F, V, U, W):
    """Matrix of W/U -> V/U in the coordinates used by ``_subquotient``."""
    pv = F.rref(V)[1]
    pw = F.rref(W)[1]
    lowv = F.span(U[:, pv], V.shape[0]) if U.shape[0] else F.zeros(0, V.shape[0])
    loww = F.span(U[:, pw], W.shape[0]) if U.shape[0] else F.zeros(0, W.shape[0])
    proj_v, _ = complement_projection(F, lowv, V.shape[0])
    _, lift_w = complement_projection(F, loww, W.shape[0])
    w_in_v = F.coordinates(V, W)  # (rows of W) in V's coordinates
    return F.matmul(proj_v, F.matmul(w_in_v.T, lift_w))


def is_simple(m: ModuleRep) -> bool:
    """Every nonzero vector spins to the whole module."""
    F = m.field
    if m.dim == 0:
        raise PreconditionError("zero module")
    _require_dim(m)
    _require_small(F, m.dim, "vector enumeration")
    return all(_close(m, v.reshape(1, -1)).shape[0] == m.dim for v in all_vectors(F.p, m.dim)[1:])


def socle(m: ModuleRep) -> np.ndarray:
    """Sum of all simple submodules, from the full submodule lattice."""
    F = m.field
    subs = submodules(m)
    simple = [s for s in subs if s.shape[0] and
              all(t.shape[0] in (0, s.shape[0]) for t in subs if _contains(F, s, t))]
    if not simple:
        return F.zeros(0, m.dim)
    return F.span(np.concatenate(simple), m.dim)


# -- algebra-level brute force ------------------------------------------------------

def radical(a: Algebra) -> np.ndarray:
    """{x : x y nilpotent for every y}, by enumerating all pairs of elements."""
    F, n = a.field, a.dim
    _require_small(F, 2 * n, "element-pair enumeration")
    p = F.p
    elems = all_vectors(p, n)
    L = np.einsum("ei,ijk->ejk", elems, a.left_mult) % p  # left mult matrices of every element
    keep = []
    for xi in range(1, len(elems)):
        prods = np.einsum("jk,ekl->ejl", L[xi], L) % p  # L_x L_y for all y
        pw = prods.copy()
        for _ in range(max(1, (n - 1).bit_length())):
            pw = np.einsum("eij,ejk->eik", pw, pw) % p
        if not np.any(pw):
            keep.append(elems[xi])
    if not keep:
        return F.zeros(0, n)
    return F.span(np.array(keep), n)


# -- module enumeration up to isomorphism ----------------------------------------------

def _word_basis(a: Algebra):
    """Words in the generators whose images form a basis, and the change of basis.

    Returns ``(words, C)`` where ``words`` are tuples of generator indices and
    ``b_i = sum_w C[w, i] * w``.
    """
    F, n = a.field, a.dim
    gens = a.generators
    words, vecs = [()], [a.unit]
    t = 0
    while t < len(words) and len(words) < n:
        for g in range(gens.shape[0]):
            v = a.mul(vecs[t], gens[g])
            if F.rank(np.array(vecs + [v])) == len(vecs) + 1:
                words.append(words[t] + (g,))
                vecs.append(v)
        t += 1
    B = F.asarray(np.array(vecs).T)
    return words, F.inv(B)


def modules_up_to_iso(a: Algebra, d: int) -> list:
    """Every d-dimensional module of ``a`` up to isomorphism, by orbit enumeration.

    Generator matrices are enumerated over all of M_d(F_p); tuples that satisfy
    the structure constants are grouped into GL_d-conjugation orbits.
    """
    F, n = a.field, a.dim
    p = F.p
    if d == 0:
        return [ModuleRep(a, F.zeros(n, 0, 0))]
    if d > max_oracle_dim():
        raise PreconditionError(f"dimension {d} exceeds LOEWY_MAX_ORACLE_DIM={max_oracle_dim()}")
    _require_small(F, d * d, "matrix enumeration")
    gens = a.generators
    r = gens.shape[0]
    words, C = _word_basis(a)
    mats = all_matrices(p, d, d)
    # filter generator candidates by their minimal polynomial in the regular representation
    cands = []
    for g in range(r):
        Lg = a.element_matrix(gens[g])
        mp = _minpoly_mod(Lg, p)
        val = np.zeros_like(mats)
        for c in mp[::-1]:
            val = (np.einsum("kij,kjl->kil", val, mats) + c * np.eye(d, dtype=np.int64)) % p
        cands.append(mats[~np.any(val.reshape(len(mats), -1), axis=1)])
    sizes = [len(c) for c in cands]
    if int(np.prod(sizes, dtype=np.float64)) > 4 * MAX_ENUM:
        raise PreconditionError(f"too many generator tuples ({sizes}) to enumerate")
    if r:
        idx = np.array(list(itertools.product(*[range(s) for s in sizes])), dtype=np.int64).reshape(-1, r)
        tuples = np.stack([cands[g][idx[:, g]] for g in range(r)], axis=1)
    else:
        tuples = np.zeros((1, 0, d, d), np.int64)
    keep_t, keep_a = [], []
    for lo in range(0, len(tuples), 4096):
        chunk = tuples[lo:lo + 4096]
        act = _actions_from_generators(F, a, chunk, words, C)
        ok = _satisfies(a, act, p)
        keep_t.append(chunk[ok])
        keep_a.append(act[ok])
    tuples, actions = np.concatenate(keep_t), np.concatenate(keep_a)
    if len(tuples) == 0:
        return []
    codes = _encode(tuples, p)
    index = {c: i for i, c in enumerate(codes)}
    seen = np.zeros(len(tuples), dtype=bool)
    G = general_linear(p, d)
    Ginv = np.array([_inv_mod(g, p) for g in G])
    out = []
    for i in range(len(tuples)):
        if seen[i]:
            continue
        out.append(ModuleRep(a, F.asarray(actions[i]), name=f"M{d}.{len(out)}"))
        orbit = np.einsum("gij,rjk,gkl->gril", G, tuples[i], Ginv) % p
        for c in _encode(orbit, p):
            j = index.get(c)
            if j is not None:
                seen[j] = True
    return out


def _encode(tuples, p):
    flat = tuples.reshape(len(tuples), -1)
    return [row.tobytes() for row in flat.astype(np.int8 if p < 128 else np.int64)]


def _inv_mod(m, p):
    d = m.shape[0]
    aug = np.concatenate([m % p, np.eye(d, dtype=np.int64)], axis=1)
    r = 0
    for c in range(d):
        piv = next(i for i in range(r, d) if aug[i, c])
        aug[[r, piv]] = aug[[piv, r]]
        aug[r] = aug[r] * pow(int(aug[r, c]), -1, p) % p
        for i in range(d):
            if i != r and aug[i, c]:
                aug[i] = (aug[i] - aug[i, c] * aug[r]) % p
        r += 1
    return aug[:, d:]


def _minpoly_mod(m, p):
    """Monic minimal polynomial coefficients (low to high) of m over F_p."""
    d = m.shape[0]
    powers = [np.eye(d, dtype=np.int64).reshape(-1)]
    cur = np.eye(d, dtype=np.int64)
    while True:
        cur = cur @ m % p
        A = np.array(powers).T
        k = A.shape[1]
        aug = np.concatenate([A, cur.reshape(-1, 1)], axis=1)
        if _rank_mod(aug, p) == _rank_mod(A, p):
            # solve A c = cur
            x = _solve_mod(A, cur.reshape(-1), p)
            return [(-int(v)) % p for v in x] + [1]
        powers.append(cur.reshape(-1))
        if k > d:
            raise RuntimeError("minimal polynomial search overran")


def _solve_mod(A, b, p):
    rows, cols = A.shape
    aug = np.concatenate([A % p, b.reshape(-1, 1) % p], axis=1)
    piv_cols = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i, c]), None)
        if piv is None:
            continue
        aug[[r, piv]] = aug[[piv, r]]
        aug[r] = aug[r] * pow(int(aug[r, c]), -1, p) % p
        for i in range(rows):
            if i != r and aug[i, c]:
                aug[i] = (aug[i] - aug[i, c] * aug[r]) % p
        piv_cols.append(c)
        r += 1
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(piv_cols):
        x[c] = aug[i, cols]
    return x


def _actions_from_generators(F, a, tuples, words, C):
    """Action of every basis element for each generator tuple, (N, n, d, d)."""
    p = F.p
    N, r, d, _ = tuples.shape
    word_mats = []
    for w in words:
        m = np.broadcast_to(np.eye(d, dtype=np.int64), (N, d, d)).copy()
        for g in w:
            m = np.einsum("kij,kjl->kil", m, tuples[:, g]) % p
        word_mats.append(m)
    W = np.stack(word_mats, axis=1)  # (N, words, d, d)
    return np.einsum("wi,kwab->kiab", np.asarray(C, dtype=np.int64), W) % p


def _satisfies(a, actions, p):
    """Structure-constant relations rho(b_i) rho(b_j) = sum_k sc[i,j,k] rho(b_k) and rho(1) = I."""
    lhs = np.einsum("kiab,kjbc->kijac", actions, actions) % p
    rhs = np.einsum("ijl,klac->kijac", np.asarray(a.sc, dtype=np.int64), actions) % p
    ok = np.all((lhs == rhs).reshape(len(actions), -1), axis=1)
    one = np.einsum("i,kiab->kab", np.asarray(a.unit, dtype=np.int64), actions) % p
    d = actions.shape[-1]
    ok &= np.all((one == np.eye(d, dtype=np.int64)).reshape(len(actions), -1), axis=1)
    return ok
