"""Exact dense linear algebra over prime fields and the rationals.

A :class:`Field` is the context object for every matrix operation.  Matrices
are plain numpy arrays: ``int64`` residues in ``[0, p)`` for :class:`PrimeField`
and ``object`` arrays of :class:`fractions.Fraction` for :class:`RationalField`.
Subspaces are stored as row bases in reduced row echelon form, so subspace
equality is array equality.

The tensor-product index pairing is fixed everywhere: in ``kron(a, b)`` the
left factor is major, i.e. row ``(i, k)`` sits at ``i * b.rows + k``.
"""
from __future__ import annotations

import os
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, SchemaError

if os.environ.get("LOEWY_PURE_PYTHON"):
    from ._kernels_py import rref_modp as _rref_modp
    KERNEL = "python"
else:
    try:
        from ._kernels import rref_modp as _rref_modp
        KERNEL = "cython"
    except ImportError:  # extension not built
        from ._kernels_py import rref_modp as _rref_modp
        KERNEL = "python"

_FLOAT_EXACT = 2**53


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Base class; subclasses provide the scalar layer and ``_rref``."""

    dtype: object = object
    characteristic: int = 0

    # -- construction -------------------------------------------------------
    def asarray(self, data) -> np.ndarray:
        raise NotImplementedError

    def zeros(self, *shape) -> np.ndarray:
        return self.asarray(np.zeros(shape, dtype=np.int64))

    def eye(self, n: int) -> np.ndarray:
        return self.asarray(np.eye(n, dtype=np.int64))

    def scalar(self, x):
        return self.asarray(np.array([x], dtype=object))[0]

    # -- arithmetic ---------------------------------------------------------
    def matmul(self, a, b) -> np.ndarray:
        raise NotImplementedError

    def kron(self, a, b) -> np.ndarray:
        return self.asarray(np.kron(a, b))

    def inv_scalar(self, x):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return not np.any(a != 0)

    # -- elimination --------------------------------------------------------
    def _rref(self, m):
        """Generic vectorised elimination (used for object-dtype fields)."""
        m = np.array(m, dtype=object, copy=True)
        rows, cols = m.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r >= rows:
                break
            nz = [i for i in range(r, rows) if m[i, c] != 0]
            if not nz:
                continue
            piv = nz[0]
            if piv != r:
                m[[r, piv]] = m[[piv, r]]
            inv = self.inv_scalar(m[r, c])
            m[r, c:] = m[r, c:] * inv
            for i in range(rows):
                if i != r and m[i, c] != 0:
                    m[i, c:] = m[i, c:] - m[i, c] * m[r, c:]
            pivots.append(c)
            r += 1
        return m, pivots

    def rref(self, m):
        """Return ``(R, pivots, rank)`` with R the reduced row echelon form."""
        m = self.asarray(m)
        if m.ndim != 2:
            raise DimensionMismatch("rref expects a matrix")
        if m.size == 0:
            return m.copy(), [], 0
        r, piv = self._rref(m)
        return r, list(piv), len(piv)

    def rank(self, m) -> int:
        return self.rref(m)[2]

    def span(self, rows, ncols: int | None = None) -> np.ndarray:
        """Canonical (rref, zero rows dropped) basis of the row span."""
        rows = self.asarray(rows)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        if rows.shape[0] == 0:
            n = rows.shape[1] if ncols is None else ncols
            return self.zeros(0, n)
        r, _, rank = self.rref(rows)
        return r[:rank]

    def kernel(self, m) -> np.ndarray:
        """Rows spanning {v : m @ v = 0}, in canonical form."""
        m = self.asarray(m)
        rows, cols = m.shape
        if rows == 0:
            return self.eye(cols)
        r, piv, rank = self.rref(m)
        free = [c for c in range(cols) if c not in set(piv)]
        basis = self.zeros(len(free), cols)
        for t, f in enumerate(free):
            basis[t, f] = self.scalar(1)
            for i, pc in enumerate(piv):
                basis[t, pc] = -r[i, f]
        basis = self.asarray(basis)
        return self.span(basis, cols) if len(free) else basis

    def solve(self, a, b):
        """Some x with a @ x = b, or None when inconsistent."""
        a = self.asarray(a)
        b = self.asarray(b)
        vector = b.ndim == 1
        if vector:
            b = b.reshape(-1, 1)
        if a.shape[0] != b.shape[0]:
            raise DimensionMismatch(f"solve: a has {a.shape[0]} rows, b has {b.shape[0]}")
        n = a.shape[1]
        aug = np.concatenate([a, b], axis=1)
        r, piv, rank = self.rref(aug)
        if piv and piv[-1] >= n:
            return None
        x = self.zeros(n, b.shape[1])
        for i, pc in enumerate(piv):
            x[pc] = r[i, n:]
        x = self.asarray(x)
        return x[:, 0] if vector else x

    def inv(self, m):
        m = self.asarray(m)
        n = m.shape[0]
        if m.shape != (n, n):
            raise DimensionMismatch("inverse of a non-square matrix")
        if n == 0:
            return m.copy()
        r, piv, rank = self.rref(np.concatenate([m, self.eye(n)], axis=1))
        if rank < n or piv[n - 1] != n - 1:
            return None
        return r[:, n:]

    def is_invertible(self, m) -> bool:
        m = self.asarray(m)
        return m.shape[0] == m.shape[1] and self.rank(m) == m.shape[0]

    # -- subspaces (row bases) ----------------------------------------------
    def subspace_sum(self, u, v):
        u, v = self.asarray(u), self.asarray(v)
        if u.shape[1] != v.shape[1]:
            raise DimensionMismatch("subspaces live in different ambient spaces")
        return self.span(np.concatenate([u, v], axis=0), u.shape[1])

    def subspace_intersect(self, u, v):
        u, v = self.asarray(u), self.asarray(v)
        if u.shape[1] != v.shape[1]:
            raise DimensionMismatch("subspaces live in different ambient spaces")
        n = u.shape[1]
        if u.shape[0] == 0 or v.shape[0] == 0:
            return self.zeros(0, n)
        stacked = np.concatenate([u, -v], axis=0).T
        coeffs = self.kernel(self.asarray(stacked))
        if coeffs.shape[0] == 0:
            return self.zeros(0, n)
        return self.span(self.matmul(coeffs[:, : u.shape[0]], u), n)

    def subspace_contains(self, u, v) -> bool:
        """True iff span(v) is contained in span(u)."""
        u, v = self.asarray(u), self.asarray(v)
        if u.shape[1] != v.shape[1]:
            raise DimensionMismatch("subspaces live in different ambient spaces")
        if v.shape[0] == 0:
            return True
        return self.rank(np.concatenate([u, v], axis=0)) == self.rank(u)

    def coordinates(self, basis, vectors):
        """Coordinates of row ``vectors`` in an rref row ``basis``."""
        piv = self.rref(basis)[1]
        return self.asarray(vectors)[..., piv]

    # -- randomness / serialisation -----------------------------------------
    def random(self, rng: np.random.Generator, shape):
        raise NotImplementedError

    def format_entry(self, x) -> str:
        return str(x)

    def parse_entry(self, s):
        raise NotImplementedError

    def dump(self, m) -> list:
        m = np.asarray(m)
        if m.ndim == 0:
            return self.format_entry(m[()])
        return [self.dump(row) for row in m]

    def load(self, data) -> np.ndarray:
        def conv(x):
            if isinstance(x, list):
                return [conv(y) for y in x]
            if not isinstance(x, (str, int)):
                raise SchemaError(f"matrix entries must be strings, got {x!r}")
            return self.parse_entry(str(x))
        arr = np.array(conv(data), dtype=object)
        return self.asarray(arr)

    def to_json(self) -> dict:
        raise NotImplementedError


class PrimeField(Field):
    """The prime field F_p, p < 2**31."""

    dtype = np.int64

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError("prime fields are limited to p < 2**31")
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    @property
    def order(self) -> int:
        return self.p

    def asarray(self, data):
        arr = np.asarray(data)
        if arr.dtype == object:
            out = np.empty(arr.shape, dtype=np.int64)
            flat = out.reshape(-1)
            for i, x in enumerate(arr.reshape(-1)):
                if isinstance(x, Fraction):
                    flat[i] = x.numerator * pow(x.denominator, -1, self.p) % self.p
                else:
                    flat[i] = int(x) % self.p
            return out
        return np.mod(arr.astype(np.int64, copy=False), self.p)

    def scalar(self, x):
        return np.int64(int(x) % self.p)

    def matmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        inner = a.shape[-1] if a.ndim else 1
        if inner * (self.p - 1) ** 2 < _FLOAT_EXACT:
            prod = np.matmul(a.astype(np.float64), b.astype(np.float64))
            return np.mod(np.rint(prod).astype(np.int64), self.p)
        prod = np.matmul(a.astype(object), b.astype(object))
        return self.asarray(prod)

    def kron(self, a, b):
        return np.mod(np.kron(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)), self.p)

    def inv_scalar(self, x):
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return np.int64(pow(x, -1, self.p))

    def _rref(self, m):
        return _rref_modp(np.ascontiguousarray(m, dtype=np.int64), self.p)

    def random(self, rng, shape):
        return rng.integers(0, self.p, size=shape, dtype=np.int64)

    def parse_entry(self, s):
        s = str(s).strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                return int(num) * pow(int(den), -1, self.p) % self.p
            return int(s) % self.p
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad F_{self.p} entry {s!r}") from exc

    def format_entry(self, x) -> str:
        return str(int(x))

    def to_json(self):
        return {"kind": "prime", "p": self.p}


class RationalField(Field):
    """The rational numbers, entries held as :class:`Fraction`."""

    dtype = object

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    order = None

    def asarray(self, data):
        arr = np.asarray(data)
        if arr.dtype == object and all(type(x) is Fraction for x in arr.reshape(-1)):
            return arr
        out = np.empty(arr.shape, dtype=object)
        flat = out.reshape(-1)
        for i, x in enumerate(arr.reshape(-1)):
            if isinstance(x, (float, np.floating)):
                raise TypeError("floating point entries are not exact")
            flat[i] = Fraction(int(x)) if isinstance(x, (np.integer,)) else Fraction(x)
        return out

    def scalar(self, x):
        return Fraction(x)

    def matmul(self, a, b):
        return self.asarray(np.matmul(self.asarray(a), self.asarray(b)))

    def kron(self, a, b):
        return self.asarray(np.kron(self.asarray(a), self.asarray(b)))

    def inv_scalar(self, x):
        return 1 / Fraction(x)

    def random(self, rng, shape):
        return self.asarray(rng.integers(-3, 4, size=shape).astype(object))

    def parse_entry(self, s):
        try:
            return Fraction(str(s).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational entry {s!r}") from exc

    def format_entry(self, x) -> str:
        return str(Fraction(x))

    def to_json(self):
        return {"kind": "rational"}


QQ = RationalField()


def field_from_json(data) -> Field:
    if not isinstance(data, dict) or "kind" not in data:
        raise SchemaError("field spec must be an object with a 'kind' key")
    if data["kind"] == "prime":
        try:
            return PrimeField(int(data["p"]))
        except (KeyError, ValueError) as exc:
            raise SchemaError(f"bad prime field spec {data!r}: {exc}") from exc
    if data["kind"] == "rational":
        return QQ
    raise SchemaError(f"unknown field kind {data['kind']!r}")


def GF(p: int) -> PrimeField:
    return PrimeField(p)
