"""Small dense linear algebra over a scalar backend.

Everything here is desk scale (dimensions below ~70), so the implementation is
plain Gaussian elimination: first-nonzero pivoting on the exact backend for
determinism, largest-magnitude pivoting on the float backend for stability.
Subspaces are kept as reduced-row-echelon bases so equality is literal tuple
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .scalars import same_backend

Vector = tuple


def vec(backend, values) -> Vector:
    return tuple(backend.coerce(v) for v in values)

def zero_vec(backend, n: int) -> Vector:
    return (backend.zero,) * n

def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(c, u: Vector) -> Vector:
    return tuple(c * a for a in u)

def vec_is_zero(backend, u: Vector) -> bool:
    return all(backend.is_zero(a) for a in u)

def dot(u: Vector, v: Vector):
    acc = None
    for a, b in zip(u, v):
        acc = a * b if acc is None else acc + a * b
    return acc


@dataclass(frozen=True)
class Matrix:
    backend: object
    entries: tuple  # tuple of row tuples

    @staticmethod
    def from_rows(backend, rows) -> "Matrix":
        ent = tuple(tuple(backend.coerce(v) for v in row) for row in rows)
        widths = {len(r) for r in ent}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        return Matrix(backend, ent)

    @staticmethod
    def identity(backend, n: int) -> "Matrix":
        z, o = backend.zero, backend.one
        return Matrix(backend, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(backend, rows: int, cols: int) -> "Matrix":
        z = backend.zero
        return Matrix(backend, tuple((z,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        same_backend(self, other)
        return Matrix(self.backend, tuple(vec_add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        same_backend(self, other)
        return Matrix(self.backend, tuple(vec_sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.backend, tuple(tuple(-v for v in r) for r in self.entries))

    def scale(self, c) -> "Matrix":
        c = self.backend.coerce(c)
        return Matrix(self.backend, tuple(vec_scale(c, r) for r in self.entries))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            same_backend(self, other)
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
            cols = [other.col(j) for j in range(other.cols)]
            return Matrix(self.backend, tuple(tuple(dot(r, c) for c in cols) for r in self.entries))
        return self.scale(other)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(dot(r, v) for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.backend, tuple(self.col(j) for j in range(self.cols)))

    def trace(self):
        acc = self.backend.zero
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.backend, self.rows)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        bk = self.backend
        return all(bk.is_zero(v) for r in self.entries for v in r)

    def __repr__(self):
        body = "; ".join(" ".join(self.backend.format(v) for v in r) for r in self.entries)
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


def _rref_rows(backend, rows: list) -> tuple:
    """In-place reduced row echelon; returns pivot column tuple."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        best, weight = None, 0
        for i in range(r, nrows):
            w = backend.pivot_weight(rows[i][c])
            if w > weight:
                best, weight = i, w
                if backend.name == "exact":
                    break  # first nonzero pivot: deterministic
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        inv = backend.one / rows[r][c]
        rows[r] = [inv * v for v in rows[r]]
        for i in range(nrows):
            if i != r and not backend.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return tuple(pivots)


def rref(m: Matrix):
    """Reduced row echelon form; returns (Matrix, pivot column indices)."""
    rows = [list(r) for r in m.entries]
    pivots = _rref_rows(m.backend, rows)
    return Matrix(m.backend, tuple(tuple(r) for r in rows)), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def solve_linear(a: Matrix, b: Sequence) -> Optional[Vector]:
    """One solution x of A x = b, or None if the system is inconsistent."""
    bk = a.backend
    b = vec(bk, b)
    if a.rows != len(b):
        raise ValueError(f"A has {a.rows} rows but b has {len(b)} entries")
    aug = Matrix(bk, tuple(row + (bv,) for row, bv in zip(a.entries, b)))
    red, pivots = rref(aug)
    if a.cols in pivots:
        return None  # pivot in the constant column: inconsistent
    x = [bk.zero] * a.cols
    for r, c in enumerate(pivots):
        x[c] = red.entries[r][a.cols]
    return tuple(x)


def nullspace(a: Matrix) -> list:
    """Basis of the kernel of A, one vector per free column."""
    bk = a.backend
    red, pivots = rref(a)
    pivset = set(pivots)
    free = [c for c in range(a.cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [bk.zero] * a.cols
        v[fc] = bk.one
        for r, pc in enumerate(pivots):
            v[pc] = -red.entries[r][fc]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True, eq=False)
class Subspace:
    """Row span held in reduced row echelon form.

    On the exact backend the echelon form is canonical, so equality is literal
    tuple equality; on the float backend equality falls back to mutual
    containment within the backend tolerance."""

    backend: object
    ambient_dim: int
    basis: tuple  # RREF rows, no zero rows

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        if self.basis == other.basis:
            return True
        if self.backend.name == "exact":
            return False
        return all(other.contains(v) for v in self.basis)

    __hash__ = None

    @staticmethod
    def span(backend, vectors, ambient_dim: int) -> "Subspace":
        vectors = [vec(backend, v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if not vectors:
            return Subspace(backend, ambient_dim, ())
        rows = [list(v) for v in vectors]
        _rref_rows(backend, rows)
        kept = tuple(tuple(r) for r in rows if not vec_is_zero(backend, r))
        return Subspace(backend, ambient_dim, kept)

    @staticmethod
    def full(backend, n: int) -> "Subspace":
        return Subspace(backend, n, Matrix.identity(backend, n).entries)

    @staticmethod
    def zero(backend, n: int) -> "Subspace":
        return Subspace(backend, n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        v = vec(self.backend, v)
        r = self.reduce(v)
        return vec_is_zero(self.backend, r)

    def reduce(self, v: Vector) -> Vector:
        """Remainder of v after elimination against the echelon basis."""
        bk = self.backend
        v = list(v)
        for row in self.basis:
            lead = next(i for i, x in enumerate(row) if not bk.is_zero(x))
            if not bk.is_zero(v[lead]):
                f = v[lead] / row[lead]
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def sum_with(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.backend, list(self.basis) + list(other.basis), self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-style intersection via the kernel of [U^T | -V^T]."""
        bk = self.backend
        if not self.basis or not other.basis:
            return Subspace.zero(bk, self.ambient_dim)
        cols = list(self.basis) + [vec_scale(-(bk.one), r) for r in other.basis]
        m = Matrix(bk, tuple(tuple(c[i] for c in cols) for i in range(self.ambient_dim)))
        vecs = []
        for k in nullspace(m):
            coeffs = k[: self.dim]
            w = zero_vec(bk, self.ambient_dim)
            for c, row in zip(coeffs, self.basis):
                w = vec_add(w, vec_scale(c, row))
            vecs.append(w)
        return Subspace.span(bk, vecs, self.ambient_dim)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)


def matrix_span(backend, matrices, shape) -> list:
    """Reduce a list of matrices to an independent subset (by vectorisation)."""
    rows, cols = shape
    flat = [tuple(m.entries[i][j] for i in range(rows) for j in range(cols)) for m in matrices]
    sub = Subspace.span(backend, flat, rows * cols)
    out = []
    for r in sub.basis:
        out.append(Matrix(backend, tuple(tuple(r[i * cols + j] for j in range(cols)) for i in range(rows))))
    return out


# -- eigen-structure at desk scale (size <= 4) --------------------------------

@dataclass(frozen=True)
class EigenStructure:
    is_nilpotent: bool
    is_semisimple: bool


def minimal_polynomial(a: Matrix) -> list:
    """Monic minimal polynomial, coefficients low to high (exact backend)."""
    bk = a.backend
    n = a.rows
    powers = [Matrix.identity(bk, n)]
    while True:
        k = len(powers)
        cols = [tuple(p.entries[i][j] for i in range(n) for j in range(n)) for p in powers]
        target = powers[-1] * a
        tvec = tuple(target.entries[i][j] for i in range(n) for j in range(n))
        m = Matrix(bk, tuple(tuple(c[i] for c in cols) for i in range(n * n)))
        sol = solve_linear(m, tvec)
        if sol is not None:
            # A^k = sum sol_i A^i  ->  x^k - sum sol_i x^i
            return [-s for s in sol] + [bk.one]
        powers.append(target)
        if k > n:
            raise RuntimeError("minimal polynomial search exceeded matrix size")


def _poly_deriv(backend, p: list) -> list:
    return [backend.coerce(i) * p[i] for i in range(1, len(p))]


def _poly_mod(backend, a: list, b: list) -> list:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        if backend.is_zero(a[-1]):
            a.pop()
            continue
        f = a[-1] / lb
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = a[shift + i] - f * bi
        a.pop()
    while a and backend.is_zero(a[-1]):
        a.pop()
    return a


def _poly_gcd_degree(backend, a: list, b: list) -> int:
    while b:
        a, b = b, _poly_mod(backend, a, b)
    return len(a) - 1


def _char_poly(a: Matrix) -> list:
    """Characteristic polynomial by the Faddeev-LeVerrier recursion, low to high."""
    bk = a.backend
    n = a.rows
    coeffs = [bk.zero] * (n + 1)
    coeffs[n] = bk.one
    m = Matrix.zeros(bk, n, n)
    c = bk.one
    for k in range(1, n + 1):
        m = a * m + Matrix.identity(bk, n).scale(c)
        am = a * m
        c = -(am.trace() / bk.coerce(k))
        coeffs[n - k] = c
    return coeffs


def _roots_durand_kerner(coeffs: list, iterations: int = 200) -> list:
    """All complex roots of a monic-normalised polynomial (degree <= 4 use)."""
    cs = [complex(c) for c in coeffs]
    lead = cs[-1]
    cs = [c / lead for c in cs]
    deg = len(cs) - 1
    if deg == 0:
        return []
    roots = [(0.4 + 0.9j) ** k for k in range(1, deg + 1)]
    for _ in range(iterations):
        converged = True
        new = []
        for i, r in enumerate(roots):
            num = sum(c * r ** k for k, c in enumerate(cs))
            den = 1.0 + 0j
            for j, s in enumerate(roots):
                if j != i:
                    den *= r - s
            delta = num / den if den != 0 else 0j
            if abs(delta) > 1e-14:
                converged = False
            new.append(r - delta)
        roots = new
        if converged:
            break
    return roots


def eigen_structure(a: Matrix) -> EigenStructure:
    """Nilpotency (A^n = 0) and semisimplicity for square matrices of size <= 4.

    Semisimplicity is decided by squarefreeness of the minimal polynomial on the
    exact backend; the float backend falls back to the eigenvalue-separation
    heuristic (all pairwise gaps >= tol), which can misreport repeated-eigenvalue
    semisimple matrices and is therefore only a heuristic.
    """
    if a.rows != a.cols:
        raise ValueError("eigen_structure needs a square matrix")
    if a.rows > 4:
        raise ValueError("eigen_structure is restricted to size <= 4")
    bk = a.backend
    nilpotent = a.power(a.rows).is_zero()
    if bk.name == "exact":
        p = minimal_polynomial(a)
        semisimple = _poly_gcd_degree(bk, p, _poly_deriv(bk, p)) == 0
    else:
        roots = _roots_durand_kerner(_char_poly(a))
        semisimple = all(
            abs(roots[i] - roots[j]) >= bk.tol
            for i in range(len(roots))
            for j in range(i + 1, len(roots))
        )
    return EigenStructure(is_nilpotent=nilpotent, is_semisimple=semisimple)
