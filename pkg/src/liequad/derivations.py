"""Derivation spaces by exact linear algebra.

A derivation is found by solving one sparse linear system in the n^2 matrix
entries: the Leibniz rule contributes an equation per basis pair and coordinate,
the skew condition B(Dx, y) = -B(x, Dy) one per pair, and on super inputs the
parity-preservation constraints pin the off-blocks to zero (only even
derivations are computed; the classification needs no odd ones).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .core import BilinearForm, LieSuperalgebra, StructureError
from .linalg import Matrix, Subspace, matrix_span, nullspace, solve_linear, vec_is_zero


@dataclass(frozen=True)
class DerivationSpace:
    algebra: LieSuperalgebra
    kind: str  # "all" | "skew" | "inner"
    basis: Tuple[Matrix, ...]
    form: Optional[BilinearForm] = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def span(self) -> Subspace:
        n = self.algebra.dim
        flat = [tuple(m.entries[i][j] for i in range(n) for j in range(n)) for m in self.basis]
        return Subspace.span(self.algebra.backend, flat, n * n)

    def contains(self, d: Matrix) -> bool:
        n = self.algebra.dim
        flat = tuple(d.entries[i][j] for i in range(n) for j in range(n))
        return self.span().contains(flat)


def _leibniz_rows(alg: LieSuperalgebra):
    """Rows of the Leibniz system over unknowns x[(k,j)] = D[k][j]."""
    bk, n = alg.backend, alg.dim
    rows = []
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                row = [bk.zero] * (n * n)
                # D([e_i,e_j])_k = sum_m c[i][j][m] D[k][m]
                for m, x in enumerate(alg.c[i][j]):
                    if not bk.is_zero(x):
                        row[k * n + m] = row[k * n + m] + x
                # -[D e_i, e_j]_k = -sum_l D[l][i] c[l][j][k]
                for l in range(n):
                    x = alg.c[l][j][k]
                    if not bk.is_zero(x):
                        row[l * n + i] = row[l * n + i] - x
                # -[e_i, D e_j]_k = -sum_l D[l][j] c[i][l][k]
                for l in range(n):
                    x = alg.c[i][l][k]
                    if not bk.is_zero(x):
                        row[l * n + j] = row[l * n + j] - x
                if not vec_is_zero(bk, row):
                    rows.append(tuple(row))
    return rows


def _skew_rows(alg: LieSuperalgebra, form: BilinearForm):
    bk, n = alg.backend, alg.dim
    g = form.gram.entries
    rows = []
    for i in range(n):
        for j in range(i, n):
            row = [bk.zero] * (n * n)
            # B(D e_i, e_j) + B(e_i, D e_j) = sum_k D[k][i] g[k][j] + D[k][j] g[i][k]
            for k in range(n):
                if not bk.is_zero(g[k][j]):
                    row[k * n + i] = row[k * n + i] + g[k][j]
                if not bk.is_zero(g[i][k]):
                    row[k * n + j] = row[k * n + j] + g[i][k]
            if not vec_is_zero(bk, row):
                rows.append(tuple(row))
    return rows


def _parity_rows(alg: LieSuperalgebra):
    bk, n = alg.backend, alg.dim
    rows = []
    for k in range(n):
        for j in range(n):
            if alg.parity(k) != alg.parity(j):
                row = [bk.zero] * (n * n)
                row[k * n + j] = bk.one
                rows.append(tuple(row))
    return rows


def derivation_space(alg: LieSuperalgebra, kind: str = "all", form: Optional[BilinearForm] = None) -> DerivationSpace:
    """Basis of Der(g), of the skew derivations Der_a(g, B), or of the inner span.

    Only even (parity-preserving) derivations are in scope, so on super inputs
    the inner span ranges over the even basis elements: bracketing with an odd
    element reverses parity and obeys the signed Leibniz rule instead."""
    bk, n = alg.backend, alg.dim
    if kind == "inner":
        gens = [alg.ad(i) for i in range(n) if alg.parity(i) == 0]
        basis = matrix_span(bk, gens, (n, n))
        return DerivationSpace(alg, "inner", tuple(basis))
    if kind not in ("all", "skew"):
        raise ValueError(f"unknown derivation kind {kind!r}")
    rows = _leibniz_rows(alg) + _parity_rows(alg)
    if kind == "skew":
        if form is None:
            raise ValueError("skew derivations need a bilinear form")
        rows += _skew_rows(alg, form)
    if not rows:
        # no constraints at all: every matrix is a derivation
        return DerivationSpace(alg, kind, tuple(_full_matrix_space(bk, n)), form)
    m = Matrix(bk, tuple(rows))
    sols = nullspace(m)
    basis = [
        Matrix(bk, tuple(tuple(s[k * n + j] for j in range(n)) for k in range(n)))
        for s in sols
    ]
    return DerivationSpace(alg, kind, tuple(basis), form)


def _full_matrix_space(bk, n):
    out = []
    for k in range(n):
        for j in range(n):
            m = [[bk.zero] * n for _ in range(n)]
            m[k][j] = bk.one
            out.append(Matrix(bk, tuple(tuple(r) for r in m)))
    return out


def is_derivation(alg: LieSuperalgebra, d: Matrix) -> bool:
    bk, n = alg.backend, alg.dim
    if d.rows != n or d.cols != n:
        return False
    for i in range(n):
        for j in range(i, n):
            lhs = d.apply(alg.c[i][j])
            # D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j]
            rhs = tuple(
                a + b
                for a, b in zip(
                    alg.bracket(d.col(i), _basis_vec(bk, n, j)),
                    alg.bracket(_basis_vec(bk, n, i), d.col(j)),
                )
            )
            if any(not bk.is_zero(a - b) for a, b in zip(lhs, rhs)):
                return False
    return True


def _basis_vec(bk, n, i):
    v = [bk.zero] * n
    v[i] = bk.one
    return tuple(v)


def is_inner(alg: LieSuperalgebra, d: Matrix) -> Optional[tuple]:
    """Coefficients lam with D = sum lam_i ad(e_i), or None; D must be a derivation.

    The combination runs over even basis elements (see derivation_space); the
    returned tuple still has one slot per basis element, zero on the odd ones."""
    if not is_derivation(alg, d):
        raise StructureError("is_inner expects a derivation")
    bk, n = alg.backend, alg.dim
    even_idx = [i for i in range(n) if alg.parity(i) == 0]
    cols = [alg.ad(i) for i in even_idx]
    m = Matrix(
        bk,
        tuple(
            tuple(col.entries[r][c] for col in cols)
            for r in range(n)
            for c in range(n)
        ),
    )
    target = tuple(d.entries[r][c] for r in range(n) for c in range(n))
    sol = solve_linear(m, target)
    if sol is None:
        return None
    full = [bk.zero] * n
    for i, lam in zip(even_idx, sol):
        full[i] = lam
    return tuple(full)


def skew_derivation_family_g2n2(n: int) -> DerivationSpace:
    """Closed-form skew-derivation basis of the 1-step family of dimension 2n+2.

    The solved general form has D(X_0) = 0 and is parameterised by an n x n
    block (a_ij) together with two n-vectors (alpha, beta), so the dimension is
    n^2 + 2n; cross-checked against the generic solver in the tests.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    from .catalog import build  # local import: catalog depends on this module

    q = build("g2n2", n=n)
    alg = q.algebra
    bk = alg.backend
    dim = alg.dim
    ix = alg.space.index
    x0, y0 = ix("X0"), ix("Y0")
    xs = [ix(f"X{i}") for i in range(1, n + 1)]
    ys = [ix(f"Y{i}") for i in range(1, n + 1)]

    def blank():
        return [[bk.zero] * dim for _ in range(dim)]

    basis = []
    one = bk.one
    for i in range(n):  # a_ij generators: D(X_i)=X_j, D(Y_j)=-Y_i
        for j in range(n):
            m = blank()
            m[xs[j]][xs[i]] = one
            m[ys[i]][ys[j]] = -one
            basis.append(Matrix(bk, tuple(tuple(r) for r in m)))
    for i in range(n):  # alpha_i: D(Y_0)=X_i, D(Y_i)=-X_0
        m = blank()
        m[xs[i]][y0] = one
        m[x0][ys[i]] = -one
        basis.append(Matrix(bk, tuple(tuple(r) for r in m)))
    for i in range(n):  # beta_i: D(Y_0)=Y_i, D(X_i)=-X_0
        m = blank()
        m[ys[i]][y0] = one
        m[x0][xs[i]] = -one
        basis.append(Matrix(bk, tuple(tuple(r) for r in m)))
    return DerivationSpace(alg, "skew", tuple(basis), q.form)
