"""Graded vector spaces, structure-constant superalgebras and invariant forms.

Conventions, fixed project-wide:

* basis order is the even block first, then the odd block;
* the structure tensor stores both orientations, c[i][j] = coordinates of
  [e_i, e_j], with graded antisymmetry validated at construction;
* ad(e_i) is the matrix whose j-th column holds the coordinates of [e_i, e_j]
  (matrices act on column coordinate vectors);
* supersymmetry of a form means B(y, x) = (-1)^{|x||y|} B(x, y); an even form
  vanishes between blocks of different parity, an odd form vanishes on blocks
  of equal parity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence, Tuple

from .linalg import (
    Matrix,
    Subspace,
    Vector,
    dot,
    nullspace,
    rank,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)
from .report import Report
from .scalars import EXACT, residual_magnitude


class StructureError(ValueError):
    """Structure constants or form entries violate a structural invariant."""


@dataclass(frozen=True)
class SuperSpace:
    dim_even: int
    dim_odd: int
    labels: Tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != self.dim_even + self.dim_odd:
            raise StructureError("label count does not match dim_even + dim_odd")
        if len(set(self.labels)) != len(self.labels):
            raise StructureError("basis labels must be distinct")

    @staticmethod
    def make(even: Sequence[str], odd: Sequence[str] = ()) -> "SuperSpace":
        return SuperSpace(len(even), len(odd), tuple(even) + tuple(odd))

    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    def parity(self, i: int) -> int:
        return 0 if i < self.dim_even else 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def basis_vector(self, backend, label: str) -> Vector:
        v = [backend.zero] * self.dim
        v[self.index(label)] = backend.one
        return tuple(v)


def format_vector(backend, space: SuperSpace, v: Vector) -> str:
    """Render coordinates as a signed combination of basis labels."""
    terms = []
    for x, label in zip(v, space.labels):
        if backend.is_zero(x):
            continue
        s = backend.format(x)
        if s == "1":
            terms.append(("+", label))
        elif s == "-1":
            terms.append(("-", label))
        elif s.startswith("-"):
            terms.append(("-", f"{s[1:]} {label}"))
        else:
            terms.append(("+", f"{s} {label}"))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


BracketTable = Mapping[Tuple[str, str], Mapping[str, object]]


@dataclass(frozen=True)
class LieSuperalgebra:
    space: SuperSpace
    backend: object
    c: tuple = field(repr=False)  # c[i][j] = coordinate tuple of [e_i, e_j]
    _nz: tuple = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._nz is None:
            bk = self.backend
            nz = tuple(
                tuple(
                    tuple((k, x) for k, x in enumerate(row) if not bk.is_zero(x))
                    for row in block
                )
                for block in self.c
            )
            object.__setattr__(self, "_nz", nz)

    # -- construction ---------------------------------------------------------

    @staticmethod
    def build(
        even: Sequence[str],
        odd: Sequence[str] = (),
        brackets: BracketTable = (),
        backend=EXACT,
    ) -> "LieSuperalgebra":
        """Build from one orientation per unordered pair; the graded-antisymmetric
        counterpart is filled in automatically and conflicts are rejected."""
        space = SuperSpace.make(even, odd)
        n = space.dim
        table = [[None] * n for _ in range(n)]
        brackets = dict(brackets or {})
        for (la, lb), value in brackets.items():
            i, j = space.index(la), space.index(lb)
            v = _coerce_bracket_value(backend, space, value)
            _check_parity_of_value(space, i, j, v, backend, la, lb)
            sign = -backend.one if (space.parity(i) * space.parity(j)) % 2 == 0 else backend.one
            mirror = tuple(sign * x for x in v)
            if table[i][j] is not None:
                raise StructureError(f"bracket [{la},{lb}] given twice")
            if table[j][i] is not None and i != j:
                raise StructureError(
                    f"both orientations of the pair ({la},{lb}) specified; "
                    "graded antisymmetry fixes the second one"
                )
            if i == j:
                if space.parity(i) == 0 and not vec_is_zero(backend, v):
                    raise StructureError(f"[{la},{la}] must vanish on an even element")
                table[i][i] = v
            else:
                table[i][j] = v
                table[j][i] = mirror
        zero = zero_vec(backend, n)
        c = tuple(tuple(row if row is not None else zero for row in block) for block in table)
        return LieSuperalgebra(space, backend, c)

    @staticmethod
    def from_tensor(space: SuperSpace, backend, c) -> "LieSuperalgebra":
        alg = LieSuperalgebra(space, backend, tuple(tuple(tuple(r) for r in b) for b in c))
        errs = alg.structure_violations()
        if errs:
            raise StructureError("; ".join(errs[:4]))
        return alg

    @staticmethod
    def abelian(even: Sequence[str], odd: Sequence[str] = (), backend=EXACT) -> "LieSuperalgebra":
        return LieSuperalgebra.build(even, odd, {}, backend)

    # -- basic queries ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.space.labels

    def parity(self, i: int) -> int:
        return self.space.parity(i)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def bracket(self, u: Vector, v: Vector) -> Vector:
        bk = self.backend
        out = [bk.zero] * self.dim
        for i, a in enumerate(u):
            if bk.is_zero(a):
                continue
            for j, b in enumerate(v):
                if bk.is_zero(b):
                    continue
                ab = a * b
                for k, x in self._nz[i][j]:
                    out[k] = out[k] + ab * x
        return tuple(out)

    def ad(self, i: int) -> Matrix:
        """Matrix of [e_i, -], images in columns."""
        n = self.dim
        return Matrix(self.backend, tuple(tuple(self.c[i][j][k] for j in range(n)) for k in range(n)))

    def ad_vector(self, v: Vector) -> Matrix:
        n = self.dim
        bk = self.backend
        cols = [zero_vec(bk, n)] * n
        for j in range(n):
            col = [bk.zero] * n
            for i, a in enumerate(v):
                if bk.is_zero(a):
                    continue
                for k, x in self._nz[i][j]:
                    col[k] = col[k] + a * x
            cols[j] = tuple(col)
        return Matrix(bk, tuple(tuple(cols[j][k] for j in range(n)) for k in range(n)))

    def structure_violations(self) -> list:
        """Parity-consistency and graded-antisymmetry violations, as messages."""
        bk, sp = self.backend, self.space
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                pij = (sp.parity(i) + sp.parity(j)) % 2
                for k, x in enumerate(self.c[i][j]):
                    if not bk.is_zero(x) and sp.parity(k) != pij:
                        out.append(
                            f"parity: [{sp.labels[i]},{sp.labels[j]}] has a "
                            f"{sp.labels[k]}-component of the wrong parity"
                        )
                sign = bk.one if (sp.parity(i) * sp.parity(j)) % 2 == 1 else -bk.one
                for k in range(self.dim):
                    if not bk.is_zero(self.c[j][i][k] - sign * self.c[i][j][k]):
                        out.append(
                            f"antisymmetry: c[{sp.labels[j]},{sp.labels[i]}] != "
                            f"(-1)^(|i||j|+1) c[{sp.labels[i]},{sp.labels[j]}]"
                        )
                        break
        return out

    def to_backend(self, backend) -> "LieSuperalgebra":
        c = tuple(tuple(tuple(backend.coerce(x) for x in row) for row in block) for block in self.c)
        return LieSuperalgebra(self.space, backend, c)

    def relabel(self, mapping: Mapping[str, str]) -> "LieSuperalgebra":
        labels = tuple(mapping.get(l, l) for l in self.labels)
        return LieSuperalgebra(SuperSpace(self.space.dim_even, self.space.dim_odd, labels), self.backend, self.c)

    def format_vector(self, v: Vector) -> str:
        return format_vector(self.backend, self.space, v)

    def __repr__(self):
        return f"LieSuperalgebra(dim_even={self.space.dim_even}, dim_odd={self.space.dim_odd}, labels={self.labels})"


def _coerce_bracket_value(backend, space: SuperSpace, value) -> Vector:
    out = [backend.zero] * space.dim
    for label, coeff in dict(value).items():
        out[space.index(label)] = backend.coerce(coeff)
    return tuple(out)


def _check_parity_of_value(space, i, j, v, backend, la, lb):
    pij = (space.parity(i) + space.parity(j)) % 2
    for k, x in enumerate(v):
        if not backend.is_zero(x) and space.parity(k) != pij:
            raise StructureError(
                f"bracket [{la},{lb}] maps to {space.labels[k]} of the wrong parity"
            )


@dataclass(frozen=True)
class BilinearForm:
    space: SuperSpace
    backend: object
    parity: str  # "even" | "odd"
    gram: Matrix

    @staticmethod
    def build(space: SuperSpace, entries: Mapping[Tuple[str, str], object], parity: str = "even", backend=EXACT) -> "BilinearForm":
        if parity not in ("even", "odd"):
            raise StructureError("form parity must be 'even' or 'odd'")
        n = space.dim
        g = [[backend.zero] * n for _ in range(n)]
        seen = set()
        for (la, lb), coeff in dict(entries).items():
            i, j = space.index(la), space.index(lb)
            x = backend.coerce(coeff)
            pi, pj = space.parity(i), space.parity(j)
            want_mixed = parity == "odd"
            if (pi != pj) != want_mixed and not backend.is_zero(x):
                raise StructureError(
                    f"form entry ({la},{lb}) violates the {parity} parity pattern"
                )
            if (j, i) in seen and (i, j) not in seen:
                raise StructureError(f"both orientations of form pair ({la},{lb}) specified")
            if (i, j) in seen:
                raise StructureError(f"form entry ({la},{lb}) given twice")
            seen.add((i, j))
            sign = -backend.one if pi * pj == 1 else backend.one
            g[i][j] = x
            if i != j:
                g[j][i] = sign * x
            elif pi == 1 and not backend.is_zero(x):
                raise StructureError(f"form entry ({la},{la}) must vanish on an odd element")
        return BilinearForm(space, backend, parity, Matrix(backend, tuple(tuple(r) for r in g)))

    def value(self, u: Vector, v: Vector):
        return dot(u, self.gram.apply(v))

    def pair_basis(self, i: int, j: int):
        return self.gram.entries[i][j]

    def restrict(self, vectors: Sequence[Vector]) -> Matrix:
        gv = [self.gram.apply(v) for v in vectors]
        return Matrix(self.backend, tuple(tuple(dot(u, col) for col in gv) for u in vectors))

    def is_nondegenerate(self) -> bool:
        return rank(self.gram) == self.space.dim

    def to_backend(self, backend) -> "BilinearForm":
        g = Matrix.from_rows(backend, [[backend.coerce(x) for x in row] for row in self.gram.entries])
        return BilinearForm(self.space, backend, self.parity, g)

    def relabel(self, space: SuperSpace) -> "BilinearForm":
        return BilinearForm(space, self.backend, self.parity, self.gram)


@dataclass(frozen=True)
class QuadraticAlgebra:
    algebra: LieSuperalgebra
    form: BilinearForm
    verified: Report = field(default=None, compare=False, repr=False)

    @staticmethod
    def build(algebra: LieSuperalgebra, form: BilinearForm, require: bool = True) -> "QuadraticAlgebra":
        rep = Report()
        rep.extend(verify_jacobi(algebra))
        rep.extend(verify_form(algebra, form))
        if require:
            rep.raise_if_failed(StructureError)
        return QuadraticAlgebra(algebra, form, rep)

    @property
    def backend(self):
        return self.algebra.backend

    @property
    def space(self) -> SuperSpace:
        return self.algebra.space

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def to_backend(self, backend) -> "QuadraticAlgebra":
        return QuadraticAlgebra.build(self.algebra.to_backend(backend), self.form.to_backend(backend))


# -- axiom verification --------------------------------------------------------


def _fmt_residual(backend, value) -> str:
    if backend.name == "exact":
        return backend.format(value)
    return repr(residual_magnitude(backend, value))


def verify_jacobi(alg: LieSuperalgebra) -> Report:
    """Graded Jacobi identity on all unordered basis triples.

    Every failing triple becomes its own report entry carrying the largest
    residual component; a clean run collapses to a single passing check.
    """
    bk, sp = alg.backend, alg.space
    rep = Report()
    n = alg.dim
    law = "graded Jacobi identity"
    struct = alg.structure_violations()
    for msg in struct:
        rep.add("structure", "graded antisymmetry / parity consistency", False, witness=msg)
    fails = 0
    for i in range(n):
        pi = sp.parity(i)
        for j in range(i, n):
            pj = sp.parity(j)
            for k in range(j, n):
                pk = sp.parity(k)
                s1 = -bk.one if (pi * pk) % 2 else bk.one
                s2 = -bk.one if (pj * pi) % 2 else bk.one
                s3 = -bk.one if (pk * pj) % 2 else bk.one
                term = vec_add(
                    vec_add(
                        vec_scale(s1, alg.bracket(_basis(bk, n, i), alg.c[j][k])),
                        vec_scale(s2, alg.bracket(_basis(bk, n, j), alg.c[k][i])),
                    ),
                    vec_scale(s3, alg.bracket(_basis(bk, n, k), alg.c[i][j])),
                )
                if not vec_is_zero(bk, term):
                    fails += 1
                    worst = max(term, key=lambda x: residual_magnitude(bk, x))
                    rep.add(
                        f"jacobi({sp.labels[i]},{sp.labels[j]},{sp.labels[k]})",
                        law,
                        False,
                        residual=_fmt_residual(bk, worst),
                        witness=alg.format_vector(term),
                    )
    if fails == 0 and not struct:
        rep.add("jacobi", law, True, residual="0" if bk.name == "exact" else "0.0")
    return rep


def _basis(bk, n: int, i: int) -> Vector:
    v = [bk.zero] * n
    v[i] = bk.one
    return tuple(v)


def verify_form(alg: LieSuperalgebra, form: BilinearForm) -> Report:
    """Supersymmetry, parity pattern, non-degeneracy and invariance of a form."""
    bk, sp = alg.backend, alg.space
    rep = Report()
    if form.space.dim != sp.dim:
        raise StructureError("form dimension does not match the algebra")
    n = sp.dim
    g = form.gram.entries
    ok = True
    for i in range(n):
        for j in range(i, n):
            sign = -bk.one if sp.parity(i) * sp.parity(j) == 1 else bk.one
            if not bk.is_zero(g[j][i] - sign * g[i][j]):
                ok = False
                rep.add(
                    f"supersymmetry({sp.labels[i]},{sp.labels[j]})",
                    "supersymmetry B(y,x) = (-1)^{|x||y|} B(x,y)",
                    False,
                    residual=_fmt_residual(bk, g[j][i] - sign * g[i][j]),
                )
    if ok:
        rep.add("supersymmetry", "supersymmetry B(y,x) = (-1)^{|x||y|} B(x,y)", True)

    ok = True
    mixed = form.parity == "odd"
    for i in range(n):
        for j in range(n):
            if ((sp.parity(i) != sp.parity(j)) != mixed) and not bk.is_zero(g[i][j]):
                ok = False
                rep.add(
                    f"parity-pattern({sp.labels[i]},{sp.labels[j]})",
                    f"{form.parity} form parity block pattern",
                    False,
                    residual=_fmt_residual(bk, g[i][j]),
                )
    if ok:
        rep.add("parity-pattern", f"{form.parity} form parity block pattern", True)

    nondeg = form.is_nondegenerate()
    rep.add(
        "non-degeneracy",
        "non-degeneracy of the invariant form",
        nondeg,
        witness=None if nondeg else f"rank {rank(form.gram)} < dim {n}",
    )

    ok = True
    for i in range(n):
        for j in range(n):
            cij = alg.c[i][j]
            for k in range(n):
                lhs = dot(cij, form.gram.col(k))
                rhs = dot(_basis(bk, n, i), form.gram.apply(alg.c[j][k]))
                diff = lhs - rhs
                if not bk.is_zero(diff):
                    ok = False
                    rep.add(
                        f"invariance({sp.labels[i]},{sp.labels[j]},{sp.labels[k]})",
                        "invariance B([x,y],z) = B(x,[y,z])",
                        False,
                        residual=_fmt_residual(bk, diff),
                    )
    if ok:
        rep.add("invariance", "invariance B([x,y],z) = B(x,[y,z])", True)
    return rep


# -- structural subspaces --------------------------------------------------------


def center(alg: LieSuperalgebra) -> Subspace:
    """Joint kernel of all right-bracket maps v -> [v, e_j]."""
    bk, n = alg.backend, alg.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append(tuple(alg.c[i][j][k] for i in range(n)))
    m = Matrix(bk, tuple(rows))
    return Subspace.span(bk, nullspace(m), n)


def graded_center_basis(alg: LieSuperalgebra):
    """Center basis split into (even, odd) parts; the center is a graded subspace."""
    bk = alg.backend
    z = center(alg)
    even, odd = [], []
    ne = alg.space.dim_even
    for v in z.basis:
        ev = tuple(x if i < ne else bk.zero for i, x in enumerate(v))
        od = tuple(x if i >= ne else bk.zero for i, x in enumerate(v))
        if not vec_is_zero(bk, ev):
            even.append(ev)
        if not vec_is_zero(bk, od):
            odd.append(od)
    evs = Subspace.span(bk, even, alg.dim)
    ods = Subspace.span(bk, odd, alg.dim)
    return evs, ods


def subspace_bracket(alg: LieSuperalgebra, u: Subspace, v: Subspace) -> Subspace:
    vecs = [alg.bracket(a, b) for a in u.basis for b in v.basis]
    return Subspace.span(alg.backend, vecs, alg.dim)


def derived_subalgebra(alg: LieSuperalgebra) -> Subspace:
    whole = Subspace.full(alg.backend, alg.dim)
    return subspace_bracket(alg, whole, whole)


def derived_series(alg: LieSuperalgebra) -> list:
    series = [Subspace.full(alg.backend, alg.dim)]
    while True:
        nxt = subspace_bracket(alg, series[-1], series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
        if nxt.dim == 0:
            break
    return series


def lower_central_series(alg: LieSuperalgebra) -> list:
    whole = Subspace.full(alg.backend, alg.dim)
    series = [whole]
    while True:
        nxt = subspace_bracket(alg, whole, series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
        if nxt.dim == 0:
            break
    return series


def is_solvable(alg: LieSuperalgebra) -> bool:
    return derived_series(alg)[-1].dim == 0


def is_nilpotent(alg: LieSuperalgebra) -> bool:
    return lower_central_series(alg)[-1].dim == 0


def orthogonal_complement(q: QuadraticAlgebra, s: Subspace) -> Subspace:
    """{v : B(v, s) = 0}; requires a non-degenerate form."""
    form = q.form
    if not form.is_nondegenerate():
        raise StructureError("orthogonal complement needs a non-degenerate form")
    bk, n = q.backend, q.dim
    if s.dim == 0:
        return Subspace.full(bk, n)
    rows = tuple(form.gram.apply(b) for b in s.basis)
    return Subspace.span(bk, nullspace(Matrix(bk, rows)), n)


def is_ideal(alg: LieSuperalgebra, s: Subspace) -> bool:
    bk, n = alg.backend, alg.dim
    for i in range(n):
        e = _basis(bk, n, i)
        for b in s.basis:
            if not s.contains(alg.bracket(e, b)):
                return False
    return True


def is_nondegenerate_on(form: BilinearForm, s: Subspace) -> bool:
    if s.dim == 0:
        return True
    return rank(form.restrict(s.basis)) == s.dim
