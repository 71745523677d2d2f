"""Constructors: double extensions, T*-extensions and their odd/super variants.

Sign conventions used throughout (fixed once, exercised by the Jacobi checker):

* coadjoint action  ad*(x)(f) = -f o ad(x), so on dual basis vectors
  [e_i, e_j*] = -sum_k c[i][k][j] e_k*;
* dual basis labels carry a trailing star;
* basis order of an extension output is  base, (middle part), duals  for the
  purely even constructions, and  base, duals, odd part  for the super one so
  that the even block stays in front.

Cocycles theta, pairings phi and representations psi are accepted only as
explicit tensors/matrices and are validated eagerly: a constructor never
returns something that fails its own axioms.  The only soft spot is the cyclic
condition, whose failure downgrades the output to a bare Lie superalgebra with
a warning instead of a quadratic one.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Tuple, Union

from .core import (
    BilinearForm,
    LieSuperalgebra,
    QuadraticAlgebra,
    StructureError,
)
from .derivations import is_derivation
from .linalg import Matrix, nullspace, vec_is_zero, zero_vec


class ExtensionError(StructureError):
    """An extension input fails its structural preconditions."""


def star(label: str) -> str:
    return label + "*"


def _require_even(alg: LieSuperalgebra, what: str):
    if alg.space.dim_odd != 0:
        raise ExtensionError(f"{what} requires a purely even algebra")


# -- cocycles -------------------------------------------------------------------


@dataclass(frozen=True)
class Cocycle2:
    """Skew 2-cocycle theta: g x g -> g*, stored as theta[i][j] = dual coordinates."""

    base: LieSuperalgebra
    theta: tuple = field(repr=False)

    @staticmethod
    def build(base: LieSuperalgebra, entries: Mapping[Tuple[str, str], Mapping[str, object]]) -> "Cocycle2":
        _require_even(base, "a 2-cocycle")
        bk, n = base.backend, base.dim
        t = [[None] * n for _ in range(n)]
        for (la, lb), value in dict(entries).items():
            i, j = base.space.index(la), base.space.index(lb)
            v = [bk.zero] * n
            for lc, coeff in dict(value).items():
                v[base.space.index(lc)] = bk.coerce(coeff)
            v = tuple(v)
            if t[i][j] is not None or (i != j and t[j][i] is not None):
                raise ExtensionError(f"cocycle pair ({la},{lb}) specified twice")
            t[i][j] = v
            if i != j:
                t[j][i] = tuple(-x for x in v)
            elif not vec_is_zero(bk, v):
                raise ExtensionError("theta(x,x) must vanish")
        zero = zero_vec(bk, n)
        theta = tuple(tuple(row if row is not None else zero for row in block) for block in t)
        c = Cocycle2(base, theta)
        c.validate()
        return c

    @staticmethod
    def zero(base: LieSuperalgebra) -> "Cocycle2":
        return Cocycle2.build(base, {})

    def scaled(self, factor) -> "Cocycle2":
        bk = self.base.backend
        f = bk.coerce(factor)
        theta = tuple(tuple(tuple(f * x for x in row) for row in block) for block in self.theta)
        return Cocycle2(self.base, theta)

    def validate(self) -> None:
        """Antisymmetry plus the 2-cocycle identity on all basis triples."""
        bk, n = self.base.backend, self.base.dim
        c = self.base.c
        th = self.theta
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if not bk.is_zero(th[j][i][k] + th[i][j][k]):
                        raise ExtensionError(
                            f"theta is not skew on ({self.base.labels[i]},{self.base.labels[j]})"
                        )
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    for m in range(n):
                        acc = bk.zero
                        for (a, b, z) in ((i, j, k), (j, k, i), (k, i, j)):
                            for l in range(n):
                                acc = acc + c[z][m][l] * th[a][b][l]
                                acc = acc + c[a][b][l] * th[l][z][m]
                        if not bk.is_zero(acc):
                            raise ExtensionError(
                                "2-cocycle identity fails on triple "
                                f"({self.base.labels[i]},{self.base.labels[j]},{self.base.labels[k]})"
                            )

    def is_cyclic(self) -> bool:
        """theta(x,y)z = theta(y,z)x on all basis triples."""
        bk, n = self.base.backend, self.base.dim
        return all(
            bk.is_zero(self.theta[i][j][k] - self.theta[j][k][i])
            for i in range(n)
            for j in range(n)
            for k in range(n)
        )


# -- symmetric pairings for the odd extension ------------------------------------


@dataclass(frozen=True)
class SymPairing:
    """Symmetric phi: g* x g* -> g, stored as phi[i][j] = coordinates in g."""

    base: LieSuperalgebra
    phi: tuple = field(repr=False)

    @staticmethod
    def build(base: LieSuperalgebra, entries: Mapping[Tuple[str, str], Mapping[str, object]]) -> "SymPairing":
        _require_even(base, "a symmetric pairing")
        bk, n = base.backend, base.dim
        t = [[None] * n for _ in range(n)]
        for (la, lb), value in dict(entries).items():
            i, j = base.space.index(la), base.space.index(lb)
            v = [bk.zero] * n
            for lc, coeff in dict(value).items():
                v[base.space.index(lc)] = bk.coerce(coeff)
            v = tuple(v)
            if t[i][j] is not None or (i != j and t[j][i] is not None):
                raise ExtensionError(f"pairing ({la},{lb}) specified twice")
            t[i][j] = v
            if i != j:
                t[j][i] = v
        zero = zero_vec(bk, n)
        phi = tuple(tuple(row if row is not None else zero for row in block) for block in t)
        p = SymPairing(base, phi)
        p.validate()
        return p

    @staticmethod
    def from_tensor(base: LieSuperalgebra, phi: tuple) -> "SymPairing":
        p = SymPairing(base, phi)
        p.validate()
        return p

    @staticmethod
    def zero(base: LieSuperalgebra) -> "SymPairing":
        return SymPairing.build(base, {})

    def validate(self) -> None:
        rep = _pairing_condition_failures(self.base, self.phi)
        if rep:
            raise ExtensionError(rep[0])

    def is_cyclic(self) -> bool:
        bk, n = self.base.backend, self.base.dim
        return all(
            bk.is_zero(self.phi[i][j][k] - self.phi[j][k][i])
            for i in range(n)
            for j in range(n)
            for k in range(n)
        )


def _pairing_condition_failures(base: LieSuperalgebra, phi) -> list:
    """Symmetry plus the two compatibility conditions of the odd construction."""
    bk, n = base.backend, base.dim
    c = base.c
    labels = base.labels
    out = []
    for i in range(n):
        for j in range(i, n):
            if any(not bk.is_zero(a - b) for a, b in zip(phi[i][j], phi[j][i])):
                out.append(f"phi is not symmetric on ({labels[i]},{labels[j]})")
    # condition (1): ad(x)(phi(f,g)) + phi(f, g o ad(x)) + phi(g, f o ad(x)) = 0
    for x in range(n):
        adx = base.ad(x)
        for i in range(n):
            for j in range(i, n):
                term = list(adx.apply(phi[i][j]))
                for m in range(n):
                    if not bk.is_zero(c[x][m][j]):
                        term = [a + c[x][m][j] * b for a, b in zip(term, phi[i][m])]
                    if not bk.is_zero(c[x][m][i]):
                        term = [a + c[x][m][i] * b for a, b in zip(term, phi[j][m])]
                if not vec_is_zero(bk, term):
                    out.append(
                        f"pairing condition (1) fails at (x,f,g) = ({labels[x]},{labels[i]}*,{labels[j]}*)"
                    )
    # condition (2): f o ad(phi(g,h)) + cycle = 0
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                for m in range(n):
                    acc = bk.zero
                    for (a, b, f) in ((j, k, i), (k, i, j), (i, j, k)):
                        for l in range(n):
                            acc = acc + phi[a][b][l] * c[l][m][f]
                    if not bk.is_zero(acc):
                        out.append(
                            f"pairing condition (2) fails at ({labels[i]}*,{labels[j]}*,{labels[k]}*)"
                        )
                        break
    return out


def sym_pairing_space(base: LieSuperalgebra, cyclic: bool = True) -> list:
    """Basis of all pairings satisfying the two conditions (and optionally the
    cyclic identity), as SymPairing objects; a finite linear solve."""
    _require_even(base, "the pairing solver")
    bk, n = base.backend, base.dim
    c = base.c
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    pidx = {p: a for a, p in enumerate(pairs)}

    def unknown(i, j, k):
        return pidx[(min(i, j), max(i, j))] * n + k

    nun = len(pairs) * n
    rows = []
    # condition (1)
    for x in range(n):
        for i, j in pairs:
            for out_k in range(n):
                row = [bk.zero] * nun
                for l in range(n):
                    if not bk.is_zero(c[x][l][out_k]):
                        u = unknown(i, j, l)
                        row[u] = row[u] + c[x][l][out_k]
                for m in range(n):
                    if not bk.is_zero(c[x][m][j]):
                        u = unknown(i, m, out_k)
                        row[u] = row[u] + c[x][m][j]
                    if not bk.is_zero(c[x][m][i]):
                        u = unknown(j, m, out_k)
                        row[u] = row[u] + c[x][m][i]
                if not vec_is_zero(bk, row):
                    rows.append(tuple(row))
    # condition (2)
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                for m in range(n):
                    row = [bk.zero] * nun
                    for (a, b, f) in ((j, k, i), (k, i, j), (i, j, k)):
                        for l in range(n):
                            if not bk.is_zero(c[l][m][f]):
                                u = unknown(a, b, l)
                                row[u] = row[u] + c[l][m][f]
                    if not vec_is_zero(bk, row):
                        rows.append(tuple(row))
    if cyclic:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    row = [bk.zero] * nun
                    u1, u2 = unknown(i, j, k), unknown(j, k, i)
                    if u1 == u2:
                        continue
                    row[u1] = row[u1] + bk.one
                    row[u2] = row[u2] - bk.one
                    if not vec_is_zero(bk, row):
                        rows.append(tuple(row))
    if rows:
        sols = nullspace(Matrix(bk, tuple(rows)))
    else:
        sols = nullspace(Matrix.zeros(bk, 1, nun))
    out = []
    for s in sols:
        phi = [[None] * n for _ in range(n)]
        for (i, j), a in pidx.items():
            v = tuple(s[a * n + k] for k in range(n))
            phi[i][j] = v
            phi[j][i] = v
        out.append(SymPairing.from_tensor(base, tuple(tuple(r) for r in phi)))
    return out


# -- symplectic representations ---------------------------------------------------


@dataclass(frozen=True)
class SymplecticSpace:
    labels: Tuple[str, ...]
    gram: Matrix  # antisymmetric, non-degenerate

    @staticmethod
    def canonical(backend, m: int, prefix: Tuple[str, str] = ("F", "G")) -> "SymplecticSpace":
        """Canonical pairing B(F_i, G_i) = 1 on 2m basis vectors."""
        labels = [f"{prefix[0]}{i}" for i in range(1, m + 1)] + [f"{prefix[1]}{i}" for i in range(1, m + 1)]
        g = [[backend.zero] * (2 * m) for _ in range(2 * m)]
        for i in range(m):
            g[i][m + i] = backend.one
            g[m + i][i] = -backend.one
        return SymplecticSpace(tuple(labels), Matrix(backend, tuple(tuple(r) for r in g)))

    @staticmethod
    def build(backend, labels: Sequence[str], entries: Mapping[Tuple[str, str], object]) -> "SymplecticSpace":
        n = len(labels)
        idx = {l: i for i, l in enumerate(labels)}
        g = [[backend.zero] * n for _ in range(n)]
        for (la, lb), coeff in dict(entries).items():
            i, j = idx[la], idx[lb]
            x = backend.coerce(coeff)
            if i == j and not backend.is_zero(x):
                raise ExtensionError("a symplectic form vanishes on the diagonal")
            g[i][j] = x
            g[j][i] = -x
        return SymplecticSpace(tuple(labels), Matrix(backend, tuple(tuple(r) for r in g)))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def backend(self):
        return self.gram.backend

    def validate(self) -> None:
        bk, n = self.backend, self.dim
        g = self.gram.entries
        for i in range(n):
            for j in range(n):
                if not bk.is_zero(g[i][j] + g[j][i]):
                    raise ExtensionError("symplectic gram matrix must be antisymmetric")
        from .linalg import rank

        if rank(self.gram) != n:
            raise ExtensionError("symplectic form must be non-degenerate")


@dataclass(frozen=True)
class Representation:
    """A homomorphism of an even Lie algebra into sp of a symplectic space."""

    base: LieSuperalgebra
    target: SymplecticSpace
    psi: Tuple[Matrix, ...]  # one matrix per basis element of base

    @staticmethod
    def build(base: LieSuperalgebra, target: SymplecticSpace, psi: Sequence[Matrix]) -> "Representation":
        _require_even(base, "a symplectic representation")
        target.validate()
        rep = Representation(base, target, tuple(psi))
        rep.validate()
        return rep

    def matrix_of(self, v) -> Matrix:
        bk = self.base.backend
        out = Matrix.zeros(bk, self.target.dim, self.target.dim)
        for coeff, m in zip(v, self.psi):
            if not bk.is_zero(coeff):
                out = out + m.scale(coeff)
        return out

    def validate(self) -> None:
        bk, n = self.base.backend, self.base.dim
        if len(self.psi) != n:
            raise ExtensionError("psi needs one matrix per basis element")
        g = self.target.gram
        for i, m in enumerate(self.psi):
            if m.rows != self.target.dim or m.cols != self.target.dim:
                raise ExtensionError("psi matrix has the wrong shape")
            # skewness psi^T G + G psi = 0
            if not (m.transpose() * g + g * m).is_zero():
                raise ExtensionError(
                    f"psi({self.base.labels[i]}) is not skew for the symplectic form"
                )
        for i in range(n):
            for j in range(i + 1, n):
                want = self.matrix_of(self.base.c[i][j])
                have = self.psi[i] * self.psi[j] - self.psi[j] * self.psi[i]
                if not (want - have).is_zero():
                    raise ExtensionError(
                        "psi is not a homomorphism on "
                        f"({self.base.labels[i]},{self.base.labels[j]})"
                    )


# -- the constructors -------------------------------------------------------------


def double_extension_1d(q: QuadraticAlgebra, d: Matrix, ext_labels: Tuple[str, str] = ("e", "f")) -> QuadraticAlgebra:
    """One-dimensional double extension of an even quadratic algebra by a skew
    derivation: new brackets [e,x] = Dx and [x,y] = [x,y] + B(Dx,y) f, with f
    central and the form extended hyperbolically by B(e,f) = 1."""
    alg, form = q.algebra, q.form
    _require_even(alg, "the one-dimensional double extension")
    bk, n = alg.backend, alg.dim
    if not is_derivation(alg, d):
        raise ExtensionError("the extension map is not a derivation")
    g = form.gram
    if not (d.transpose() * g + g * d).is_zero():
        raise ExtensionError("the extension map is not skew for the form")
    le, lf = ext_labels
    if le in alg.labels or lf in alg.labels or le == lf:
        raise ExtensionError("extension labels collide with the base labels")
    labels = (le,) + alg.labels + (lf,)
    brackets = {}
    for j, lab in enumerate(alg.labels):
        col = d.col(j)
        if not vec_is_zero(bk, col):
            brackets[(le, lab)] = {alg.labels[k]: x for k, x in enumerate(col) if not bk.is_zero(x)}
    for i in range(n):
        for j in range(i + 1, n):
            value = {alg.labels[k]: x for k, x in enumerate(alg.c[i][j]) if not bk.is_zero(x)}
            acc = bk.zero
            dcol = d.col(i)
            for k in range(n):
                acc = acc + dcol[k] * g.entries[k][j]
            if not bk.is_zero(acc):
                value[lf] = acc
            if value:
                brackets[(alg.labels[i], alg.labels[j])] = value
    out = LieSuperalgebra.build(labels, (), brackets, bk)
    entries = {(le, lf): bk.one}
    for i in range(n):
        for j in range(i, n):
            if not bk.is_zero(g.entries[i][j]):
                entries[(alg.labels[i], alg.labels[j])] = g.entries[i][j]
    new_form = BilinearForm.build(out.space, entries, "even", bk)
    return QuadraticAlgebra.build(out, new_form)


def double_extension_general(galg: LieSuperalgebra, h: Optional[QuadraticAlgebra], psi: Sequence[Matrix]) -> QuadraticAlgebra:
    """Double extension of an even quadratic algebra h by a Lie algebra g acting
    through skew derivations; h may be None for the plain coadjoint semidirect
    product on g + g*."""
    _require_even(galg, "the double extension")
    bk = galg.backend
    ng = galg.dim
    if h is None:
        halg = LieSuperalgebra.abelian((), backend=bk)
        hform = BilinearForm.build(halg.space, {}, "even", bk)
        h = QuadraticAlgebra(halg, hform)
    else:
        _require_even(h.algebra, "the double extension core")
    nh = h.dim
    psi = tuple(psi)
    if len(psi) != ng:
        raise ExtensionError("psi needs one matrix per base generator")
    hg = h.form.gram
    for i, m in enumerate(psi):
        if not is_derivation(h.algebra, m):
            raise ExtensionError(f"psi({galg.labels[i]}) is not a derivation of the core")
        if not (m.transpose() * hg + hg * m).is_zero():
            raise ExtensionError(f"psi({galg.labels[i]}) is not skew for the core form")
    for i in range(ng):
        for j in range(i + 1, ng):
            want = Matrix.zeros(bk, nh, nh)
            for coeff, m in zip(galg.c[i][j], psi):
                if not bk.is_zero(coeff):
                    want = want + m.scale(coeff)
            have = psi[i] * psi[j] - psi[j] * psi[i]
            if not (want - have).is_zero():
                raise ExtensionError(
                    f"psi is not a homomorphism on ({galg.labels[i]},{galg.labels[j]})"
                )

    glabels = galg.labels
    hlabels = h.algebra.labels
    dlabels = tuple(star(l) for l in glabels)
    labels = glabels + hlabels + dlabels
    brackets = {}

    def put(la, lb, vecdict):
        vecdict = {k: v for k, v in vecdict.items() if not bk.is_zero(v)}
        if vecdict:
            brackets[(la, lb)] = vecdict

    for i in range(ng):
        for j in range(i + 1, ng):
            put(glabels[i], glabels[j], {glabels[k]: x for k, x in enumerate(galg.c[i][j])})
        for a in range(nh):
            put(glabels[i], hlabels[a], {hlabels[k]: x for k, x in enumerate(psi[i].col(a))})
        for j in range(ng):
            # [x_i, x_j*] = -sum_k c[i][k][j] x_k*
            put(glabels[i], dlabels[j], {dlabels[k]: -galg.c[i][k][j] for k in range(ng)})
    for a in range(nh):
        for b in range(a + 1, nh):
            value = {hlabels[k]: x for k, x in enumerate(h.algebra.c[a][b])}
            for k in range(ng):
                coeff = bk.zero
                col = psi[k].col(a)
                for r in range(nh):
                    coeff = coeff + col[r] * hg.entries[r][b]
                if not bk.is_zero(coeff):
                    value[dlabels[k]] = coeff
            put(hlabels[a], hlabels[b], value)
    out = LieSuperalgebra.build(labels, (), brackets, bk)
    entries = {(glabels[i], dlabels[i]): bk.one for i in range(ng)}
    for a in range(nh):
        for b in range(a, nh):
            if not bk.is_zero(hg.entries[a][b]):
                entries[(hlabels[a], hlabels[b])] = hg.entries[a][b]
    new_form = BilinearForm.build(out.space, entries, "even", bk)
    return QuadraticAlgebra.build(out, new_form)


def t_star_extension(galg: LieSuperalgebra, theta: Optional[Cocycle2] = None) -> Union[QuadraticAlgebra, LieSuperalgebra]:
    """T*-extension on g + g*; quadratic via the canonical pairing when theta is
    cyclic, otherwise a bare Lie algebra is returned with a warning."""
    _require_even(galg, "the T*-extension")
    if theta is not None and theta.base is not galg and theta.base != galg:
        raise ExtensionError("theta is a cocycle of a different algebra")
    bk, n = galg.backend, galg.dim
    labels = galg.labels
    dlabels = tuple(star(l) for l in labels)
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            value = {labels[k]: x for k, x in enumerate(galg.c[i][j]) if not bk.is_zero(x)}
            if theta is not None:
                for k, x in enumerate(theta.theta[i][j]):
                    if not bk.is_zero(x):
                        value[dlabels[k]] = x
            if value:
                brackets[(labels[i], labels[j])] = value
        for j in range(n):
            value = {dlabels[k]: -galg.c[i][k][j] for k in range(n) if not bk.is_zero(galg.c[i][k][j])}
            if value:
                brackets[(labels[i], dlabels[j])] = value
    out = LieSuperalgebra.build(labels + dlabels, (), brackets, bk)
    if theta is not None and not theta.is_cyclic():
        warnings.warn(
            "theta is not cyclic: the T*-extension is returned as a plain Lie algebra",
            UserWarning,
            stacklevel=2,
        )
        return out
    entries = {(labels[i], dlabels[i]): bk.one for i in range(n)}
    form = BilinearForm.build(out.space, entries, "even", bk)
    return QuadraticAlgebra.build(out, form)


def super_double_extension(
    galg: LieSuperalgebra,
    rep: Representation,
    theta: Optional[Cocycle2] = None,
) -> Union[QuadraticAlgebra, LieSuperalgebra]:
    """Quadratic superalgebra with even part g + g* and odd part the symplectic
    space of the representation; the odd-odd bracket is the pairing
    phi(F,G) = sum_k B_h(psi(e_k)F, G) e_k*, which is symmetric whenever psi is
    skew.  An optional cyclic cocycle twists the even-even bracket."""
    _require_even(galg, "the super double extension")
    if rep.base != galg:
        raise ExtensionError("the representation acts for a different base algebra")
    if theta is not None and theta.base != galg:
        raise ExtensionError("theta is a cocycle of a different algebra")
    bk, ng = galg.backend, galg.dim
    hsp = rep.target
    nh = hsp.dim
    glabels = galg.labels
    dlabels = tuple(star(l) for l in glabels)
    olabels = hsp.labels
    if set(olabels) & set(glabels + dlabels):
        raise ExtensionError("odd labels collide with the even labels")
    brackets = {}

    def put(la, lb, vecdict):
        vecdict = {k: v for k, v in vecdict.items() if not bk.is_zero(v)}
        if vecdict:
            brackets[(la, lb)] = vecdict

    for i in range(ng):
        for j in range(i + 1, ng):
            value = {glabels[k]: x for k, x in enumerate(galg.c[i][j])}
            if theta is not None:
                for k, x in enumerate(theta.theta[i][j]):
                    value[dlabels[k]] = value.get(dlabels[k], bk.zero) + x
            put(glabels[i], glabels[j], value)
        for j in range(ng):
            put(glabels[i], dlabels[j], {dlabels[k]: -galg.c[i][k][j] for k in range(ng)})
        for a in range(nh):
            put(glabels[i], olabels[a], {olabels[k]: x for k, x in enumerate(rep.psi[i].col(a))})
    hg = hsp.gram.entries
    for a in range(nh):
        for b in range(a, nh):
            value = {}
            for k in range(ng):
                col = rep.psi[k].col(a)
                coeff = bk.zero
                for r in range(nh):
                    coeff = coeff + col[r] * hg[r][b]
                if not bk.is_zero(coeff):
                    value[dlabels[k]] = coeff
            put(olabels[a], olabels[b], value)
    out = LieSuperalgebra.build(glabels + dlabels, olabels, brackets, bk)
    if theta is not None and not theta.is_cyclic():
        warnings.warn(
            "theta is not cyclic: the super double extension is returned without a form",
            UserWarning,
            stacklevel=2,
        )
        return out
    entries = {(glabels[i], dlabels[i]): bk.one for i in range(ng)}
    for a in range(nh):
        for b in range(a + 1, nh):
            if not bk.is_zero(hg[a][b]):
                entries[(olabels[a], olabels[b])] = hg[a][b]
    form = BilinearForm.build(out.space, entries, "even", bk)
    return QuadraticAlgebra.build(out, form)


def ts_star_extension(galg: LieSuperalgebra, phi: SymPairing) -> Union[QuadraticAlgebra, LieSuperalgebra]:
    """Odd analogue of the T*-extension: g stays even, g* becomes odd, the
    odd-odd bracket is the symmetric pairing phi, and the canonical duality
    pairing supplies an odd invariant form when phi is cyclic."""
    _require_even(galg, "the odd T*-extension")
    if phi.base != galg:
        raise ExtensionError("phi pairs the dual of a different algebra")
    bk, n = galg.backend, galg.dim
    labels = galg.labels
    dlabels = tuple(star(l) for l in labels)
    brackets = {}

    def put(la, lb, vecdict):
        vecdict = {k: v for k, v in vecdict.items() if not bk.is_zero(v)}
        if vecdict:
            brackets[(la, lb)] = vecdict

    for i in range(n):
        for j in range(i + 1, n):
            put(labels[i], labels[j], {labels[k]: x for k, x in enumerate(galg.c[i][j])})
        for j in range(n):
            put(labels[i], dlabels[j], {dlabels[k]: -galg.c[i][k][j] for k in range(n)})
    for i in range(n):
        for j in range(i, n):
            put(dlabels[i], dlabels[j], {labels[k]: x for k, x in enumerate(phi.phi[i][j])})
    out = LieSuperalgebra.build(labels, dlabels, brackets, bk)
    if not phi.is_cyclic():
        warnings.warn(
            "phi is not cyclic: the odd T*-extension is returned without a form",
            UserWarning,
            stacklevel=2,
        )
        return out
    entries = {(labels[i], dlabels[i]): bk.one for i in range(n)}
    form = BilinearForm.build(out.space, entries, "odd", bk)
    return QuadraticAlgebra.build(out, form)


def direct_sum(
    q1: QuadraticAlgebra,
    q2: QuadraticAlgebra,
    rename2: Optional[Mapping[str, str]] = None,
) -> QuadraticAlgebra:
    """Orthogonal direct sum: block brackets and block Gram, even blocks first.

    Labels of the second summand may be renamed to avoid collisions; each
    summand embeds as a non-degenerate ideal of the result.
    """
    if q1.form.parity != q2.form.parity:
        raise ExtensionError("direct sum needs forms of matching parity")
    bk = q1.backend
    if q2.backend.name != bk.name:
        raise ExtensionError("direct sum needs a common backend")
    a2 = q2.algebra.relabel(rename2 or {})
    f2 = q2.form.relabel(a2.space)
    a1, f1 = q1.algebra, q1.form
    if set(a1.labels) & set(a2.labels):
        raise ExtensionError("label collision between summands; pass rename2")
    even = list(a1.labels[: a1.space.dim_even]) + list(a2.labels[: a2.space.dim_even])
    odd = list(a1.labels[a1.space.dim_even :]) + list(a2.labels[a2.space.dim_even :])
    brackets = {}
    for alg in (a1, a2):
        n = alg.dim
        for i in range(n):
            jstart = i + 1 if alg.parity(i) == 0 else i
            for j in range(jstart, n):
                value = {
                    alg.labels[k]: x
                    for k, x in enumerate(alg.c[i][j])
                    if not bk.is_zero(x)
                }
                if value:
                    brackets[(alg.labels[i], alg.labels[j])] = value
    out = LieSuperalgebra.build(even, odd, brackets, bk)
    entries = {}
    for alg, form in ((a1, f1), (a2, f2)):
        n = alg.dim
        for i in range(n):
            for j in range(i, n):
                x = form.gram.entries[i][j]
                if not bk.is_zero(x):
                    entries[(alg.labels[i], alg.labels[j])] = x
    new_form = BilinearForm.build(out.space, entries, q1.form.parity, bk)
    return QuadraticAlgebra.build(out, new_form)
