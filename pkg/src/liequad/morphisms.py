"""Verified maps, decomposability witnesses and isomorphism fingerprints.

Nothing here searches for maps: a homomorphism or isometry is supplied and the
module certifies or refutes it.  Non-isomorphism can only be certified through
fingerprints, i.e. bracket-defined invariants; fingerprint equality certifies
nothing.  Decomposability is decided by the sufficient central-witness test
only, so a missing witness is reported as "no central witness", never as
indecomposability.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from .core import (
    LieSuperalgebra,
    QuadraticAlgebra,
    StructureError,
    SuperSpace,
    center,
    derived_series,
    derived_subalgebra,
    graded_center_basis,
    is_ideal,
    is_nondegenerate_on,
    lower_central_series,
    orthogonal_complement,
)
from .derivations import derivation_space
from .linalg import (
    Matrix,
    Subspace,
    eigen_structure,
    rank,
    vec_add,
    vec_is_zero,
)
from .report import Report
from .scalars import residual_magnitude


@dataclass(frozen=True)
class GradedLinearMap:
    """Parity-preserving linear map given by its matrix in the chosen bases."""

    source: SuperSpace
    target: SuperSpace
    matrix: Matrix

    @staticmethod
    def build(source: SuperSpace, target: SuperSpace, matrix: Matrix) -> "GradedLinearMap":
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise StructureError("map matrix shape does not match the spaces")
        bk = matrix.backend
        for i in range(target.dim):
            for j in range(source.dim):
                if target.parity(i) != source.parity(j) and not bk.is_zero(matrix.entries[i][j]):
                    raise StructureError(
                        f"map sends {source.labels[j]} across parities to {target.labels[i]}"
                    )
        return GradedLinearMap(source, target, matrix)

    @staticmethod
    def from_images(source: SuperSpace, target: SuperSpace, images, backend) -> "GradedLinearMap":
        """images: mapping source label -> {target label: coeff}; missing = 0."""
        cols = []
        for l in source.labels:
            v = [backend.zero] * target.dim
            for lt, coeff in dict(images.get(l, {})).items():
                v[target.index(lt)] = backend.coerce(coeff)
            cols.append(v)
        m = Matrix(backend, tuple(tuple(cols[j][i] for j in range(source.dim)) for i in range(target.dim)))
        return GradedLinearMap.build(source, target, m)

    def apply(self, v):
        return self.matrix.apply(v)


def _fmt(bk, x):
    return bk.format(x) if bk.name == "exact" else repr(residual_magnitude(bk, x))


def verify_homomorphism(a: GradedLinearMap, src: LieSuperalgebra, tgt: LieSuperalgebra) -> Report:
    """A[x,y] = [Ax, Ay] on all basis pairs."""
    rep = Report()
    bk = src.backend
    if a.source != src.space or a.target != tgt.space:
        raise StructureError("map spaces do not match the algebras")
    n = src.dim
    ok = True
    for i in range(n):
        jstart = i + 1 if src.parity(i) == 0 else i
        for j in range(jstart, n):
            lhs = a.apply(src.c[i][j])
            rhs = tgt.bracket(a.matrix.col(i), a.matrix.col(j))
            diff = tuple(x - y for x, y in zip(lhs, rhs))
            if not vec_is_zero(bk, diff):
                ok = False
                worst = max(diff, key=lambda x: residual_magnitude(bk, x))
                rep.add(
                    f"homomorphism({src.labels[i]},{src.labels[j]})",
                    "compatibility A[x,y] = [Ax,Ay]",
                    False,
                    residual=_fmt(bk, worst),
                )
    if ok:
        rep.add("homomorphism", "compatibility A[x,y] = [Ax,Ay]", True)
    return rep


def verify_isomorphism(a: GradedLinearMap, src: LieSuperalgebra, tgt: LieSuperalgebra) -> Report:
    rep = verify_homomorphism(a, src, tgt)
    inv = src.dim == tgt.dim and rank(a.matrix) == src.dim
    rep.add(
        "invertibility",
        "bijectivity of the map",
        inv,
        witness=None if inv else f"rank {rank(a.matrix)} of a {src.dim}-dim map",
    )
    return rep


def verify_i_isomorphism(a: GradedLinearMap, src: QuadraticAlgebra, tgt: QuadraticAlgebra) -> Report:
    """Isomorphism check plus the isometry condition A^T G' A = G."""
    rep = verify_isomorphism(a, src.algebra, tgt.algebra)
    bk = src.backend
    m = a.matrix
    pulled = m.transpose() * tgt.form.gram * m
    diff = pulled - src.form.gram
    if diff.is_zero():
        rep.add("isometry", "isometry A^T G' A = G", True)
    else:
        worst = max((x for r in diff.entries for x in r), key=lambda x: residual_magnitude(bk, x))
        rep.add("isometry", "isometry A^T G' A = G", False, residual=_fmt(bk, worst))
    return rep


# -- decomposability --------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A non-degenerate central ideal with its orthogonal complement."""

    core: Subspace
    complement: Subspace
    center: Subspace
    report: Report


def _central_core(q: QuadraticAlgebra):
    """A minimal graded non-degenerate central subspace, or None.

    Even form: a single even central vector with B(u,u) != 0 (polarisation finds
    one whenever the even-even center block is nonzero), else a symplectic pair
    of odd central vectors.  Odd form: an even/odd central pair in duality.
    """
    alg, form = q.algebra, q.form
    bk = alg.backend
    zev, zod = graded_center_basis(alg)

    def pair_value(u, v):
        return form.value(u, v)

    if form.parity == "even":
        ge = [[pair_value(u, v) for v in zev.basis] for u in zev.basis]
        # look for B(u,u) != 0 among even central vectors
        for i in range(len(zev.basis)):
            if not bk.is_zero(ge[i][i]):
                return [zev.basis[i]]
        for i in range(len(zev.basis)):
            for j in range(i + 1, len(zev.basis)):
                if not bk.is_zero(ge[i][j]):
                    # B(zi+zj, zi+zj) = 2 B(zi,zj)
                    return [vec_add(zev.basis[i], zev.basis[j])]
        go = [[pair_value(u, v) for v in zod.basis] for u in zod.basis]
        for i in range(len(zod.basis)):
            for j in range(i + 1, len(zod.basis)):
                if not bk.is_zero(go[i][j]):
                    return [zod.basis[i], zod.basis[j]]
        return None
    # odd form: need an even/odd central pair in duality
    for u in zev.basis:
        for v in zod.basis:
            if not bk.is_zero(pair_value(u, v)):
                return [u, v]
    return None


def decomposability_via_center(q: QuadraticAlgebra) -> Optional[Witness]:
    """Sufficient test: a central subspace on which the form does not vanish
    yields an orthogonal ideal splitting.  Returns a verified witness or None
    (None certifies nothing)."""
    if not q.form.is_nondegenerate():
        raise StructureError("decomposability test needs a non-degenerate form")
    vectors = _central_core(q)
    if vectors is None:
        return None
    bk = q.backend
    core = Subspace.span(bk, vectors, q.dim)
    if core.dim == q.dim:
        return None  # the trivial splitting g = g + {0} is not a witness
    comp = orthogonal_complement(q, core)
    rep = verify_decomposition(q, core, comp)
    rep.raise_if_failed(StructureError)
    return Witness(core=core, complement=comp, center=center(q.algebra), report=rep)


def verify_decomposition(q: QuadraticAlgebra, s1: Subspace, s2: Subspace) -> Report:
    """s1, s2 ideals, mutually orthogonal, non-degenerate, spanning g."""
    rep = Report()
    alg, form = q.algebra, q.form
    bk = alg.backend
    rep.add("ideal(s1)", "ideal closure [g,s] in s", is_ideal(alg, s1))
    rep.add("ideal(s2)", "ideal closure [g,s] in s", is_ideal(alg, s2))
    orth = all(bk.is_zero(form.value(u, v)) for u in s1.basis for v in s2.basis)
    rep.add("orthogonality", "B(s1, s2) = 0", orth)
    rep.add("non-degeneracy(s1)", "restricted form non-degenerate", is_nondegenerate_on(form, s1))
    rep.add("non-degeneracy(s2)", "restricted form non-degenerate", is_nondegenerate_on(form, s2))
    spanning = s1.sum_with(s2).dim == alg.dim and s1.dim + s2.dim == alg.dim
    rep.add("spanning", "s1 + s2 = g with trivial intersection", spanning)
    return rep


# -- fingerprints ------------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    """Series-type invariants of the bracket, plus two annotation fields.

    The compared fields are exactly the dimension data of center, derived and
    lower central series together with the parity split and the two flags.
    der_dim and skew_der_dim are carried as informative data but excluded from
    comparisons: the skew dimension depends on the invariant form (it separates
    isometry classes, not isomorphism classes), and the full derivation
    dimension is kept out so that equality means equality of the series data
    the catalog freezes.
    """

    dim: int
    dim_even: int
    dim_odd: int
    center_dim: int
    derived_dims: Tuple[int, ...]
    lower_central_dims: Tuple[int, ...]
    derived_center_dim: int
    solvable: bool
    nilpotent: bool
    der_dim: int = field(default=0, compare=False)
    skew_der_dim: Optional[int] = field(default=None, compare=False)

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "dim_even": self.dim_even,
            "dim_odd": self.dim_odd,
            "center_dim": self.center_dim,
            "derived_dims": list(self.derived_dims),
            "lower_central_dims": list(self.lower_central_dims),
            "derived_center_dim": self.derived_center_dim,
            "der_dim": self.der_dim,
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
            "skew_der_dim": self.skew_der_dim,
        }


def fingerprint(x: Union[LieSuperalgebra, QuadraticAlgebra], with_derivations: bool = True) -> Fingerprint:
    """Series-type invariants of x; with_derivations=False skips the two
    derivation-space solves that only feed the annotation fields."""
    if isinstance(x, QuadraticAlgebra):
        alg, form = x.algebra, x.form
    else:
        alg, form = x, None
    z = center(alg)
    ds = derived_series(alg)
    lcs = lower_central_series(alg)
    if with_derivations:
        der_dim = derivation_space(alg, "all").dim
        skew = derivation_space(alg, "skew", form).dim if form is not None else None
    else:
        der_dim, skew = 0, None
    return Fingerprint(
        dim=alg.dim,
        dim_even=alg.space.dim_even,
        dim_odd=alg.space.dim_odd,
        center_dim=z.dim,
        derived_dims=tuple(s.dim for s in ds),
        lower_central_dims=tuple(s.dim for s in lcs),
        derived_center_dim=derived_subalgebra(alg).intersect(z).dim,
        solvable=ds[-1].dim == 0,
        nilpotent=lcs[-1].dim == 0,
        der_dim=der_dim,
        skew_der_dim=skew,
    )


def fingerprints_distinguish(a, b) -> bool:
    """True certifies non-isomorphism; False certifies nothing."""
    return fingerprint(a) != fingerprint(b)


# -- the rank-two symplectic lemma --------------------------------------------------


def check_sp2_lemma(a: Matrix, b: Matrix) -> Report:
    """For nonzero trace-free 2x2 A, B with [A,B] = B: A is semisimple and B is
    nilpotent (so B^2 = 0).  Preconditions are hard errors, the conclusions are
    report entries."""
    bk = a.backend
    if a.rows != 2 or a.cols != 2 or b.rows != 2 or b.cols != 2:
        raise StructureError("the lemma concerns 2x2 matrices")
    if not bk.is_zero(a.trace()) or not bk.is_zero(b.trace()):
        raise StructureError("A and B must be trace-free (symplectic rank two)")
    if b.is_zero():
        raise StructureError("B must be nonzero")
    comm = a * b - b * a
    if not (comm - b).is_zero():
        raise StructureError("[A,B] = B fails; the lemma does not apply")
    rep = Report()
    ea = eigen_structure(a)
    eb = eigen_structure(b)
    rep.add("A-semisimple", "A semisimple whenever [A,B]=B, B nonzero", ea.is_semisimple)
    rep.add("B-nilpotent", "B nilpotent whenever [A,B]=B, B nonzero", eb.is_nilpotent)
    rep.add("B-squared", "B^2 = 0 in rank two", (b * b).is_zero())
    return rep
