import pytest
from hypothesis import given, settings, strategies as st

from liequad import catalog
from liequad.catalog import InadmissibleParameter, UnknownEntry
from liequad.core import center, derived_subalgebra, verify_form, verify_jacobi
from liequad.linalg import Subspace
from liequad.morphisms import (
    GradedLinearMap,
    decomposability_via_center,
    fingerprint,
    verify_i_isomorphism,
)
from liequad.scalars import EXACT, complex_backend


def test_catalog_has_at_least_25_entries():
    assert len(catalog.entries()) >= 25


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        catalog.build("nope")


def test_inadmissible_parameters_rejected():
    with pytest.raises(InadmissibleParameter):
        catalog.build("g6_3", mu=-1)
    with pytest.raises(InadmissibleParameter):
        catalog.build("g6_3", mu=2)
    with pytest.raises(InadmissibleParameter):
        catalog.build("gs6_2", **{"lambda": 0})
    with pytest.raises(InadmissibleParameter):
        catalog.build("go6_6", mu=0)
    with pytest.raises(InadmissibleParameter):
        catalog.build("g4", bogus=1)


def test_go2_zero_parameter_is_abelian():
    q = catalog.build("go2", **{"lambda": 0})
    assert derived_subalgebra(q.algebra).dim == 0


def test_g6_3_brackets_at_half():
    q = catalog.build("g6_3", mu="1/2")
    alg = q.algebra
    ix = alg.space.index
    half = EXACT.coerce("1/2")
    assert alg.bracket_basis(ix("X"), ix("Y"))[ix("Y")] == EXACT.one
    assert alg.bracket_basis(ix("X"), ix("Z"))[ix("Z")] == half
    assert alg.bracket_basis(ix("X"), ix("Y*"))[ix("Y*")] == -EXACT.one
    assert alg.bracket_basis(ix("X"), ix("Z*"))[ix("Z*")] == -half
    assert alg.bracket_basis(ix("Y"), ix("Y*"))[ix("X*")] == EXACT.one
    assert alg.bracket_basis(ix("Z"), ix("Z*"))[ix("X*")] == half


def test_gs6_5_bracket_table():
    q = catalog.build("gs6_5")
    alg = q.algebra
    ix = alg.space.index
    assert alg.bracket_basis(ix("Y0"), ix("X2"))[ix("X2")] == EXACT.one
    assert alg.bracket_basis(ix("Y0"), ix("Y1"))[ix("X1")] == EXACT.one
    assert alg.bracket_basis(ix("Y0"), ix("Y2"))[ix("Y2")] == -EXACT.one
    assert alg.bracket_basis(ix("Y1"), ix("Y1"))[ix("X0")] == EXACT.one
    assert alg.bracket_basis(ix("X2"), ix("Y2"))[ix("X0")] == EXACT.one


def test_verify_all_exact_clean():
    rep = catalog.verify_all()
    assert rep.ok
    assert len(rep.checks) > 400


def test_g2n2_n1_is_the_diamond():
    q = catalog.build("g2n2", n=1)
    g4 = catalog.build("g4")
    assert fingerprint(q.algebra) == fingerprint(g4.algebra)
    a = GradedLinearMap.from_images(
        q.algebra.space,
        g4.algebra.space,
        {"Y0": {"X": 1}, "X1": {"P": 1}, "Y1": {"Q": 1}, "X0": {"Z": 1}},
        EXACT,
    )
    assert verify_i_isomorphism(a, q, g4).ok


def test_go6_2_is_g6_1_relabelled():
    even = catalog.build("g6_1")
    odd = catalog.build("go6_2")
    # identical structure constants and gram under the order-preserving relabel
    assert even.algebra.c == odd.algebra.c
    assert even.form.gram == odd.form.gram


def test_osp12_odd_bracket_from_invariance_oracle():
    # oracle: [F_a, F_b] is the unique even vector with B0(c, X_i) = -B1(F_a, T_i F_b)
    q = catalog.build("osp12")
    alg = q.algebra
    bk = alg.backend
    odd = [3, 4]
    for a in odd:
        for b in odd:
            stored = alg.bracket_basis(a, b)
            for i in range(3):
                ti = alg.ad(i)
                tb = ti.col(b)  # action on e_b, odd block rows 3..4
                rhs = -(q.form.value(alg.space.basis_vector(bk, alg.labels[a]), tb))
                assert stored[i] == rhs, (a, b, i)
            assert all(bk.is_zero(x) for x in stored[3:])


def test_osp12_even_action_is_bijective_onto_sp2():
    q = catalog.build("osp12")
    alg = q.algebra
    flats = []
    for i in range(3):
        ad = alg.ad(i)
        flats.append(tuple(ad.entries[r][c] for r in (3, 4) for c in (3, 4)))
        # image lies in sp(2): trace zero on the odd block
        assert EXACT.is_zero(ad.entries[3][3] + ad.entries[4][4])
    assert Subspace.span(EXACT, flats, 4).dim == 3


def test_osp12_derived_is_whole():
    q = catalog.build("osp12")
    assert derived_subalgebra(q.algebra).dim == 5


def test_sp4_representatives_match_catalog_actions():
    for id in ("gs6_4", "gs6_5", "gs6_7"):
        q = catalog.build(id)
        alg = q.algebra
        y0 = alg.space.index("Y0")
        ad = alg.ad(y0)
        got = tuple(tuple(ad.entries[2 + r][2 + c] for c in range(4)) for r in range(4))
        want = tuple(
            tuple(EXACT.coerce(v) for v in row) for row in catalog.SP4_REPRESENTATIVES[id]
        )
        assert got == want, id
    lam = EXACT.coerce(3)
    q = catalog.build("gs6_6", **{"lambda": 3})
    ad = q.algebra.ad(q.algebra.space.index("Y0"))
    diag = [ad.entries[2 + i][2 + i] for i in range(4)]
    assert diag == [EXACT.one, lam, -EXACT.one, -lam]


def test_indecomposable_entries_have_no_central_witness():
    for id in ("g4", "g5", "g6_1", "gs6_3", "go4_1", "go6_7", "osp12"):
        assert decomposability_via_center(catalog.build(id)) is None, id


def test_float_backend_build():
    cb = complex_backend()
    q = catalog.build("g4", backend=cb)
    assert verify_jacobi(q.algebra).ok
    assert verify_form(q.algebra, q.form).ok
    q2 = catalog.build("go2", backend=cb, **{"lambda": 2.0})
    assert q2.verified.ok


def test_base_algebras():
    h3 = catalog.base("g3_1")
    assert verify_jacobi(h3).ok
    g32 = catalog.base("g3_2")
    ix = g32.space.index
    assert g32.bracket_basis(ix("X"), ix("Z")) == (
        EXACT.zero,
        EXACT.one,
        EXACT.one,
    )
    with pytest.raises(UnknownEntry):
        catalog.base("g9")
    with pytest.raises(InadmissibleParameter):
        catalog.base("g3_3", mu=5)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_random_catalog_sample_satisfies_duality(data):
    entry = data.draw(st.sampled_from([e.id for e in catalog.entries()]))
    e = catalog.get(entry)
    params = data.draw(st.sampled_from(e.sample_grid(EXACT)))
    q = catalog.build(entry, **params)
    z = center(q.algebra)
    d = derived_subalgebra(q.algebra)
    assert z.dim + d.dim == q.dim
    from liequad.core import orthogonal_complement

    assert orthogonal_complement(q, d) == z


def test_orthogonal_complement_of_ideal_is_ideal():
    from liequad.core import is_ideal, orthogonal_complement

    for id in ("g4", "g5", "g6_2", "gs6_1", "go6_4"):
        q = catalog.build(id)
        d = derived_subalgebra(q.algebra)
        assert is_ideal(q.algebra, d), id
        comp = orthogonal_complement(q, d)
        assert is_ideal(q.algebra, comp), id
