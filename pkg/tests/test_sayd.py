import pytest

from hopfcyclic.hopf import group_algebra
from hopfcyclic.groups import builtin_group
from hopfcyclic.linalg import QQ, SparseMatrix
from hopfcyclic.presets import builtin_hopf
from hopfcyclic.sayd import (
    SaydModule,
    ad_module,
    adjoint_action_identity_ok,
    check_ayd,
    check_stable,
    coad_module,
    trivial_sayd,
    validate_sayd,
)


def test_trivial_sayd_passes_when_antipode_involutive():
    for name in ("kC2", "kS3", "OS3"):
        h = builtin_hopf(name)
        rep = validate_sayd(trivial_sayd(h))
        assert rep.ok, (name, rep.failures())


def test_trivial_sayd_over_sweedler_needs_grouplike_twist():
    h = builtin_hopf("H4")
    # with the unit coaction the compatibility fails (S^2 != id) ...
    assert not check_ayd(trivial_sayd(h)).ok
    # ... and the group-like g repairs it
    twisted = trivial_sayd(h, grouplike=h.basis_vec(1))
    assert validate_sayd(twisted).ok


def test_ad_checks_pass():
    for name in ("kC2", "kC3", "kS3", "OS3", "H4"):
        ad = ad_module(builtin_hopf(name))  # raises if the checkers fail
        assert check_ayd(ad).ok and check_stable(ad).ok


def test_ad_group_algebra_is_conjugation():
    g = builtin_group("S3")
    h = group_algebra(g)
    ad = ad_module(h)
    for i in g.elements():
        for j in g.elements():
            col = ad.action.column(i * 6 + j)
            assert col == {g.conj(i, j): QQ.one}


def test_ad_factors_through_counit_for_commutative():
    h = builtin_hopf("OS3")
    ad = ad_module(h)
    expected = h.eps.kron(SparseMatrix.identity(h.dim, QQ))
    assert ad.action == expected


def test_coad_checks_pass():
    for name in ("kC2", "kC3", "kS3", "OS3", "H4"):
        coad = coad_module(builtin_hopf(name))
        assert check_ayd(coad).ok and check_stable(coad).ok


def test_coad_trivial_for_cocommutative():
    for name in ("kC2", "kS3"):
        h = builtin_hopf(name)
        coad = coad_module(h)
        # coaction m -> 1 (x) m
        expected = SparseMatrix(
            h.dim * h.dim, h.dim, QQ,
            {(i * h.dim + j, j): v for j in range(h.dim) for i, v in h.unit.items()},
        )
        assert coad.coaction == expected


def test_coad_function_algebra_explicit_small():
    coad = coad_module(builtin_hopf("OC2"))
    assert validate_sayd(coad).ok


def test_adjoint_action_identity():
    for name in ("kC2", "kS3", "H4"):
        assert adjoint_action_identity_ok(builtin_hopf(name))


def test_yetter_drinfeld_style_mismatch_fails_ayd():
    # kC2 acting on itself by multiplication with Delta-coaction is not AYD
    h = builtin_hopf("kC2")
    m = SaydModule(h, "left-right", h.mu, h.delta, name="mismatch")
    rep = check_ayd(m)
    assert not rep.ok
    assert rep.failures()[0].witness is not None


def test_scaled_coaction_breaks_stability():
    h = builtin_hopf("kC2")
    ad = ad_module(h)
    scaled = SaydModule(h, "left-right", ad.action, ad.coaction.scale(QQ.from_int(2)),
                        name="scaled")
    rep = check_stable(scaled)
    assert not rep.ok and rep.failures()[0].witness is not None


def test_chirality_shape_guard():
    h = builtin_hopf("kC2")
    with pytest.raises(Exception):
        SaydModule(h, "sideways", h.mu, h.delta)
