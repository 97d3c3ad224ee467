import pytest

from hopfcyclic.groups import builtin_group
from hopfcyclic.hopf import (
    HopfAlgebra,
    HopfError,
    SparseMatrix,
    canonical_map_n,
    cocanonical_map,
    coinvariants,
    galois_criterion,
    group_algebra,
    function_algebra,
    iterated_coinvariance_ok,
    quotient_module_coalgebra,
    subalgebra_from_columns,
    sweedler_algebra,
    takeuchi_subalgebra_to_quotient,
    tensor_power_over_b,
    translation_map,
    trivial_subalgebra,
)
from hopfcyclic.linalg import QQ, span_contains
from hopfcyclic.presets import builtin_hopf, builtin_setup, _basis_columns, S3_C2_INDICES


def test_validate_group_algebras():
    for name in ("kC2", "kC3", "kS3"):
        rep = builtin_hopf(name).validate()
        assert rep.ok, rep.failures()


def test_validate_function_algebras():
    for grp in ("C2", "S3"):
        rep = function_algebra(builtin_group(grp)).validate()
        assert rep.ok, rep.failures()


def test_trivial_group_gives_base_field():
    h = group_algebra(builtin_group("trivial"))
    assert h.dim == 1 and h.validate().ok
    o = function_algebra(builtin_group("trivial"))
    assert o.dim == 1 and o.validate().ok


def test_commutativity_flags():
    assert builtin_hopf("kC2").is_cocommutative()
    ks3 = builtin_hopf("kS3")
    assert ks3.is_cocommutative() and not ks3.is_commutative()
    os3 = builtin_hopf("OS3")
    assert os3.is_commutative() and not os3.is_cocommutative()


def test_sweedler_validates_and_antipode_order_four():
    h = sweedler_algebra()
    assert h.validate().ok
    s2 = h.antipode @ h.antipode
    assert not s2.is_identity()
    assert (s2 @ s2).is_identity()


def test_corrupted_antipode_fails_with_witness():
    g = builtin_group("C2")
    h = group_algebra(g)
    bad_antipode = SparseMatrix.from_dense([[QQ.one, QQ.one], [QQ.zero, QQ.zero]], QQ)
    bad = HopfAlgebra("kC2-bad", QQ, h.basis, h.mult, h.unit, h.comult, h.counit, bad_antipode)
    rep = bad.validate()
    assert not rep.ok
    failing = {c.name: c for c in rep.failures()}
    assert "left antipode identity" in failing or "right antipode identity" in failing
    witness = next(c.witness for c in rep.failures() if "antipode identity" in c.name)
    assert "g" in witness


def test_corrupted_mult_fails():
    h = builtin_hopf("kC2")
    mult = dict(h.mult)
    mult[(1, 1, 0)] = QQ.from_int(2)  # g.g = 2e breaks unitality of the bialgebra axioms
    bad = HopfAlgebra("bad", QQ, h.basis, mult, h.unit, h.comult, h.counit, h.antipode)
    assert not bad.validate().ok


def test_takeuchi_trivial_subalgebra():
    h = builtin_hopf("kC2")
    b = trivial_subalgebra(h)
    c = takeuchi_subalgebra_to_quotient(h, b)
    assert c.ideal.dim == 0 and c.dim == h.dim


def test_takeuchi_ks3_kc2_dims():
    s = builtin_setup("kS3/kC2")
    # B+ is 1-dimensional, so I = B+H has dim 3 and C is the right-coset coalgebra
    assert s.subalgebra.dim == 2
    assert s.quotient.ideal.dim == 3
    assert s.quotient.dim == 3


def test_takeuchi_sweedler_dims():
    s = builtin_setup("H4/B")
    assert s.quotient.ideal.dim == 2 and s.quotient.dim == 2
    # I = span{x, gx}
    h = s.hopf
    xgx = _basis_columns(h, (2, 3))
    assert span_contains(s.quotient.ideal.section, xgx)
    assert span_contains(xgx, s.quotient.ideal.section)


def test_coinvariants_full_quotient_is_scalars():
    h = builtin_hopf("kS3")
    c = quotient_module_coalgebra(h, SparseMatrix.zeros(h.dim, 0, QQ))
    b = coinvariants(h, c)
    assert b.dim == 1
    assert span_contains(b.space.section, h.eta)


def test_takeuchi_round_trip_recovers_subalgebra():
    for name in ("kS3/kC2", "kS3/kC3", "H4/B"):
        s = builtin_setup(name)
        back = coinvariants(s.hopf, s.quotient)
        assert back.dim == s.subalgebra.dim, name
        assert span_contains(back.space.section, s.subalgebra.space.section), name
        assert span_contains(s.subalgebra.space.section, back.space.section), name


def test_coinvariants_function_algebra_cosets():
    s = builtin_setup("OS3/OC2")
    # functions constant on left cosets of C2: 3 cosets
    assert s.quotient.dim == 2
    assert s.subalgebra.dim == 3


def test_iterated_coinvariance():
    for name in ("kS3/kC2", "H4/B"):
        s = builtin_setup(name)
        for n in range(4):
            assert iterated_coinvariance_ok(s.hopf, s.quotient, s.subalgebra, n)


def test_canonical_map_hopf_case():
    s = builtin_setup("kC2/k")
    can, can_inv, dom = canonical_map_n(s.hopf, s.subalgebra, s.quotient, 1)
    assert can.rows == can.cols == 4
    assert (can @ can_inv).is_identity()


def test_canonical_map_ks3_kc2():
    s = builtin_setup("kS3/kC2")
    can, can_inv, dom = canonical_map_n(s.hopf, s.subalgebra, s.quotient, 1)
    assert dom.dim == 18 and can.rows == 18 and can.cols == 18
    assert (can_inv @ can).is_identity()


def test_canonical_map_sweedler_degree_two():
    s = builtin_setup("H4/B")
    can, can_inv, dom = canonical_map_n(s.hopf, s.subalgebra, s.quotient, 2)
    assert dom.dim == can.rows == can.cols
    assert (can @ can_inv).is_identity() and (can_inv @ can).is_identity()


def test_galois_criterion_true_cases():
    for name in ("kC2/k", "kS3/kC2", "kS3/kC3", "H4/B"):
        s = builtin_setup(name)
        assert galois_criterion(s.hopf, s.subalgebra, s.quotient), name


def test_galois_criterion_mismatched_pair():
    h = builtin_hopf("kS3")
    c_full = quotient_module_coalgebra(h, SparseMatrix.zeros(h.dim, 0, QQ))
    b = subalgebra_from_columns(h, _basis_columns(h, S3_C2_INDICES))
    assert not galois_criterion(h, b, c_full)


def test_translation_map_grouplikes():
    s = builtin_setup("kS3/kC2")
    h = s.hopf
    tau = translation_map(h, s.subalgebra, s.quotient)
    dom2 = tensor_power_over_b(h, s.subalgebra, 2)
    # on the class of a grouplike g the translation map is g^{-1} (x)_B g
    grp = builtin_group("S3")
    for g in range(6):
        cbar = s.quotient.bar(h.basis_vec(g))
        expected_ambient = {}
        ginv = grp.inv(g)
        expected_ambient[(ginv * 6 + g)] = QQ.one
        exp = SparseMatrix(36, 1, QQ, {(k, 0): v for k, v in expected_ambient.items()})
        got = tau @ SparseMatrix(s.quotient.dim, 1, QQ, {(k, 0): v for k, v in cbar.items()})
        assert got == dom2.projection @ exp


def test_translation_map_representative_independence_sweedler():
    s = builtin_setup("H4/B")
    translation_map(s.hopf, s.subalgebra, s.quotient)  # raises on dependence


def test_translation_vs_canonical_map():
    # can(lift . tau) = 1 (x) id on C
    for name in ("kS3/kC2", "H4/B"):
        s = builtin_setup(name)
        h, cdim = s.hopf, s.quotient.dim
        tau = translation_map(h, s.subalgebra, s.quotient)
        can, _, _ = canonical_map_n(h, s.subalgebra, s.quotient, 1)
        expected = SparseMatrix(
            h.dim * cdim, cdim, QQ,
            {(i * cdim + j, j): v for j in range(cdim)
             for i, v in h.unit.items()},
        )
        assert can @ tau == expected


def test_cocanonical_trivial_subalgebra():
    s = builtin_setup("kC2/k")
    red, cot, bij = cocanonical_map(s.hopf, s.subalgebra, s.quotient)
    assert bij and cot.dim == 2


def test_cocanonical_ks3():
    s = builtin_setup("kS3/kC2")
    red, cot, bij = cocanonical_map(s.hopf, s.subalgebra, s.quotient)
    assert cot.dim == 12 and bij


def test_cocanonical_os3():
    s = builtin_setup("OS3/OC2")
    red, cot, bij = cocanonical_map(s.hopf, s.subalgebra, s.quotient)
    assert bij


def test_commutative_tensor_power_has_no_commutators():
    from hopfcyclic.hopf import commutator_quotient

    s = builtin_setup("OS3/OC2")
    for legs in (1, 2):
        x = tensor_power_over_b(s.hopf, s.subalgebra, legs)
        xb = commutator_quotient(s.hopf, s.subalgebra, x, legs)
        assert xb.dim == x.dim


def test_ideal_not_coideal_rejected():
    # span{e - g} in kC2 is a right ideal but eps(e - g) = 0 fails... it is 0;
    # use span{e} instead: not in ker(eps)
    h = builtin_hopf("kC2")
    gens = SparseMatrix(2, 1, QQ, {(0, 0): QQ.one})
    with pytest.raises(HopfError):
        quotient_module_coalgebra(h, gens)
