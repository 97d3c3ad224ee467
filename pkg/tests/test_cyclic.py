import pytest

from hopfcyclic.cyclic import (
    TruncationError,
    boundary,
    check_identities,
    coext_cyclic,
    coextension_space,
    cyclic_dual,
    cyclic_homology,
    cyclic_modules_equal,
    hochschild_homology,
    hopf_cocyclic_coalgebra,
    hopf_cyclic_coalgebra,
    hopf_cyclic_comodule_algebra,
    hopf_cyclic_spaces,
    relative_cyclic,
    relative_cocyclic_coext,
    with_replaced_cyclic,
    with_replaced_face,
)
from hopfcyclic.hopf import quotient_module_coalgebra, subalgebra_from_columns, trivial_subalgebra
from hopfcyclic.linalg import QQ, SparseMatrix, SubquotientSpace, kernel
from hopfcyclic.presets import builtin_hopf, builtin_setup
from hopfcyclic.sayd import ad_module, coad_module, trivial_sayd

# frozen by the dense brute-force oracle (tests/oracle.py)
HH_H4 = [2, 1, 1, 1]
HC_KC2 = [2, 0, 2]
HC_H4 = [2, 1, 2]


def trivial_quotient(h):
    """C = k: quotient by the whole augmentation ideal."""
    ker_eps = kernel(h.eps)
    return quotient_module_coalgebra(h, ker_eps.section)


def full_quotient(h):
    return quotient_module_coalgebra(h, SparseMatrix.zeros(h.dim, 0, QQ))


def test_relative_cyclic_base_field_dims():
    s = builtin_setup("kC2/k")
    cm = relative_cyclic(s.hopf, s.subalgebra, 3)
    assert cm.dims() == [2, 4, 8, 16]
    assert check_identities(cm).ok


def test_relative_cyclic_collapse_b_equals_a():
    h = builtin_hopf("kS3")
    b = subalgebra_from_columns(h, h.ident())
    cm = relative_cyclic(h, b, 2)
    # [A (x)_A ... (x)_A A]_A = A/[A,A] in every degree; kS3 has 3 classes
    assert cm.dims() == [3, 3, 3]
    assert check_identities(cm).ok


def test_relative_cyclic_ks3_kc2_identities_and_dims():
    s = builtin_setup("kS3/kC2")
    cm = relative_cyclic(s.hopf, s.subalgebra, 3)
    assert cm.spaces[0].dim == 4  # kS3 / [kS3, kC2]
    assert check_identities(cm).ok


def test_hopf_cyclic_trivial_coalgebra_and_coefficients():
    h = builtin_hopf("kC2")
    c = trivial_quotient(h)
    m = trivial_sayd(h)
    cm = hopf_cyclic_coalgebra(c, m, 3)
    assert cm.dims() == [1, 1, 1, 1]
    for n in range(4):
        assert cm.t[n].is_identity()
    assert check_identities(cm).ok


def test_hopf_cyclic_full_quotient_matches_relative():
    h = builtin_hopf("kC2")
    cm = hopf_cyclic_coalgebra(full_quotient(h), ad_module(h), 3)
    s = builtin_setup("kC2/k")
    rel = relative_cyclic(s.hopf, s.subalgebra, 3)
    assert cm.dims() == rel.dims() == [2, 4, 8, 16]
    assert check_identities(cm).ok


def test_hopf_cyclic_ks3_dims_match_relative():
    s = builtin_setup("kS3/kC2")
    cm = hopf_cyclic_coalgebra(s.quotient, ad_module(s.hopf), 3)
    rel = relative_cyclic(s.hopf, s.subalgebra, 3)
    assert cm.dims() == rel.dims()
    assert check_identities(cm).ok


def test_hopf_cyclic_sweedler_dims_match_relative():
    s = builtin_setup("H4/B")
    cm = hopf_cyclic_coalgebra(s.quotient, ad_module(s.hopf), 3)
    rel = relative_cyclic(s.hopf, s.subalgebra, 3)
    assert cm.dims() == rel.dims()
    assert check_identities(cm).ok and check_identities(rel).ok


def test_coext_trivial_quotient_is_full_tensor_power():
    h = builtin_hopf("kC2")
    c = trivial_quotient(h)
    for legs in (1, 2, 3):
        assert coextension_space(h, c, legs).dim == 2 ** legs


def test_coext_cyclic_identities():
    s = builtin_setup("kS3/kC2")
    cm = coext_cyclic(s.hopf, s.quotient, 3)
    assert check_identities(cm).ok
    ccm = relative_cocyclic_coext(s.hopf, s.quotient, 3)
    assert check_identities(ccm).ok


def test_coext_cyclic_pontryagin_dimension_match():
    # O(S3) coextension dims agree degreewise with the kS3 relative object
    s_fun = builtin_setup("OS3/OC2")
    s_grp = builtin_setup("kS3/kC2")
    cm_fun = coext_cyclic(s_fun.hopf, s_fun.quotient, 2)
    rel = relative_cyclic(s_grp.hopf, s_grp.subalgebra, 2)
    assert cm_fun.dims() == rel.dims()
    assert check_identities(cm_fun).ok


def test_comodule_algebra_trivial_case():
    h = builtin_hopf("kC2")
    b = trivial_subalgebra(h)
    cm = hopf_cyclic_comodule_algebra(h, b, trivial_sayd(h), 3)
    assert cm.dims() == [1, 1, 1, 1]
    assert check_identities(cm).ok


def test_comodule_algebra_full_b_matches_coext():
    h = builtin_hopf("kC2")
    b = subalgebra_from_columns(h, h.ident())
    coad = coad_module(h)
    cm = hopf_cyclic_comodule_algebra(h, b, coad, 3)
    c = trivial_quotient(h)
    dual_side = coext_cyclic(h, c, 3)
    assert cm.dims() == dual_side.dims() == [2, 4, 8, 16]
    assert check_identities(cm).ok


def test_comodule_algebra_ks3_dims_match_coext():
    s = builtin_setup("kS3/kC2")
    coad = coad_module(s.hopf)
    cm = hopf_cyclic_comodule_algebra(s.hopf, s.subalgebra, coad, 3)
    dual_side = coext_cyclic(s.hopf, s.quotient, 3)
    assert cm.dims() == dual_side.dims()
    assert check_identities(cm).ok


def test_cocyclic_coalgebra_identities_and_duality():
    for name in ("kC2/k", "kS3/kC2"):
        s = builtin_setup(name)
        c = s.quotient if s.quotient.dim < s.hopf.dim else full_quotient(s.hopf)
        m = ad_module(s.hopf)
        spaces = hopf_cyclic_spaces(c, m, 2)
        ccm = hopf_cocyclic_coalgebra(c, m, 2, spaces=spaces)
        assert check_identities(ccm).ok
        cm = hopf_cyclic_coalgebra(c, m, 2, spaces=spaces)
        assert cyclic_modules_equal(cyclic_dual(ccm), cm)


def test_coextension_duality():
    s = builtin_setup("kS3/kC2")
    spaces = [coextension_space(s.hopf, s.quotient, n + 1) for n in range(3)]
    ccm = relative_cocyclic_coext(s.hopf, s.quotient, 2, spaces=spaces)
    cm = coext_cyclic(s.hopf, s.quotient, 2, spaces=spaces)
    assert cyclic_modules_equal(cyclic_dual(ccm), cm)


def test_mutant_cyclic_operator_fails():
    s = builtin_setup("kC2/k")
    cm = relative_cyclic(s.hopf, s.subalgebra, 2)
    # t -> t^2 still satisfies t^{n+1} = id but breaks the s/t compatibilities
    mutant = with_replaced_cyclic(cm, 1, cm.t[1] @ cm.t[1])
    rep = check_identities(mutant)
    assert not rep.ok
    # a rescaled rotation fails the torsion identity itself
    scaled = with_replaced_cyclic(cm, 1, cm.t[1].scale(QQ.from_int(2)))
    rep2 = check_identities(scaled)
    assert any("t^2 = id @ 1" in c.name for c in rep2.failures())


def test_mutant_face_fails():
    s = builtin_setup("kC2/k")
    cm = relative_cyclic(s.hopf, s.subalgebra, 2)
    zero = SparseMatrix.zeros(cm.spaces[0].dim, cm.spaces[1].dim, QQ)
    mutant = with_replaced_face(cm, 1, 0, zero)
    assert not check_identities(mutant).ok


def test_hochschild_kc2_and_ks3():
    s = builtin_setup("kC2/k")
    cm = relative_cyclic(s.hopf, s.subalgebra, 3)
    assert hochschild_homology(cm) == [2, 0, 0]
    s3 = builtin_setup("kS3/k")
    cm3 = relative_cyclic(s3.hopf, s3.subalgebra, 2)
    assert hochschild_homology(cm3) == [3, 0]


def test_hochschild_sweedler_matches_oracle():
    s = builtin_setup("H4/k")
    cm = relative_cyclic(s.hopf, s.subalgebra, 4)
    assert hochschild_homology(cm) == HH_H4


def test_hochschild_zero_ops_mutant():
    f = QQ
    spaces = [SubquotientSpace.full(3, f) for _ in range(3)]
    d = {(n, i): SparseMatrix.zeros(3, 3, f) for n in (1, 2) for i in range(n + 1)}
    s = {(n, j): SparseMatrix.zeros(3, 3, f) for n in (0, 1) for j in range(n + 1)}
    t = {n: SparseMatrix.identity(3, f) for n in range(3)}
    from hopfcyclic.cyclic import CyclicModule

    cm = CyclicModule(2, spaces, d, s, t)
    assert hochschild_homology(cm, 1) == [3, 3]


def test_cyclic_homology_kc2_matches_oracle():
    s = builtin_setup("kC2/k")
    cm = relative_cyclic(s.hopf, s.subalgebra, 4)
    assert cyclic_homology(cm) == HC_KC2


def test_cyclic_homology_sweedler_matches_oracle():
    s = builtin_setup("H4/k")
    cm = relative_cyclic(s.hopf, s.subalgebra, 4)
    assert cyclic_homology(cm) == HC_H4


def test_truncation_guards():
    s = builtin_setup("kC2/k")
    cm = relative_cyclic(s.hopf, s.subalgebra, 2)
    with pytest.raises(TruncationError):
        hochschild_homology(cm, 2)
    with pytest.raises(TruncationError):
        cyclic_homology(cm, 1)
    with pytest.raises(TruncationError):
        boundary(cm, 3)
