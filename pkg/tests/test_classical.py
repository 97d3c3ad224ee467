import pytest

from hopfcyclic.groups import (
    ClassFunction,
    GSet,
    builtin_group,
    coset_action,
    irreducible_characters,
    subgroup_as_group,
)
from hopfcyclic.classical import (
    class_function_dim_check,
    direct_picture_check,
    dual_picture_check,
    extended_quotient,
    extended_quotient_check,
    extended_quotient_transport_check,
    frobenius_reciprocity_check,
    induce_class_function,
    stabilizer_coincidence_check,
)
from hopfcyclic.linalg import QQ

S3 = builtin_group("S3")
C2_IN_S3 = [0, 2]  # e, (12)


def test_group_tables_validate():
    for name in ("C2", "C3", "C4", "S3", "Q8", "A4"):
        grp = builtin_group(name)
        assert grp.order in (2, 3, 4, 6, 8, 12)


def test_conjugacy_classes_s3_and_q8():
    assert [len(c) for c in S3.conjugacy_classes()] == [1, 3, 2]
    q8 = builtin_group("Q8")
    assert sorted(len(c) for c in q8.conjugacy_classes()) == [1, 1, 2, 2, 2]


def test_direct_picture_subgroup_equals_group():
    rep = direct_picture_check(S3, list(S3.elements()), 2)
    assert rep.ok, [c.name for c in rep.failures()]


def test_direct_picture_s3_c2():
    rep = direct_picture_check(S3, C2_IN_S3, 3)
    assert rep.ok, [c.name for c in rep.failures()]


def test_direct_picture_c4_c2():
    c4 = builtin_group("C4")
    rep = direct_picture_check(c4, [0, 2], 2)
    assert rep.ok, [c.name for c in rep.failures()]


def test_dual_picture_subgroup_equals_group():
    # both sides reduce to conjugacy-class data
    rep = dual_picture_check(S3, list(S3.elements()), 1)
    assert rep.ok, [c.name for c in rep.failures()]


def test_dual_picture_s3_c2():
    rep = dual_picture_check(S3, C2_IN_S3, 2)
    assert rep.ok, [c.name for c in rep.failures()]


def test_dual_picture_q8_center():
    q8 = builtin_group("Q8")
    center = [0, 1]  # 1, -1
    rep = dual_picture_check(q8, center, 2)
    assert rep.ok, [c.name for c in rep.failures()]


def test_stabilizers_trivial_case():
    rep = stabilizer_coincidence_check(S3, list(S3.elements()), 0)
    assert rep.ok


def test_stabilizers_s3_exhaustive():
    rep = stabilizer_coincidence_check(S3, C2_IN_S3, 1)
    assert rep.ok, [c.witness for c in rep.failures()]


def test_stabilizers_sampled_degree_two():
    rep = stabilizer_coincidence_check(S3, C2_IN_S3, 2, sample=40, seed=0)
    assert rep.ok


def test_extended_quotient_trivial_group():
    triv = builtin_group("trivial")
    x = GSet(triv, 3, [[0, 1, 2]])
    assert len(extended_quotient(triv, x, 0)) == 3


def test_extended_quotient_s3_cosets():
    gset = coset_action(S3, C2_IN_S3)
    assert len(extended_quotient(S3, gset, 0)) == 2
    rep = extended_quotient_check(S3, gset, 1)
    assert rep.ok


def test_extended_quotient_transport():
    rep = extended_quotient_transport_check(S3, C2_IN_S3, 1)
    assert rep.ok, [c.witness for c in rep.failures()]


def test_induced_characters_s3():
    sub = subgroup_as_group(S3, C2_IN_S3)
    trivial = ClassFunction(sub, [QQ.one, QQ.one])
    sign = ClassFunction(sub, [QQ.one, QQ.from_int(-1)])
    up_triv = induce_class_function(S3, C2_IN_S3, trivial)
    up_sign = induce_class_function(S3, C2_IN_S3, sign)
    # classes ordered e, transpositions, 3-cycles
    assert up_triv.values == [QQ.from_int(3), QQ.one, QQ.zero]
    assert up_sign.values == [QQ.from_int(3), QQ.from_int(-1), QQ.zero]


def test_induction_from_whole_group_is_identity():
    chis = irreducible_characters(S3)
    for chi in chis:
        up = induce_class_function(S3, list(S3.elements()), chi)
        assert up.values == chi.values


def test_frobenius_reciprocity_s3():
    sub = subgroup_as_group(S3, C2_IN_S3)
    for vals in ([QQ.one, QQ.one], [QQ.one, QQ.from_int(-1)]):
        chi = ClassFunction(sub, list(vals))
        rep = frobenius_reciprocity_check(S3, C2_IN_S3, chi)
        assert rep.ok, [c.witness for c in rep.failures()]


def test_non_class_function_rejected():
    from hopfcyclic.groups import GroupError

    sub = subgroup_as_group(S3, C2_IN_S3)
    with pytest.raises(GroupError):
        induce_class_function(S3, C2_IN_S3, ClassFunction(sub, [QQ.one]))


def test_class_function_dims():
    assert class_function_dim_check(builtin_group("trivial")).ok
    rep = class_function_dim_check(S3, hh0_dim=3)
    assert rep.ok
    assert class_function_dim_check(builtin_group("Q8"), hh0_dim=5).ok


def test_classical_matches_algebraic_dims():
    # linearized direct picture: fiber power sizes equal the dims of the
    # relative cyclic object of O(S3) over O(S3/C2)
    from hopfcyclic.classical import fiber_power_set
    from hopfcyclic.cyclic import relative_cyclic
    from hopfcyclic.presets import builtin_setup

    s = builtin_setup("OS3/OC2")
    cm = relative_cyclic(s.hopf, s.subalgebra, 2)
    fps = fiber_power_set(S3, C2_IN_S3, 2)
    assert cm.dims() == fps.sizes()


def test_dual_orbit_count_matches_coextension_dims():
    # orbit counts of the dual picture equal the coextension dims for O(S3)
    from hopfcyclic.classical import left_quotient
    from hopfcyclic.cyclic import coextension_space
    from hopfcyclic.presets import builtin_setup

    s = builtin_setup("OS3/OC2")
    for n in range(2):
        cox = coextension_space(s.hopf, s.quotient, n + 1)
        assert cox.dim == len(left_quotient(S3, C2_IN_S3, n))
