"""Built-in Hopf algebras and Galois pairs used by the test suite and CLI.

Everything the acceptance checks need is constructible from here with no
external files: group algebras kC2, kC3, kS3, the function algebra O(S3),
and the 4-dimensional algebra H4, together with their standard coideal
subalgebra / quotient coalgebra pairs.
"""

from __future__ import annotations

from .groups import builtin_group
from .hopf import (
    GaloisSetup,
    HopfError,
    SparseMatrix,
    group_algebra,
    function_algebra,
    setup_from_ideal,
    setup_from_subalgebra,
    sweedler_algebra,
    trivial_subalgebra,
    takeuchi_subalgebra_to_quotient,
)
from .linalg import QQ


HOPF_NAMES = ("kC2", "kC3", "kC4", "kS3", "OS3", "OC2", "H4")


def builtin_hopf(name, field=QQ):
    if name == "kC2":
        return group_algebra(builtin_group("C2"), field)
    if name == "kC3":
        return group_algebra(builtin_group("C3"), field)
    if name == "kC4":
        return group_algebra(builtin_group("C4"), field)
    if name == "kS3":
        return group_algebra(builtin_group("S3"), field)
    if name == "OS3":
        return function_algebra(builtin_group("S3"), field)
    if name == "OC2":
        return function_algebra(builtin_group("C2"), field)
    if name in ("H4", "sweedler"):
        return sweedler_algebra(field)
    raise HopfError(f"unknown built-in Hopf algebra {name!r}")


def _basis_columns(h, indices):
    f = h.field
    return SparseMatrix(h.dim, len(indices), f, {(i, j): f.one for j, i in enumerate(indices)})


# basis order of kS3 follows lexicographic one-line notation:
# 0:e  1:(23)  2:(12)  3:(123)  4:(132)  5:(13)
S3_C2_INDICES = (0, 2)
S3_C3_INDICES = (0, 3, 4)

SETUP_NAMES = (
    "kC2/k",
    "kC3/k",
    "kS3/k",
    "H4/k",
    "kS3/kC2",
    "kS3/kC3",
    "H4/B",
    "OS3/OC2",
)


def builtin_setup(name, field=QQ):
    """A named homogeneous Galois pair (H, B, C)."""
    if name in ("kC2/k", "kC3/k", "kS3/k", "H4/k", "OS3/k"):
        h = builtin_hopf(name.split("/")[0], field)
        b = trivial_subalgebra(h)
        return GaloisSetup(h, b, takeuchi_subalgebra_to_quotient(h, b), name)
    if name == "kS3/kC2":
        h = builtin_hopf("kS3", field)
        return setup_from_subalgebra(h, _basis_columns(h, S3_C2_INDICES), name)
    if name == "kS3/kC3":
        h = builtin_hopf("kS3", field)
        return setup_from_subalgebra(h, _basis_columns(h, S3_C3_INDICES), name)
    if name in ("H4/B", "H4/Bx"):
        h = builtin_hopf("H4", field)
        return setup_from_subalgebra(h, _basis_columns(h, (0, 2)), "H4/B")
    if name == "OS3/OC2":
        # ideal: functions vanishing on the subgroup <(12)> = {0, 2}
        h = builtin_hopf("OS3", field)
        gens = _basis_columns(h, tuple(i for i in range(6) if i not in S3_C2_INDICES))
        return setup_from_ideal(h, gens, name)
    raise HopfError(f"unknown built-in setup {name!r}")
