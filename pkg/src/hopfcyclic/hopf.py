"""Finite-dimensional Hopf algebras by structure constants.

Conventions, fixed once and used everywhere:

* ``mult[(i, j, k)]`` is the e_k coefficient of e_i . e_j;
* ``comult[(k, i, j)]`` is the e_i (x) e_j coefficient of Delta(e_k);
* matrices act on column vectors, tensor legs are indexed row-major with
  the left factor slowest.

The module also builds the two sides of the Takeuchi correspondence for a
Hopf algebra H: quotient right module coalgebras C = H/I and left coideal
subalgebras B = H^{co C}, together with the canonical map, the translation
map, and the cocanonical map of the associated homogeneous extension.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import (
    QQ,
    Inconsistent,
    SparseMatrix,
    SubquotientSpace,
    apply_on_leg,
    equalizer,
    induced_map,
    inverse,
    kernel,
    permutation_matrix,
    quotient_by_columns,
    span_columns,
    span_contains,
    tensor_dim,
    tensor_index,
)


class HopfError(ValueError):
    pass


class NotGalois(HopfError):
    pass


class NotHopfIdeal(HopfError):
    pass


@dataclass
class AxiomCheck:
    name: str
    ok: bool
    witness: str | None = None


@dataclass
class ValidationReport:
    checks: list

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]


class HopfAlgebra:
    """A Hopf algebra over an exact field, given by structure-constant tensors."""

    def __init__(self, name, field, basis, mult, unit, comult, counit, antipode,
                 generator_indices=None):
        self.name = name
        self.field = field
        self.basis = list(basis)
        self.dim = len(self.basis)
        d = self.dim
        self.mult = {k: v for k, v in mult.items() if not field.is_zero(v)}
        self.unit = {k: v for k, v in unit.items() if not field.is_zero(v)}
        self.comult = {k: v for k, v in comult.items() if not field.is_zero(v)}
        self.counit = {k: v for k, v in counit.items() if not field.is_zero(v)}
        self.antipode = antipode
        self.generator_indices = generator_indices
        self._mult_pairs = {}
        for (i, j, k), v in self.mult.items():
            self._mult_pairs.setdefault((i, j), {})[k] = v
        self._comult_by_k = {}
        for (k, i, j), v in self.comult.items():
            self._comult_by_k.setdefault(k, {})[(i, j)] = v
        # derived structure matrices
        self.mu = SparseMatrix(
            d, d * d, field,
            {(k, tensor_index((d, d), (i, j))): v for (i, j, k), v in self.mult.items()},
        )
        self.delta = SparseMatrix(
            d * d, d, field,
            {(tensor_index((d, d), (i, j)), k): v for (k, i, j), v in self.comult.items()},
        )
        self.eta = SparseMatrix(d, 1, field, {(i, 0): v for i, v in self.unit.items()})
        self.eps = SparseMatrix(1, d, field, {(0, i): v for i, v in self.counit.items()})
        try:
            self.antipode_inv = inverse(antipode)
        except Inconsistent:
            self.antipode_inv = None

    def __repr__(self):
        return f"HopfAlgebra({self.name}, dim={self.dim}, field={self.field.name})"

    def ident(self):
        return SparseMatrix.identity(self.dim, self.field)

    def generators(self):
        """Basis indices generating H as a unital algebra."""
        if self.generator_indices is not None:
            return list(self.generator_indices)
        return list(range(self.dim))

    # element-level operations on sparse dict vectors -----------------------

    def e_mul(self, a, b):
        f = self.field
        out = {}
        for i, va in a.items():
            for j, vb in b.items():
                prods = self._mult_pairs.get((i, j))
                if not prods:
                    continue
                c = f.mul(va, vb)
                for k, m in prods.items():
                    s = f.add(out.get(k, f.zero), f.mul(c, m))
                    if f.is_zero(s):
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out

    def e_mul_many(self, vecs):
        acc = dict(self.unit)
        for v in vecs:
            acc = self.e_mul(acc, v)
        return acc

    def e_delta(self, a):
        f = self.field
        out = {}
        for k, v in a.items():
            for key, m in self._comult_by_k.get(k, {}).items():
                s = f.add(out.get(key, f.zero), f.mul(v, m))
                if f.is_zero(s):
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def e_delta_iter(self, a, times):
        """Iterated comultiplication with left-branch-first bracketing.

        Returns a dict mapping (times+1)-tuples of basis indices to
        coefficients; coassociativity makes the bracketing irrelevant but
        one is fixed for determinism.
        """
        f = self.field
        terms = {(k,): v for k, v in a.items()}
        for _ in range(times):
            nxt = {}
            for tup, v in terms.items():
                for (i, j), m in self._comult_by_k.get(tup[0], {}).items():
                    key = (i, j) + tup[1:]
                    s = f.add(nxt.get(key, f.zero), f.mul(v, m))
                    if f.is_zero(s):
                        nxt.pop(key, None)
                    else:
                        nxt[key] = s
            terms = nxt
        return terms

    def e_eps(self, a):
        f = self.field
        out = f.zero
        for i, v in a.items():
            c = self.counit.get(i)
            if c is not None:
                out = f.add(out, f.mul(v, c))
        return out

    def _apply_matrix(self, m, a):
        f = self.field
        out = {}
        for i, v in a.items():
            for r, w in m.cols_map().get(i, {}).items():
                s = f.add(out.get(r, f.zero), f.mul(v, w))
                if f.is_zero(s):
                    out.pop(r, None)
                else:
                    out[r] = s
        return out

    def e_antipode(self, a):
        return self._apply_matrix(self.antipode, a)

    def e_antipode_inv(self, a):
        if self.antipode_inv is None:
            raise HopfError(f"{self.name}: antipode is not invertible")
        return self._apply_matrix(self.antipode_inv, a)

    def basis_vec(self, i):
        return {i: self.field.one}

    def left_mult_matrix(self, vec):
        """Matrix of x -> vec . x."""
        f = self.field
        data = {}
        for (i, j, k), m in self.mult.items():
            a = vec.get(i)
            if a is not None:
                key = (k, j)
                s = f.add(data.get(key, f.zero), f.mul(a, m))
                if f.is_zero(s):
                    data.pop(key, None)
                else:
                    data[key] = s
        return SparseMatrix(self.dim, self.dim, f, data)

    def right_mult_matrix(self, vec):
        """Matrix of x -> x . vec."""
        f = self.field
        data = {}
        for (i, j, k), m in self.mult.items():
            a = vec.get(j)
            if a is not None:
                key = (k, i)
                s = f.add(data.get(key, f.zero), f.mul(a, m))
                if f.is_zero(s):
                    data.pop(key, None)
                else:
                    data[key] = s
        return SparseMatrix(self.dim, self.dim, f, data)

    def is_commutative(self):
        d = self.dim
        swap = permutation_matrix([d, d], [1, 0], self.field)
        return self.mu @ swap == self.mu

    def is_cocommutative(self):
        d = self.dim
        swap = permutation_matrix([d, d], [1, 0], self.field)
        return swap @ self.delta == self.delta

    # axiom validation -------------------------------------------------------

    def validate(self):
        """Check every Hopf axiom; report failures with a witness basis tuple."""
        d, f = self.dim, self.field
        ident = self.ident()
        swap_mid = permutation_matrix([d, d, d, d], [0, 2, 1, 3], f)
        checks = []

        def check(name, lhs, rhs, dims):
            if lhs == rhs:
                checks.append(AxiomCheck(name, True))
            else:
                diff = lhs - rhs
                key = min(diff.data)
                col = key[1]
                tup = []
                for dd in reversed(dims):
                    tup.append(col % dd)
                    col //= dd
                witness = ", ".join(self.basis[t] for t in reversed(tup))
                checks.append(AxiomCheck(name, False, f"({witness})"))

        check("associativity",
              self.mu @ apply_on_leg(self.mu, [d, d, d], 0, 2),
              self.mu @ apply_on_leg(self.mu, [d, d, d], 1, 2),
              [d, d, d])
        check("left unit", self.mu @ self.eta.kron(ident), ident, [d])
        check("right unit", self.mu @ ident.kron(self.eta), ident, [d])
        check("coassociativity",
              apply_on_leg(self.delta, [d, d], 0) @ self.delta,
              apply_on_leg(self.delta, [d, d], 1) @ self.delta,
              [d])
        check("left counit", self.eps.kron(ident) @ self.delta, ident, [d])
        check("right counit", ident.kron(self.eps) @ self.delta, ident, [d])
        check("comultiplication is an algebra map",
              self.delta @ self.mu,
              self.mu.kron(self.mu) @ swap_mid @ self.delta.kron(self.delta),
              [d, d])
        check("counit is an algebra map", self.eps @ self.mu, self.eps.kron(self.eps), [d, d])
        check("unit is grouplike", self.delta @ self.eta, self.eta.kron(self.eta), [1])
        check("counit of unit", self.eps @ self.eta,
              SparseMatrix.identity(1, f), [1])
        eta_eps = self.eta @ self.eps
        check("left antipode identity",
              self.mu @ apply_on_leg(self.antipode, [d, d], 0) @ self.delta, eta_eps, [d])
        check("right antipode identity",
              self.mu @ apply_on_leg(self.antipode, [d, d], 1) @ self.delta, eta_eps, [d])
        checks.append(
            AxiomCheck("antipode invertible", self.antipode_inv is not None,
                       None if self.antipode_inv is not None else "antipode matrix is singular")
        )
        return ValidationReport(checks)


# ---------------------------------------------------------------------------
# constructors


def group_algebra(group, field=QQ):
    """kG: basis the group elements, Delta(g) = g (x) g, S(g) = g^{-1}."""
    n = group.order
    one = field.one
    mult = {(i, j, group.mul(i, j)): one for i in range(n) for j in range(n)}
    comult = {(k, k, k): one for k in range(n)}
    counit = {k: one for k in range(n)}
    unit = {group.identity: one}
    antipode = SparseMatrix(n, n, field, {(group.inv(j), j): one for j in range(n)})
    gens = _group_generators(group)
    return HopfAlgebra(f"k[{group.name}]", field, list(group.names), mult, unit,
                       comult, counit, antipode, generator_indices=gens)


def function_algebra(group, field=QQ):
    """O(G): delta functions with pointwise product and convolution coproduct."""
    n = group.order
    one = field.one
    mult = {(i, i, i): one for i in range(n)}
    unit = {i: one for i in range(n)}
    comult = {}
    for a in range(n):
        for b in range(n):
            comult[(group.mul(a, b), a, b)] = one
    counit = {group.identity: one}
    antipode = SparseMatrix(n, n, field, {(group.inv(j), j): one for j in range(n)})
    names = [f"d_{nm}" for nm in group.names]
    return HopfAlgebra(f"O({group.name})", field, names, mult, unit, comult, counit, antipode)


def _group_generators(group):
    gens = []
    have = {group.identity}
    for x in group.elements():
        if x not in have:
            gens.append(x)
            have = set(group.subgroup_closure(gens))
        if len(have) == group.order:
            break
    return gens or [group.identity]


def sweedler_algebra(field=QQ):
    """The 4-dimensional algebra with basis 1, g, x, gx; g^2 = 1, x^2 = 0, xg = -gx."""
    one = field.one
    neg = field.neg(one)
    I, G, X, GX = 0, 1, 2, 3
    mult = {}
    for a in range(4):
        mult[(I, a, a)] = one
        if a != I:
            mult[(a, I, a)] = one
    mult.update({(G, G, I): one, (G, X, GX): one, (G, GX, X): one})
    mult.update({(X, G, GX): neg, (GX, G, X): neg})
    # x.x = x.gx = gx.x = gx.gx = 0
    unit = {I: one}
    comult = {
        (I, I, I): one,
        (G, G, G): one,
        (X, X, I): one,
        (X, G, X): one,
        (GX, GX, G): one,
        (GX, I, GX): one,
    }
    counit = {I: one, G: one}
    antipode = SparseMatrix(4, 4, field, {(I, I): one, (G, G): one, (GX, X): neg, (X, GX): one})
    return HopfAlgebra("H4", field, ["1", "g", "x", "gx"], mult, unit, comult, counit,
                       antipode, generator_indices=[G, X])


# ---------------------------------------------------------------------------
# quotient module coalgebras C = H / I


class QuotientModuleCoalgebra:
    """H/I for a coideal right ideal I, with the induced coalgebra structure.

    The section of ``space`` is the lift of H -> C fixed once and reused by
    every construction downstream; representative independence is always a
    theorem to be checked, never an assumption.
    """

    def __init__(self, parent, ideal, space):
        self.parent = parent
        self.ideal = ideal          # subspace of H
        self.space = space          # quotient subquotient H -> C
        self.dim = space.dim
        h = parent
        d, c, f = h.dim, self.dim, h.field
        p, s = space.projection, space.section
        # induced coalgebra structure: descent checks are the coideal property
        self.delta_c = induced_map(p.kron(p) @ h.delta, space, SubquotientSpace.full(c * c, f))
        self.eps_c = induced_map(h.eps, space, SubquotientSpace.full(1, f))
        # right H-action on C induced by multiplication
        self.action = induced_map(
            p @ h.mu, space.tensor(SubquotientSpace.full(d, f)),
            SubquotientSpace.full(c, f),
        )
        self.onebar = p @ h.eta
        self._validate()

    def _validate(self):
        h, c, f = self.parent, self.dim, self.parent.field
        d = h.dim
        ident = SparseMatrix.identity(c, f)
        if not (apply_on_leg(self.delta_c, [c, c], 0) @ self.delta_c
                == apply_on_leg(self.delta_c, [c, c], 1) @ self.delta_c):
            raise HopfError("induced comultiplication is not coassociative")
        if not (self.eps_c.kron(ident) @ self.delta_c == ident
                and ident.kron(self.eps_c) @ self.delta_c == ident):
            raise HopfError("induced counit laws fail")
        # module coalgebra compatibility: Delta_C(c.h) = c_(1) h_(1) (x) c_(2) h_(2)
        swap_mid = permutation_matrix([c, c, d, d], [0, 2, 1, 3], f)
        rhs = self.action.kron(self.action) @ swap_mid @ self.delta_c.kron(h.delta)
        if not (self.delta_c @ self.action == rhs):
            raise HopfError("right action is not a module coalgebra structure")
        if not (self.eps_c @ self.action == self.eps_c.kron(h.eps)):
            raise HopfError("counit is not H-linear")
        # 1bar is grouplike
        if not (self.delta_c @ self.onebar == self.onebar.kron(self.onebar)):
            raise HopfError("class of 1 is not grouplike")
        if not (self.eps_c @ self.onebar).is_identity():
            raise HopfError("counit of the class of 1 is not 1")

    def __repr__(self):
        return f"QuotientModuleCoalgebra({self.parent.name}/I, dim={self.dim})"

    def bar(self, vec):
        """Class in C of an element of H (dict vector)."""
        return self.parent._apply_matrix(self.space.projection, vec)

    def lift(self, cvec):
        return self.parent._apply_matrix(self.space.section, cvec)

    def c_delta(self, cvec):
        f = self.parent.field
        out = {}
        c = self.dim
        for k, v in cvec.items():
            for (row, col), m in self.delta_c.data.items():
                if col == k:
                    key = (row // c, row % c)
                    s = f.add(out.get(key, f.zero), f.mul(v, m))
                    if f.is_zero(s):
                        out.pop(key, None)
                    else:
                        out[key] = s
        return out

    def c_eps(self, cvec):
        f = self.parent.field
        out = f.zero
        for k, v in cvec.items():
            m = self.eps_c.data.get((0, k))
            if m is not None:
                out = f.add(out, f.mul(v, m))
        return out

    def c_act(self, cvec, hvec):
        """Right action c . h on reduced coordinates."""
        f = self.parent.field
        d = self.parent.dim
        out = {}
        for k, v in cvec.items():
            for i, w in hvec.items():
                col = k * d + i
                for row, m in self.action.cols_map().get(col, {}).items():
                    s = f.add(out.get(row, f.zero), f.mul(f.mul(v, w), m))
                    if f.is_zero(s):
                        out.pop(row, None)
                    else:
                        out[row] = s
        return out


def right_ideal_closure(h, generator_cols):
    """Span of the right ideal generated by the given columns of H."""
    current = span_columns(generator_cols)
    while True:
        mats = [current.section]
        for j in range(h.dim):
            mats.append(h.right_mult_matrix(h.basis_vec(j)) @ current.section)
        bigger = span_columns(SparseMatrix.hstack(mats))
        if bigger.dim == current.dim:
            return bigger
        current = bigger


def quotient_module_coalgebra(h, generator_cols):
    """Build H/I from ideal generators: saturate to a right ideal, then
    check the coideal conditions (saturating the coalgebra side would
    silently change I, so it is checked, not forced)."""
    ideal = right_ideal_closure(h, generator_cols)
    d, f = h.dim, h.field
    if ideal.dim:
        if not (h.eps @ ideal.section).is_zero_matrix():
            raise HopfError("ideal is not contained in the kernel of the counit")
        ident = h.ident()
        side = SparseMatrix.hstack([ideal.section.kron(ident), ident.kron(ideal.section)])
        if not span_contains(side, h.delta @ ideal.section):
            raise HopfError("ideal is not a coideal")
    space = quotient_by_columns(d, ideal.section)
    return QuotientModuleCoalgebra(h, ideal, space)


# ---------------------------------------------------------------------------
# comodule subalgebras B, coinvariants, Takeuchi transforms


class ComoduleSubalgebra:
    """A left coideal subalgebra B of H, presented by a subspace with basis."""

    def __init__(self, parent, space):
        self.parent = parent
        self.space = space
        self.dim = space.dim
        h = parent
        d, f = h.dim, h.field
        if not span_contains(space.section, h.eta):
            raise HopfError("subalgebra does not contain 1")
        prods = h.mu @ space.section.kron(space.section)
        if not span_contains(space.section, prods):
            raise HopfError("subspace is not closed under multiplication")
        # left coideal: Delta(B) inside H (x) B
        imgs = h.delta @ space.section
        if not span_contains(h.ident().kron(space.section), imgs):
            raise HopfError("subspace is not a left coideal")
        # witnesses on reduced coordinates
        self.mult_b = induced_map(
            h.mu @ space.section.kron(space.section),
            SubquotientSpace.full(self.dim * self.dim, f),
            space,
        )
        self.coaction_b = induced_map(
            h.delta, space, SubquotientSpace.full(d, f).tensor(space)
        )

    def __repr__(self):
        return f"ComoduleSubalgebra(dim={self.dim} in {self.parent.name})"

    def basis_cols(self):
        return self.space.section

    def include(self, bvec):
        """H-coordinates of an element given in B-coordinates."""
        return self.parent._apply_matrix(self.space.section, bvec)


def trivial_subalgebra(h):
    return ComoduleSubalgebra(h, span_columns(h.eta))


def subalgebra_from_columns(h, cols):
    return ComoduleSubalgebra(h, span_columns(cols))


def coinvariants(h, c):
    """H^{co C} as the equalizer of h -> h_(1) (x) bar(h_(2)) and h -> h (x) bar(1)."""
    d, f = h.dim, h.field
    cd = c.dim
    rho = apply_on_leg(c.space.projection, [d, d], 1) @ h.delta
    one_map = SparseMatrix(
        d * cd, d, f,
        {(i * cd + r, i): v for i in range(d) for r, v in c.onebar.cols_map().get(0, {}).items()},
    )
    eq = equalizer(rho, one_map)
    return ComoduleSubalgebra(h, eq)


def iterated_coinvariance_ok(h, c, b, n):
    """b_(1) (x) ... (x) bar(b_(n+2)) = b_(1) (x) ... (x) b_(n+1) (x) bar(1)."""
    d, f = h.dim, h.field
    cd = c.dim
    legs = n + 2
    delta_pow = h.ident()
    for k in range(legs - 1):
        delta_pow = apply_on_leg(h.delta, [d] * (k + 1), k) @ delta_pow
    dims = [d] * legs
    lhs = apply_on_leg(c.space.projection, dims, legs - 1) @ delta_pow @ b.space.section
    one_col = c.onebar.cols_map().get(0, {})
    shorter = h.ident()
    for k in range(legs - 2):
        shorter = apply_on_leg(h.delta, [d] * (k + 1), k) @ shorter
    rhs_core = shorter @ b.space.section
    data = {}
    for (row, col), v in rhs_core.data.items():
        for r, w in one_col.items():
            data[(row * cd + r, col)] = f.mul(v, w)
    rhs = SparseMatrix(tensor_dim(dims[:-1]) * cd, b.dim, f, data)
    return lhs == rhs


def takeuchi_subalgebra_to_quotient(h, b):
    """B -> H / B^+ H where B^+ = B intersect ker(eps)."""
    eps_b = h.eps @ b.space.section
    bplus = kernel(eps_b)
    bplus_cols = b.space.section @ bplus.section
    return quotient_module_coalgebra(h, bplus_cols)


def galois_criterion(h, b, c):
    """True iff the ideal of C equals B^+ H; cross-checked against can_1."""
    eps_b = h.eps @ b.space.section
    bplus_cols = b.space.section @ kernel(eps_b).section
    bh = right_ideal_closure(h, bplus_cols)
    ideal = c.ideal
    same = (
        bh.dim == ideal.dim
        and span_contains(ideal.section, bh.section)
        and span_contains(bh.section, ideal.section)
    )
    if not same:
        return False
    try:
        canonical_map_n(h, b, c, 1)
    except NotGalois:
        return False
    return True


# ---------------------------------------------------------------------------
# tensor powers over B and the canonical map


def tensor_power_over_b(h, b, legs):
    """H^{(x)_B legs} as a chain of coequalizers; a quotient of H^{(x) legs}.

    Returns the SubquotientSpace over the full tensor-power ambient.
    """
    d, f = h.dim, h.field
    space = SubquotientSpace.full(d, f)
    bcols = b.space.section
    for k in range(1, legs):
        amb = space.tensor(SubquotientSpace.full(d, f))
        rels = []
        for jb in range(bcols.cols):
            bvec = bcols.cols_map().get(jb, {})
            rb = induced_map(
                apply_on_leg(h.right_mult_matrix(bvec), [d] * k, k - 1), space, space
            )
            lb = h.left_mult_matrix(bvec)
            ident_r = SparseMatrix.identity(space.dim, f)
            ident_d = SparseMatrix.identity(d, f)
            rels.append(rb.kron(ident_d) - ident_r.kron(lb))
        stage = quotient_by_columns(space.dim * d, SparseMatrix.hstack(rels))
        space = amb.then(stage)
    return space


def commutator_quotient(h, b, space, legs):
    """[X]_B: quotient of X = H^{(x)_B legs} by right-minus-left B-action."""
    d, f = h.dim, h.field
    bcols = b.space.section
    rels = []
    for jb in range(bcols.cols):
        bvec = bcols.cols_map().get(jb, {})
        right_last = induced_map(
            apply_on_leg(h.right_mult_matrix(bvec), [d] * legs, legs - 1), space, space
        )
        left_first = induced_map(
            apply_on_leg(h.left_mult_matrix(bvec), [d] * legs, 0), space, space
        )
        rels.append(right_last - left_first)
    stage = quotient_by_columns(space.dim, SparseMatrix.hstack(rels))
    return space.then(stage)


def canonical_map_n(h, b, c, n):
    """The degree-n canonical map and its inverse, as matrices on reduced
    coordinates between H^{(x)_B n+1} and H (x) C^{(x) n}.

    Raises NotGalois when the two are not mutually inverse bijections.
    """
    if n < 1:
        raise HopfError("canonical map needs degree n >= 1")
    d, cdim, f = h.dim, c.dim, h.field
    dom = tensor_power_over_b(h, b, n + 1)
    target_dims = [d] + [cdim] * n
    tdim = tensor_dim(target_dims)
    src_dims = [d] * (n + 1)

    # forward: m (x) h^1 ... h^n -> m h^1_(1)...h^n_(1) (x) bar(prod h^i_(2)) (x) ...
    cols = []
    for tup in itertools.product(range(d), repeat=n + 1):
        col = {}
        expansions = [h.e_delta_iter(h.basis_vec(tup[i]), i) for i in range(1, n + 1)]
        for combo in itertools.product(*[e.items() for e in expansions]):
            coeff = f.one
            for _, v in combo:
                coeff = f.mul(coeff, v)
            paths = [t for t, _ in combo]  # paths[i-1] has i+1 components
            first = h.basis_vec(tup[0])
            for i in range(1, n + 1):
                first = h.e_mul(first, h.basis_vec(paths[i - 1][0]))
            legs = [first]
            for j in range(1, n + 1):
                prod = dict(h.unit)
                for i in range(j, n + 1):
                    prod = h.e_mul(prod, h.basis_vec(paths[i - 1][j]))
                legs.append(c.bar(prod))
            _accumulate_tensor(col, legs, target_dims, coeff, f)
        cols.append(col)
    fwd_ambient = SparseMatrix.from_columns(tdim, cols, f)
    can = induced_map(fwd_ambient, dom, SubquotientSpace.full(tdim, f))

    # inverse: m (x) bar g^1 (x) ... -> m S(g^1_(1)) (x) g^1_(2) S(g^2_(1)) (x) ...
    cols = []
    for tup in itertools.product(*[range(dd) for dd in target_dims]):
        col = {}
        lifts = [c.lift({tup[j]: f.one}) for j in range(1, n + 1)]
        expansions = [h.e_delta(g) for g in lifts]
        for combo in itertools.product(*[e.items() for e in expansions]):
            coeff = f.one
            for _, v in combo:
                coeff = f.mul(coeff, v)
            pairs = [t for t, _ in combo]
            legs = [h.e_mul(h.basis_vec(tup[0]), h.e_antipode(h.basis_vec(pairs[0][0])))]
            for j in range(1, n):
                legs.append(
                    h.e_mul(h.basis_vec(pairs[j - 1][1]), h.e_antipode(h.basis_vec(pairs[j][0])))
                )
            legs.append(h.basis_vec(pairs[n - 1][1]))
            _accumulate_tensor(col, legs, src_dims, coeff, f)
        cols.append(col)
    inv_ambient = SparseMatrix.from_columns(tensor_dim(src_dims), cols, f)
    can_inv = induced_map(inv_ambient, SubquotientSpace.full(tdim, f), dom)

    if not (can @ can_inv).is_identity() or not (can_inv @ can).is_identity():
        raise NotGalois(f"canonical map in degree {n} is not bijective")
    return can, can_inv, dom


def _accumulate_tensor(col, legs, dims, coeff, f):
    """Add coeff * (leg_0 (x) ... (x) leg_k) into a sparse column dict."""
    for combo in itertools.product(*[leg.items() for leg in legs]):
        c = coeff
        idx = 0
        for (i, v), dd in zip(combo, dims):
            c = f.mul(c, v)
            idx = idx * dd + i
        s = f.add(col.get(idx, f.zero), c)
        if f.is_zero(s):
            col.pop(idx, None)
        else:
            col[idx] = s


def translation_map(h, b, c):
    """tau(bar h) = S(h_(1)) (x)_B h_(2), checked independent of the lift."""
    d, f = h.dim, h.field
    dom2 = tensor_power_over_b(h, b, 2)

    def tau_from_lift(section):
        cols = []
        for j in range(c.dim):
            lift = h._apply_matrix(section, {j: f.one})
            col = {}
            for (i1, i2), v in h.e_delta(lift).items():
                legs = [h.e_antipode(h.basis_vec(i1)), h.basis_vec(i2)]
                _accumulate_tensor(col, legs, [d, d], v, f)
            cols.append(col)
        ambient = SparseMatrix.from_columns(d * d, cols, f)
        return dom2.projection @ ambient

    tau = tau_from_lift(c.space.section)
    # second, deliberately different lift: add something in the ideal
    if c.ideal.dim:
        bump = SparseMatrix(
            c.ideal.dim, c.dim, f,
            {(j % c.ideal.dim, j): f.one for j in range(c.dim)},
        )
        other = c.space.section + c.ideal.section @ bump
        if not (tau == tau_from_lift(other)):
            raise HopfError("translation map depends on the choice of representatives")
    return tau


def cocanonical_map(h, b, c):
    """cocan: B (x) D -> D box_C D, b (x) d -> b d_(1) (x) d_(2); D = H here.

    Returns (matrix on reduced coordinates, cotensor subquotient, bijective flag).
    """
    d, f = h.dim, h.field
    cot = cotensor_square(h, c)
    cols = []
    bcols = b.space.section
    for jb in range(bcols.cols):
        bvec = bcols.cols_map().get(jb, {})
        for jd in range(d):
            col = {}
            for (i1, i2), v in h.e_delta(h.basis_vec(jd)).items():
                legs = [h.e_mul(bvec, h.basis_vec(i1)), h.basis_vec(i2)]
                _accumulate_tensor(col, legs, [d, d], v, f)
            cols.append(col)
    ambient = SparseMatrix.from_columns(d * d, cols, f)
    reduced = induced_map(ambient, SubquotientSpace.full(b.dim * d, f), cot)
    bij = reduced.rows == reduced.cols and reduced.rank() == reduced.rows
    return reduced, cot, bij


def cotensor_square(h, c):
    """D box_C D inside D (x) D via the two induced coactions."""
    d, f = h.dim, h.field
    rho = apply_on_leg(c.space.projection, [d, d], 1) @ h.delta  # d -> d_(1) (x) bar d_(2)
    lam = apply_on_leg(c.space.projection, [d, d], 0) @ h.delta  # d -> bar d_(1) (x) d_(2)
    left = apply_on_leg(rho, [d, d], 0, 1)
    right = apply_on_leg(lam, [d, d], 1, 1)
    return equalizer(left, right)


# ---------------------------------------------------------------------------
# bundled Galois setup


@dataclass
class GaloisSetup:
    """A homogeneous quotient-Galois pair: B = H^{co H/I} inside H, C = H/I."""

    hopf: HopfAlgebra
    subalgebra: ComoduleSubalgebra
    quotient: QuotientModuleCoalgebra
    name: str = ""

    def __post_init__(self):
        if not self.name:
            self.name = f"{self.hopf.name}/B(dim {self.subalgebra.dim})"


def setup_from_subalgebra(h, cols, name=""):
    b = subalgebra_from_columns(h, cols)
    c = takeuchi_subalgebra_to_quotient(h, b)
    return GaloisSetup(h, b, c, name)


def setup_from_ideal(h, gen_cols, name=""):
    c = quotient_module_coalgebra(h, gen_cols)
    b = coinvariants(h, c)
    return GaloisSetup(h, b, c, name)
