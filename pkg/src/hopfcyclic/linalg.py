"""Exact sparse linear algebra over Q and F_p.

Everything downstream (Hopf structure checks, cyclic modules, spectral
sequences) reduces to kernels, images, quotients and equalizers of sparse
matrices with exact entries.  No floating point anywhere: scalars are
arbitrary-precision rationals or residues mod a prime, so every rank is
exact and every projection/section pair is an actual one-sided inverse.

Matrices act on column vectors: a matrix of shape (rows, cols) sends basis
vector e_j of k^cols to sum_i M[i,j] e_i.  Tensor products use row-major
indexing with the left factor slowest: (i, j) <-> i*dim_right + j.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:
    _mpq = None


class LinAlgError(Exception):
    pass


class ShapeMismatch(LinAlgError):
    pass


class NotWellDefined(LinAlgError):
    """An operator failed to descend to a quotient or restrict to a subspace.

    This signals a construction bug upstream, not bad user input.
    """


class Inconsistent(LinAlgError):
    """Linear system has no solution."""


# ---------------------------------------------------------------------------
# fields


class RationalField:
    """The field Q.  Values are Fraction (or gmpy2.mpq when available)."""

    name = "Q"

    def __init__(self, use_gmpy=_mpq is not None):
        self._frac = _mpq if use_gmpy else Fraction
        self.zero = self._frac(0)
        self.one = self._frac(1)

    def __repr__(self):
        return "QQ"

    def from_int(self, n):
        return self._frac(n)

    def from_str(self, s):
        return self._frac(str(s))

    def to_str(self, a):
        return str(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / self._frac(a)

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def pivot_size(self, a):
        # smallest-numerator pivot heuristic keeps intermediate entries tame
        return (abs(a.numerator), a.denominator)


class PrimeField:
    """F_p for a prime p.  Values are ints in [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def __repr__(self):
        return f"GF({self.p})"

    def from_int(self, n):
        return n % self.p

    def from_str(self, s):
        s = str(s)
        if "/" in s:
            num, den = s.split("/")
            return self.mul(int(num) % self.p, self.inv(int(den) % self.p))
        return int(s) % self.p

    def to_str(self, a):
        return str(a)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def pivot_size(self, a):
        return (1, 1)


QQ = RationalField()


# ---------------------------------------------------------------------------
# sparse matrices


class SparseMatrix:
    """Immutable-by-convention sparse matrix over an exact field.

    Entries live in ``data: {(row, col): value}`` with no explicit zeros,
    so equality is structural.  Derived row/column adjacency and the row
    echelon form are cached on first use.
    """

    __slots__ = ("rows", "cols", "field", "data", "_rows_map", "_cols_map", "_rref")

    def __init__(self, rows, cols, field, data=None):
        self.rows = rows
        self.cols = cols
        self.field = field
        self.data = {} if data is None else data
        self._rows_map = None
        self._cols_map = None
        self._rref = None

    # construction ---------------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols, field):
        return cls(rows, cols, field)

    @classmethod
    def identity(cls, n, field):
        one = field.one
        return cls(n, n, field, {(i, i): one for i in range(n)})

    @classmethod
    def from_entries(cls, rows, cols, field, entries):
        data = {}
        for i, j, v in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ShapeMismatch(f"entry ({i},{j}) outside {rows}x{cols}")
            if (i, j) in data:
                v = field.add(data[(i, j)], v)
            if field.is_zero(v):
                data.pop((i, j), None)
            else:
                data[(i, j)] = v
        return cls(rows, cols, field, data)

    @classmethod
    def from_dense(cls, rows_list, field):
        data = {}
        for i, row in enumerate(rows_list):
            for j, v in enumerate(row):
                v = field.from_int(v) if isinstance(v, int) else v
                if not field.is_zero(v):
                    data[(i, j)] = v
        return cls(len(rows_list), len(rows_list[0]) if rows_list else 0, field, data)

    @classmethod
    def from_columns(cls, nrows, columns, field):
        """Build from a list of sparse columns (dict row -> value)."""
        data = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if not field.is_zero(v):
                    data[(i, j)] = v
        return cls(nrows, len(columns), field, data)

    # basic access ----------------------------------------------------------

    def get(self, i, j):
        return self.data.get((i, j), self.field.zero)

    @property
    def nnz(self):
        return len(self.data)

    def is_zero_matrix(self):
        return not self.data

    def is_identity(self):
        return (
            self.rows == self.cols
            and len(self.data) == self.rows
            and all(i == j and self.field.eq(v, self.field.one) for (i, j), v in self.data.items())
        )

    def rows_map(self):
        if self._rows_map is None:
            m = {}
            for (i, j), v in self.data.items():
                m.setdefault(i, {})[j] = v
            self._rows_map = m
        return self._rows_map

    def cols_map(self):
        if self._cols_map is None:
            m = {}
            for (i, j), v in self.data.items():
                m.setdefault(j, {})[i] = v
            self._cols_map = m
        return self._cols_map

    def column(self, j):
        return dict(self.cols_map().get(j, {}))

    def to_dense(self):
        return [[self.get(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        if set(self.data) != set(other.data):
            return False
        return all(self.field.eq(v, other.data[k]) for k, v in self.data.items())

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    # arithmetic -------------------------------------------------------------

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other):
        self._same_shape(other)
        f = self.field
        data = dict(self.data)
        for k, v in other.data.items():
            s = f.add(data.get(k, f.zero), v)
            if f.is_zero(s):
                data.pop(k, None)
            else:
                data[k] = s
        return SparseMatrix(self.rows, self.cols, f, data)

    def __neg__(self):
        f = self.field
        return SparseMatrix(self.rows, self.cols, f, {k: f.neg(v) for k, v in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        f = self.field
        if f.is_zero(c):
            return SparseMatrix.zeros(self.rows, self.cols, f)
        return SparseMatrix(self.rows, self.cols, f, {k: f.mul(c, v) for k, v in self.data.items()})

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        out = {}
        orows = other.rows_map()
        for (i, k), a in self.data.items():
            row = orows.get(k)
            if not row:
                continue
            for j, b in row.items():
                key = (i, j)
                s = f.add(out.get(key, f.zero), f.mul(a, b))
                if f.is_zero(s):
                    out.pop(key, None)
                else:
                    out[key] = s
        return SparseMatrix(self.rows, other.cols, f, out)

    def t(self):
        return SparseMatrix(
            self.cols, self.rows, self.field, {(j, i): v for (i, j), v in self.data.items()}
        )

    def kron(self, other):
        f = self.field
        data = {}
        for (i1, j1), a in self.data.items():
            for (i2, j2), b in other.data.items():
                data[(i1 * other.rows + i2, j1 * other.cols + j2)] = f.mul(a, b)
        return SparseMatrix(self.rows * other.rows, self.cols * other.cols, f, data)

    @staticmethod
    def hstack(mats):
        mats = [m for m in mats if m.cols > 0] or mats[:1]
        rows, f = mats[0].rows, mats[0].field
        data = {}
        off = 0
        for m in mats:
            if m.rows != rows:
                raise ShapeMismatch("hstack row mismatch")
            for (i, j), v in m.data.items():
                data[(i, j + off)] = v
            off += m.cols
        return SparseMatrix(rows, off, f, data)

    @staticmethod
    def vstack(mats):
        cols, f = mats[0].cols, mats[0].field
        data = {}
        off = 0
        for m in mats:
            if m.cols != cols:
                raise ShapeMismatch("vstack col mismatch")
            for (i, j), v in m.data.items():
                data[(i + off, j)] = v
            off += m.rows
        return SparseMatrix(off, cols, f, data)

    # elimination ------------------------------------------------------------

    def rref(self):
        """Reduced row echelon form: (pivot columns, rows as sparse dicts).

        The RREF is mathematically unique, so the result is canonical no
        matter which pivot the size heuristic picks first.
        """
        if self._rref is None:
            rows = list(self.rows_map().values())
            self._rref = _rref_rows(rows, self.cols, self.field)
        return self._rref

    def rank(self):
        return len(self.rref()[0])


def _rref_rows(rows_in, ncols, field):
    """Row-reduce sparse rows (dicts col -> value) to unique RREF.

    Processes columns left to right; within a column the pivot is the live
    entry of smallest ``pivot_size`` (ties broken by row order).  Returns
    (pivot_cols, rows) with rows ordered by pivot column.
    """
    rows = {}
    col_index = {}
    for i, r in enumerate(rows_in):
        r = {c: v for c, v in r.items() if not field.is_zero(v)}
        if not r:
            continue
        rows[i] = r
        for c in r:
            col_index.setdefault(c, set()).add(i)
    pivots = []
    pivoted = set()
    for c in range(ncols):
        live = col_index.get(c)
        if not live:
            continue
        cands = [i for i in live if i in rows and c in rows[i] and i not in pivoted]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (field.pivot_size(rows[i][c]), i))
        prow = rows[piv]
        pv = prow[c]
        if not field.eq(pv, field.one):
            inv = field.inv(pv)
            for cc in list(prow):
                prow[cc] = field.mul(prow[cc], inv)
        for i in list(live):
            if i == piv or i not in rows:
                continue
            r = rows[i]
            fac = r.get(c)
            if fac is None:
                continue
            for cc, v in prow.items():
                nv = field.sub(r.get(cc, field.zero), field.mul(fac, v))
                if field.is_zero(nv):
                    if cc in r:
                        del r[cc]
                        idx = col_index.get(cc)
                        if idx:
                            idx.discard(i)
                else:
                    if cc not in r:
                        col_index.setdefault(cc, set()).add(i)
                    r[cc] = nv
            if not r:
                del rows[i]
        pivots.append((c, piv))
        pivoted.add(piv)
    pivots.sort()
    return [c for c, _ in pivots], [rows[i] for _, i in pivots]


# ---------------------------------------------------------------------------
# subquotient spaces


class SubquotientSpace:
    """A subspace or quotient (or subquotient) of k^ambient_dim.

    Presented constructively by a projection (ambient -> reduced) and a
    section (reduced -> ambient) with projection @ section = identity.

    ``rel_kind`` records what the relations are:

    * "kernel": relations are exactly ker(projection); this is the pure
      quotient case and enables a cheap full-ambient descent check.
    * "explicit": relations are spanned by the columns of ``rel_cols``
      (possibly none, the pure subspace case); the carrier subspace on
      which the space is defined is im(section) + span(rel_cols).
    """

    __slots__ = ("ambient_dim", "dim", "projection", "section", "rel_kind", "rel_cols")

    def __init__(self, projection, section, rel_kind="explicit", rel_cols=None):
        if projection.cols != section.rows or projection.rows != section.cols:
            raise ShapeMismatch("projection/section shapes incompatible")
        self.ambient_dim = projection.cols
        self.dim = projection.rows
        self.projection = projection
        self.section = section
        self.rel_kind = rel_kind
        if rel_cols is None:
            rel_cols = SparseMatrix.zeros(self.ambient_dim, 0, projection.field)
        self.rel_cols = rel_cols
        if not (projection @ section).is_identity():
            raise NotWellDefined("projection @ section is not the identity")

    @classmethod
    def full(cls, n, field):
        ident = SparseMatrix.identity(n, field)
        return cls(ident, ident)

    @property
    def field(self):
        return self.projection.field

    @property
    def is_full(self):
        return self.dim == self.ambient_dim and self.projection.is_identity()

    def __repr__(self):
        return f"SubquotientSpace(dim={self.dim}, ambient={self.ambient_dim}, rel={self.rel_kind})"

    def then(self, inner):
        """Compose with a subquotient of this space's reduced coordinates."""
        if inner.ambient_dim != self.dim:
            raise ShapeMismatch("inner subquotient does not live on reduced space")
        proj = inner.projection @ self.projection
        sect = self.section @ inner.section
        if self.rel_kind == "kernel" and inner.rel_kind == "kernel":
            rel = SparseMatrix.hstack([self.rel_cols, self.section @ inner.rel_cols])
            return SubquotientSpace(proj, sect, "kernel", rel)
        # any mixed composition has explicit relations
        rel = SparseMatrix.hstack([self.rel_cols, self.section @ inner.rel_cols])
        return SubquotientSpace(proj, sect, "explicit", rel)

    def tensor(self, other):
        """Tensor product of subquotients, on the kron-indexed ambient."""
        proj = self.projection.kron(other.projection)
        sect = self.section.kron(other.section)
        if self.is_full and other.is_full:
            return SubquotientSpace(proj, sect)
        if self.is_full:
            rel = SparseMatrix.identity(self.ambient_dim, self.field).kron(other.rel_cols)
            return SubquotientSpace(proj, sect, other.rel_kind, rel)
        if other.is_full:
            rel = self.rel_cols.kron(SparseMatrix.identity(other.ambient_dim, self.field))
            return SubquotientSpace(proj, sect, self.rel_kind, rel)
        if self.rel_kind != other.rel_kind:
            raise NotWellDefined("tensor of mixed subquotient kinds is not supported")
        carrier_s = SparseMatrix.hstack([self.section, self.rel_cols])
        carrier_o = SparseMatrix.hstack([other.section, other.rel_cols])
        rel = SparseMatrix.hstack([self.rel_cols.kron(carrier_o), carrier_s.kron(other.rel_cols)])
        return SubquotientSpace(proj, sect, self.rel_kind, rel)


def span_contains(basis, candidates):
    """True when every column of ``candidates`` lies in the column span of ``basis``."""
    if candidates.is_zero_matrix():
        return True
    if basis.cols == 0:
        return False
    both = SparseMatrix.hstack([basis, candidates])
    return both.rank() == basis.rank()


def induced_map(f, dom, cod):
    """Descend/restrict the ambient map ``f`` to reduced coordinates.

    Returns cod.projection @ f @ dom.section after verifying that f maps
    relations to relations (quotients) and carrier into carrier
    (subspaces).  A failed check raises NotWellDefined: the map the caller
    wrote down is not actually defined on the subquotient.
    """
    if f.cols != dom.ambient_dim or f.rows != cod.ambient_dim:
        raise ShapeMismatch("map shape does not match ambient spaces")
    reduced = cod.projection @ f @ dom.section
    # relations to relations
    if dom.rel_kind == "kernel":
        if not (reduced @ dom.projection == cod.projection @ f):
            raise NotWellDefined("map does not descend: relations not preserved")
    elif dom.rel_cols.cols:
        img = f @ dom.rel_cols
        if cod.rel_kind == "kernel":
            if not (cod.projection @ img).is_zero_matrix():
                raise NotWellDefined("map does not descend: relations not preserved")
        else:
            if not span_contains(cod.rel_cols, img):
                raise NotWellDefined("map does not descend: relations not preserved")
    # carrier into carrier
    if cod.rel_kind == "explicit" and not cod.is_full:
        if dom.rel_kind == "kernel" and not dom.is_full:
            img = f  # quotient of the full ambient: everything must land in the carrier
        else:
            img = f @ dom.section
        if cod.rel_cols.cols == 0:
            if not (cod.section @ (cod.projection @ img) == img):
                raise NotWellDefined("map does not restrict: image leaves the subspace")
        else:
            carrier = SparseMatrix.hstack([cod.section, cod.rel_cols])
            if not span_contains(carrier, img):
                raise NotWellDefined("map does not restrict: image leaves the carrier")
    return reduced


# ---------------------------------------------------------------------------
# kernels, images, quotients, equalizers


def kernel(m):
    """Null space of m as a subspace of its column space k^cols."""
    pivcols, rrows = m.rref()
    f = m.field
    pivset = set(pivcols)
    free = [c for c in range(m.cols) if c not in pivset]
    free_pos = {c: k for k, c in enumerate(free)}
    sect = {}
    for k, fc in enumerate(free):
        sect[(fc, k)] = f.one
        for (pc, row) in zip(pivcols, rrows):
            v = row.get(fc)
            if v is not None:
                sect[(pc, k)] = f.neg(v)
    section = SparseMatrix(m.cols, len(free), f, sect)
    proj = SparseMatrix(len(free), m.cols, f, {(k, c): f.one for c, k in free_pos.items()})
    return SubquotientSpace(proj, section)


def span_columns(m):
    """Column span of m as a subspace of k^rows, with canonical echelon basis."""
    f = m.field
    cols = list(m.cols_map().values())
    pivcols, rrows = _rref_rows(cols, m.rows, f)
    sect = {}
    for k, row in enumerate(rrows):
        for c, v in row.items():
            sect[(c, k)] = v
    section = SparseMatrix(m.rows, len(rrows), f, sect)
    proj = SparseMatrix(len(rrows), m.rows, f, {(k, c): f.one for k, c in enumerate(pivcols)})
    return SubquotientSpace(proj, section)


def quotient_by_columns(ambient_dim, cols):
    """Quotient of k^ambient_dim by the span of the given columns.

    The section picks the non-pivot coordinates as representatives, so the
    choice of lift is deterministic and reused everywhere.
    """
    f = cols.field
    if cols.rows != ambient_dim:
        raise ShapeMismatch("relation columns do not live in the ambient space")
    colvecs = list(cols.cols_map().values())
    pivcols, rrows = _rref_rows(colvecs, ambient_dim, f)
    pivset = set(pivcols)
    nonpiv = [c for c in range(ambient_dim) if c not in pivset]
    red = {c: k for k, c in enumerate(nonpiv)}
    proj = {}
    for c in nonpiv:
        proj[(red[c], c)] = f.one
    for pc, row in zip(pivcols, rrows):
        for c, v in row.items():
            if c == pc:
                continue
            proj[(red[c], pc)] = f.neg(v)
    projection = SparseMatrix(len(nonpiv), ambient_dim, f, proj)
    section = SparseMatrix(
        ambient_dim, len(nonpiv), f, {(c, red[c]): f.one for c in nonpiv}
    )
    relbasis = SparseMatrix(
        ambient_dim,
        len(rrows),
        f,
        {(c, k): v for k, row in enumerate(rrows) for c, v in row.items()},
    )
    return SubquotientSpace(projection, section, "kernel", relbasis)


def equalizer(f, g):
    """Equalizer of two parallel maps: ker(f - g) as a subspace of the domain."""
    if (f.rows, f.cols) != (g.rows, g.cols):
        raise ShapeMismatch("equalizer of maps with different shapes")
    return kernel(f - g)


def coequalizer(f, g):
    """Coequalizer of two parallel maps: codomain / im(f - g)."""
    if (f.rows, f.cols) != (g.rows, g.cols):
        raise ShapeMismatch("coequalizer of maps with different shapes")
    return quotient_by_columns(f.rows, f - g)


def homology_space(out_map, in_map):
    """ker(out_map) / im(in_map) as a subquotient of the middle space.

    Raises NotWellDefined unless im(in_map) really sits inside ker(out_map),
    i.e. unless out_map @ in_map = 0.
    """
    if not (out_map @ in_map).is_zero_matrix():
        raise NotWellDefined("not a complex: composite of differentials is nonzero")
    z = kernel(out_map)
    rep = z.projection @ in_map
    if not (z.section @ rep == in_map):
        raise NotWellDefined("boundaries do not lie in the cycle space")
    q = quotient_by_columns(z.dim, rep)
    return z.then(q)


def solve(a, b):
    """A particular solution X of a @ X = b (free variables set to zero)."""
    if a.rows != b.rows:
        raise ShapeMismatch("solve: row mismatch")
    f = a.field
    aug_rows = []
    arows = a.rows_map()
    brows = b.rows_map()
    for i in range(a.rows):
        r = dict(arows.get(i, {}))
        for j, v in brows.get(i, {}).items():
            r[a.cols + j] = v
        if r:
            aug_rows.append(r)
    pivcols, rrows = _rref_rows(aug_rows, a.cols + b.cols, f)
    data = {}
    for pc, row in zip(pivcols, rrows):
        if pc >= a.cols:
            raise Inconsistent("solve: system has no solution")
        for c, v in row.items():
            if c >= a.cols:
                data[(pc, c - a.cols)] = v
    return SparseMatrix(a.cols, b.cols, f, data)


def inverse(a):
    if a.rows != a.cols:
        raise ShapeMismatch("inverse of non-square matrix")
    if a.rank() != a.rows:
        raise Inconsistent("matrix is singular")
    return solve(a, SparseMatrix.identity(a.rows, a.field))


# ---------------------------------------------------------------------------
# tensor index conventions


def tensor_index(dims, multi):
    """Flatten a multi-index, row-major with the left factor slowest."""
    idx = 0
    for d, i in zip(dims, multi):
        if not 0 <= i < d:
            raise IndexError("component out of range")
        idx = idx * d + i
    return idx

def tensor_unindex(dims, idx):
    """Inverse of tensor_index."""
    multi = []
    for d in reversed(dims):
        multi.append(idx % d)
        idx //= d
    if idx:
        raise IndexError("flat index out of range")
    return tuple(reversed(multi))


def tensor_dim(dims):
    n = 1
    for d in dims:
        n *= d
    return n


def apply_on_leg(op, dims, pos, arity=1, out_dims=None):
    """id (x) op (x) id acting on legs [pos, pos+arity) of a tensor product.

    ``op`` maps the tensor product of dims[pos:pos+arity] into a space of
    dimension op.rows, interpreted as the product of ``out_dims`` (one leg
    of dimension op.rows if omitted).  Returns the assembled sparse matrix.
    """
    f = op.field
    left = tensor_dim(dims[:pos])
    mid_in = tensor_dim(dims[pos : pos + arity])
    right = tensor_dim(dims[pos + arity :])
    if op.cols != mid_in:
        raise ShapeMismatch("operator arity does not match leg dims")
    mid_out = op.rows
    data = {}
    for (r, c), v in op.data.items():
        for lft in range(left):
            base_r = (lft * mid_out + r) * right
            base_c = (lft * mid_in + c) * right
            for rgt in range(right):
                data[(base_r + rgt, base_c + rgt)] = v
    return SparseMatrix(left * mid_out * right, left * mid_in * right, f, data)


def permutation_matrix(dims, perm, field):
    """Permutation of tensor legs; target tuple j is source tuple (t[perm[k]])_k."""
    if sorted(perm) != list(range(len(dims))):
        raise ShapeMismatch("not a permutation of legs")
    out_dims = [dims[p] for p in perm]
    n = tensor_dim(dims)
    data = {}
    for idx in range(n):
        t = tensor_unindex(dims, idx)
        data[(tensor_index(out_dims, tuple(t[p] for p in perm)), idx)] = field.one
    return SparseMatrix(n, n, field, data)
