"""Exact dense linear algebra: ranks, characteristic polynomials, unipotent
log/exp, moduli relation checks, Jacobian ranks and tangent orbit dimensions."""

from fractions import Fraction

from .ring import (RingError, RingContext, MonomialOrder, FieldSpec,
                   Polynomial, _rank)

__all__ = [
    "ExactMatrix", "MatrixTuple", "ActionSpec", "rank", "char_poly",
    "is_banal", "matrix_log", "matrix_exp", "check_point_relations",
    "jacobian_rank_at", "orbit_dimension_at",
]


class ExactMatrix:
    """Rectangular matrix with entries in an exact field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise RingError("matrix must have positive dimensions")
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise RingError("ragged matrix rows")
        self.field = field
        self.rows = len(entries)
        self.cols = cols
        self.entries = [[field.coerce(v) for v in row] for row in entries]

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)]
                           for i in range(n)])

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.entries == other.entries)

    def __repr__(self):
        return "ExactMatrix(%r)" % (self.entries,)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise RingError("matrix shape mismatch")

    def __add__(self, other):
        self._same_shape(other)
        f = self.field
        return ExactMatrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        f = self.field
        return ExactMatrix(f, [[f.sub(a, b) for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.entries, other.entries)])

    def __mul__(self, other):
        f = self.field
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise RingError("matrix shape mismatch in product")
            out = []
            for i in range(self.rows):
                row = []
                for j in range(other.cols):
                    acc = f.zero()
                    for k in range(self.cols):
                        acc = f.add(acc, f.mul(self.entries[i][k],
                                               other.entries[k][j]))
                    row.append(acc)
                out.append(row)
            return ExactMatrix(f, out)
        c = f.coerce(other)
        return ExactMatrix(f, [[f.mul(v, c) for v in row]
                               for row in self.entries])

    __rmul__ = __mul__

    def is_zero(self):
        return all(not v for row in self.entries for v in row)

    def transpose(self):
        return ExactMatrix(self.field,
                           [[self.entries[i][j] for i in range(self.rows)]
                            for j in range(self.cols)])

    def power(self, k):
        if self.rows != self.cols:
            raise RingError("power of a non-square matrix")
        out = ExactMatrix.identity(self.field, self.rows)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self):
        if self.rows != self.cols:
            raise RingError("inverse of a non-square matrix")
        f, n = self.field, self.rows
        aug = [list(row) + [f.one() if i == j else f.zero()
                            for j in range(n)]
               for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot is None:
                raise RingError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = f.inv(aug[col][col])
            aug[col] = [f.mul(inv, v) for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    factor = aug[r][col]
                    aug[r] = [f.sub(v, f.mul(factor, w))
                              for v, w in zip(aug[r], aug[col])]
        return ExactMatrix(f, [row[n:] for row in aug])


class MatrixTuple:
    """A point (X_1, N_1, ..., N_{k-1}, X_k) with block sizes from a shape."""

    __slots__ = ("shape", "diagonal_blocks", "off_blocks")

    def __init__(self, shape, diagonal_blocks, off_blocks):
        shape = tuple(shape)
        if len(diagonal_blocks) != len(shape):
            raise RingError("wrong number of diagonal blocks")
        if len(off_blocks) != len(shape) - 1:
            raise RingError("wrong number of off-diagonal blocks")
        for n, X in zip(shape, diagonal_blocks):
            if X.rows != n or X.cols != n:
                raise RingError("diagonal block shape mismatch")
        for i, N in enumerate(off_blocks):
            if N.rows != shape[i] or N.cols != shape[i + 1]:
                raise RingError("off-diagonal block shape mismatch")
        self.shape = shape
        self.diagonal_blocks = list(diagonal_blocks)
        self.off_blocks = list(off_blocks)


def rank(M):
    return _rank(M.entries, M.field)


def _poly_ring_t(field):
    return RingContext(("t",), field, MonomialOrder("grevlex", ("t",)))


def char_poly(M, tname="t"):
    """det(tI - M) as a monic Polynomial in a one-variable ring."""
    if M.rows != M.cols:
        raise RingError("characteristic polynomial of a non-square matrix")
    ctx = RingContext((tname,), M.field, MonomialOrder("grevlex", (tname,)))
    t = ctx.var(tname)
    n = M.rows
    mat = [[(t if i == j else ctx.zero()) - ctx.constant(M.entries[i][j])
            for j in range(n)] for i in range(n)]

    def det(rows_idx, cols_idx):
        if len(rows_idx) == 1:
            return mat[rows_idx[0]][cols_idx[0]]
        i = rows_idx[0]
        total = ctx.zero()
        for pos, j in enumerate(cols_idx):
            entry = mat[i][j]
            if entry.is_zero():
                continue
            sub = det(rows_idx[1:], cols_idx[:pos] + cols_idx[pos + 1:])
            term = entry * sub
            total = total + (term if pos % 2 == 0 else -term)
        return total

    idx = tuple(range(n))
    return det(idx, idx)


def is_banal(q, ell, n):
    """q nonzero mod ell and q^i != 1 mod ell for i = 1..n."""
    if n < 1:
        raise RingError("n must be >= 1")
    from .ring import _is_prime
    if not _is_prime(ell):
        raise RingError("ell must be prime")
    if q % ell == 0:
        return False
    return all(pow(q, i, ell) != 1 for i in range(1, n + 1))


def _check_series_characteristic(field, n):
    p = field.characteristic
    if p and p <= n:
        raise RingError("matrix log/exp needs characteristic 0 or > n")


def matrix_log(U):
    """log of a unipotent matrix: sum (-1)^(k-1) (U-I)^k / k, k = 1..n."""
    if U.rows != U.cols:
        raise RingError("log of a non-square matrix")
    f, n = U.field, U.rows
    _check_series_characteristic(f, n)
    N = U - ExactMatrix.identity(f, n)
    if not N.power(n).is_zero():
        raise RingError("matrix is not unipotent")
    out = ExactMatrix.zeros(f, n, n)
    term = ExactMatrix.identity(f, n)
    for k in range(1, n + 1):
        term = term * N
        coeff = f.div(f.one() if k % 2 else f.neg(f.one()),
                      f.coerce(k))
        out = out + term * coeff
    return out


def matrix_exp(N):
    """exp of a nilpotent matrix: sum N^k / k!, k = 0..n."""
    if N.rows != N.cols:
        raise RingError("exp of a non-square matrix")
    f, n = N.field, N.rows
    _check_series_characteristic(f, n)
    if not N.power(n).is_zero():
        raise RingError("matrix is not nilpotent")
    out = ExactMatrix.identity(f, n)
    term = ExactMatrix.identity(f, n)
    fact = 1
    for k in range(1, n + 1):
        term = term * N
        fact *= k
        out = out + term * f.inv(f.coerce(fact))
    return out


def check_point_relations(point, relation, q=None):
    """Exact check of a moduli relation.

    phi_sigma_q: point = (Phi, Sigma), Phi Sigma Phi^-1 = Sigma^q.
    phi_n_q:     point = (Phi, N),     Phi N = q N Phi.
    chain:       point = MatrixTuple,  X_i N_i = N_i X_{i+1}.
    """
    if relation == "chain":
        pt = point
        for i, N in enumerate(pt.off_blocks):
            lhs = pt.diagonal_blocks[i] * N
            rhs = N * pt.diagonal_blocks[i + 1]
            if lhs != rhs:
                return False
        return True
    if relation == "phi_n_q":
        Phi, N = point
        if q is None:
            raise RingError("relation phi_n_q needs q")
        return Phi * N == (N * Phi) * q
    if relation == "phi_sigma_q":
        Phi, Sigma = point
        if q is None:
            raise RingError("relation phi_sigma_q needs q")
        if q < 0:
            raise RingError("q must be nonnegative")
        return (Phi * Sigma) * Phi.inverse() == Sigma.power(q)
    raise RingError("unknown relation %r" % (relation,))


def jacobian_rank_at(gens, point):
    """Rank of the matrix of formal partials evaluated at the point."""
    gens = list(gens)
    if not gens:
        return 0
    ctx = gens[0].ctx
    if len(point) != len(ctx.variables):
        raise RingError("point length does not match variable count")
    field = ctx.field
    rows = []
    for name in ctx.variables:
        rows.append([g.derivative(name).evaluate(point) for g in gens])
    return _rank(rows, field)


def jacobian_matrix_at(gens, point):
    gens = list(gens)
    ctx = gens[0].ctx
    field = ctx.field
    return ExactMatrix(field,
                       [[g.derivative(name).evaluate(point) for g in gens]
                        for name in ctx.variables])


class ActionSpec:
    """A linear-algebraic group action given by its Lie-algebra directions.

    `group_dim` is the dimension of the group; `infinitesimal(b, point)`
    returns the tangent vector (list of field elements, in the coordinate
    order of the moduli space) of the b-th Lie-algebra basis direction.
    """

    __slots__ = ("group_dim", "infinitesimal", "field")

    def __init__(self, group_dim, infinitesimal, field):
        self.group_dim = group_dim
        self.infinitesimal = infinitesimal
        self.field = field


def orbit_dimension_at(action, point):
    """dim(group) - nullity of the linearized action at the identity."""
    if action.field.kind != "rationals":
        raise RingError("orbit dimension is computed over the rationals only")
    rows = [action.infinitesimal(b, point) for b in range(action.group_dim)]
    r = _rank(rows, action.field)
    return r
