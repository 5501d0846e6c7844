"""Combinatorics of nilpotent chain strata: the index set of rank tuples,
the consecutive-product rank invariant, Jordan-type classification, counting
formulas, representative points and brute-force orbit censuses over F_q."""

from fractions import Fraction
from itertools import product
from math import factorial

from .ring import RingError, FieldSpec, _rank, _is_prime
from .matalg import ExactMatrix

__all__ = [
    "StratumIndex", "JordanType", "enumerate_strata", "delta_invariant",
    "stratum_type", "count_type", "representative_point", "orbit_census",
    "eta_jordan_type",
]


def _check_shape(shape):
    shape = tuple(int(n) for n in shape)
    if not shape or any(n < 1 for n in shape):
        raise RingError("shape must be a nonempty tuple of positive integers")
    return shape


class StratumIndex:
    """Lower-triangular rank tuple (d_ij), 1 <= j <= k-i, for a shape
    (n_1,...,n_k); d_0j = n_j implicitly.  Printed the way the tables group
    it: rows separated by semicolons, e.g. "(1,1;0)"."""

    __slots__ = ("shape", "rows")

    def __init__(self, shape, rows):
        self.shape = _check_shape(shape)
        k = len(self.shape)
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if len(rows) != k - 1 or any(len(rows[i]) != k - 1 - i
                                     for i in range(k - 1)):
            raise RingError("stratum rows do not match the shape")
        self.rows = rows
        for i in range(1, k):
            for j in range(1, k - i + 1):
                v = self.d(i, j)
                if v < 0 or v > min(self.d(i - 1, j), self.d(i - 1, j + 1)):
                    raise RingError("rank tuple violates the min bound "
                                    "at (%d,%d)" % (i, j))
        for i in range(1, k):
            for j in range(1, k - i):
                if (self.d(i, j) + self.d(i, j + 1)
                        > self.d(i + 1, j) + self.d(i - 1, j + 1)):
                    raise RingError("rank tuple violates submodularity "
                                    "at (%d,%d)" % (i, j))

    def d(self, i, j):
        """d_ij with the boundary convention d_0j = n_j."""
        if i == 0:
            return self.shape[j - 1]
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        return (isinstance(other, StratumIndex) and self.shape == other.shape
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return "(%s)" % ";".join(",".join(str(v) for v in row)
                                 for row in self.rows) if self.rows else "()"

    __str__ = __repr__


class JordanType:
    """Partition of n by decreasing parts; parts[a] is a Jordan block size."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(sorted((int(m) for m in parts), reverse=True))
        if any(m < 1 for m in parts):
            raise RingError("Jordan block sizes must be positive")
        self.parts = parts

    @property
    def n(self):
        return sum(self.parts)

    def multiplicities(self):
        out = {}
        for m in self.parts:
            out[m] = out.get(m, 0) + 1
        return out

    def __eq__(self, other):
        return isinstance(other, JordanType) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "(%s)" % ",".join(str(m) for m in self.parts)


def enumerate_strata(shape):
    """All valid rank tuples for the shape, generated row by row."""
    shape = _check_shape(shape)
    k = len(shape)
    out = set()

    def extend(rows):
        i = len(rows) + 1          # the row being generated
        if i == k:
            out.add(StratumIndex(shape, rows))
            return
        prev = rows[-1] if rows else shape

        def entry_range(j):
            hi = min(prev[j - 1], prev[j])
            return range(hi + 1)

        for row in product(*[entry_range(j) for j in range(1, k - i + 1)]):
            # submodularity for row i-1 is only checkable once row i exists
            if rows:
                above = shape if len(rows) == 1 else rows[-2]
                ok = all(prev[j - 1] + prev[j] <= row[j - 1] + above[j]
                         for j in range(1, k - i + 1))
                if not ok:
                    continue
            extend(rows + (row,))

    extend(())
    return out


def _entry_rows(M):
    if isinstance(M, ExactMatrix):
        return [list(r) for r in M.entries]
    rows = [list(r) for r in M]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise RingError("ragged matrix")
    return rows


def _mat_rank(rows, modulus):
    if modulus is None:
        field = FieldSpec("rationals")
        return _rank([[Fraction(v) for v in r] for r in rows], field)
    rows = [[v % modulus for v in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    rows = [r for r in rows]
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, modulus)
        rows[rank] = [(v * inv) % modulus for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % modulus
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _mat_mul(A, B, modulus):
    rows, inner, cols = len(A), len(B), len(B[0])
    if len(A[0]) != inner:
        raise RingError("matrix shape mismatch in product")
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            v = sum(A[i][t] * B[t][j] for t in range(inner))
            row.append(v % modulus if modulus is not None else v)
        out.append(row)
    return out


def _coerce_tuple(mats, shape, modulus):
    """Normalize a chain tuple to plain row lists + an effective modulus."""
    shape = _check_shape(shape)
    if len(mats) != len(shape) - 1:
        raise RingError("expected %d matrices for the shape"
                        % (len(shape) - 1))
    if modulus is None:
        for M in mats:
            if isinstance(M, ExactMatrix) and M.field.kind == "prime_field":
                modulus = M.field.modulus
                break
    rows_list = [_entry_rows(M) for M in mats]
    for j, rows in enumerate(rows_list):
        if len(rows) != shape[j] or len(rows[0]) != shape[j + 1]:
            raise RingError("matrix %d has the wrong shape" % (j + 1,))
    return shape, rows_list, modulus


def delta_invariant(mats, shape, modulus=None):
    """d_ij = rank(N_j N_{j+1} ... N_{i+j-1}), assembled as a StratumIndex.

    Accepts ExactMatrix values or plain row lists; pass `modulus` to work
    over F_p with integer entries (needed for the F_2 censuses).
    """
    shape, rows_list, modulus = _coerce_tuple(mats, shape, modulus)
    k = len(shape)
    rows = []
    # products[j] = N_{j+1} ... N_{j+i} built up one factor at a time
    products = list(rows_list)
    for i in range(1, k):
        rows.append(tuple(_mat_rank(products[j], modulus)
                          for j in range(k - i)))
        products = [_mat_mul(products[j], rows_list[j + i], modulus)
                    for j in range(k - i - 1)]
    return StratumIndex(shape, rows)


def stratum_type(P, shape=None):
    """The Jordan type whose truncated rank sums match the row sums of P."""
    if shape is not None and _check_shape(shape) != P.shape:
        raise RingError("shape does not match the stratum index")
    k = len(P.shape)
    n = sum(P.shape)
    r = [n] + [sum(row) for row in P.rows]        # r_i for i = 0..k-1
    r += [0] * (n + 1 - len(r))
    e = [r[i - 1] - r[i] for i in range(1, n + 1)]  # e_i = #{parts >= i}
    parts = []
    for a in range(1, n + 1):
        m = sum(1 for v in e if v >= a)
        if m == 0:
            break
        parts.extend([0] * 0)
        parts.append(m)
    # conjugate of e: part sizes
    return JordanType(parts)


def count_type(shape, jtype):
    """|{P in the index set of the shape : stratum_type(P) = jtype}|.

    For shape (1,...,1) the multinomial closed form c!/(c_1!...c_n!) is
    computed as a cross-check and must agree.
    """
    shape = _check_shape(shape)
    if not isinstance(jtype, JordanType):
        jtype = JordanType(jtype)
    if sum(shape) != jtype.n:
        raise RingError("shape and type partition different integers")
    count = sum(1 for P in enumerate_strata(shape)
                if stratum_type(P) == jtype)
    if all(n == 1 for n in shape):
        c = len(jtype.parts)
        closed = factorial(c)
        for mult in jtype.multiplicities().values():
            closed //= factorial(mult)
        assert count == closed, (shape, jtype, count, closed)
    return count


def representative_point(P, shape, field=None):
    """A 0/1-entry chain tuple whose rank invariant is exactly P.

    Decomposes P into interval summands: with F(u,v) = d_{v-u,u} (the rank
    of N_u...N_{v-1}), the multiplicity of the interval [u,v] is
    F(u,v) - F(u-1,v) - F(u,v+1) + F(u-1,v+1), which the submodularity
    constraints make nonnegative.  Each interval instance occupies one
    basis slot at every vertex it covers and the N_j are the induced 0/1
    slot-matching matrices.
    """
    shape = _check_shape(shape)
    if P.shape != shape:
        raise RingError("stratum index does not belong to the shape")
    k = len(shape)

    def F(u, v):
        if u < 1 or v > k or u > v:
            return 0
        return P.d(v - u, u)

    intervals = []      # (u, v) repeated with multiplicity
    for u in range(1, k + 1):
        for v in range(u, k + 1):
            m = F(u, v) - F(u - 1, v) - F(u, v + 1) + F(u - 1, v + 1)
            assert m >= 0, (P, u, v, m)
            intervals.extend([(u, v)] * m)
    slots = [[] for _ in range(k + 1)]  # 1-based vertex -> interval ids
    for idx, (u, v) in enumerate(intervals):
        for w in range(u, v + 1):
            slots[w].append(idx)
    for w in range(1, k + 1):
        assert len(slots[w]) == shape[w - 1], (P, w)
    out = []
    for j in range(1, k):
        rows = [[0] * shape[j] for _ in range(shape[j - 1])]
        col = {idx: c for c, idx in enumerate(slots[j + 1])}
        for r, idx in enumerate(slots[j]):
            if idx in col:
                rows[r][col[idx]] = 1
        out.append(rows)
    if field is not None:
        out = [ExactMatrix(field, rows) for rows in out]
    return out


def eta_jordan_type(mats, shape, modulus=None):
    """Jordan type of the strictly-upper block matrix built from the tuple."""
    shape, rows_list, modulus = _coerce_tuple(mats, shape, modulus)
    n = sum(shape)
    offsets = [0]
    for p in shape:
        offsets.append(offsets[-1] + p)
    eta = [[0] * n for _ in range(n)]
    for j, rows in enumerate(rows_list):
        for a in range(shape[j]):
            for b in range(shape[j + 1]):
                eta[offsets[j] + a][offsets[j + 1] + b] = rows[a][b]
    ranks = [n]
    power = eta
    while _mat_rank(power, modulus):
        ranks.append(_mat_rank(power, modulus))
        power = _mat_mul(power, eta, modulus)
    ranks.append(0)
    e = [ranks[i - 1] - ranks[i] for i in range(1, len(ranks))]
    parts = []
    for a in range(1, n + 1):
        m = sum(1 for v in e if v >= a)
        if m == 0:
            break
        parts.append(m)
    return JordanType(parts)


def eta_matrix(mats, shape, field):
    """The assembled block matrix as an ExactMatrix (field char must fit)."""
    shape, rows_list, _ = _coerce_tuple(mats, shape, None)
    n = sum(shape)
    offsets = [0]
    for p in shape:
        offsets.append(offsets[-1] + p)
    eta = [[0] * n for _ in range(n)]
    for j, rows in enumerate(rows_list):
        for a in range(shape[j]):
            for b in range(shape[j + 1]):
                eta[offsets[j] + a][offsets[j + 1] + b] = rows[a][b]
    return ExactMatrix(field, eta)


def _gl_generators(n, q):
    """Generator/inverse pairs for GL_n(F_q): unit transvections and one
    primitive-root scaling (omitted over F_2 where it is the identity)."""
    def ident():
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    gens = []
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            g = ident()
            g[a][b] = 1
            ginv = ident()
            ginv[a][b] = (-1) % q
            gens.append((g, ginv))
    if q > 2:
        r = _primitive_root(q)
        g = ident()
        g[0][0] = r
        ginv = ident()
        ginv[0][0] = pow(r, -1, q)
        gens.append((g, ginv))
    return gens


def _primitive_root(q):
    order = q - 1
    primes = set()
    m, f = order, 2
    while f * f <= m:
        while m % f == 0:
            primes.add(f)
            m //= f
        f += 1
    if m > 1:
        primes.add(m)
    for r in range(2, q):
        if all(pow(r, order // p, q) != 1 for p in primes):
            return r
    raise RingError("no primitive root found (q not prime?)")


def orbit_census(shape, q, budget=10 ** 6):
    """Exhaustive orbit census of the chain-tuple space over F_q under the
    block-group action g.(N_j) = (g_j N_j g_{j+1}^{-1}).

    Returns {"orbit_count", "fibers", "matches_delta"}; fibers maps each
    rank tuple (as a string) to its point count.  Orbits are computed by
    union-find over generator moves.
    """
    shape = _check_shape(shape)
    if not _is_prime(q):
        raise RingError("census field size must be prime")
    k = len(shape)
    cells = sum(shape[i] * shape[i + 1] for i in range(k - 1))
    total = q ** cells
    if total > budget:
        raise RingError("census would enumerate %d points "
                        "(budget %d)" % (total, budget))

    dims = [(shape[i], shape[i + 1]) for i in range(k - 1)]

    def decode(code):
        mats = []
        for r, c in dims:
            rows = []
            for _ in range(r):
                row = []
                for _ in range(c):
                    row.append(code % q)
                    code //= q
                rows.append(row)
            mats.append(rows)
        return mats

    def encode(mats):
        code = 0
        mult = 1
        for rows in mats:
            for row in rows:
                for v in row:
                    code += (v % q) * mult
                    mult *= q
        return code

    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    block_gens = [_gl_generators(n, q) for n in shape]
    for code in range(total):
        mats = decode(code)
        for i in range(k):
            for g, ginv in block_gens[i]:
                new = [rows for rows in mats]
                if i < k - 1:
                    new[i] = _mat_mul(g, new[i], q)
                if i > 0:
                    new[i - 1] = _mat_mul(new[i - 1], ginv, q)
                union(code, encode(new))

    orbits = {}
    fibers = {}
    agree = True
    for code in range(total):
        root = find(code)
        key = str(delta_invariant(decode(code), shape, modulus=q))
        fibers[key] = fibers.get(key, 0) + 1
        if root in orbits:
            if orbits[root] != key:
                agree = False
        else:
            if key in set(orbits.values()):
                agree = False
            orbits[root] = key
    return {
        "orbit_count": len(orbits),
        "fibers": fibers,
        "matches_delta": agree and len(orbits) == len(fibers),
    }
