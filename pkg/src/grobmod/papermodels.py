"""Concrete model ideals, representative points, group actions, the full
reproduction suite, and the banal local-ring classifier.

Model names: R22 / R121 are the two quadric chain models, S22 / S121 their
small presentations after the regular-sequence reduction, R22_final /
R121_final the terminal Artinian quotients, K_intersection the elimination
ideal used for the product-ideal lemma, N_tilde(n, q) the commuting-up-to-q
relation ideal and N_chain(shape) the block chain relation ideal.
"""

from fractions import Fraction
import time

from .ring import (RingError, RingContext, MonomialOrder, FieldSpec,
                   Polynomial)
from .groebner import (Ideal, GroebnerBasis, s_polynomial, verify_buchberger,
                       buchberger_complete, groebner_basis_from_verified,
                       initial_ideal, ideal_member, intersect_ideals,
                       regular_sequence_tail, krull_dimension,
                       artinian_analysis, minimal_generator_count,
                       localized_dimension, GroebnerCertificate)
from .matalg import ActionSpec, orbit_dimension_at, jacobian_rank_at, is_banal
from .strata import JordanType, count_type

__all__ = [
    "ModelSpec", "EigenvalueData", "ShapeReport", "build_model_ideal",
    "paper_points", "run_paper_suite", "classify_banal_local_ring",
    "r22_action", "r121_action", "expected_orbit_dimensions",
    "expected_certificate_shape", "dimension_chain",
]


class ModelSpec:
    """Names one of the fixed model ideals together with its parameters."""

    NAMES = ("R22", "R121", "S22", "S121", "R22_final", "R121_final",
             "K_intersection", "N_tilde", "N_chain")

    __slots__ = ("name", "field", "n", "q", "shape")

    def __init__(self, name, field, n=None, q=None, shape=None):
        if name not in self.NAMES:
            raise RingError("unknown model name %r" % (name,))
        if name == "N_tilde" and (n is None or q is None):
            raise RingError("N_tilde needs n and q")
        if name == "N_chain" and shape is None:
            raise RingError("N_chain needs a shape")
        self.name = name
        self.field = field
        self.n = n
        self.q = q
        self.shape = tuple(shape) if shape is not None else None


# -- ring contexts ------------------------------------------------------------

def r22_context(field):
    return RingContext.grevlex(
        ("X", "Y", "Z", "A", "D", "B", "C", "S", "T", "U"), field)


def r121_context(field):
    return RingContext.grevlex(
        ("X", "Y", "Z", "A", "C", "B", "D", "R"), field)


def s_context(field):
    return RingContext.grevlex(("X", "Y", "Z", "alpha", "beta"), field)


def xyz_context(field):
    return RingContext.grevlex(("X", "Y", "Z"), field)


R22_GENS = [
    "X*A + Z*B - A*S - C*T",
    "Y*A - X*B - B*S - D*T",
    "Z*D + X*C + C*S - A*U",
    "X*D - Y*C - D*S + B*U",
    "X^2 + Y*Z - S^2 - T*U",
]

S22_GENS = [
    "X*(Y + alpha)",
    "Y*(Y + alpha)",
    "X*(Z + beta)",
    "Z*(Z + beta)",
    "X^2 + Y*Z",
]

R22_FINAL_GENS = ["X*Y", "Y^2", "X*Z", "Z^2", "X^2 + Y*Z"]

R121_GENS = [
    "X*A + Z*B - A*R",
    "Y*A - X*B - B*R",
    "X*C + Y*D + C*R",
    "Z*C - X*D + D*R",
    "X^2 + Y*Z - R^2",
    "A*C + B*D",
]

S121_GENS = [
    "X*(Y + alpha)",
    "Y*(Y + alpha)",
    "X*(Z + beta)",
    "Z*(Z + beta)",
    "(Y + alpha)*(Z + beta)",
    "X^2 + Y*Z",
]

R121_FINAL_GENS = ["X^2", "Y^2", "Z^2", "X*Y", "X*Z", "Y*Z"]


def _parse_all(ctx, texts):
    return [ctx.parse(t) for t in texts]


def _matrix_of_vars(ctx, names):
    return [[ctx.var(v) for v in row] for row in names]


def _poly_matmul(A, B, ctx):
    out = []
    for i in range(len(A)):
        row = []
        for j in range(len(B[0])):
            acc = ctx.zero()
            for k in range(len(B)):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def build_model_ideal(spec):
    field = spec.field
    name = spec.name
    if name == "R22":
        ctx = r22_context(field)
        return Ideal(ctx, _parse_all(ctx, R22_GENS))
    if name == "S22":
        ctx = s_context(field)
        return Ideal(ctx, _parse_all(ctx, S22_GENS))
    if name == "R22_final":
        ctx = xyz_context(field)
        return Ideal(ctx, _parse_all(ctx, R22_FINAL_GENS))
    if name == "R121":
        ctx = r121_context(field)
        return Ideal(ctx, _parse_all(ctx, R121_GENS))
    if name == "S121":
        ctx = s_context(field)
        return Ideal(ctx, _parse_all(ctx, S121_GENS))
    if name == "R121_final":
        ctx = xyz_context(field)
        return Ideal(ctx, _parse_all(ctx, R121_FINAL_GENS))
    if name == "K_intersection":
        base = r121_context(field)
        evars = ("t",) + base.variables
        ectx = RingContext(evars, field,
                           MonomialOrder("grevlex_t", evars, t_variable="t"))
        g = [ctxpoly.map_to(ectx)
             for ctxpoly in _parse_all(base, R121_GENS[:5])]
        t = ectx.var("t")
        gens = g + [t * ectx.var("A"), t * ectx.var("B"),
                    t * ectx.var("C") - ectx.var("C"),
                    t * ectx.var("D") - ectx.var("D")]
        return Ideal(ectx, gens)
    if name == "N_tilde":
        n, q = spec.n, spec.q
        pvars = ["P%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)]
        nvars = ["N%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)]
        ctx = RingContext.grevlex(tuple(pvars + nvars), field)
        P = [[ctx.var("P%d%d" % (i + 1, j + 1)) for j in range(n)]
             for i in range(n)]
        N = [[ctx.var("N%d%d" % (i + 1, j + 1)) for j in range(n)]
             for i in range(n)]
        PN = _poly_matmul(P, N, ctx)
        NP = _poly_matmul(N, P, ctx)
        gens = [PN[i][j] - NP[i][j] * q for i in range(n) for j in range(n)]
        return Ideal(ctx, [g for g in gens if not g.is_zero()])
    if name == "N_chain":
        shape = spec.shape
        k = len(shape)
        names = []
        for i, ni in enumerate(shape):
            names += ["X%d_%d%d" % (i + 1, a + 1, b + 1)
                      for a in range(ni) for b in range(ni)]
        for i in range(k - 1):
            names += ["N%d_%d%d" % (i + 1, a + 1, b + 1)
                      for a in range(shape[i]) for b in range(shape[i + 1])]
        ctx = RingContext.grevlex(tuple(names), field)

        def block(prefix, r, c):
            return [[ctx.var("%s_%d%d" % (prefix, a + 1, b + 1))
                     for b in range(c)] for a in range(r)]

        gens = []
        for i in range(k - 1):
            Xi = block("X%d" % (i + 1), shape[i], shape[i])
            Ni = block("N%d" % (i + 1), shape[i], shape[i + 1])
            Xn = block("X%d" % (i + 2), shape[i + 1], shape[i + 1])
            lhs = _poly_matmul(Xi, Ni, ctx)
            rhs = _poly_matmul(Ni, Xn, ctx)
            gens += [lhs[a][b] - rhs[a][b]
                     for a in range(shape[i]) for b in range(shape[i + 1])]
        return Ideal(ctx, [g for g in gens if not g.is_zero()])
    raise RingError("unknown model name %r" % (name,))


def n_tilde_det(ideal, n):
    """det of the generic P block of an N_tilde ideal (cofactor expansion)."""
    ctx = ideal.ctx
    P = [[ctx.var("P%d%d" % (i + 1, j + 1)) for j in range(n)]
         for i in range(n)]

    def det(rows, cols):
        if len(rows) == 1:
            return P[rows[0]][cols[0]]
        total = ctx.zero()
        for pos, j in enumerate(cols):
            term = P[rows[0]][j] * det(rows[1:], cols[:pos] + cols[pos + 1:])
            total = total + (term if pos % 2 == 0 else -term)
        return total

    idx = tuple(range(n))
    return det(idx, idx)


# -- expected certificate structure (1-based generator indices) ---------------

EXPECTED = {
    "R22": {
        "skips": [(1, 3), (2, 3), (2, 4), (2, 5), (3, 5)],
        "witnesses": {
            (1, 2): {2: "-S", 4: "T", 5: "B"},
            (1, 4): {2: "C", 3: "B"},
            (1, 5): {1: "-S", 2: "-Z", 3: "-T"},
            (3, 4): {1: "-U", 3: "S", 5: "C"},
            (4, 5): {2: "-U", 3: "-Y", 4: "-S"},
        },
    },
    "S22": {
        "skips": [(1, 4), (2, 3), (2, 4), (2, 5), (4, 5)],
        "witnesses": {
            (1, 2): {},
            (1, 3): {1: "-beta", 3: "alpha"},
            (1, 5): {2: "-Z", 5: "alpha"},
            (3, 4): {},
            (3, 5): {4: "-Y", 5: "beta"},
        },
    },
    "R121": {
        "skips": [(1, 4), (2, 3), (2, 4), (2, 5), (4, 5), (5, 6)],
        "witnesses": {
            (1, 2): {2: "-R", 5: "B"},
            (1, 3): {2: "-D", 4: "B", 6: "-2*R"},
            (1, 5): {1: "-R", 2: "-Z"},
            (1, 6): {4: "B", 6: "-R"},
            (2, 6): {3: "-B"},
            (3, 4): {4: "R", 5: "D"},
            (3, 5): {3: "R", 4: "-Y"},
            (3, 6): {2: "D", 6: "R"},
            (4, 6): {1: "-D"},
        },
    },
    "S121": {
        "skips": [(1, 4), (2, 3), (2, 4), (2, 6), (4, 6), (5, 6)],
        "witnesses": {
            (1, 2): {},
            (1, 3): {1: "-beta", 3: "alpha"},
            (1, 5): {1: "-beta"},
            (1, 6): {2: "-Z", 6: "alpha"},
            (2, 5): {2: "-beta"},
            (3, 4): {},
            (3, 5): {3: "-alpha"},
            (3, 6): {4: "-Y", 6: "beta"},
            (4, 5): {4: "-alpha"},
        },
    },
}


def expected_certificate_shape(model):
    return EXPECTED[model]


def certificate_matches_expected(cert, ctx, model):
    """True iff skips and witness quotients equal the recorded identities."""
    exp = EXPECTED[model]
    skips0 = sorted((i - 1, j - 1) for i, j in exp["skips"])
    if cert.coprime_pairs() != skips0:
        return False
    n = len(cert.generators)
    for (i, j), qmap in exp["witnesses"].items():
        quotients = cert.witness(i - 1, j - 1)
        for s in range(n):
            want = ctx.parse(qmap.get(s + 1, "0"))
            if quotients[s] != want:
                return False
    return True


# -- representative points ----------------------------------------------------

def _vector(ctx, coords):
    field = ctx.field
    return tuple(field.coerce(coords.get(v, 0)) for v in ctx.variables)


def paper_points(model, field=None):
    """Labeled coordinate vectors of the printed orbit representatives."""
    field = field or FieldSpec.rationals()
    if model == "R22":
        ctx = r22_context(field)
        pts = [
            ("x", {"S": 1, "A": 1, "D": 1, "X": 1}),
            ("x_0", {"A": 1, "D": 1}),
            ("x_1", {"T": 1, "A": 1, "D": 1, "Y": 1}),
            ("y", {"S": 1, "A": 1, "X": 1}),
            ("y_00", {"B": 1}),
            ("y_01", {"B": 1, "Y": 1}),
            ("y_10", {"T": 1, "B": 1}),
            ("y_11", {"T": 1, "B": 1, "Y": 1}),
            ("z", {"S": 1, "X": 1}),
            ("z_00", {}),
            ("z_01", {"Y": 1}),
            ("z_10", {"T": 1}),
            ("z_11", {"T": 1, "Y": 1}),
        ]
    elif model == "R121":
        ctx = r121_context(field)
        pts = [
            ("x_00", {"R": 1, "X": 1}),
            ("x_01", {"R": 1, "X": 1, "D": 1}),
            ("x_10", {"R": 1, "X": 1, "A": 1}),
            ("x_11", {"R": 1, "X": 1, "A": 1, "D": 1}),
            ("y_00", {"Y": 1}),
            ("y_01", {"Y": 1, "C": 1}),
            ("y_10", {"Y": 1, "B": 1}),
            ("y_11", {"Y": 1, "B": 1, "C": 1}),
            ("z_00", {}),
            ("z_01", {"D": 1}),
            ("z_10", {"A": 1}),
            ("z_11", {"A": 1, "D": 1}),
        ]
    else:
        raise RingError("no representative points for model %r" % (model,))
    return [(label, _vector(ctx, coords)) for label, coords in pts]


# -- group actions (tangent computation over Q) -------------------------------

def _madd(A, B):
    return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(A, B)]


def _msub(A, B):
    return [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(A, B)]


def _mmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B)))
             for j in range(len(B[0]))] for i in range(len(A))]


def _mscale(A, c):
    return [[c * v for v in row] for row in A]


def _basis2(b):
    E = [[Fraction(0)] * 2 for _ in range(2)]
    E[b // 2][b % 2] = Fraction(1)
    return E


_ZERO2 = [[Fraction(0)] * 2 for _ in range(2)]


def r22_action():
    """(GL2 x GL2 x scaling)-action tangent map; group dimension 9.

    Directions 0-3: xi in gl2, 4-7: eta in gl2, 8: the scaling weight s.
    Point order matches the R22 ring variables (X,Y,Z,A,D,B,C,S,T,U).
    """
    def infinitesimal(b, pt):
        X, Y, Z, A, D, B, C, S, T, U = [Fraction(v) for v in pt]
        MS = [[S, T], [U, -S]]
        MA = [[A, B], [C, D]]
        MX = [[X, Y], [Z, -X]]
        xi = _basis2(b) if b < 4 else _ZERO2
        eta = _basis2(b - 4) if 4 <= b < 8 else _ZERO2
        s = Fraction(1 if b == 8 else 0)
        dMS = _madd(_mscale(MS, s), _msub(_mmul(xi, MS), _mmul(MS, xi)))
        dMA = _msub(_mmul(xi, MA), _mmul(MA, eta))
        dMX = _madd(_mscale(MX, s), _msub(_mmul(eta, MX), _mmul(MX, eta)))
        return [dMX[0][0], dMX[0][1], dMX[1][0],
                dMA[0][0], dMA[1][1], dMA[0][1], dMA[1][0],
                dMS[0][0], dMS[0][1], dMS[1][0]]

    return ActionSpec(9, infinitesimal, FieldSpec.rationals())


def r121_action():
    """(GL2 x three scalings)-action tangent map; group dimension 7.

    Directions 0-3: xi in gl2, 4: rho, 5: sigma, 6: tau.  Point order
    matches the R121 ring variables (X,Y,Z,A,C,B,D,R).
    """
    def infinitesimal(b, pt):
        X, Y, Z, A, C, B, D, R = [Fraction(v) for v in pt]
        M = [[X, Y], [Z, -X]]
        vA = [[A, B]]
        vC = [[C], [D]]
        xi = _basis2(b) if b < 4 else _ZERO2
        rho = Fraction(1 if b == 4 else 0)
        sig = Fraction(1 if b == 5 else 0)
        tau = Fraction(1 if b == 6 else 0)
        dR = rho * R
        dvA = _msub(_mscale(vA, sig), _mmul(vA, xi))
        dM = _madd(_mscale(M, rho), _msub(_mmul(xi, M), _mmul(M, xi)))
        dvC = _madd(_mscale(vC, tau), _mmul(xi, vC))
        return [dM[0][0], dM[0][1], dM[1][0],
                dvA[0][0], dvC[0][0], dvA[0][1], dvC[1][0], dR]

    return ActionSpec(7, infinitesimal, FieldSpec.rationals())


def expected_orbit_dimensions(model):
    if model == "R22":
        return {"x": 7, "x_0": 4, "x_1": 6, "y": 6,
                "y_00": 3, "y_01": 4, "y_10": 4, "y_11": 5,
                "z": 5, "z_00": 0, "z_01": 2, "z_10": 2, "z_11": 4}
    if model == "R121":
        return {"x_00": 3, "x_01": 4, "x_10": 4, "x_11": 5,
                "y_00": 2, "y_01": 3, "y_10": 3, "y_11": 4,
                "z_00": 0, "z_01": 2, "z_10": 2, "z_11": 3}
    raise RingError("no orbit table for model %r" % (model,))


# -- dimension chains ---------------------------------------------------------

def dimension_chain(ideal, extra_gens):
    """Krull dimensions along successive quotients by the listed elements."""
    gens = list(ideal.generators)
    ctx = ideal.ctx
    dims = [krull_dimension(initial_ideal(buchberger_complete(gens)))]
    for extra in extra_gens:
        g = ctx.parse(extra) if isinstance(extra, str) else extra
        gens = gens + [g]
        dims.append(krull_dimension(initial_ideal(buchberger_complete(gens))))
    return dims


R22_CHAIN = ["U", "T", "S", "C", "B", "D - Z", "Y - A"]
R121_CHAIN = ["R", "D", "B", "C - Z", "Y - A"]


# -- classifier ---------------------------------------------------------------

class EigenvalueData:
    """Eigenvalue chains for a banal (q, ell) pair.

    chains: list of (label, shape) where shape = (n_1,...,n_k) are the
    multiplicities along one geometric q-power progression.  Labels are
    opaque; when all labels are integers the q-power separation between
    distinct chains is checked mod ell.
    """

    __slots__ = ("ell", "q", "chains")

    def __init__(self, ell, q, chains):
        chains = [(label, tuple(int(v) for v in shape))
                  for label, shape in chains]
        if not chains:
            raise RingError("at least one eigenvalue chain is required")
        n = sum(sum(shape) for _, shape in chains)
        if any(v < 1 for _, shape in chains for v in shape):
            raise RingError("chain multiplicities must be positive")
        if not is_banal(q, ell, n):
            raise RingError("q = %d is not banal for (ell = %d, n = %d)"
                            % (q, ell, n))
        labels = [label for label, _ in chains]
        if len(set(labels)) != len(labels):
            raise RingError("duplicate chain labels")
        if all(isinstance(lab, int) for lab in labels):
            for a, (la, _) in enumerate(chains):
                for b, (lb, sb) in enumerate(chains):
                    if a == b:
                        continue
                    if any((la - lb * pow(q, i, ell)) % ell == 0
                           for i in range(len(sb) + 1)):
                        raise RingError("chains %r and %r are not q-power "
                                        "separated" % (la, lb))
        self.ell = ell
        self.q = q
        self.chains = chains

    @property
    def n(self):
        return sum(sum(shape) for _, shape in self.chains)


class ShapeReport:
    """Classifier output: which local model applies and the variable count."""

    __slots__ = ("case", "power_series_vars", "factor_shapes")

    def __init__(self, case, power_series_vars, factor_shapes):
        self.case = case
        self.power_series_vars = power_series_vars
        self.factor_shapes = [tuple(s) for s in factor_shapes]

    def to_dict(self):
        return {"case": self.case,
                "power_series_vars": self.power_series_vars,
                "factor_shapes": [list(s) for s in self.factor_shapes]}

    def __repr__(self):
        return "ShapeReport(%r, vars=%r, shapes=%r)" % (
            self.case, self.power_series_vars, self.factor_shapes)


def _type_assignments(parts, sizes):
    """All ways to split the multiset of block sizes across chains so each
    chain receives a partition of its own size."""
    if not sizes:
        yield [] if not parts else None
        if parts:
            return
        return

    first, rest = sizes[0], sizes[1:]

    def subsets(remaining, target, chosen, start):
        if target == 0:
            yield chosen
            return
        for i in range(start, len(remaining)):
            if remaining[i] <= target:
                yield from subsets(remaining, target - remaining[i],
                                   chosen + [i], i + 1)

    seen = set()
    for idx in subsets(parts, first, [], 0):
        key = tuple(sorted(parts[i] for i in idx))
        if key in seen:
            continue
        seen.add(key)
        leftover = [p for i, p in enumerate(parts) if i not in set(idx)]
        for tail in _type_assignments(leftover, rest):
            if tail is not None:
                yield [key] + tail


def _populated(shapes, jtype):
    """True iff the inertial type can distribute across the chains with every
    chain's stratum set nonempty."""
    parts = sorted(jtype.parts, reverse=True)
    sizes = [sum(s) for s in shapes]
    for assignment in _type_assignments(parts, sizes):
        if assignment is None:
            continue
        if all(count_type(shape, JordanType(sub)) > 0
               for shape, sub in zip(shapes, assignment)):
            return True
    return False


def classify_banal_local_ring(data, sigma_types, inertial_type):
    """Resolve the n = 4 framed-deformation shape table.

    sigma_types: one JordanType per chain (the nilpotent Jordan data of the
    monodromy on that chain); the degenerate R-hat cases fire exactly when
    it is trivial.  For n != 4 only the factor shapes and the framing
    variable count are returned (case None).
    """
    if not isinstance(inertial_type, JordanType):
        inertial_type = JordanType(inertial_type)
    sigma_types = [st if isinstance(st, JordanType) else JordanType(st)
                   for st in sigma_types]
    if len(sigma_types) != len(data.chains):
        raise RingError("need one sigma type per chain")
    for st, (_, shape) in zip(sigma_types, data.chains):
        if st.n != sum(shape):
            raise RingError("sigma type does not partition its chain size")
    n = data.n
    if inertial_type.n != n:
        raise RingError("inertial type does not partition n")
    shapes = [shape for _, shape in data.chains]
    base = n * n - sum(v * v for s in shapes for v in s)
    if n != 4:
        return ShapeReport(None, base, shapes)
    m = inertial_type.parts
    trivial = [all(p == 1 for p in st.parts) for st in sigma_types]
    if m == (1, 1, 1, 1):
        if all(trivial):
            return ShapeReport("formally_smooth", 16, shapes)
        return ShapeReport("zero", 0, shapes)
    if m == (4,):
        if len(shapes) == 1 and shapes[0] == (1, 1, 1, 1):
            return ShapeReport("formally_smooth", 16, shapes)
        return ShapeReport("zero", 0, shapes)
    if m == (2, 2) and len(shapes) == 1:
        s = shapes[0]
        if s == (2, 2):
            if trivial[0]:
                return ShapeReport("R22_hat", base + 1, shapes)
            return ShapeReport("formally_smooth", 16, shapes)
        if s == (1, 2, 1):
            if trivial[0]:
                return ShapeReport("R121_hat", base + 1, shapes)
            return ShapeReport("formally_smooth", 16, shapes)
        if count_type(s, inertial_type) > 0:
            return ShapeReport("formally_smooth", 16, shapes)
        return ShapeReport("zero", 0, shapes)
    if _populated(shapes, inertial_type):
        return ShapeReport("formally_smooth", 16, shapes)
    return ShapeReport("zero", 0, shapes)


# -- the reproduction suite ---------------------------------------------------

def _item(items, name, value, expected):
    status = "pass" if value == expected else "fail"
    items.append({"name": name, "status": status,
                  "value": value, "expected": expected})


def run_paper_suite(field, with_orbit_dims=True):
    """Run every reproduced computation over the given field.

    Orbit dimensions are always computed over the rationals (the tangent
    computation is only asserted there); everything else uses `field`.
    """
    if field.characteristic == 2:
        raise RingError("characteristic 2 is not supported")
    start = time.time()
    items = []
    certificates = {}

    # Buchberger certificates for the four printed bases
    for name in ("R22", "S22", "R121", "S121"):
        ideal = build_model_ideal(ModelSpec(name, field))
        cert = verify_buchberger(ideal.generators)
        ok = isinstance(cert, GroebnerCertificate)
        matches = ok and certificate_matches_expected(cert, ideal.ctx, name)
        _item(items, "%s_basis_verified" % name.lower(), ok, True)
        _item(items, "%s_witnesses_match" % name.lower(), matches, True)
        if ok:
            certificates[name] = cert.to_dict()

    r22 = build_model_ideal(ModelSpec("R22", field))
    r121 = build_model_ideal(ModelSpec("R121", field))
    r22_gb = buchberger_complete(r22.generators)
    r121_gb = buchberger_complete(r121.generators)

    _item(items, "r22_dimension",
          krull_dimension(initial_ideal(r22_gb)), 7)
    _item(items, "r121_dimension",
          krull_dimension(initial_ideal(r121_gb)), 5)
    _item(items, "r22_regular_tail", regular_sequence_tail(r22_gb, 6), True)
    _item(items, "r121_regular_tail", regular_sequence_tail(r121_gb, 6), True)
    _item(items, "r22_dimension_chain", dimension_chain(r22, R22_CHAIN),
          [7, 6, 5, 4, 3, 2, 1, 0])
    _item(items, "r121_dimension_chain", dimension_chain(r121, R121_CHAIN),
          [5, 4, 3, 2, 1, 0])

    # Artinian endpoints
    final22 = build_model_ideal(ModelSpec("R22_final", field))
    rep22 = artinian_analysis(buchberger_complete(final22.generators))
    _item(items, "r22_final_dimension", rep22.vector_space_dimension, 5)
    _item(items, "r22_final_socle", rep22.socle_dimension, 1)
    _item(items, "r22_final_min_generators",
          minimal_generator_count(final22.generators), 5)

    final121 = build_model_ideal(ModelSpec("R121_final", field))
    rep121 = artinian_analysis(buchberger_complete(final121.generators))
    _item(items, "r121_final_dimension", rep121.vector_space_dimension, 4)
    _item(items, "r121_final_socle", rep121.socle_dimension, 3)
    std_degrees = sorted(m.degree for m in rep121.standard_monomials)
    _item(items, "r121_final_basis_degrees", std_degrees, [0, 1, 1, 1])

    # product-ideal intersection lemma
    ctx = r121.ctx
    gens5 = r121.generators[:5]
    ideal_I = Ideal(ctx, gens5[2:5] + [ctx.var("A"), ctx.var("B")])
    ideal_J = Ideal(ctx, gens5[:2] + [gens5[4], ctx.var("C"), ctx.var("D")])
    inter = intersect_ideals(ideal_I, ideal_J)
    target = buchberger_complete(
        gens5 + [ctx.parse(s) for s in ("A*C", "A*D", "B*C", "B*D")])
    _item(items, "intersection_equals_product",
          [str(g) for g in inter.elements],
          [str(g) for g in target.elements])

    kideal = build_model_ideal(ModelSpec("K_intersection", field))
    kgb = buchberger_complete(kideal.generators)
    tfree = [g.map_to(ctx) for g in kgb.elements if not g.uses_variable("t")]
    kfree = buchberger_complete(tfree)
    _item(items, "k_elimination_matches_intersection",
          [str(g) for g in kfree.elements],
          [str(g) for g in inter.elements])

    # Jacobian ranks at every printed representative
    for model, ideal in (("R22", r22), ("R121", r121)):
        ranks = {}
        for label, pt in paper_points(model, field):
            ranks[label] = jacobian_rank_at(ideal.generators, pt)
        expected = {label: (0 if label == "z_00" else 3) for label in ranks}
        _item(items, "%s_jacobian_ranks" % model.lower(), ranks, expected)

    # orbit dimensions (tangent computation, rationals only)
    if with_orbit_dims:
        for model, action in (("R22", r22_action()), ("R121", r121_action())):
            dims = {}
            for label, pt in paper_points(model, FieldSpec.rationals()):
                dims[label] = orbit_dimension_at(action, pt)
            _item(items, "%s_orbit_dimensions" % model.lower(), dims,
                  expected_orbit_dimensions(model))

    # localizations
    _item(items, "r121_localized_at_A",
          localized_dimension(r121, ctx.var("A")), 5)
    for text in ("A*X - A*R + B*Z", "A*Y - B*R - B*X", "A*C + B*D"):
        _item(items, "r121_localization_witness_%s"
              % text.replace(" ", "").replace("*", ""),
              ideal_member(ctx.parse(text), r121_gb), True)
    ntilde = build_model_ideal(ModelSpec("N_tilde", field, n=2, q=3))
    _item(items, "n_tilde_2_localized_dimension",
          localized_dimension(ntilde, n_tilde_det(ntilde, 2)), 4)

    all_pass = all(it["status"] == "pass" for it in items)
    return {
        "field": repr(field),
        "items": items,
        "certificates": certificates,
        "notes": [
            "terminal quadric quotient uses X^2 + Y*Z; the X^2 + X*Y variant "
            "is inconsistent with the reduction chain and is rejected",
            "the five-element index list for shape (1,2,1) contains (1,1;1); "
            "a transcription repeating (1,1;0) fails the enumeration",
        ],
        "all_pass": all_pass,
        "timing": time.time() - start,
    }
