"""Buchberger certificates, completion, elimination, dimension and socle analysis."""

import functools
import itertools

from .ring import (RingError, RingContext, MonomialOrder, Monomial, Polynomial,
                   divide, _rank)

__all__ = [
    "Ideal", "GroebnerBasis", "GroebnerCertificate", "BuchbergerCounterexample",
    "ArtinianReport", "s_polynomial", "verify_buchberger", "buchberger_complete",
    "initial_ideal", "ideal_member", "intersect_ideals", "regular_sequence_tail",
    "krull_dimension", "artinian_analysis", "minimal_generator_count",
    "localized_dimension",
]


class Ideal:
    __slots__ = ("ctx", "generators")

    def __init__(self, ctx, generators):
        generators = list(generators)
        for g in generators:
            if g.ctx != ctx:
                raise RingError("generator from a different ring context")
            if g.is_zero():
                raise RingError("zero generator in ideal")
        self.ctx = ctx
        self.generators = generators

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.generators)


class GroebnerBasis:
    __slots__ = ("ideal", "elements", "reduced")

    def __init__(self, ideal, elements, reduced):
        self.ideal = ideal
        self.elements = list(elements)
        self.reduced = reduced

    @property
    def ctx(self):
        return self.ideal.ctx

    def __repr__(self):
        return "GroebnerBasis(%s)" % ", ".join(str(g) for g in self.elements)


class GroebnerCertificate:
    """Replayable witnesses for Buchberger condition (B) on a generator set.

    entries maps each unordered index pair (i, j) to either the string
    "coprime" (leading monomials have trivial gcd) or the list of witness
    quotients f_s with S(g_i, g_j) = sum f_s g_s and the degree bound
    LM(f_s) LM(g_s) <= LM(S(g_i, g_j)).
    """

    __slots__ = ("generators", "entries")

    def __init__(self, generators, entries):
        self.generators = list(generators)
        self.entries = dict(entries)

    def coprime_pairs(self):
        return sorted(p for p, e in self.entries.items() if e == "coprime")

    def witness_pairs(self):
        return sorted(p for p, e in self.entries.items() if e != "coprime")

    def witness(self, i, j):
        entry = self.entries[tuple(sorted((i, j)))]
        if entry == "coprime":
            raise KeyError("pair (%d, %d) was skipped as coprime" % (i, j))
        return entry

    def replay(self):
        """Re-verify every stored witness exactly; True on success."""
        gens = self.generators
        order = gens[0].ctx.order
        for (i, j), entry in self.entries.items():
            gi, gj = gens[i], gens[j]
            if entry == "coprime":
                if not gi.leading()[0].gcd(gj.leading()[0]).is_one():
                    return False
                continue
            spoly = s_polynomial(gi, gj)
            total = gens[0].ctx.zero()
            for q, g in zip(entry, gens):
                total = total + q * g
            if total != spoly:
                return False
            if not spoly.is_zero():
                bound = spoly.leading()[0]
                for q, g in zip(entry, gens):
                    if q.is_zero():
                        continue
                    if order.greater(q.leading()[0].mul(g.leading()[0]), bound):
                        return False
        return True

    def summary(self):
        return {"pairs": len(self.entries),
                "coprime_skips": len(self.coprime_pairs()),
                "witnesses": len(self.witness_pairs())}

    def to_dict(self):
        out = {}
        for (i, j), entry in sorted(self.entries.items()):
            key = "%d,%d" % (i, j)
            if entry == "coprime":
                out[key] = "coprime"
            else:
                out[key] = [str(q) for q in entry]
        return {"generators": [str(g) for g in self.generators],
                "entries": out}


class BuchbergerCounterexample:
    """First pair whose S-polynomial does not reduce to zero."""

    __slots__ = ("i", "j", "remainder")

    def __init__(self, i, j, remainder):
        self.i = i
        self.j = j
        self.remainder = remainder

    def __repr__(self):
        return ("BuchbergerCounterexample(pair=(%d, %d), remainder=%s)"
                % (self.i, self.j, self.remainder))


class ArtinianReport:
    """Standard monomial basis, dimension and socle dimension of a quotient.

    `finite` is False when some variable has no pure power in the initial
    ideal; the dimensions are then None (the explicit infinite signal).
    """

    __slots__ = ("standard_monomials", "vector_space_dimension",
                 "socle_dimension", "finite")

    def __init__(self, standard_monomials, vector_space_dimension,
                 socle_dimension, finite=True):
        self.standard_monomials = standard_monomials
        self.vector_space_dimension = vector_space_dimension
        self.socle_dimension = socle_dimension
        self.finite = finite

    def is_gorenstein(self):
        return self.finite and self.socle_dimension == 1


def s_polynomial(g, h, order=None):
    if g.is_zero() or h.is_zero():
        raise RingError("S-polynomial of the zero polynomial")
    ctx = g.ctx
    field = ctx.field
    gm, gc = g.leading()
    hm, hc = h.leading()
    gcd = gm.gcd(hm)
    mg = Polynomial(ctx, {hm.div(gcd): hc})
    mh = Polynomial(ctx, {gm.div(gcd): gc})
    return mg * g - mh * h


def verify_buchberger(gens, order=None):
    """Full certificate when every pair satisfies (B), else the first failure."""
    gens = list(gens)
    if any(g.is_zero() for g in gens):
        raise RingError("zero generator")
    ctx = gens[0].ctx
    entries = {}
    for i, j in itertools.combinations(range(len(gens)), 2):
        gi, gj = gens[i], gens[j]
        if gi.leading()[0].gcd(gj.leading()[0]).is_one():
            entries[(i, j)] = "coprime"
            continue
        spoly = s_polynomial(gi, gj)
        quotients, remainder = divide(spoly, gens)
        if not remainder.is_zero():
            return BuchbergerCounterexample(i, j, remainder)
        entries[(i, j)] = quotients
    cert = GroebnerCertificate(gens, entries)
    assert cert.replay()
    return cert


def _pair_key(basis, i, j):
    lcm = basis[i].leading()[0].lcm(basis[j].leading()[0])
    return (lcm.degree, lcm.exps, i, j)


def buchberger_complete(gens, order=None, max_pairs=200000):
    """Canonical reduced Groebner basis (normal strategy, coprime skip)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise RingError("no nonzero generators")
    ctx = gens[0].ctx
    basis = []
    for g in gens:
        g = g.monic()
        if g not in basis:
            basis.append(g)
    pending = [(i, j) for i, j in itertools.combinations(range(len(basis)), 2)]
    handled = 0
    while pending:
        handled += 1
        if handled > max_pairs:
            raise RingError("pair budget exceeded in Buchberger completion")
        pending.sort(key=lambda p: _pair_key(basis, *p))
        i, j = pending.pop(0)
        gi, gj = basis[i], basis[j]
        if gi.leading()[0].gcd(gj.leading()[0]).is_one():
            continue
        _, remainder = divide(s_polynomial(gi, gj), basis)
        if remainder.is_zero():
            continue
        basis.append(remainder.monic())
        new = len(basis) - 1
        pending.extend((k, new) for k in range(new))
    # minimalize: drop elements whose LM is divisible by another's LM
    minimal = []
    for i, g in enumerate(basis):
        lm = g.leading()[0]
        if any(h.leading()[0].divides(lm) for j, h in enumerate(basis)
               if j != i and (h.leading()[0] != lm or j < i)):
            continue
        minimal.append(g)
    # inter-reduce to the unique reduced basis
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        _, r = divide(g, others)
        if not r.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=functools.cmp_to_key(
        lambda a, b: ctx.order.compare(a.leading()[0], b.leading()[0])),
        reverse=True)
    return GroebnerBasis(Ideal(ctx, reduced), reduced, reduced=True)


def groebner_basis_from_verified(gens):
    """Wrap an externally verified generating set without re-reducing it."""
    gens = list(gens)
    return GroebnerBasis(Ideal(gens[0].ctx, gens), gens, reduced=False)


def initial_ideal(gb):
    """Monomial ideal of the leading terms, with dominated generators pruned."""
    ctx = gb.ctx
    monos = []
    for g in gb.elements:
        monos.append(g.leading()[0])
    minimal = []
    for i, m in enumerate(monos):
        if any(p.divides(m) for j, p in enumerate(monos)
               if j != i and (p != m or j < i)):
            continue
        if m not in minimal:
            minimal.append(m)
    one = ctx.field.one()
    return Ideal(ctx, [Polynomial(ctx, {m: one}) for m in minimal])


def ideal_member(f, gb):
    if f.is_zero():
        return True
    _, r = divide(f, gb.elements)
    return r.is_zero()


def _fresh_name(base, taken):
    name = base
    while name in taken:
        name += "_"
    return name


def intersect_ideals(I, J):
    """Reduced basis of the intersection, via t-elimination."""
    if I.ctx != J.ctx:
        raise RingError("ideals from different ring contexts")
    ctx = I.ctx
    tname = _fresh_name("t", set(ctx.variables))
    evars = ctx.variables + (tname,)
    eperm = (tname,) + ctx.order.variable_permutation
    ectx = RingContext(evars, ctx.field,
                       MonomialOrder("grevlex_t", eperm, t_variable=tname))
    t = ectx.var(tname)
    kgens = [t * f.map_to(ectx) for f in I.generators]
    kgens += [(t - 1) * g.map_to(ectx) for g in J.generators]
    egb = buchberger_complete(kgens)
    tfree = [g.map_to(ctx) for g in egb.elements if not g.uses_variable(tname)]
    if not tfree:
        return GroebnerBasis(Ideal(ctx, []), [], reduced=True)
    return buchberger_complete(tfree)


def regular_sequence_tail(gb, r):
    """True iff the variables at permutation positions r..n (1-based), taken
    last-to-first, form a regular sequence on the quotient."""
    ctx = gb.ctx
    if ctx.order.kind != "grevlex":
        raise RingError("regular-sequence criterion requires grevlex")
    n = len(ctx.variables)
    if not 1 <= r <= n + 1:
        raise RingError("tail start index out of range")
    tail = ctx.order.variable_permutation[r - 1:]
    indices = [ctx.var_index(v) for v in tail]
    for g in gb.elements:
        lm = g.leading()[0]
        if any(lm.exps[i] for i in indices):
            return False
    return True


def krull_dimension(init):
    """Krull dimension of ctx/init for a monomial ideal; -1 for the zero ring."""
    supports = []
    for g in init.generators:
        if len(g.terms) != 1:
            raise RingError("initial ideal generators must be monomials")
        (m, _), = g.terms.items()
        if m.is_one():
            return -1
        supports.append(frozenset(i for i, e in enumerate(m.exps) if e))
    n = len(init.ctx.variables)
    best = 0
    for mask in range(1 << n):
        keep = {i for i in range(n) if mask >> i & 1}
        if len(keep) <= best:
            continue
        if all(not s <= keep for s in supports):
            best = len(keep)
    return best


def _standard_monomials(init):
    ctx = init.ctx
    n = len(ctx.variables)
    monos = [next(iter(g.terms)) for g in init.generators]
    bounds = [None] * n
    for m in monos:
        support = [i for i, e in enumerate(m.exps) if e]
        if len(support) == 1:
            i = support[0]
            e = m.exps[i]
            if bounds[i] is None or e < bounds[i]:
                bounds[i] = e
    if any(b is None for b in bounds):
        return None
    std = []
    for exps in itertools.product(*(range(b) for b in bounds)):
        cand = Monomial(exps)
        if not any(m.divides(cand) for m in monos):
            std.append(cand)
    return std


def artinian_analysis(gb):
    """Standard monomials, vector-space dimension and socle dimension."""
    ctx = gb.ctx
    init = initial_ideal(gb)
    std = _standard_monomials(init)
    if std is None:
        return ArtinianReport([], None, None, finite=False)
    std.sort(key=lambda m: (m.degree, m.exps))
    index = {m: i for i, m in enumerate(std)}
    field = ctx.field
    one = field.one()
    # socle = common kernel of multiplication by every variable
    rows = []
    dim = len(std)
    for vi in range(len(ctx.variables)):
        var_mono = Monomial(tuple(1 if i == vi else 0
                                  for i in range(len(ctx.variables))))
        # column m: normal form of x_vi * m expressed over std
        cols = []
        for m in std:
            _, r = divide(Polynomial(ctx, {m.mul(var_mono): one}), gb.elements)
            vec = [field.zero()] * dim
            for mm, c in r.terms.items():
                vec[index[mm]] = c
            cols.append(vec)
        # transpose: rows indexed by target monomial
        for t in range(dim):
            rows.append([cols[c][t] for c in range(dim)])
    socle_dim = dim - _rank(rows, field) if dim else 0
    return ArtinianReport(std, dim, socle_dim, finite=True)


def _monomials_of_degree(n, d):
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def minimal_generator_count(gens):
    """dim I/mI for homogeneous generators, computed degree by degree."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return 0
    ctx = gens[0].ctx
    if any(not g.is_homogeneous() for g in gens):
        raise RingError("minimal_generator_count needs homogeneous generators")
    field = ctx.field
    n = len(ctx.variables)
    degrees = sorted({g.total_degree() for g in gens})
    total = 0
    for d in degrees:
        basis_monos = list(_monomials_of_degree(n, d))
        index = {m: i for i, m in enumerate(basis_monos)}

        def span_rank(pool):
            rows = []
            for g in pool:
                gd = g.total_degree()
                for shift in _monomials_of_degree(n, d - gd):
                    prod = g * Polynomial(ctx, {Monomial(shift): field.one()})
                    vec = [field.zero()] * len(basis_monos)
                    for m, c in prod.terms.items():
                        vec[index[m.exps]] = c
                    rows.append(vec)
            return _rank(rows, field) if rows else 0

        all_rank = span_rank([g for g in gens if g.total_degree() <= d])
        strict_rank = span_rank([g for g in gens if g.total_degree() < d])
        total += all_rank - strict_rank
    return total


def localized_dimension(I, f):
    """Krull dimension of V(I) minus V(f); -1 when that locus is empty."""
    ctx = I.ctx
    if f.is_zero():
        return -1
    uname = _fresh_name("u", set(ctx.variables))
    evars = ctx.variables + (uname,)
    eperm = ctx.order.variable_permutation + (uname,)
    ectx = RingContext(evars, ctx.field, MonomialOrder("grevlex", eperm))
    gens = [g.map_to(ectx) for g in I.generators]
    gens.append(ectx.var(uname) * f.map_to(ectx) - 1)
    gb = buchberger_complete(gens)
    return krull_dimension(initial_ideal(gb))
