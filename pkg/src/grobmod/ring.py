"""Exact coefficient fields, monomial orders and sparse multivariate polynomials.

Coefficients live in Q (stdlib Fraction) or a prime field F_p with p an odd
prime.  Polynomials are sparse dicts monomial -> nonzero coefficient, bound to
a RingContext that fixes the variable list, the field and the monomial order.
"""

from fractions import Fraction
import re

__all__ = [
    "RingError", "ParseError", "FieldSpec", "MonomialOrder", "RingContext",
    "Monomial", "Polynomial", "compare_monomials", "leading_term",
    "parse_polynomial", "divide", "substitute_linear", "parse_ring_decl",
]


class RingError(ValueError):
    pass


class ParseError(RingError):
    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """An exact coefficient field: the rationals or F_p for an odd prime p."""

    __slots__ = ("kind", "modulus")

    def __init__(self, kind, modulus=None):
        if kind not in ("rationals", "prime_field"):
            raise RingError("unknown field kind: %r" % (kind,))
        if kind == "prime_field":
            if modulus is None or not _is_prime(modulus):
                raise RingError("modulus must be prime, got %r" % (modulus,))
            if modulus == 2:
                raise RingError("characteristic 2 is not supported")
        else:
            modulus = None
        self.kind = kind
        self.modulus = modulus

    @classmethod
    def rationals(cls):
        return cls("rationals")

    @classmethod
    def prime_field(cls, p):
        return cls("prime_field", p)

    @property
    def characteristic(self):
        return 0 if self.kind == "rationals" else self.modulus

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and self.kind == other.kind and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        if self.kind == "rationals":
            return "QQ"
        return "F%d" % self.modulus

    # -- element operations; elements are Fraction (Q) or int in [0, p) ------

    def coerce(self, value):
        if self.kind == "rationals":
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, str):
                return Fraction(value)
            raise RingError("cannot coerce %r into Q" % (value,))
        p = self.modulus
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise RingError("denominator divisible by %d" % p)
            return value.numerator * pow(den, -1, p) % p
        if isinstance(value, str):
            return self.coerce(Fraction(value))
        raise RingError("cannot coerce %r into F_%d" % (value, p))

    def zero(self):
        return Fraction(0) if self.kind == "rationals" else 0

    def one(self):
        return Fraction(1) if self.kind == "rationals" else 1

    def add(self, a, b):
        c = a + b
        return c if self.kind == "rationals" else c % self.modulus

    def sub(self, a, b):
        c = a - b
        return c if self.kind == "rationals" else c % self.modulus

    def mul(self, a, b):
        c = a * b
        return c if self.kind == "rationals" else c % self.modulus

    def neg(self, a):
        return -a if self.kind == "rationals" else (-a) % self.modulus

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        if self.kind == "rationals":
            return 1 / a
        return pow(a, -1, self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def format(self, a):
        return str(a)


class Monomial:
    """Exponent vector, one entry per context variable."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        self.exps = tuple(exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return "Monomial(%r)" % (self.exps,)

    @property
    def degree(self):
        return sum(self.exps)

    def mul(self, other):
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def div(self, other):
        if not other.divides(self):
            raise RingError("monomial %r does not divide %r" % (other, self))
        return Monomial(a - b for a, b in zip(self.exps, other.exps))

    def lcm(self, other):
        return Monomial(max(a, b) for a, b in zip(self.exps, other.exps))

    def gcd(self, other):
        return Monomial(min(a, b) for a, b in zip(self.exps, other.exps))

    def is_one(self):
        return not any(self.exps)


class MonomialOrder:
    """grevlex, or the product order that compares a t-exponent first.

    grevlex with variable ordering (x_1,...,x_n): lower total degree loses;
    on equal degree the monomial with the larger exponent in the last
    differing variable loses.  grevlex_t: any monomial containing t outranks
    any monomial without it; ties fall back to grevlex on the rest.
    """

    __slots__ = ("kind", "variable_permutation", "t_variable",
                 "_tiebreak", "_t_index")

    def __init__(self, kind, variable_permutation, t_variable=None):
        if kind not in ("grevlex", "grevlex_t"):
            raise RingError("unknown order kind: %r" % (kind,))
        if kind == "grevlex_t":
            if t_variable is None:
                raise RingError("grevlex_t needs a t variable")
            if t_variable not in variable_permutation:
                raise RingError("t variable %r not in permutation" % t_variable)
        else:
            t_variable = None
        self.kind = kind
        self.variable_permutation = tuple(variable_permutation)
        self.t_variable = t_variable
        self._tiebreak = None   # exponent indices, most-significant last
        self._t_index = None

    def bind(self, variables):
        if sorted(self.variable_permutation) != sorted(variables):
            raise RingError("order permutation does not match ring variables")
        index = {name: i for i, name in enumerate(variables)}
        names = [v for v in self.variable_permutation if v != self.t_variable]
        self._tiebreak = tuple(index[v] for v in names)
        if self.t_variable is not None:
            self._t_index = index[self.t_variable]
        return self

    def compare(self, a, b):
        """-1, 0 or 1 as a <, =, > b."""
        ea, eb = a.exps, b.exps
        if len(ea) != len(eb) or self._tiebreak is None or \
                len(ea) != len(self._tiebreak) + (self._t_index is not None):
            raise RingError("monomials do not belong to this order's context")
        if ea == eb:
            return 0
        if self._t_index is not None:
            ta, tb = ea[self._t_index], eb[self._t_index]
            if ta != tb:
                return -1 if ta < tb else 1
        da, db = sum(ea), sum(eb)
        if da != db:
            return -1 if da < db else 1
        for i in reversed(self._tiebreak):
            if ea[i] != eb[i]:
                # larger exponent in the last differing variable loses
                return -1 if ea[i] > eb[i] else 1
        return 0

    def greater(self, a, b):
        return self.compare(a, b) > 0


def compare_monomials(a, b, order):
    c = order.compare(a, b)
    return "less" if c < 0 else ("greater" if c > 0 else "equal")


class RingContext:
    """A polynomial ring: ordered variables, coefficient field, monomial order."""

    __slots__ = ("variables", "field", "order", "_var_index")

    def __init__(self, variables, field, order):
        variables = tuple(variables)
        if not variables:
            raise RingError("variable list is empty")
        if len(set(variables)) != len(variables):
            raise RingError("duplicate variable names: %r" % (variables,))
        if field.characteristic == 2:
            raise RingError("characteristic 2 is not supported")
        self.variables = variables
        self.field = field
        self.order = order.bind(variables)
        self._var_index = {name: i for i, name in enumerate(variables)}

    @classmethod
    def grevlex(cls, variables, field, permutation=None):
        perm = tuple(permutation) if permutation is not None else tuple(variables)
        return cls(variables, field, MonomialOrder("grevlex", perm))

    def __eq__(self, other):
        return (isinstance(other, RingContext)
                and self.variables == other.variables
                and self.field == other.field
                and self.order.kind == other.order.kind
                and self.order.variable_permutation == other.order.variable_permutation)

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return "RingContext(%s[%s] %s(%s))" % (
            self.field, ",".join(self.variables), self.order.kind,
            ",".join(self.order.variable_permutation))

    def var_index(self, name):
        try:
            return self._var_index[name]
        except KeyError:
            raise RingError("unknown variable %r" % (name,)) from None

    def monomial(self, **exps):
        vec = [0] * len(self.variables)
        for name, e in exps.items():
            vec[self.var_index(name)] = e
        return Monomial(vec)

    def one_monomial(self):
        return Monomial((0,) * len(self.variables))

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.coerce(c)
        if not c:
            return self.zero()
        return Polynomial(self, {self.one_monomial(): c})

    def var(self, name):
        return Polynomial(self, {self.monomial(**{name: 1}): self.field.one()})

    def from_terms(self, terms):
        clean = {}
        for mono, coeff in terms:
            coeff = self.field.coerce(coeff)
            if mono in clean:
                coeff = self.field.add(clean[mono], coeff)
            if coeff:
                clean[mono] = coeff
            elif mono in clean:
                del clean[mono]
        return Polynomial(self, clean)

    def parse(self, text):
        return parse_polynomial(text, self)


class Polynomial:
    """Sparse exact polynomial; terms is a dict Monomial -> nonzero coeff."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ctx == other.ctx
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ctx.variables, frozenset(self.terms.items())))

    def _check(self, other):
        if self.ctx != other.ctx:
            raise RingError("polynomials from different ring contexts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.constant(other)
        self._check(other)
        field = self.ctx.field
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = field.add(out.get(mono, field.zero()), c)
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        field = self.ctx.field
        return Polynomial(self.ctx,
                          {m: field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ctx.field.coerce(other)
            if not c:
                return self.ctx.zero()
            field = self.ctx.field
            return Polynomial(self.ctx, {m: field.mul(cf, c)
                                         for m, cf in self.terms.items()})
        self._check(other)
        field = self.ctx.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                s = field.add(out.get(m, field.zero()), field.mul(c1, c2))
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return Polynomial(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise RingError("negative polynomial power")
        out = self.ctx.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        return self * c

    def monic(self):
        if self.is_zero():
            return self
        _, lc = self.leading()
        return self * self.ctx.field.inv(lc)

    def leading(self):
        """(leading monomial, leading coefficient); raises on zero."""
        if not self.terms:
            raise RingError("leading term of the zero polynomial")
        order = self.ctx.order
        best = None
        for m in self.terms:
            if best is None or order.greater(m, best):
                best = m
        return best, self.terms[best]

    def leading_monomial(self):
        return self.leading()[0]

    def sorted_terms(self):
        """Terms in strictly decreasing monomial order."""
        import functools
        order = self.ctx.order
        monos = sorted(self.terms,
                       key=functools.cmp_to_key(order.compare), reverse=True)
        return [(m, self.terms[m]) for m in monos]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(m.degree for m in self.terms)

    def is_homogeneous(self):
        degs = {m.degree for m in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d):
        return Polynomial(self.ctx, {m: c for m, c in self.terms.items()
                                     if m.degree == d})

    def uses_variable(self, name):
        i = self.ctx.var_index(name)
        return any(m.exps[i] for m in self.terms)

    def evaluate(self, point):
        """Evaluate at a full coordinate vector of field elements."""
        if len(point) != len(self.ctx.variables):
            raise RingError("point length does not match variable count")
        field = self.ctx.field
        point = [field.coerce(v) for v in point]
        total = field.zero()
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m.exps):
                for _ in range(e):
                    v = field.mul(v, x)
            total = field.add(total, v)
        return total

    def derivative(self, name):
        i = self.ctx.var_index(name)
        field = self.ctx.field
        out = {}
        for m, c in self.terms.items():
            e = m.exps[i]
            if not e:
                continue
            exps = list(m.exps)
            exps[i] -= 1
            dm = Monomial(exps)
            s = field.add(out.get(dm, field.zero()),
                          field.mul(c, field.coerce(e)))
            if s:
                out[dm] = s
            elif dm in out:
                del out[dm]
        return Polynomial(self.ctx, out)

    def map_to(self, target_ctx, rename=None):
        """Transport to a context with a (superset of) the same variables."""
        rename = rename or {}
        out = []
        for m, c in self.terms.items():
            vec = [0] * len(target_ctx.variables)
            for name, e in zip(self.ctx.variables, m.exps):
                if e:
                    vec[target_ctx.var_index(rename.get(name, name))] = e
            out.append((Monomial(vec), c))
        return target_ctx.from_terms(out)

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ctx.field
        names = self.ctx.variables
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, m.exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            body = "*".join(factors)
            if not body:
                text = field.format(c)
            elif c == field.one():
                text = body
            elif c == field.neg(field.one()) and field.kind == "rationals":
                text = "-" + body
            else:
                text = "%s*%s" % (field.format(c), body)
            if parts and not text.startswith("-"):
                parts.append("+ " + text)
            elif parts:
                parts.append("- " + text[1:])
            else:
                parts.append(text)
        return " ".join(parts)

    __repr__ = __str__


def leading_term(f, order=None):
    """(coefficient, Monomial) of the maximal term; (0, None) for zero."""
    if f.is_zero():
        return (f.ctx.field.zero(), None)
    if order is not None and order is not f.ctx.order:
        g = Polynomial(RingContext(f.ctx.variables, f.ctx.field, order), f.terms)
        m, c = g.leading()
        return (c, m)
    m, c = f.leading()
    return (c, m)


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()/]))")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            break
        if m.group(1):
            out.append(("int", int(m.group(1)), m.start()))
        elif m.group(2):
            out.append(("name", m.group(2), m.start()))
        else:
            sym = "^" if m.group(3) == "**" else m.group(3)
            out.append(("sym", sym, m.start()))
        pos = m.end()
    rest = text[pos:].strip()
    if rest:
        raise ParseError("unexpected character %r" % rest[0], pos)
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, tokens, ctx):
        self.tokens = tokens
        self.ctx = ctx
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self):
        kind, val, pos = self.peek()
        negate = False
        if kind == "sym" and val in "+-":
            self.next()
            negate = val == "-"
        node = self.term()
        if negate:
            node = -node
        while True:
            kind, val, pos = self.peek()
            if kind == "sym" and val in "+-":
                self.next()
                rhs = self.term()
                node = node - rhs if val == "-" else node + rhs
            else:
                return node

    def term(self):
        node = self.power()
        while True:
            kind, val, pos = self.peek()
            if kind == "sym" and val == "*":
                self.next()
                node = node * self.power()
            elif kind == "sym" and val == "/":
                self.next()
                kind2, val2, pos2 = self.next()
                if kind2 != "int":
                    raise ParseError("expected integer denominator", pos2)
                node = node * self.ctx.constant(Fraction(1, val2))
            elif kind in ("name", "int") or (kind == "sym" and val == "("):
                # implicit multiplication: "2X", "X(Y+1)"
                node = node * self.power()
            else:
                return node

    def power(self):
        node = self.atom()
        kind, val, pos = self.peek()
        if kind == "sym" and val == "^":
            self.next()
            kind2, val2, pos2 = self.next()
            if kind2 != "int":
                raise ParseError("expected integer exponent", pos2)
            node = node ** val2
        return node

    def atom(self):
        kind, val, pos = self.next()
        if kind == "int":
            return self.ctx.constant(val)
        if kind == "name":
            if val not in self.ctx._var_index:
                raise ParseError("unknown variable %r" % val, pos)
            return self.ctx.var(val)
        if kind == "sym" and val == "(":
            node = self.expr()
            kind2, val2, pos2 = self.next()
            if not (kind2 == "sym" and val2 == ")"):
                raise ParseError("expected ')'", pos2)
            return node
        if kind == "sym" and val == "-":
            return -self.atom()
        raise ParseError("unexpected token %r" % (val,), pos)


def parse_polynomial(text, ctx):
    parser = _Parser(_tokenize(text), ctx)
    node = parser.expr()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise ParseError("trailing input %r" % (val,), pos)
    return node


_RING_DECL = re.compile(
    r"^\s*ring\s+(QQ|F\d+)\s*\[([^\]]+)\]\s*order\s+grevlex\s*\(([^)]+)\)\s*$")


def parse_ring_decl(line):
    """`ring <FIELD>[v1,...] order grevlex(vi1,...)` -> RingContext."""
    m = _RING_DECL.match(line)
    if not m:
        raise ParseError("malformed ring declaration", 0)
    field_text, vars_text, perm_text = m.groups()
    if field_text == "QQ":
        field = FieldSpec.rationals()
    else:
        field = FieldSpec.prime_field(int(field_text[1:]))
    variables = [v.strip() for v in vars_text.split(",")]
    permutation = [v.strip() for v in perm_text.split(",")]
    return RingContext(variables, field, MonomialOrder("grevlex", permutation))


# -- division and substitution ----------------------------------------------

def divide(f, divisors, order=None):
    """Multivariate division: f = sum(q_i g_i) + r.

    Deterministic: each step reduces by the first divisor in list order whose
    leading monomial divides the current leading monomial.  No term of r is
    divisible by any divisor's leading monomial and LM(q_i g_i) <= LM(f).
    """
    ctx = f.ctx
    if order is None:
        order = ctx.order
    if any(g.is_zero() for g in divisors):
        raise RingError("zero divisor in division")
    leads = [g.leading() for g in divisors]
    quotients = [ctx.zero() for _ in divisors]
    remainder = ctx.zero()
    work = f
    field = ctx.field
    while not work.is_zero():
        lm, lc = work.leading()
        for i, (gm, gc) in enumerate(leads):
            if gm.divides(lm):
                qm = lm.div(gm)
                qc = field.div(lc, gc)
                qpoly = Polynomial(ctx, {qm: qc})
                quotients[i] = quotients[i] + qpoly
                work = work - qpoly * divisors[i]
                break
        else:
            tpoly = Polynomial(ctx, {lm: lc})
            remainder = remainder + tpoly
            work = work - tpoly
    return quotients, remainder


def substitute_linear(f, mapping, target_ctx=None):
    """Apply an invertible affine substitution variable -> degree<=1 polynomial.

    `mapping` sends variable names of f's ring to affine polynomials in
    `target_ctx` (default: f's own ring); unmapped variables pass through by
    name.  The linear part must be an invertible matrix over the field.
    """
    ctx = f.ctx
    if target_ctx is None:
        target_ctx = next(iter(mapping.values())).ctx if mapping else ctx
    if len(target_ctx.variables) != len(ctx.variables):
        raise RingError("substitution must preserve the variable count")
    field = target_ctx.field
    images = []
    for name in ctx.variables:
        if name in mapping:
            img = mapping[name]
            if img.ctx != target_ctx:
                raise RingError("substitution images from mixed contexts")
            if img.total_degree() > 1:
                raise RingError("substitution image %s is not affine" % img)
        else:
            img = target_ctx.var(name)
        images.append(img)
    # invertibility of the linear part
    n = len(ctx.variables)
    mat = []
    for img in images:
        row = [field.zero()] * n
        for m, c in img.terms.items():
            if m.degree == 1:
                row[m.exps.index(1)] = c
        mat.append(row)
    if _rank(mat, field) != n:
        raise RingError("substitution is not invertible")
    out = target_ctx.zero()
    for m, c in f.terms.items():
        part = target_ctx.constant(c)
        for img, e in zip(images, m.exps):
            for _ in range(e):
                part = part * img
        out = out + part
    return out


def _rank(rows, field):
    rows = [list(r) for r in rows]
    rank, col, ncols = 0, 0, (len(rows[0]) if rows else 0)
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [field.sub(v, field.mul(factor, w))
                           for v, w in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank
