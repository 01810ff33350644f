"""Exact sparse multivariate polynomials over the rationals.

Variables come in seven families, written x1, x2, ..., y1, ..., u1, ...,
v1, ..., t, z, and parameters a1, a2, ... whose index may be negative.
A variable is the pair (family, index).  Polynomials are immutable; all
arithmetic lands in canonical form (no zero coefficients, reduced
fractions), so two polynomials are equal iff their term maps are equal.

The canonical term order is graded lexicographic, with variables ranked by
(family, index) in the family order x < y < u < v < t < z < a.  Only
serialization and leading-term selection depend on it.

Term-map arithmetic is delegated to the kernel chosen in
superschur.backend (compiled if available, pure Python otherwise).
"""

import heapq
from fractions import Fraction

from .backend import kernel
from .errors import DivisionByZero, DuplicateVariable, NonSquare, NotDivisible

FAMILIES = "xyuvtza"

_INDEX_BIAS = 1 << 32
_FAMILY_CODE = {f: c for c, f in enumerate(FAMILIES)}


def pack_var(family, index):
    """Encode (family, index) as an int that sorts in canonical order."""
    try:
        code = _FAMILY_CODE[family]
    except KeyError:
        raise ValueError(f"unknown variable family {family!r}") from None
    if not -_INDEX_BIAS < index < _INDEX_BIAS:
        raise ValueError(f"variable index {index} out of range")
    return (code << 34) | (index + _INDEX_BIAS)


def unpack_var(packed):
    """Inverse of pack_var."""
    return FAMILIES[packed >> 34], (packed & ((1 << 34) - 1)) - _INDEX_BIAS


def var_name(family, index):
    """Display name: x1, t0, a(-3)."""
    return f"{family}{index}" if index >= 0 else f"{family}({index})"


def _mono_key(mono):
    """Sort key realizing graded-lex order (larger key = larger monomial)."""
    total = 0
    flat = []
    for i in range(0, len(mono), 2):
        total += mono[i + 1]
        flat.append(-mono[i])
        flat.append(mono[i + 1])
    return total, tuple(flat)


def _coerce_coeff(value):
    """Normalize an int or Fraction into a reduced (num, den) pair."""
    if isinstance(value, int):
        return value, 1
    if isinstance(value, Fraction):
        return value.numerator, value.denominator
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        # terms is adopted as-is and must already be canonical; external
        # construction should go through the classmethods below.
        self._terms = terms if terms is not None else {}

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def const(cls, value):
        num, den = _coerce_coeff(value)
        if num == 0:
            return _ZERO
        return cls({(): (num, den)})

    @classmethod
    def variable(cls, family, index):
        return cls({(pack_var(family, index), 1): (1, 1)})

    # -- inspection ---------------------------------------------------------

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms != other._terms

    __hash__ = None

    def __len__(self):
        return len(self._terms)

    def terms(self):
        """Iterate ((family, index, exponent) triples, Fraction) pairs."""
        for mono, (num, den) in self._terms.items():
            decoded = tuple(
                unpack_var(mono[i]) + (mono[i + 1],) for i in range(0, len(mono), 2)
            )
            yield decoded, Fraction(num, den)

    def sorted_terms(self):
        """Terms in descending canonical order (leading term first)."""
        items = sorted(self._terms.items(), key=lambda kv: _mono_key(kv[0]), reverse=True)
        return [
            (
                tuple(unpack_var(m[i]) + (m[i + 1],) for i in range(0, len(m), 2)),
                Fraction(n, d),
            )
            for m, (n, d) in items
        ]

    def variables(self):
        """Sorted list of (family, index) pairs occurring in the polynomial."""
        seen = set()
        for mono in self._terms:
            for i in range(0, len(mono), 2):
                seen.add(mono[i])
        return [unpack_var(v) for v in sorted(seen)]

    def total_degree(self):
        """Maximum term degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(mono_degree(m) for m in self._terms)

    def degree_in(self, family, index):
        """Largest exponent of the given variable; 0 if absent."""
        v = pack_var(family, index)
        best = 0
        for mono in self._terms:
            for i in range(0, len(mono), 2):
                if mono[i] == v and mono[i + 1] > best:
                    best = mono[i + 1]
        return best

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self):
        """The value of a constant polynomial as a Fraction."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and () in self._terms:
            num, den = self._terms[()]
            return Fraction(num, den)
        raise ValueError("polynomial is not constant")

    def homogeneous_part(self, degree):
        """The sum of terms of exactly the given total degree."""
        return Poly(
            {m: c for m, c in self._terms.items() if mono_degree(m) == degree}
        )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(kernel.terms_add(self._terms, other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(kernel.terms_sub(self._terms, other._terms))

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly.const(other) - self
        return NotImplemented

    def __neg__(self):
        return Poly(kernel.terms_neg(self._terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            num, den = _coerce_coeff(other)
            return Poly(kernel.terms_scale(self._terms, num, den))
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(kernel.terms_mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take nonnegative int exponents")
        result = _ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, bindings):
        """Simultaneously replace variables by polynomials.

        Keys are (family, index) pairs; values may be Poly, Fraction or int.
        The substitution is one-shot: every occurrence in *this* polynomial
        is rewritten, so swaps like {x1: x2, x2: x1} behave as expected.
        """
        if not bindings:
            return self
        packed = {}
        for (family, index), value in bindings.items():
            if not isinstance(value, Poly):
                value = Poly.const(value)
            packed[pack_var(family, index)] = value
        out = {}
        power_cache = {}
        for mono, (num, den) in self._terms.items():
            kept = []
            factor = None
            for i in range(0, len(mono), 2):
                v = mono[i]
                e = mono[i + 1]
                repl = packed.get(v)
                if repl is None:
                    kept.append(v)
                    kept.append(e)
                else:
                    key = (v, e)
                    powed = power_cache.get(key)
                    if powed is None:
                        powed = repl**e
                        power_cache[key] = powed
                    factor = powed if factor is None else factor * powed
            if factor is None:
                piece = {tuple(kept): (num, den)}
            else:
                piece = kernel.terms_mul_term(factor._terms, tuple(kept), num, den)
            out = kernel.terms_add(out, piece)
        return Poly(out)

    def eval_rational(self, bindings):
        """Evaluate at rational values for every variable that occurs.

        Raises ValueError if some variable has no binding.
        """
        packed = {}
        for (family, index), value in bindings.items():
            packed[pack_var(family, index)] = Fraction(value)
        total = Fraction(0)
        power_cache = {}
        for mono, (num, den) in self._terms.items():
            term = Fraction(num, den)
            for i in range(0, len(mono), 2):
                v = mono[i]
                e = mono[i + 1]
                if v not in packed:
                    family, index = unpack_var(v)
                    raise ValueError(f"no value bound for {var_name(family, index)}")
                key = (v, e)
                powed = power_cache.get(key)
                if powed is None:
                    powed = packed[v] ** e
                    power_cache[key] = powed
                term *= powed
            total += term
        return total

    # -- display ------------------------------------------------------------

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return f"Poly({poly_to_text(self)})"


_ZERO = Poly({})
_ONE = Poly({(): (1, 1)})

mono_degree = kernel.mono_degree


def variable(family, index=0):
    """Shorthand for Poly.variable."""
    return Poly.variable(family, index)


# ---------------------------------------------------------------------------
# determinants, Vandermonde products, exact division
# ---------------------------------------------------------------------------


def vandermonde(variables):
    """prod_{i<j} (v_i - v_j) over distinct variables, in the given order."""
    vs = list(variables)
    if len(set(vs)) != len(vs):
        raise DuplicateVariable(f"repeated variable in {vs}")
    result = Poly.one()
    for i in range(len(vs)):
        vi = Poly.variable(*vs[i])
        for j in range(i + 1, len(vs)):
            result = result * (vi - Poly.variable(*vs[j]))
    return result


def det_poly(matrix):
    """Determinant of a square matrix of polynomials.

    Laplace expansion memoized over column subsets: entries are large sparse
    polynomials and dimensions stay small, where this beats elimination.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise NonSquare(f"matrix is {n}x{len(r)}")
    if n == 0:
        return Poly.one()

    cache = {}

    def minor(row, colmask):
        if row == n:
            return Poly.one()
        cached = cache.get(colmask)
        if cached is not None:
            return cached
        total = Poly.zero()
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not colmask & bit:
                continue
            entry = rows[row][j]
            if entry:
                total = total + sign * (entry * minor(row + 1, colmask & ~bit))
            sign = -sign
        cache[colmask] = total
        return total

    return minor(0, (1 << n) - 1)


def exact_divide(p, q):
    """Return r with r * q == p exactly.

    Leading-term division in graded-lex order; if p is divisible the loop
    peels one term of the quotient per step, otherwise some leading term
    fails to divide and NotDivisible is raised.  The running maximum of the
    remainder is kept in a lazily-pruned heap so each monomial's order key
    is computed once.
    """
    if not q:
        raise DivisionByZero("exact division by the zero polynomial")
    if not p:
        return Poly.zero()
    q_terms = q._terms
    q_lead = max(q_terms, key=_mono_key)
    q_num, q_den = q_terms[q_lead]
    quotient = {}
    rem = dict(p._terms)

    def heap_key(mono):
        degree, flat = _mono_key(mono)
        return (-degree, tuple(-x for x in flat))

    heap = [(heap_key(m), m) for m in rem]
    heapq.heapify(heap)
    known = set(rem)
    while rem:
        lead = heapq.heappop(heap)[1]
        if lead not in rem:
            known.discard(lead)
            continue
        known.discard(lead)
        mono = kernel.mono_div(lead, q_lead)
        if mono is None:
            raise NotDivisible("leading term not divisible; nonzero remainder")
        n, d = rem[lead]
        coeff = kernel.frac_mul(n, d, q_den, q_num)
        quotient[mono] = coeff
        piece = kernel.terms_mul_term(q_terms, mono, *coeff)
        rem = kernel.terms_sub(rem, piece)
        for m in piece:
            if m in rem and m not in known:
                heapq.heappush(heap, (heap_key(m), m))
                known.add(m)
    return Poly(quotient)


# ---------------------------------------------------------------------------
# truncated Laurent expansions in s = 1/t
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Polynomial coefficients of s^0..s^order, s = 1/t, truncated products.

    Coefficients are Polys free of the t variable.  Arithmetic requires both
    operands to carry the same truncation order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        cs = list(coeffs)[: order + 1]
        cs += [Poly.zero()] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, order):
        if not isinstance(value, Poly):
            value = Poly.const(value)
        return cls(order, [value])

    @classmethod
    def one(cls, order):
        return cls.constant(1, order)

    @classmethod
    def linear_unit(cls, c, order):
        """1 - c*s, the unit-normalized series of the linear factor (t - c).

        Multiplying an identity's sides by one such factor per cleared
        denominator keeps everything inside nonnegative powers of s.
        """
        if not isinstance(c, Poly):
            c = Poly.const(c)
        return cls(order, [Poly.one(), -c])

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("mismatched truncation orders")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return TruncatedSeries(self.order, [c * other for c in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        n = self.order
        out = [Poly.zero()] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(0, n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(n, out)

    __rmul__ = __mul__

    def __str__(self):
        pieces = []
        for j, c in enumerate(self.coeffs):
            if c:
                pieces.append(f"({c})*s^{j}" if j else f"({c})")
        return " + ".join(pieces) if pieces else "0"


def laurent_expand_inverse_linear(c, order):
    """Expansion of 1/(t - c) = sum_{j>=0} c^j s^{j+1}, truncated.

    c must be free of the t variable.
    """
    if not isinstance(c, Poly):
        c = Poly.const(c)
    if c.degree_in("t", 0):
        raise ValueError("pole location must not involve t")
    coeffs = [Poly.zero()]
    power = Poly.one()
    for _ in range(order):
        coeffs.append(power)
        power = power * c
    return TruncatedSeries(order, coeffs)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def poly_to_text(p):
    """Canonical text form: terms in descending order, ^ for powers."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    chunks = []
    for decoded, coeff in terms:
        body = "*".join(
            var_name(f, i) + (f"^{e}" if e > 1 else "") for f, i, e in decoded
        )
        mag = abs(coeff)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        chunks.append((coeff < 0, text))
    negative, text = chunks[0]
    out = [("-" if negative else "") + text]
    for negative, text in chunks[1:]:
        out.append((" - " if negative else " + ") + text)
    return "".join(out)


def poly_to_json_obj(p):
    """JSON-ready list of {"coeff": "num/den", "mono": {"family:index": exp}}."""
    out = []
    for decoded, coeff in p.sorted_terms():
        mono = {f"{f}:{i}": e for f, i, e in decoded}
        out.append({"coeff": f"{coeff.numerator}/{coeff.denominator}", "mono": mono})
    return out


def poly_from_json_obj(obj):
    """Parse the output of poly_to_json_obj (coeff accepts "n" or "n/d")."""
    total = Poly.zero()
    for entry in obj:
        coeff = Fraction(entry["coeff"])
        term = Poly.const(coeff)
        for key, exp in entry["mono"].items():
            family, _, index = key.partition(":")
            term = term * Poly.variable(family, int(index)) ** int(exp)
        total = total + term
    return total
