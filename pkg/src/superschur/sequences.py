"""Doubly-infinite parameter sequences a = (a_i) and their operators.

A sequence is one of four bases:

  zero        a_i = 0 everywhere
  arith       a_i = i + offset (offset rational)
  explicit    rational values on a declared window lo..hi
  symbolic    a_i is the symbol a_i of the polynomial ring, window lo..hi

wrapped by any stack of lazy operators: shift(k) maps a_i -> a_{i+k},
star(n) maps a_i -> -a_{n-i+1}, neg maps a_i -> -a_i.  Operators resolve
only when an entry is fetched, so negative shifts and stars compose without
eager window bookkeeping.  Window violations raise WindowExceeded carrying
the offending base index; they are never silently zero.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Poly
from .errors import WindowExceeded

ZERO = "zero"
ARITH = "arith"
EXPLICIT = "explicit"
SYMBOLIC = "symbolic"


@dataclass(frozen=True)
class ParamSequence:
    kind: str
    offset: Fraction = Fraction(0)
    window: tuple = None
    values: tuple = None
    ops: tuple = field(default=())

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(ZERO)

    @classmethod
    def arithmetic(cls, offset=0):
        """a_i = i + offset."""
        return cls(ARITH, offset=Fraction(offset))

    @classmethod
    def explicit(cls, lo, values):
        """Rational values a_lo, a_{lo+1}, ..."""
        vals = tuple(Fraction(v) for v in values)
        if not vals:
            raise ValueError("explicit sequence needs at least one value")
        return cls(EXPLICIT, window=(lo, lo + len(vals) - 1), values=vals)

    @classmethod
    def symbolic(cls, lo, hi):
        """Independent symbols a_lo .. a_hi."""
        if hi < lo:
            raise ValueError(f"empty symbolic window {lo}..{hi}")
        return cls(SYMBOLIC, window=(lo, hi))

    # -- lazy operators ---------------------------------------------------

    def shift(self, k):
        """The sequence with entries a_{i+k}; shifts merge."""
        if k == 0:
            return self
        if self.ops and self.ops[0][0] == "shift":
            merged = self.ops[0][1] + k
            rest = self.ops[1:]
            new_ops = rest if merged == 0 else (("shift", merged),) + rest
        else:
            new_ops = (("shift", k),) + self.ops
        return self._with_ops(new_ops)

    def star(self, n):
        """The sequence with entries -a_{n-i+1}; star is an involution."""
        if self.ops and self.ops[0] == ("star", n):
            return self._with_ops(self.ops[1:])
        return self._with_ops((("star", n),) + self.ops)

    def neg(self):
        """The sequence with entries -a_i."""
        if self.ops and self.ops[0] == ("neg",):
            return self._with_ops(self.ops[1:])
        return self._with_ops((("neg",),) + self.ops)

    def _with_ops(self, ops):
        return ParamSequence(self.kind, self.offset, self.window, self.values, ops)

    # -- access -----------------------------------------------------------

    def resolve(self, i):
        """Unwind the operator stack: (base index, sign) for entry i."""
        sign = 1
        for op in self.ops:
            if op[0] == "shift":
                i += op[1]
            elif op[0] == "star":
                i = op[1] - i + 1
                sign = -sign
            else:
                sign = -sign
        return i, sign

    def _base_value(self, i):
        if self.kind == ZERO:
            return Fraction(0)
        if self.kind == ARITH:
            return i + self.offset
        lo, hi = self.window
        if not lo <= i <= hi:
            raise WindowExceeded(i, self.window)
        if self.kind == EXPLICIT:
            return self.values[i - lo]
        return None  # symbolic

    def get(self, i):
        """Entry a_i as a Poly (a rational constant or an a-symbol)."""
        idx, sign = self.resolve(i)
        value = self._base_value(idx)
        if value is None:
            p = Poly.variable("a", idx)
            return -p if sign < 0 else p
        return Poly.const(sign * value)

    def rational(self, i):
        """Entry a_i as a Fraction; only for numeric sequences."""
        idx, sign = self.resolve(i)
        value = self._base_value(idx)
        if value is None:
            raise ValueError("symbolic sequence has no rational entries")
        return sign * value

    @property
    def is_numeric(self):
        return self.kind != SYMBOLIC

    def is_multiplicity_free(self, lo, hi):
        """True iff the entries a_lo..a_hi are pairwise distinct."""
        if self.kind == SYMBOLIC:
            return True
        seen = set()
        for i in range(lo, hi + 1):
            v = self.rational(i)
            if v in seen:
                return False
            seen.add(v)
        return True

    def describe(self):
        """Short human-readable form for reports."""
        if self.kind == ZERO:
            base = "zero"
        elif self.kind == ARITH:
            base = f"arith:{self.offset}"
        elif self.kind == EXPLICIT:
            base = f"list:{self.window[0]}:" + ",".join(str(v) for v in self.values)
        else:
            base = f"sym:{self.window[0]}:{self.window[1]}"
        for op in reversed(self.ops):
            if op[0] == "shift":
                base = f"shift^{op[1]}({base})"
            elif op[0] == "star":
                base = f"star_{op[1]}({base})"
            else:
                base = f"-({base})"
        return base


def eval_point(seq, alpha, length):
    """The length-l tuple (a_{alpha_1+l}, a_{alpha_2+l-1}, ..., a_{alpha_l+1}).

    alpha is a partition with at most `length` parts, padded with zeros.
    Components are Polys (constants for numeric sequences).
    """
    if len(alpha) > length and any(p > 0 for p in alpha[length:]):
        raise ValueError(f"partition {alpha} longer than the {length}-tuple")
    padded = tuple(alpha) + (0,) * (length - len(alpha))
    return tuple(seq.get(padded[i] + length - i) for i in range(length))


def falling_product(family, index, seq, k, shift=0):
    """prod_{j=1..k} (v - a_{shift+j}) for the variable v = (family, index)."""
    if k < 0:
        raise ValueError("falling products need a nonnegative number of factors")
    v = Poly.variable(family, index)
    result = Poly.one()
    for j in range(1, k + 1):
        result = result * (v - seq.get(shift + j))
    return result


def parse_sequence(text):
    """Parse the CLI grammar: zero | arith:<offset> | list:<lo>:<v,..> | sym:<lo>:<hi>."""
    text = text.strip()
    if text == "zero":
        return ParamSequence.zero()
    head, _, rest = text.partition(":")
    if head == "arith":
        try:
            return ParamSequence.arithmetic(Fraction(rest))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad arithmetic offset {rest!r}") from None
    if head == "list":
        lo_text, _, vals_text = rest.partition(":")
        try:
            lo = int(lo_text)
            values = [Fraction(v) for v in vals_text.split(",")]
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad explicit sequence {text!r}") from None
        return ParamSequence.explicit(lo, values)
    if head == "sym":
        lo_text, _, hi_text = rest.partition(":")
        try:
            return ParamSequence.symbolic(int(lo_text), int(hi_text))
        except ValueError:
            raise ValueError(f"bad symbolic window {text!r}") from None
    raise ValueError(f"unknown sequence spec {text!r}")
