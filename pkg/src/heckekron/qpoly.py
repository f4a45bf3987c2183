"""Exact Laurent-polynomial arithmetic in t, quantum integers and binomials,
the bar involution and the bar-invariant/t-positive splitting."""

from functools import lru_cache


class ExactDivisionError(ArithmeticError):
    pass


class BarSplitError(ArithmeticError):
    pass


class LaurentPoly:
    """Integer Laurent polynomial as a sparse exponent -> coefficient map.

    Zero coefficients are never stored, so equality is map equality.
    Coefficients are arbitrary-precision ints.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    self.c[int(k)] = v

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def t_power(cls, k, coeff=1):
        return cls({k: coeff})

    def coeff(self, k):
        return self.c.get(k, 0)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        return isinstance(other, LaurentPoly) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.c)
        for k, v in other.c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        res = LaurentPoly()
        res.c = out
        return res

    def __neg__(self):
        res = LaurentPoly()
        res.c = {k: -v for k, v in self.c.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            res = LaurentPoly()
            res.c = {k: v * other for k, v in self.c.items()}
            return res
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = k1 + k2
                w = out.get(k, 0) + v1 * v2
                if w:
                    out[k] = w
                else:
                    del out[k]
        res = LaurentPoly()
        res.c = out
        return res

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t^k."""
        res = LaurentPoly()
        res.c = {e + k: v for e, v in self.c.items()}
        return res

    def bar(self):
        """The involution t <-> t^-1."""
        res = LaurentPoly()
        res.c = {-k: v for k, v in self.c.items()}
        return res

    def is_bar_invariant(self):
        return all(self.c.get(-k, 0) == v for k, v in self.c.items())

    def is_nonnegative(self):
        return all(v > 0 for v in self.c.values())

    def min_exp(self):
        return min(self.c) if self.c else None

    def max_exp(self):
        return max(self.c) if self.c else None

    def evaluate(self, x=1):
        if x == 1:
            return sum(self.c.values())
        num = sum(v * x ** k for k, v in self.c.items() if k >= 0)
        neg = [(k, v) for k, v in self.c.items() if k < 0]
        if neg:
            raise ValueError("negative exponents need x=1 or a Fraction")
        return num

    def dilate(self, factor=2):
        """Substitute t -> t^factor."""
        res = LaurentPoly()
        res.c = {k * factor: v for k, v in self.c.items()}
        return res

    def render(self):
        """Fixed text form: terms ascending in exponent, joined by '+'."""
        if not self.c:
            return "0"
        terms = []
        for k in sorted(self.c):
            v = self.c[k]
            if k == 0:
                terms.append(str(v))
            else:
                tpow = "t" if k == 1 else f"t^{k}"
                if v == 1:
                    terms.append(tpow)
                elif v == -1:
                    terms.append(f"-{tpow}")
                else:
                    terms.append(f"{v}*{tpow}")
        return "+".join(terms).replace("+-", "-")

    def __repr__(self):
        return f"LaurentPoly({self.render()})"

    def to_json(self):
        return {str(k): v for k, v in sorted(self.c.items())}

    @classmethod
    def from_json(cls, obj):
        return cls({int(k): int(v) for k, v in obj.items()})


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


def quantum_integer(n):
    """[n] = t^-(n-1) + t^-(n-3) + ... + t^(n-1); [0] = 0."""
    if n < 0:
        raise ValueError("quantum integer of a negative number")
    return LaurentPoly({k: 1 for k in range(-(n - 1), n, 2)})


@lru_cache(maxsize=None)
def quantum_factorial_int(n):
    if n <= 1:
        return ONE
    return quantum_factorial_int(n - 1) * quantum_integer(n)


def quantum_factorial(comp):
    """Product of [entry]! over the entries of a composition."""
    out = ONE
    for m in comp:
        if m > 1:
            out = out * quantum_factorial_int(m)
    return out


def quantum_binomial(a, b):
    """[a]! / ([b]! [a-b]!), computed by exact division."""
    if not a >= b >= 0:
        raise ValueError("need a >= b >= 0")
    return exact_divide(quantum_factorial_int(a),
                        quantum_factorial_int(b) * quantum_factorial_int(a - b))


def dilated_quantum_factorial(comp):
    """Quantum factorial with every exponent doubled (t -> t^2)."""
    return quantum_factorial(comp).dilate(2)


def bar(f):
    return f.bar()


def bar_split(f):
    """Split f (non-negative coefficients) uniquely as barInvariant + positive
    with barInvariant bar-fixed in N0[t, t^-1] and positive in tN0[t].

    The bar-invariant part mirrors the coefficients of the non-positive
    exponents; failure of the remainder to be non-negative or t-positive means
    the input was not of the promised form and is a fatal arithmetic error.
    """
    if not f.is_nonnegative() and f:
        raise BarSplitError(f"negative coefficient in {f!r}")
    inv = {}
    for k, v in f.c.items():
        if k < 0:
            inv[k] = v
            inv[-k] = v
        elif k == 0:
            inv[0] = v
    invariant = LaurentPoly(inv)
    positive = f - invariant
    if positive.c and (min(positive.c) < 1 or not positive.is_nonnegative()):
        raise BarSplitError(
            f"input not expressible as bar-invariant + t-positive: {f!r}")
    return invariant, positive


def exact_divide(f, g):
    """Return q with f = q*g, or raise if no Laurent polynomial q exists."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return ZERO
    rem = dict(f.c)
    glo = min(g.c)
    max_shift = max(f.c) - max(g.c)
    out = {}
    while rem:
        lo = min(rem)
        coeff, r = divmod(rem[lo], g.c[glo])
        shift = lo - glo
        if r or shift > max_shift:
            raise ExactDivisionError(f"{f!r} is not divisible by {g!r}")
        out[shift] = coeff
        for k, v in g.c.items():
            key = k + shift
            w = rem.get(key, 0) - coeff * v
            if w:
                rem[key] = w
            else:
                rem.pop(key, None)
    return LaurentPoly(out)
