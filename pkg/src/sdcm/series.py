"""Exact arithmetic on formal Laurent series represented as rational functions.

A series is stored as t^shift * num(t) / den(t) with integer polynomials in
canonical form, so structural equality coincides with mathematical equality.
Coefficient extraction runs the linear recurrence given by the denominator;
the curvature (the exponential growth rate limsup a_n^(1/n) of the expansion
coefficients) is computed exactly from the smallest positive real root of the
denominator, falling back to a certified rational interval when that root is
irrational.  Everything uses arbitrary-precision integers and Fractions;
coefficients such as r^n overflow fixed-width types immediately.
"""

from fractions import Fraction

from . import config
from .errors import AmbiguousComparison, DivisionByZeroSeries, NonNegativityViolation


# ---------------------------------------------------------------------------
# Integer polynomials
# ---------------------------------------------------------------------------


def _gcd_int(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


class IntPolynomial:
    """Dense integer polynomial; coeffs[i] is the coefficient of t^i.

    Invariant: the trailing (highest-degree) coefficient is nonzero unless
    the polynomial is zero, in which case coeffs is empty.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def evaluate(self, x):
        """Evaluate at a Fraction (or int) by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def content(self):
        """gcd of the coefficients; 0 for the zero polynomial."""
        g = 0
        for c in self.coeffs:
            g = _gcd_int(g, c)
        return g

    def primitive(self):
        g = self.content()
        if g in (0, 1):
            return self
        return IntPolynomial(c // g for c in self.coeffs)

    def shift_down(self, k):
        """Divide by t^k; requires the low-order coefficients to vanish."""
        if k == 0:
            return self
        assert all(c == 0 for c in self.coeffs[:k])
        return IntPolynomial(self.coeffs[k:])

    def lowest_degree(self):
        """Smallest i with a nonzero coefficient; 0 for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0


IntPolynomial.ZERO = IntPolynomial()
IntPolynomial.ONE = IntPolynomial([1])


def _frac_coeffs(p):
    return [Fraction(c) for c in p.coeffs]


def _frac_trim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _frac_rem(a, b):
    """Remainder of a by b, both lists of Fractions, b nonzero."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        q = a[-1] / lb
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] -= q * b[i]
        a.pop()
        _frac_trim(a)
    return a


def _from_fracs(cs):
    """Clear denominators of a Fraction list, returning a primitive IntPolynomial."""
    if not cs:
        return IntPolynomial()
    lcm = 1
    for c in cs:
        lcm = lcm * c.denominator // _gcd_int(lcm, c.denominator)
    return IntPolynomial(int(c * lcm) for c in cs).primitive()


def poly_gcd(a, b):
    """Primitive gcd of two integer polynomials, positive leading coefficient."""
    fa, fb = _frac_coeffs(a), _frac_coeffs(b)
    while fb:
        fa, fb = fb, _frac_rem(fa, fb)
    g = _from_fracs(fa)
    if not g.is_zero and g.coeffs[-1] < 0:
        g = -g
    return g


def poly_divexact(a, b):
    """Quotient a/b when b divides a exactly; raises on nonzero remainder."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    fa, fb = _frac_coeffs(a), _frac_coeffs(b)
    db, lb = len(fb) - 1, fb[-1]
    q = [Fraction(0)] * max(len(fa) - db, 0)
    while len(fa) - 1 >= db and fa:
        c = fa[-1] / lb
        shift = len(fa) - 1 - db
        q[shift] = c
        for i in range(db + 1):
            fa[shift + i] -= c * fb[i]
        fa.pop()
        _frac_trim(fa)
    if fa:
        raise ValueError("polynomial division is not exact")
    assert all(c.denominator == 1 for c in q)
    return IntPolynomial(int(c) for c in q)


def squarefree_part(p):
    """p with repeated factors collapsed to multiplicity one."""
    if p.degree < 1:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree < 1:
        return p
    return poly_divexact(p, g).primitive()


# ---------------------------------------------------------------------------
# Laurent series
# ---------------------------------------------------------------------------


class LaurentSeries:
    """t^shift * num / den in canonical form.

    Canonical form: num and den are coprime primitive-compatible integer
    polynomials with gcd(content(num), content(den)) = 1, den(0) > 0, and
    num(0) != 0 unless num is zero (powers of t live in the shift).  The
    zero series is shift 0, num 0, den 1.

    Instances are immutable after construction; the private attributes cache
    monotone, idempotent recomputations (expansion prefix, nonnegativity
    scan, curvature per target width) and are safe to fill from any thread.
    """

    __slots__ = ("shift", "num", "den", "_expansion", "_nonneg_terms", "_curv")

    def __init__(self, shift, num, den=IntPolynomial.ONE):
        if not isinstance(num, IntPolynomial):
            num = IntPolynomial(num)
        if not isinstance(den, IntPolynomial):
            den = IntPolynomial(den)
        if den.is_zero:
            raise DivisionByZeroSeries("zero denominator")
        shift = int(shift)
        # Move powers of t between numerator, denominator and shift.
        k = den.lowest_degree()
        if k:
            den = den.shift_down(k)
            shift -= k
        if num.is_zero:
            shift, den = 0, IntPolynomial.ONE
        else:
            k = num.lowest_degree()
            if k:
                num = num.shift_down(k)
                shift += k
            g = poly_gcd(num, den)
            if g.degree > 0 or g.coeffs and g.coeffs[0] != 1:
                num = poly_divexact(num, g)
                den = poly_divexact(den, g)
            c = _gcd_int(num.content(), den.content())
            if c > 1:
                num = IntPolynomial(x // c for x in num.coeffs)
                den = IntPolynomial(x // c for x in den.coeffs)
            if den[0] < 0:
                num, den = -num, -den
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_expansion", [])
        object.__setattr__(self, "_nonneg_terms", 0)
        object.__setattr__(self, "_curv", {})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_int(cls, n):
        return cls(0, IntPolynomial([n]))

    @classmethod
    def monomial(cls, e, c=1):
        """c * t^e."""
        return cls(e, IntPolynomial([c]))

    @classmethod
    def geometric(cls, c):
        """1 / (1 - c*t)."""
        return cls(0, IntPolynomial.ONE, IntPolynomial([1, -c]))

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.shift == 0 and self.num == IntPolynomial.ONE and self.den == IntPolynomial.ONE

    @property
    def is_polynomial(self):
        """True when the expansion has finitely many nonzero terms."""
        return self.den.degree == 0

    def __eq__(self, other):
        return (isinstance(other, LaurentSeries)
                and self.shift == other.shift
                and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.shift, self.num, self.den))

    def eq_up_to_shift(self, other):
        """Equality after aligning the lowest nonzero coefficient at degree 0."""
        return self.num == other.num and self.den == other.den

    def __repr__(self):
        from .parse import render
        return f"LaurentSeries({render(self)!r})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        d = min(self.shift, other.shift)
        ta = _tpow(self.shift - d)
        tb = _tpow(other.shift - d)
        num = ta * self.num * other.den + tb * other.num * self.den
        return LaurentSeries(d, num, self.den * other.den)

    def __neg__(self):
        return LaurentSeries(self.shift, -self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return LaurentSeries(self.shift + other.shift, self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if other.is_zero:
            raise DivisionByZeroSeries("division by the zero series")
        return LaurentSeries(self.shift - other.shift, self.num * other.den, self.den * other.num)

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            raise ValueError("negative powers of a series are not defined here")
        out = LaurentSeries.from_int(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- expansion -----------------------------------------------------------

    def expansion(self, n_terms):
        """First n_terms coefficients of num/den as Fractions (shift ignored)."""
        cs = self._expansion
        if len(cs) < n_terms:
            q0 = Fraction(self.den[0])
            dq = self.den.degree
            for m in range(len(cs), n_terms):
                acc = Fraction(self.num[m])
                for i in range(1, min(m, dq) + 1):
                    acc -= self.den[i] * cs[m - i]
                cs.append(acc / q0)
        return cs[:n_terms]

    def coefficient(self, n):
        """Coefficient of t^n in the expansion around 0 (exact).

        Returns an int when the value is integral, otherwise the exact
        Fraction; non-integral values only arise for series outside the
        nonnegative-integer contract.
        """
        m = n - self.shift
        if m < 0 or self.is_zero:
            return 0
        if self.is_polynomial and m > self.num.degree:
            return 0
        c = self.expansion(m + 1)[m]
        return int(c) if c.denominator == 1 else c

    def check_nonneg(self, n_terms=None):
        """True when the first n_terms shift-normalized coefficients are
        nonnegative integers; records the successful scan length."""
        n_terms = config.effective_n_check(n_terms)
        if n_terms < 1:
            raise ValueError("n_terms must be at least 1")
        if self._nonneg_terms >= n_terms:
            return True
        for c in self.expansion(n_terms):
            if c < 0 or c.denominator != 1:
                return False
        object.__setattr__(self, "_nonneg_terms", max(self._nonneg_terms, n_terms))
        return True

    @property
    def checked_nonneg(self):
        return self._nonneg_terms > 0

    # -- curvature -----------------------------------------------------------

    def curvature(self, eps=None, n_check=None):
        """Growth rate of the expansion coefficients; see `curvature`."""
        return curvature(self, eps=eps, n_check=n_check)


def _tpow(k):
    assert k >= 0
    return IntPolynomial([0] * k + [1])


# Contract-surface aliases for the series operations.


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def div(a, b):
    return a / b


def coefficient(a, n):
    return a.coefficient(n)


def check_nonneg(a, n_terms=None):
    return a.check_nonneg(n_terms)


# ---------------------------------------------------------------------------
# Curvature values
# ---------------------------------------------------------------------------


class Curvature:
    """A nonnegative growth rate: exact rational, or a rational interval.

    Intervals carry an optional refiner, a callable mapping a target width
    to a tighter Curvature for the same underlying quantity.  Sums of
    curvatures (route lengths, distances) use the same type.
    """

    __slots__ = ("lo", "hi", "_refiner")

    def __init__(self, lo, hi, refiner=None):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("empty curvature interval")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "_refiner", refiner)

    def __setattr__(self, name, value):
        raise AttributeError("Curvature is immutable")

    @classmethod
    def exact(cls, value):
        value = Fraction(value)
        return cls(value, value)

    @classmethod
    def interval(cls, lo, hi, refiner=None):
        return cls(lo, hi, refiner)

    @property
    def is_exact(self):
        return self.lo == self.hi

    @property
    def value(self):
        if not self.is_exact:
            raise ValueError("interval curvature has no single value")
        return self.lo

    @property
    def width(self):
        return self.hi - self.lo

    def refine(self, eps):
        if self.is_exact or self.width <= eps or self._refiner is None:
            return self
        return self._refiner(eps)

    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __add__(self, other):
        if not isinstance(other, Curvature):
            return NotImplemented
        if self.is_exact and other.is_exact:
            return Curvature.exact(self.lo + other.lo)
        a, b = self, other
        return Curvature(a.lo + b.lo, a.hi + b.hi,
                         refiner=lambda eps: a.refine(eps / 2) + b.refine(eps / 2))

    def __eq__(self, other):
        if not isinstance(other, Curvature):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        if self.is_exact:
            return f"Curvature.exact({self.lo!r})"
        return f"Curvature.interval({self.lo!r}, {self.hi!r})"

    def __str__(self):
        return format_curvature(self)


def format_curvature(c):
    """Exact values as `p/q` or an integer; intervals as `[lo,hi]`."""
    if c.is_exact:
        return _fmt_fraction(c.lo)
    return f"[{_fmt_fraction(c.lo)},{_fmt_fraction(c.hi)}]"


def _fmt_fraction(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def compare(a, b, refine=True):
    """Total comparison of curvature values: -1, 0 or +1.

    Overlapping distinct intervals get one refinement pass at a width
    reduced by config.REFINE_FACTOR, then raise AmbiguousComparison;
    refusing to answer beats a silent misranking.
    """
    if a is b or (a.is_exact and b.is_exact):
        if a.lo < b.lo:
            return -1
        if a.lo > b.lo:
            return 1
        return 0
    if a.hi < b.lo:
        return -1
    if b.hi < a.lo:
        return 1
    if (a.lo, a.hi) == (b.lo, b.hi) and a._refiner is None and b._refiner is None:
        # hand-built intervals with no way to separate; treat as equal
        return 0
    if refine:
        eps = min(x for x in (a.width, b.width) if x > 0) / config.REFINE_FACTOR
        return compare(a.refine(eps), b.refine(eps), refine=False)
    raise AmbiguousComparison(
        f"cannot order overlapping intervals {format_curvature(a)} and {format_curvature(b)}")


def certainly_lt(a, b):
    """True only when every value of a is below every value of b."""
    return a.hi < b.lo or (a.is_exact and b.is_exact and a.lo < b.lo)


def certainly_gt(a, b):
    return certainly_lt(b, a)


def possibly_equal(a, b):
    """False only when the two values are certainly different."""
    return not (a.hi < b.lo or b.hi < a.lo)


def curv_max(values):
    best = None
    for v in values:
        if best is None or compare(v, best) > 0:
            best = v
    return best


# ---------------------------------------------------------------------------
# Curvature computation
# ---------------------------------------------------------------------------


def _sturm_chain(p):
    """Sturm chain of a squarefree polynomial, as Fraction coefficient lists."""
    chain = [_frac_coeffs(p), _frac_coeffs(p.derivative())]
    while chain[-1]:
        r = _frac_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _eval_fracs(cs, x):
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _sign_variations(chain, x):
    signs = []
    for cs in chain:
        v = _eval_fracs(cs, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    count = 0
    for s, t in zip(signs, signs[1:]):
        if s != t:
            count += 1
    return count


def _roots_in(chain, a, b):
    """Number of distinct real roots in the half-open interval (a, b]."""
    return _sign_variations(chain, a) - _sign_variations(chain, b)


def _positive_divisors(n):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _rational_roots_positive(p):
    """All positive rational roots of p, exact, via the rational root theorem."""
    if p.is_zero:
        return []
    c0, ce = p.coeffs[0], p.coeffs[-1]
    if c0 == 0:
        c0 = next(c for c in p.coeffs if c)
    roots = set()
    for a in _positive_divisors(c0):
        for b in _positive_divisors(ce):
            cand = Fraction(a, b)
            if p.evaluate(cand) == 0:
                roots.add(cand)
    return sorted(roots)


def _smallest_positive_root(q, eps):
    """Smallest positive real root of q as ('exact', Fraction) or
    ('interval', lo, hi, chain) with 1/lo - 1/hi <= eps, or None."""
    qsf = squarefree_part(q)
    chain = _sturm_chain(qsf)
    bound = Fraction(1) + max(abs(c) for c in qsf.coeffs) / abs(qsf.coeffs[-1])
    total = _roots_in(chain, Fraction(0), bound)
    if total == 0:
        return None
    rationals = _rational_roots_positive(qsf)
    if rationals:
        r = rationals[0]
        if _roots_in(chain, Fraction(0), r) == 1:
            return ("exact", r)
        hi = r
    else:
        hi = bound
    # The leftmost root is irrational; isolate it by Sturm-guided bisection.
    # Roots of qsf are bounded below by the Cauchy bound of the reversed
    # polynomial, which keeps the reciprocal interval finite from the start.
    low_bound = Fraction(1, 1 + max(abs(c) for c in qsf.coeffs) // abs(qsf.coeffs[0]) + 1)
    lo = low_bound
    while _roots_in(chain, Fraction(0), lo) > 0:
        lo /= 2
    while 1 / lo - 1 / hi > eps:
        mid = (lo + hi) / 2
        if _eval_fracs(chain[0], mid) == 0:
            # A rational bisection point cannot be a root: the rational root
            # search was exhaustive.  Nudge defensively.
            mid = (lo + 2 * hi) / 3
        if _roots_in(chain, Fraction(0), mid) >= 1:
            hi = mid
        else:
            lo = mid
    return ("interval", lo, hi, chain)


def curvature(a, eps=None, n_check=None):
    """limsup of the n-th root of the expansion coefficients of `a`.

    Requires the nonnegative-integer coefficient check to pass (it is run
    here when the series has not been scanned yet).  Polynomials have
    curvature 0.  Otherwise the value is the reciprocal of the smallest
    positive real root of the denominator, which exists for genuinely
    nonnegative series because the radius of convergence is itself a
    singularity on the positive real axis.  The result is exact when that
    root is rational and an interval of width at most eps otherwise.
    """
    eps = config.effective_eps(eps)
    if not a.check_nonneg(n_check):
        cs = a.expansion(config.effective_n_check(n_check))
        idx = next(i for i, c in enumerate(cs) if c < 0 or c.denominator != 1)
        raise NonNegativityViolation(
            f"coefficient {cs[idx]} at index {idx} breaks the nonnegative-integer contract",
            index=idx, coefficient=cs[idx])
    if a.is_zero or a.is_polynomial:
        return Curvature.exact(0)
    cached = a._curv.get(None) or a._curv.get(eps)
    if cached is not None:
        return cached
    found = _smallest_positive_root(a.den, eps)
    if found is None:
        raise NonNegativityViolation(
            "denominator has no positive real root, so the coefficients "
            "cannot all be nonnegative; the prefix check was too short")
    if found[0] == "exact":
        result = Curvature.exact(1 / found[1])
        object.__setattr__(a, "_curv", {**a._curv, None: result})
        return result
    _, lo, hi, chain = found

    def refiner(target, lo=lo, hi=hi):
        while 1 / lo - 1 / hi > target:
            mid = (lo + hi) / 2
            if _eval_fracs(chain[0], mid) == 0:
                mid = (lo + 2 * hi) / 3
            if _roots_in(chain, Fraction(0), mid) >= 1:
                hi = mid
            else:
                lo = mid
        return Curvature.interval(1 / hi, 1 / lo,
                                  refiner=lambda t: refiner(t, lo, hi))

    result = Curvature.interval(1 / hi, 1 / lo, refiner=refiner)
    object.__setattr__(a, "_curv", {**a._curv, eps: result})
    return result


# ---------------------------------------------------------------------------
# Independent growth-rate estimate
# ---------------------------------------------------------------------------


def _int_nth_root(x, n):
    """floor(x ** (1/n)) for nonnegative integer x."""
    if x == 0:
        return 0
    if n == 1:
        return x
    guess = 1 << ((x.bit_length() + n - 1) // n)
    while True:
        better = ((n - 1) * guess + x // guess ** (n - 1)) // n
        if better >= guess:
            break
        guess = better
    while guess ** n > x:
        guess -= 1
    while (guess + 1) ** n <= x:
        guess += 1
    return guess


_ROOT_DIGITS = 6


def _nth_root_fraction(x, n):
    """Rational lower approximation of x ** (1/n) for Fraction x >= 0."""
    if x == 0:
        return Fraction(0)
    p, q = x.numerator, x.denominator
    scale = 10 ** _ROOT_DIGITS
    # (p/q)^(1/n) = (p * q^(n-1))^(1/n) / q
    root = _int_nth_root(p * q ** (n - 1) * scale ** n, n)
    return Fraction(root, q * scale)


def curvature_estimate(a, n_max):
    """Direct sampled estimate of the growth rate: max of a_n^(1/n) over the
    upper half of the first n_max shift-normalized coefficients.

    This is a deliberately independent cross-check of `curvature`; it never
    consults the denominator roots.
    """
    if n_max < 8:
        raise ValueError("n_max must be at least 8")
    cs = a.expansion(n_max + 1)
    best = Fraction(0)
    for n in range(n_max // 2, n_max + 1):
        c = cs[n]
        if c > 0:
            r = _nth_root_fraction(Fraction(c), n)
            if r > best:
                best = r
    return best
