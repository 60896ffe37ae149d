"""Sparse Laurent polynomials and certified windows into iterated Laurent series.

The series live in the field of iterated Laurent series for the variable
ordering t_1 << t_2 << ... << t_m << 1: supports are well-ordered for the
lexicographic order in which the t_1-exponent is most significant.  A rational
function with nonzero denominator has a unique expansion there: factor the
lexicographically least monomial out of the denominator, then run a geometric
series in the remaining (lex-positive) tail.

Infinitely many exponents can carry nonzero coefficients, so the code only
ever materializes a *window* - a finite exponent box - together with enough
support information to certify that the window's coefficients are exact:

* a ``TruncatedSeries`` stores the coefficients inside its window plus lower
  bounds on the prefix sums a_1, a_1+a_2, ... of every exponent tuple in the
  *full* support;
* ``cauchy_mul`` uses those bounds to confirm that every pair of exponents
  that could contribute to the requested output window is actually stored.
  If that cannot be shown, it raises ``WindowError("truncation too narrow")``
  instead of returning a possibly-wrong coefficient;
* reading a coefficient outside the window raises
  ``WindowError("coefficient not determined")``.

Failing loudly is the contract: a returned number is always exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian


class WindowError(ValueError):
    """A window was too small to determine a requested coefficient exactly."""


def _lex_positive(expts: tuple[int, ...]) -> bool:
    """True iff the first nonzero entry is positive (monomial -> 0 in the order)."""
    for e in expts:
        if e:
            return e > 0
    return False


def _prefix_sums(expts: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    acc = 0
    for e in expts:
        acc += e
        out.append(acc)
    return tuple(out)


def _vec_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _vec_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """Sparse Laurent polynomial: exponent tuples (any sign) -> coefficients.

    Coefficients may be exact rationals or base-ring classes; zero
    coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        if nvars < 0:
            raise ValueError("nvars must be >= 0")
        clean = {}
        if terms:
            for expts, value in terms.items():
                expts = tuple(expts)
                if len(expts) != nvars:
                    raise ValueError("exponent arity mismatch")
                if value:
                    clean[expts] = value
        self.nvars = nvars
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.monomial(nvars, (0,) * nvars)

    @classmethod
    def monomial(cls, nvars: int, expts, coeff=Fraction(1)) -> "LaurentPoly":
        return cls(nvars, {tuple(expts): coeff})

    @classmethod
    def variable(cls, nvars: int, slot: int) -> "LaurentPoly":
        """The monomial t_{slot+1} (slots are 0-based)."""
        expts = tuple(1 if i == slot else 0 for i in range(nvars))
        return cls.monomial(nvars, expts)

    # -- basic queries ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentPoly(0)"
        bits = []
        for expts in sorted(self.terms):
            mono = "*".join(
                f"t{i + 1}^{e}" if e != 1 else f"t{i + 1}"
                for i, e in enumerate(expts)
                if e
            )
            coeff = self.terms[expts]
            bits.append(f"({coeff})" + (f"*{mono}" if mono else ""))
        return "LaurentPoly(" + " + ".join(bits) + ")"

    def coeff(self, expts) -> object:
        return self.terms.get(tuple(expts), Fraction(0))

    def support(self):
        return self.terms.keys()

    def lex_least(self) -> tuple[tuple[int, ...], object]:
        """The lexicographically least exponent and its coefficient."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        expts = min(self.terms)
        return expts, self.terms[expts]

    def prefix_mins(self) -> tuple[int, ...]:
        """Componentwise minimum of prefix sums over the support.

        For an empty polynomial any bound is valid; zeros are returned.
        """
        if not self.terms:
            return (0,) * self.nvars
        mins = [None] * self.nvars
        for expts in self.terms:
            for j, p in enumerate(_prefix_sums(expts)):
                if mins[j] is None or p < mins[j]:
                    mins[j] = p
        return tuple(mins)

    def prefix_maxs(self) -> tuple[int, ...]:
        """Componentwise maximum of prefix sums over the support."""
        if not self.terms:
            return (0,) * self.nvars
        maxs = [None] * self.nvars
        for expts in self.terms:
            for j, p in enumerate(_prefix_sums(expts)):
                if maxs[j] is None or p > maxs[j]:
                    maxs[j] = p
        return tuple(maxs)

    def slot_range(self, slot: int) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        vals = [e[slot] for e in self.terms]
        return (min(vals), max(vals))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        merged = dict(self.terms)
        for expts, value in other.terms.items():
            if expts in merged:
                total = merged[expts] + value
                if total:
                    merged[expts] = total
                else:
                    del merged[expts]
            else:
                merged[expts] = value
        return LaurentPoly(self.nvars, merged)

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -v for e, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            out: dict = {}
            for e1, v1 in self.terms.items():
                for e2, v2 in other.terms.items():
                    expts = _vec_add(e1, e2)
                    prod = v1 * v2
                    if expts in out:
                        total = out[expts] + prod
                        if total:
                            out[expts] = total
                        else:
                            del out[expts]
                    elif prod:
                        out[expts] = prod
            return LaurentPoly(self.nvars, out)
        # scalar (rational or ring class)
        return LaurentPoly(self.nvars, {e: v * other for e, v in self.terms.items()})

    def __rmul__(self, other):
        return LaurentPoly(self.nvars, {e: other * v for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined; expand instead")
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structural helpers ----------------------------------------------------

    def mul_monomial(self, expts, coeff=Fraction(1)) -> "LaurentPoly":
        expts = tuple(expts)
        return LaurentPoly(
            self.nvars, {_vec_add(e, expts): v * coeff for e, v in self.terms.items()}
        )

    def extract_slot(self, slot: int, k: int) -> "LaurentPoly":
        """Coefficient of t_{slot+1}^k, as a polynomial with that slot zeroed."""
        out = {}
        for expts, value in self.terms.items():
            if expts[slot] == k:
                reduced = list(expts)
                reduced[slot] = 0
                out[tuple(reduced)] = value
        return LaurentPoly(self.nvars, out)

    def restrict_slot_min(self, slot: int, lo: int) -> "LaurentPoly":
        """Drop terms whose exponent in ``slot`` is below ``lo``."""
        return LaurentPoly(
            self.nvars, {e: v for e, v in self.terms.items() if e[slot] >= lo}
        )

    def map_coefficients(self, fn) -> "LaurentPoly":
        out = {}
        for expts, value in self.terms.items():
            new = fn(value)
            if new:
                out[expts] = new
        return LaurentPoly(self.nvars, out)


@dataclass(frozen=True)
class Window:
    """A finite exponent box [lo_1, hi_1] x ... x [lo_m, hi_m]."""

    los: tuple[int, ...]
    his: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.los) != len(self.his):
            raise ValueError("bound arity mismatch")
        if any(lo > hi for lo, hi in zip(self.los, self.his)):
            raise ValueError("window bounds must satisfy lo <= hi")

    @classmethod
    def from_pairs(cls, pairs) -> "Window":
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @classmethod
    def cube(cls, nvars: int, lo: int, hi: int) -> "Window":
        return cls((lo,) * nvars, (hi,) * nvars)

    @classmethod
    def point(cls, expts) -> "Window":
        expts = tuple(expts)
        return cls(expts, expts)

    @property
    def nvars(self) -> int:
        return len(self.los)

    def contains(self, expts: tuple[int, ...]) -> bool:
        return all(lo <= e <= hi for lo, e, hi in zip(self.los, expts, self.his))

    def contains_window(self, other: "Window") -> bool:
        return all(a <= b for a, b in zip(self.los, other.los)) and all(
            a >= b for a, b in zip(self.his, other.his)
        )

    def shift(self, expts: tuple[int, ...]) -> "Window":
        return Window(_vec_add(self.los, expts), _vec_add(self.his, expts))

    def widened(self) -> "Window":
        """Double each half-extent about the center (grows by at least 1 per side)."""
        los, his = [], []
        for lo, hi in zip(self.los, self.his):
            center = (lo + hi) // 2
            half = max(hi - center, center - lo, 0)
            half = 2 * half + 1
            los.append(center - half)
            his.append(center + half)
        return Window(tuple(los), tuple(his))

    def iter_exponents(self):
        return _cartesian(*(range(lo, hi + 1) for lo, hi in zip(self.los, self.his)))


class TruncatedSeries:
    """The restriction of an iterated Laurent series to a window.

    ``prefix_mins[j]`` / ``prefix_maxs[j]`` bound a_1 + ... + a_{j+1} over
    the FULL support of the series (not just the window); ``None`` means no
    bound is known on that side.  The two-sided bounds are what make windowed
    multiplication certifiable - e.g. the universal tower factors live on
    "all prefix sums >= 0 and total degree exactly 0", which is expressed as
    prefix_mins = (0, ..., 0) and prefix_maxs = (None, ..., None, 0).
    """

    __slots__ = ("nvars", "window", "terms", "prefix_mins", "prefix_maxs")

    def __init__(self, window: Window, terms: dict, prefix_mins, prefix_maxs):
        self.nvars = window.nvars
        self.window = window
        clean = {}
        for expts, value in terms.items():
            expts = tuple(expts)
            if len(expts) != self.nvars:
                raise ValueError("exponent arity mismatch")
            if not window.contains(expts):
                raise ValueError(f"term {expts} lies outside the window")
            if value:
                clean[expts] = value
        self.terms = clean
        prefix_mins = tuple(prefix_mins)
        prefix_maxs = tuple(prefix_maxs)
        if len(prefix_mins) != self.nvars or len(prefix_maxs) != self.nvars:
            raise ValueError("prefix bound arity mismatch")
        self.prefix_mins = prefix_mins
        self.prefix_maxs = prefix_maxs

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.window == other.window
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        body = LaurentPoly(self.nvars, dict(self.terms)) if self.terms else "0"
        return f"TruncatedSeries({self.window}, {body})"

    def coeff(self, expts) -> object:
        return coeff(self, expts)

    def as_poly(self) -> LaurentPoly:
        """The windowed coefficients as a plain Laurent polynomial."""
        return LaurentPoly(self.nvars, dict(self.terms))

    def restricted(self, window: Window) -> "TruncatedSeries":
        if not self.window.contains_window(window):
            raise WindowError("coefficient not determined")
        return TruncatedSeries(
            window,
            {e: v for e, v in self.terms.items() if window.contains(e)},
            self.prefix_mins,
            self.prefix_maxs,
        )


def coeff(obj, expts):
    """Exact coefficient at ``expts``; loud failure outside a series window."""
    expts = tuple(expts)
    if isinstance(obj, LaurentPoly):
        return obj.coeff(expts)
    if isinstance(obj, TruncatedSeries):
        if not obj.window.contains(expts):
            raise WindowError("coefficient not determined")
        return obj.terms.get(expts, Fraction(0))
    raise TypeError("coeff expects a LaurentPoly or TruncatedSeries")


def _add_bounds(a, b):
    return tuple(
        None if (x is None or y is None) else x + y for x, y in zip(a, b)
    )


def _poly_bounds(p: LaurentPoly):
    return p.prefix_mins(), p.prefix_maxs()


def _outside_bounds(expts: tuple[int, ...], prefix_mins, prefix_maxs) -> bool:
    """True iff ``expts`` provably lies outside the bounded support region."""
    acc = 0
    for e, lo, hi in zip(expts, prefix_mins, prefix_maxs):
        acc += e
        if lo is not None and acc < lo:
            return True
        if hi is not None and acc > hi:
            return True
    return False


def _fiber_box(out_window: Window, bounds_self, bounds_other):
    """Box certain to contain the self-side exponent of every contributing pair.

    For a product A*B restricted to ``out_window``, a pair (a, b) with
    a + b = e in the window contributes only if every prefix sum satisfies

        P_j(a) >= mins_A[j],          P_j(a) <= maxs_A[j],
        P_j(a) <= P_j(e) - mins_B[j], P_j(a) >= P_j(e) - maxs_B[j].

    Extremizing P_j(e) over the window box yields intervals [L_j, U_j] for
    P_j(a) and hence per-variable intervals for a_j = P_j(a) - P_{j-1}(a).

    Returns a Window, or None if some side has no finite certificate, or
    "empty" if the constraints are contradictory (no pair contributes
    anywhere in the window, i.e. the product restricts to zero).
    """
    mins_self, maxs_self = bounds_self
    mins_other, maxs_other = bounds_other
    lo_prefix = _prefix_sums(out_window.los)
    hi_prefix = _prefix_sums(out_window.his)
    nv = out_window.nvars
    lower, upper = [], []
    for j in range(nv):
        lo_cands = []
        hi_cands = []
        if mins_self[j] is not None:
            lo_cands.append(mins_self[j])
        if maxs_other[j] is not None:
            lo_cands.append(lo_prefix[j] - maxs_other[j])
        if maxs_self[j] is not None:
            hi_cands.append(maxs_self[j])
        if mins_other[j] is not None:
            hi_cands.append(hi_prefix[j] - mins_other[j])
        if not lo_cands or not hi_cands:
            return None
        lo, hi = max(lo_cands), min(hi_cands)
        if lo > hi:
            return "empty"
        lower.append(lo)
        upper.append(hi)
    los, his = [], []
    for j in range(nv):
        if j == 0:
            lo, hi = lower[0], upper[0]
        else:
            lo, hi = lower[j] - upper[j - 1], upper[j] - lower[j - 1]
        if lo > hi:
            return "empty"
        los.append(lo)
        his.append(hi)
    return Window(tuple(los), tuple(his))


def _mul_series_series(a: TruncatedSeries, b: TruncatedSeries, out_window: Window):
    bounds_a = (a.prefix_mins, a.prefix_maxs)
    bounds_b = (b.prefix_mins, b.prefix_maxs)
    box_a = _fiber_box(out_window, bounds_a, bounds_b)
    box_b = _fiber_box(out_window, bounds_b, bounds_a)
    mins = _add_bounds(a.prefix_mins, b.prefix_mins)
    maxs = _add_bounds(a.prefix_maxs, b.prefix_maxs)
    if box_a == "empty" or box_b == "empty":
        return TruncatedSeries(out_window, {}, mins, maxs)
    if box_a is None or box_b is None:
        raise WindowError("truncation too narrow")
    if not a.window.contains_window(box_a) or not b.window.contains_window(box_b):
        raise WindowError("truncation too narrow")
    out: dict = {}
    for e1, v1 in a.terms.items():
        for e2, v2 in b.terms.items():
            expts = _vec_add(e1, e2)
            if not out_window.contains(expts):
                continue
            prod = v1 * v2
            if expts in out:
                total = out[expts] + prod
                if total:
                    out[expts] = total
                else:
                    del out[expts]
            elif prod:
                out[expts] = prod
    return TruncatedSeries(out_window, out, mins, maxs)


def _mul_poly_series(p: LaurentPoly, s: TruncatedSeries, out_window: Window):
    mins = _add_bounds(p.prefix_mins(), s.prefix_mins)
    maxs = _add_bounds(p.prefix_maxs(), s.prefix_maxs)
    out: dict = {}
    for expts in out_window.iter_exponents():
        total = None
        for b, vb in p.terms.items():
            need = _vec_sub(expts, b)
            if s.window.contains(need):
                value = s.terms.get(need)
                if value is None:
                    continue
                contrib = vb * value
            elif _outside_bounds(need, s.prefix_mins, s.prefix_maxs):
                continue
            else:
                raise WindowError("truncation too narrow")
            total = contrib if total is None else total + contrib
        if total is not None and total:
            out[expts] = total
    return TruncatedSeries(out_window, out, mins, maxs)


def cauchy_mul(a, b, out_window: Window) -> TruncatedSeries:
    """Product restricted to ``out_window``, certified exact or refused.

    Operands may be Laurent polynomials (exact everywhere) or truncated
    series.  If the stored data cannot be proven to determine every
    coefficient of the product inside ``out_window``, the call raises
    WindowError("truncation too narrow") rather than guess.
    """
    for operand in (a, b):
        nv = operand.nvars
        if nv != out_window.nvars:
            raise ValueError("variable-count mismatch")
    if isinstance(a, LaurentPoly) and isinstance(b, LaurentPoly):
        product = a * b
        terms = {e: v for e, v in product.terms.items() if out_window.contains(e)}
        return TruncatedSeries(
            out_window,
            terms,
            _add_bounds(a.prefix_mins(), b.prefix_mins()),
            _add_bounds(a.prefix_maxs(), b.prefix_maxs()),
        )
    if isinstance(a, LaurentPoly):
        return _mul_poly_series(a, b, out_window)
    if isinstance(b, LaurentPoly):
        return _mul_poly_series(b, a, out_window)
    return _mul_series_series(a, b, out_window)


def expand_geometric(leading: LaurentPoly, tail: LaurentPoly, window: Window) -> TruncatedSeries:
    """Expansion of 1 / (leading * (1 + tail)) on ``window``.

    ``leading`` must be a single monomial c*t^a with c a nonzero rational;
    every monomial of ``tail`` must be lexicographically positive (so the
    geometric series sum_k (-tail)^k is locally finite in each exponent).
    Raises ValueError("not expandable at origin") otherwise.

    Termination with pruning: weights w_m (largest on t_1) are chosen so that
    lambda(e) = sum w_m e_m is >= 1 on every tail monomial; each extra factor
    of the tail raises lambda, so powers beyond the window's maximal lambda
    cannot contribute and the loop stops.
    """
    if len(leading.terms) != 1:
        raise ValueError("leading monomial must be a single term")
    if leading.nvars != tail.nvars or leading.nvars != window.nvars:
        raise ValueError("variable-count mismatch")
    (a0, c0), = leading.terms.items()
    c0 = Fraction(c0) if isinstance(c0, int) else c0
    if not isinstance(c0, Fraction):
        raise TypeError("series coefficients must be exact rationals")
    nv = leading.nvars
    for expts in tail.terms:
        if not _lex_positive(expts):
            raise ValueError("not expandable at origin")

    inv_c = Fraction(1) / c0
    shifted = window.shift(a0)
    accumulated: dict = {(0,) * nv: Fraction(1)}

    if tail.terms:
        bound = max(1, max(abs(x) for e in tail.terms for x in e))
        weights = [0] * nv
        trailing = 0
        for j in reversed(range(nv)):
            weights[j] = 1 + bound * trailing
            trailing += weights[j]
        lam_max = sum(w * hi for w, hi in zip(weights, shifted.his))
        neg_tail = {e: -v for e, v in tail.terms.items()}
        power = dict(accumulated)
        while power:
            nxt: dict = {}
            for e1, v1 in power.items():
                for e2, v2 in neg_tail.items():
                    expts = _vec_add(e1, e2)
                    if sum(w * x for w, x in zip(weights, expts)) > lam_max:
                        continue
                    prev = nxt.get(expts)
                    total = v1 * v2 if prev is None else prev + v1 * v2
                    if total:
                        nxt[expts] = total
                    elif prev is not None:
                        del nxt[expts]
            power = nxt
            for expts, value in power.items():
                prev = accumulated.get(expts)
                total = value if prev is None else prev + value
                if total:
                    accumulated[expts] = total
                elif prev is not None:
                    del accumulated[expts]

    result = {}
    for expts, value in accumulated.items():
        out = _vec_sub(expts, a0)
        if window.contains(out):
            result[out] = value * inv_c

    prefix_mins, prefix_maxs = _inverse_bounds(a0, tail)
    return TruncatedSeries(window, result, prefix_mins, prefix_maxs)


def _inverse_bounds(a0: tuple[int, ...], tail: LaurentPoly):
    """Support bounds for the full expansion of 1/(t^a0 (1 + tail)).

    The support is contained in -a0 + (sums of tail exponents), so each
    prefix of it is bounded below/above by -P_j(a0) whenever every tail
    monomial has nonnegative/nonpositive j-th prefix sum.
    """
    nv = len(a0)
    tail_mins = tail.prefix_mins()
    tail_maxs = tail.prefix_maxs()
    a0_prefix = _prefix_sums(a0)
    mins = tuple(-a0_prefix[j] if tail_mins[j] >= 0 else None for j in range(nv))
    maxs = tuple(-a0_prefix[j] if tail_maxs[j] <= 0 else None for j in range(nv))
    return mins, maxs


def _split_denominator(den: LaurentPoly):
    """Denominator -> (leading monomial poly, lex-positive tail, inverse bounds)."""
    a0, c0 = den.lex_least()
    tail_terms = {}
    for expts, value in den.terms.items():
        if expts == a0:
            continue
        tail_terms[_vec_sub(expts, a0)] = value / c0
    tail = LaurentPoly(den.nvars, tail_terms)
    leading = LaurentPoly.monomial(den.nvars, a0, c0)
    return leading, tail, _inverse_bounds(a0, tail)


def _expand_factor(num: LaurentPoly, leading: LaurentPoly, tail: LaurentPoly,
                   window: Window) -> TruncatedSeries:
    """num / (leading*(1+tail)) on ``window`` (numerator folded in exactly)."""
    if len(num.terms) == 1 and not tail.terms:
        # pure monomial ratio: shift exactly
        (b, vb), = num.terms.items()
        (a0, c0), = leading.terms.items()
        shift = _vec_sub(b, a0)
        value = vb / c0
        terms = {shift: value} if window.contains(shift) else {}
        bounds = _prefix_sums(shift)
        return TruncatedSeries(window, terms, bounds, bounds)
    lo_shift = tuple(max(e[j] for e in num.terms) for j in range(num.nvars))
    hi_shift = tuple(min(e[j] for e in num.terms) for j in range(num.nvars))
    inv_window = Window(
        _vec_sub(window.los, lo_shift), _vec_sub(window.his, hi_shift)
    )
    inverse = expand_geometric(leading, tail, inv_window)
    return cauchy_mul(num, inverse, window)


def expand_rational_product(factors, window: Window) -> TruncatedSeries:
    """Window of the iterated-Laurent expansion of a product of fractions.

    ``factors`` is a sequence of (numerator, denominator) LaurentPoly pairs.
    Windows for the partial products are planned backwards from ``window``
    using prefix-sum bounds, so that every intermediate ``cauchy_mul`` is
    certified; if no finite plan exists the call raises
    WindowError("truncation too narrow").
    """
    nv = window.nvars
    zeros = (0,) * nv
    prepared = []
    fbounds = []
    for num, den in factors:
        if num.nvars != nv or den.nvars != nv:
            raise ValueError("variable-count mismatch")
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return TruncatedSeries(window, {}, zeros, zeros)
        leading, tail, inv_bounds = _split_denominator(den)
        prepared.append((num, leading, tail))
        fbounds.append(
            (
                _add_bounds(num.prefix_mins(), inv_bounds[0]),
                _add_bounds(num.prefix_maxs(), inv_bounds[1]),
            )
        )
    m = len(prepared)
    if m == 0:
        terms = {zeros: Fraction(1)} if window.contains(zeros) else {}
        return TruncatedSeries(window, terms, zeros, zeros)

    cumulative = [fbounds[0]]
    for k in range(1, m):
        cumulative.append(
            (
                _add_bounds(cumulative[-1][0], fbounds[k][0]),
                _add_bounds(cumulative[-1][1], fbounds[k][1]),
            )
        )

    partial_windows: list[Window | None] = [None] * m
    factor_windows: list[Window | None] = [None] * m
    partial_windows[m - 1] = window
    for k in range(m - 1, 0, -1):
        box_g = _fiber_box(partial_windows[k], cumulative[k - 1], fbounds[k])
        box_f = _fiber_box(partial_windows[k], fbounds[k], cumulative[k - 1])
        if box_g is None or box_f is None:
            raise WindowError("truncation too narrow")
        if box_g == "empty" or box_f == "empty":
            return TruncatedSeries(window, {}, *cumulative[-1])
        partial_windows[k - 1] = box_g
        factor_windows[k] = box_f
    factor_windows[0] = partial_windows[0]

    num, leading, tail = prepared[0]
    series = _expand_factor(num, leading, tail, factor_windows[0])
    for k in range(1, m):
        num, leading, tail = prepared[k]
        factor = _expand_factor(num, leading, tail, factor_windows[k])
        series = cauchy_mul(series, factor, partial_windows[k])
    return series
