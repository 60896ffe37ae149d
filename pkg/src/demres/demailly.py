"""Tower bookkeeping and three independent fiber-integration pipelines.

The object of study is a tower of projectivizations

    X_kappa -> X_{kappa-1} -> ... -> X_1 -> X_0 = X,

where each level is X_i = P(V_{i-1}) for bundles V_i of constant rank r+1
(r = rank V_0 - 1), so dim X_i = n + i*r =: n_i.  Level i carries the line
bundle L_i (the tautological O(-1) twisted by the pullback chain) whose dual
has first Chern class v_i; a polynomial f in v_1, ..., v_kappa of degree
n_kappa is integrated over X_kappa.

Three pipelines compute the same rational number:

* ``integrate_stepwise``: eliminate v_kappa, ..., v_1 in turn.  Pushing one
  level down multiplies by the twisted Segre expansion
  s_{1/t}(V_{i-1} (x) L_{i-1}), takes the coefficient of t^r, and prunes all
  terms whose cohomological degree exceeds the dimension of the level they
  now live on (such terms are zero classes; dropping them is also what keeps
  the truncated multipliers complete).
* ``integrate_phi_form``: one polynomial product of truncated universal
  factors phi applied to the base generating function I(t), then a single
  coefficient extraction at t_1^r ... t_kappa^r.
* ``integrate_residue``: the same extraction against the *rational* universal
  factor product, expanded as an iterated Laurent series on a certified
  window (t_1 << ... << t_kappa << 1).

The universal factor is phi(x, y) = (1-x) * sum_{k<=N} (2x-y)^k, the double
Taylor truncation of (1-x)/(1-2x+y) at total order N = n_{kappa-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graded_ring import BaseGeometry, CohClass, integrate_base
from .laurent import LaurentPoly, TruncatedSeries, Window, WindowError, expand_rational_product


@dataclass(frozen=True)
class TowerConfig:
    """Shape of a tower: kappa levels over an n-fold with fiber dimension r."""

    kappa: int
    n: int
    r: int

    def __post_init__(self) -> None:
        if self.kappa < 1:
            raise ValueError("kappa must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.r < 0:
            raise ValueError("r must be >= 0")

    @classmethod
    def for_geometry(cls, geom: BaseGeometry, kappa: int) -> "TowerConfig":
        return cls(kappa=kappa, n=geom.n, r=geom.rank_V0 - 1)

    @property
    def dims(self) -> tuple[int, ...]:
        """Dimensions (n_0, n_1, ..., n_kappa) of the tower levels."""
        return tuple(self.n + i * self.r for i in range(self.kappa + 1))

    @property
    def n_top(self) -> int:
        """Dimension of the top level X_kappa."""
        return self.n + self.kappa * self.r


@dataclass
class TowerPolynomial:
    """A Laurent polynomial on a partially integrated tower.

    Slots 1..level hold cohomological variables v_1..v_level (exponents >= 0,
    coefficients classes on X_level); slots above ``level`` are formal t's
    left over from coefficient extractions and may carry any exponent.
    """

    poly: LaurentPoly
    level: int

    def __post_init__(self) -> None:
        if not 0 <= self.level <= self.poly.nvars:
            raise ValueError("level out of range")
        for expts in self.poly.terms:
            if any(e < 0 for e in expts[: self.level]):
                raise ValueError("cohomological slots must have exponents >= 0")


def _coerce_class_poly(f: LaurentPoly, geom: BaseGeometry) -> LaurentPoly:
    """Promote rational coefficients to ring classes (and check rings match)."""
    out = {}
    for expts, value in f.terms.items():
        if isinstance(value, CohClass):
            if value.ring is not geom.ring and value.ring != geom.ring:
                raise ValueError("coefficient ring does not match the geometry")
            out[expts] = value
        else:
            out[expts] = geom.ring.scalar(value)
    return LaurentPoly(f.nvars, out)


def segre_gen(geom: BaseGeometry, var_index: int, nvars: int) -> LaurentPoly:
    """Segre generating function s_{1/t_i}(V_0) = sum_j s_j(V_0) t_i^{-j}.

    ``var_index`` is 1-based.  Coefficients are classes on the base; the sum
    stops at j = n since higher Segre classes vanish on an n-fold.
    """
    if not 1 <= var_index <= nvars:
        raise ValueError("var_index out of range")
    terms = {}
    for j, part in enumerate(geom.segre_parts()):
        if part:
            expts = [0] * nvars
            expts[var_index - 1] = -j
            terms[tuple(expts)] = part
    return LaurentPoly(nvars, terms)


def base_integral(f: LaurentPoly, geom: BaseGeometry, cfg: TowerConfig) -> LaurentPoly:
    """I(t) = integral over X of f(t) * s_{1/t_1}(V_0) ... s_{1/t_kappa}(V_0).

    The result is a Laurent polynomial with rational coefficients: the
    t_i-exponents lie between -n + (min exponent of f) and (max exponent of
    f).  This is the only place the three pipelines touch the base pairing.
    """
    if f.nvars != cfg.kappa:
        raise ValueError("f must use exactly kappa variables")
    g = _coerce_class_poly(f, geom)
    for i in range(1, cfg.kappa + 1):
        g = g * segre_gen(geom, i, cfg.kappa)
    out = {}
    for expts, value in g.terms.items():
        total = integrate_base(value)
        if total:
            out[expts] = total
    return LaurentPoly(cfg.kappa, out)


def phi_poly(trunc_order: int) -> LaurentPoly:
    """phi(x, y) = (1 - x) * sum_{k=0}^{N} (2x - y)^k as a polynomial.

    This is the order-N double Taylor truncation of (1-x)/(1-2x+y); variables
    are slots (x, y).
    """
    if trunc_order < 0:
        raise ValueError("truncation order must be >= 0")
    x = LaurentPoly.variable(2, 0)
    y = LaurentPoly.variable(2, 1)
    core = 2 * x - y
    total = LaurentPoly.one(2)
    power = LaurentPoly.one(2)
    for _ in range(trunc_order):
        power = power * core
        total = total + power
    return (LaurentPoly.one(2) - x) * total


def phi_kl_truncated(k: int, l: int, trunc_order: int, nvars: int) -> LaurentPoly:
    """phi(t_k / t_l, t_{k-1} / t_l) in ``nvars`` slots; t_0 is treated as 0.

    For k == 1 the second argument is 0, so only the y-free part survives.
    Indices are 1-based and must satisfy 1 <= k < l <= nvars.
    """
    if not 1 <= k < l <= nvars:
        raise ValueError("need 1 <= k < l <= nvars")
    base = phi_poly(trunc_order)
    out: dict = {}
    for (a, b), value in base.terms.items():
        if k == 1 and b:
            continue
        expts = [0] * nvars
        expts[k - 1] += a
        if k >= 2:
            expts[k - 2] += b
        expts[l - 1] -= a + b
        key = tuple(expts)
        out[key] = out.get(key, Fraction(0)) + value
    return LaurentPoly(nvars, out)


def phi_kl(k: int, l: int, cfg: TowerConfig) -> LaurentPoly:
    """The pairwise universal factor at the tower's truncation order n_{kappa-1}."""
    return phi_kl_truncated(k, l, cfg.dims[cfg.kappa - 1], cfg.kappa)


@lru_cache(maxsize=None)
def _phi_product_cached(i: int, kappa: int, n: int, r: int) -> LaurentPoly:
    cfg = TowerConfig(kappa, n, r)
    total = LaurentPoly.one(kappa)
    for l in range(kappa - i + 1, kappa + 1):
        for k in range(kappa - i + 1, l):
            total = total * phi_kl(k, l, cfg)
    return total


def phi_i_product(i: int, cfg: TowerConfig) -> LaurentPoly:
    """Product of phi_{k,l} over the last i tower variables (kappa-i < k < l).

    i == 0 and i == 1 give the empty product 1; i == kappa is the full
    polynomial used by ``integrate_phi_form``.
    """
    if not 0 <= i <= cfg.kappa:
        raise ValueError("i out of range")
    return _phi_product_cached(i, cfg.kappa, cfg.n, cfg.r)


def twisted_segre_recursion(k: int, l: int, geom: BaseGeometry, cfg: TowerConfig,
                            truncated: bool = True) -> LaurentPoly:
    """Segre expansion s_{1/t_l}(V_k (x) L_k) in the formal variable t_l.

    Built by the recursion
        s_{1/t_l}(V_k (x) L_k) = phi(v_k/t_l, v_{k-1}/t_l) * s_{1/t_l}(V_{k-1} (x) L_{k-1}),
    with base s_{1/t_l}(V_0) and v_0 = 0.  Slots 1..k hold v_1..v_k.

    With ``truncated`` the level-m partial product is restricted to
    t_l-exponents >= -n_m: a term with t_l-exponent -j there has total
    cohomological degree j on X_m, so deeper terms are zero classes.  The
    pipelines rely on this restriction; identity checks can disable it.
    """
    if not 0 <= k < l <= cfg.kappa:
        raise ValueError("need 0 <= k < l <= kappa")
    cache_key = ("twisted_segre", k, l, cfg, truncated)
    cached = geom._cache.get(cache_key)
    if cached is not None:
        return cached
    poly = segre_gen(geom, l, cfg.kappa)
    for m in range(1, k + 1):
        poly = poly * phi_kl(m, l, cfg)
        if truncated:
            poly = poly.restrict_slot_min(l - 1, -cfg.dims[m])
    geom._cache[cache_key] = poly
    return poly


def fiber_integrate_once(f: TowerPolynomial, geom: BaseGeometry,
                         cfg: TowerConfig) -> TowerPolynomial:
    """Push one level down: integrate out v_level over the fibers.

    Multiplies by the twisted Segre expansion for the level below, takes the
    coefficient of t_level^r, and prunes monomials whose total degree exceeds
    the dimension of the new level (zero classes there).
    """
    level = f.level
    if level < 1:
        raise ValueError("nothing left to integrate")
    if f.poly.nvars != cfg.kappa or level > cfg.kappa:
        raise ValueError("tower polynomial does not match the configuration")
    multiplier = twisted_segre_recursion(level - 1, level, geom, cfg)
    g = _coerce_class_poly(f.poly, geom) * multiplier
    g = g.extract_slot(level - 1, cfg.r)
    dim_below = cfg.dims[level - 1]
    pruned = {}
    for expts, value in g.terms.items():
        v_degree = sum(expts[: level - 1])
        if v_degree > dim_below:
            continue
        value = value.truncate_degree(dim_below - v_degree)
        if value:
            pruned[expts] = value
    return TowerPolynomial(LaurentPoly(cfg.kappa, pruned), level - 1)


def integrate_stepwise(f: LaurentPoly, geom: BaseGeometry, cfg: TowerConfig) -> Fraction:
    """Integral of f(v_1, ..., v_kappa) over X_kappa by level-wise elimination."""
    if f.nvars != cfg.kappa:
        raise ValueError("f must use exactly kappa variables")
    top_dim = cfg.n_top
    start = {}
    for expts, value in _coerce_class_poly(f, geom).terms.items():
        if any(e < 0 for e in expts):
            raise ValueError("f must be a polynomial in the v variables")
        v_degree = sum(expts)
        if v_degree > top_dim:
            continue
        value = value.truncate_degree(top_dim - v_degree)
        if value:
            start[expts] = value
    current = TowerPolynomial(LaurentPoly(cfg.kappa, start), cfg.kappa)
    for _ in range(cfg.kappa):
        current = fiber_integrate_once(current, geom, cfg)
    residue_class = current.poly.coeff((0,) * cfg.kappa)
    if not residue_class:
        return Fraction(0)
    return integrate_base(residue_class)


def integrate_phi_form(f: LaurentPoly, geom: BaseGeometry, cfg: TowerConfig) -> Fraction:
    """Integral via the truncated universal polynomial: one coefficient of

        phi_kappa^poly(t) * I(t)   at   t_1^r ... t_kappa^r.
    """
    ipoly = base_integral(f, geom, cfg)
    if not ipoly:
        return Fraction(0)
    phi = phi_i_product(cfg.kappa, cfg)
    target = (cfg.r,) * cfg.kappa
    total = Fraction(0)
    for expts, value in ipoly.terms.items():
        need = tuple(t - e for t, e in zip(target, expts))
        total += value * phi.coeff(need)
    return total


def _residue_factors(kappa: int) -> list[tuple[LaurentPoly, LaurentPoly]]:
    def var(i: int) -> LaurentPoly:
        return LaurentPoly.variable(kappa, i - 1)

    factors: list[tuple[LaurentPoly, LaurentPoly]] = []
    for j in range(2, kappa + 1):
        factors.append((var(j) - var(1), var(j) - 2 * var(1)))
        for i in range(2, j):
            factors.append((var(j) - var(i), var(j) - 2 * var(i) + var(i - 1)))
    return factors


def residue_phi_rational(cfg: TowerConfig) -> list[tuple[LaurentPoly, LaurentPoly]]:
    """The universal rational factors, arranged for iterated Laurent expansion.

    Each pair (numerator, denominator) has a denominator whose lex-least
    monomial is t_j itself, so every factor expands on t_1 << ... << t_kappa:

        for j = 2..kappa:   (t_j - t_1) / (t_j - 2 t_1)
            for i = 2..j-1: (t_j - t_i) / (t_j - 2 t_i + t_{i-1})
    """
    return _residue_factors(cfg.kappa)


@lru_cache(maxsize=None)
def _phi_series_cached(kappa: int, window: Window) -> TruncatedSeries:
    return expand_rational_product(_residue_factors(kappa), window)


def integrate_residue(f: LaurentPoly, geom: BaseGeometry, cfg: TowerConfig) -> Fraction:
    """Integral via certified iterated-Laurent expansion of the rational factors.

    Extracts sum_b I_b * Phi_{(r,...,r) - b} where Phi is the windowed
    expansion of the universal rational product.  The default window
    [r - n_kappa, r + n] per variable covers every f of degree <= n_kappa
    (and is shared across calls via a cache); if the input needs more, the
    exact hull is used, and on a certification failure the window is widened
    geometrically, up to 3 attempts.
    """
    ipoly = base_integral(f, geom, cfg)
    if not ipoly:
        return Fraction(0)
    kappa, r = cfg.kappa, cfg.r
    target = (r,) * kappa
    los = []
    his = []
    for slot in range(kappa):
        lo, hi = ipoly.slot_range(slot)
        los.append(r - hi)
        his.append(r - lo)
    hull = Window(tuple(los), tuple(his))
    default = Window.cube(kappa, r - cfg.n_top, r + cfg.n)
    window = default if default.contains_window(hull) else hull

    last_error: WindowError | None = None
    for _ in range(3):
        try:
            series = _phi_series_cached(kappa, window)
        except WindowError as err:
            last_error = err
            window = window.widened()
            continue
        total = Fraction(0)
        for expts, value in ipoly.terms.items():
            need = tuple(t - e for t, e in zip(target, expts))
            total += value * series.terms.get(need, Fraction(0))
        return total
    raise last_error if last_error is not None else WindowError("truncation too narrow")


def change_of_variables(g: LaurentPoly) -> LaurentPoly:
    """Rewrite a polynomial in u_1, ..., u_m in the v/t coordinates:

        u_1 -> t_1,   u_i -> t_i - t_{i-1}  (i >= 2).

    ``u_i`` is the relative hyperplane class of level i; the t_i are the
    variables the pipelines integrate.  Requires a genuine polynomial
    (no negative exponents).
    """
    nv = g.nvars
    subs = []
    for i in range(nv):
        if i == 0:
            subs.append(LaurentPoly.variable(nv, 0))
        else:
            subs.append(LaurentPoly.variable(nv, i) - LaurentPoly.variable(nv, i - 1))
    total = LaurentPoly.zero(nv)
    for expts, value in g.terms.items():
        if any(e < 0 for e in expts):
            raise ValueError("change_of_variables expects a polynomial")
        term = LaurentPoly.one(nv)
        for slot, e in enumerate(expts):
            if e:
                term = term * subs[slot] ** e
        total = total + term * value
    return total
