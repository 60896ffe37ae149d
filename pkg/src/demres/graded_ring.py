"""Truncated graded cohomology rings with an explicit top-degree pairing.

Everything downstream integrates over towers built on a base variety X whose
(even) rational cohomology is a monomial quotient

    Q[g_1, ..., g_m] / (g_i^{e_i},  anything of degree > top_degree)

together with a pairing that assigns a rational number to every monomial of
top degree ("integration over X").  That is enough to model projective
spaces, smooth hypersurfaces in them, and log pairs on them, which are the
base geometries the tower pipelines support out of the box.

Coefficients are exact rationals throughout.  The end product of every
computation in this package is a *sign decision*, so floating point is
rejected outright rather than silently accepted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as _cartesian


class RingMismatchError(ValueError):
    """Raised when two classes from different rings meet in one operation."""


def _as_fraction(value) -> Fraction:
    """Coerce an exact scalar to Fraction, rejecting floats loudly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Generator:
    """A nilpotent generator of the base ring.

    ``nilpotency`` is the smallest vanishing power: g**nilpotency == 0.
    """

    name: str
    degree: int
    nilpotency: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("generator degree must be >= 1")
        if self.nilpotency < 1:
            raise ValueError("nilpotency exponent must be >= 1")


@dataclass
class RingSpec:
    """A truncated polynomial ring plus its top-degree integration pairing.

    ``integral_values`` must provide a rational for *every* monomial of total
    degree exactly ``top_degree`` (zero is allowed); this is validated at
    construction so that integration can never fall through a hole.
    """

    generators: tuple[Generator, ...]
    top_degree: int
    integral_values: dict[tuple[int, ...], Fraction]

    def __post_init__(self) -> None:
        self.generators = tuple(self.generators)
        if not self.generators:
            raise ValueError("need at least one generator")
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        if self.top_degree < 0:
            raise ValueError("top_degree must be >= 0")
        self.integral_values = {
            tuple(e): _as_fraction(v) for e, v in self.integral_values.items()
        }
        for expts in self.top_monomials():
            if expts not in self.integral_values:
                raise ValueError(f"missing pairing value for top monomial {expts}")

    # -- monomial helpers -------------------------------------------------

    def monomial_degree(self, expts: tuple[int, ...]) -> int:
        return sum(e * g.degree for e, g in zip(expts, self.generators))

    def admissible(self, expts: tuple[int, ...]) -> bool:
        """True iff the monomial survives truncation (is not forced to 0)."""
        if len(expts) != len(self.generators):
            raise ValueError("exponent arity mismatch")
        if any(e < 0 for e in expts):
            return False
        if any(e >= g.nilpotency for e, g in zip(expts, self.generators)):
            return False
        return self.monomial_degree(expts) <= self.top_degree

    def top_monomials(self):
        """All admissible exponent tuples of total degree == top_degree."""
        ranges = [range(g.nilpotency) for g in self.generators]
        for expts in _cartesian(*ranges):
            if self.monomial_degree(expts) == self.top_degree:
                yield expts

    # -- element constructors ---------------------------------------------

    def zero(self) -> "CohClass":
        return CohClass(self, {})

    def one(self) -> "CohClass":
        return self.scalar(1)

    def scalar(self, value) -> "CohClass":
        zero_expts = (0,) * len(self.generators)
        return CohClass(self, {zero_expts: _as_fraction(value)})

    def generator(self, name: str) -> "CohClass":
        for i, g in enumerate(self.generators):
            if g.name == name:
                expts = tuple(1 if j == i else 0 for j in range(len(self.generators)))
                return CohClass(self, {expts: Fraction(1)})
        raise ValueError(f"no generator named {name!r}")


class CohClass:
    """An element of a RingSpec: sparse map from exponent tuples to rationals.

    Instances are treated as immutable; all operations return fresh objects.
    Monomials that violate a nilpotency bound or exceed the top degree are
    dropped at construction time, so products are automatically truncated.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms: dict):
        clean: dict[tuple[int, ...], Fraction] = {}
        for expts, value in terms.items():
            value = _as_fraction(value)
            expts = tuple(expts)
            if value and ring.admissible(expts):
                clean[expts] = value
        self.ring = ring
        self.terms = clean

    # -- plumbing ----------------------------------------------------------

    def _check_ring(self, other: "CohClass") -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatchError("ring mismatch")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, CohClass):
            if self.ring is not other.ring and self.ring != other.ring:
                return False
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.scalar(other)
        return NotImplemented

    __hash__ = None  # mutable payload; classes are not meant to be dict keys

    def __repr__(self) -> str:
        if not self.terms:
            return "CohClass(0)"
        names = [g.name for g in self.ring.generators]
        bits = []
        for expts in sorted(self.terms):
            coeff = self.terms[expts]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, expts)
                if e
            )
            bits.append(f"{coeff}" + (f"*{mono}" if mono else ""))
        return "CohClass(" + " + ".join(bits) + ")"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.scalar(other)
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check_ring(other)
        merged = dict(self.terms)
        for expts, value in other.terms.items():
            merged[expts] = merged.get(expts, Fraction(0)) + value
        return CohClass(self.ring, merged)

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.ring, {e: -v for e, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, CohClass) else -self.ring.scalar(other))

    def __rsub__(self, other):
        return (-self) + self.ring.scalar(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scale = _as_fraction(other)
            return CohClass(self.ring, {e: v * scale for e, v in self.terms.items()})
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check_ring(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                expts = tuple(a + b for a, b in zip(e1, e2))
                if not self.ring.admissible(expts):
                    continue
                out[expts] = out.get(expts, Fraction(0)) + v1 * v2
        return CohClass(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined here")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- graded structure ----------------------------------------------------

    @property
    def constant_term(self) -> Fraction:
        zero_expts = (0,) * len(self.ring.generators)
        return self.terms.get(zero_expts, Fraction(0))

    def graded_part(self, j: int) -> "CohClass":
        return CohClass(
            self.ring,
            {e: v for e, v in self.terms.items() if self.ring.monomial_degree(e) == j},
        )

    def graded_parts(self) -> dict:
        """Split into homogeneous pieces, keyed by degree (zero pieces absent)."""
        parts: dict[int, dict] = {}
        for e, v in self.terms.items():
            parts.setdefault(self.ring.monomial_degree(e), {})[e] = v
        return {j: CohClass(self.ring, t) for j, t in sorted(parts.items())}

    def truncate_degree(self, max_degree: int) -> "CohClass":
        """Drop every monomial of total degree above ``max_degree``."""
        return CohClass(
            self.ring,
            {
                e: v
                for e, v in self.terms.items()
                if self.ring.monomial_degree(e) <= max_degree
            },
        )


def ring_mul(a: CohClass, b: CohClass) -> CohClass:
    """Product in the truncated ring (monomials beyond truncation vanish)."""
    return a * b


def ring_inv_unit(c: CohClass) -> CohClass:
    """Inverse of a class with constant term exactly 1.

    Solved degree by degree: if c = 1 + c_1 + c_2 + ... with c_j homogeneous
    of degree j, the inverse s = 1 + s_1 + s_2 + ... satisfies
    s_k = -(c_1 s_{k-1} + ... + c_k s_0).  Nilpotency makes this finite.
    """
    if c.constant_term != 1:
        raise ValueError("not invertible")
    ring = c.ring
    c_parts = c.graded_parts()
    inv_parts: dict[int, CohClass] = {0: ring.one()}
    total = ring.one()
    for k in range(1, ring.top_degree + 1):
        acc = ring.zero()
        for j in range(1, k + 1):
            cj = c_parts.get(j)
            sk = inv_parts.get(k - j)
            if cj is not None and sk is not None and cj and sk:
                acc = acc + cj * sk
        part = -acc
        if part:
            inv_parts[k] = part
            total = total + part
    return total


def integrate_base(c: CohClass) -> Fraction:
    """Pair the top-degree part of ``c`` against the ring's integral values."""
    ring = c.ring
    total = Fraction(0)
    for expts, value in c.terms.items():
        if ring.monomial_degree(expts) == ring.top_degree:
            total += value * ring.integral_values[expts]
    return total


@dataclass
class BaseGeometry:
    """A base variety packaged for the tower pipelines.

    Carries the cohomology ring, the dimension n, the rank of the twisted
    tangent-type bundle V_0 the tower is built from, its total Chern class,
    and (for log pairs) the degree of the boundary divisor.
    """

    ring: RingSpec
    n: int
    rank_V0: int
    total_chern_V0: CohClass
    log_divisor: int | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.rank_V0 < 1:
            raise ValueError("rank_V0 must be >= 1")
        if self.total_chern_V0.constant_term != 1:
            raise ValueError("total Chern class must have constant term 1")
        cap = min(self.rank_V0, self.n)
        for j, part in self.total_chern_V0.graded_parts().items():
            if j > cap and part:
                raise ValueError(f"Chern class has a nonzero part in degree {j} > {cap}")

    @property
    def r(self) -> int:
        """Fiber dimension of one projectivization step: rank_V0 - 1."""
        return self.rank_V0 - 1

    def segre_parts(self) -> tuple[CohClass, ...]:
        """Homogeneous pieces s_0, ..., s_n of the inverse total Chern class."""
        cached = self._cache.get("segre_parts")
        if cached is None:
            inv = ring_inv_unit(self.total_chern_V0)
            parts = inv.graded_parts()
            cached = tuple(
                parts.get(j, self.ring.zero()) for j in range(self.n + 1)
            )
            self._cache["segre_parts"] = cached
        return cached


def _hyperplane_ring(n: int, top_value) -> RingSpec:
    return RingSpec(
        generators=(Generator("h", 1, n + 1),),
        top_degree=n,
        integral_values={(n,): _as_fraction(top_value)},
    )


def chern_of_geometry(kind: str, n: int, d: int | None = None) -> BaseGeometry:
    """Builtin base geometries.

    kind == "projective_space":    X = P^n,            V_0 = T_X,
                                   c(V_0) = (1+h)^{n+1},        int h^n = 1.
    kind == "hypersurface_tangent": X = X_d in P^{n+1} smooth of degree d,
                                   c(V_0) = (1+h)^{n+2}/(1+dh), int h^n = d.
    kind == "log_projective":      X = (P^n, smooth degree-d divisor),
                                   V_0 the log tangent sheaf,
                                   c(V_0) = (1+h)^{n+1}/(1+dh), int h^n = 1.

    All three have rank_V0 == n.  ``d`` is required exactly for the kinds
    that use it; passing it to projective_space is an error.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "projective_space":
        if d is not None:
            raise ValueError("degree not applicable")
        ring = _hyperplane_ring(n, 1)
        h = ring.generator("h")
        chern = (ring.one() + h) ** (n + 1)
        return BaseGeometry(ring, n, n, chern)
    if kind in ("hypersurface_tangent", "log_projective"):
        if d is None:
            raise ValueError(f"{kind} needs a degree d >= 1")
        if d < 1:
            raise ValueError("d must be >= 1")
        top = d if kind == "hypersurface_tangent" else 1
        ring = _hyperplane_ring(n, top)
        h = ring.generator("h")
        power = n + 2 if kind == "hypersurface_tangent" else n + 1
        chern = ((ring.one() + h) ** power) * ring_inv_unit(ring.one() + d * h)
        log_divisor = d if kind == "log_projective" else None
        return BaseGeometry(ring, n, n, chern, log_divisor=log_divisor)
    raise ValueError(f"unknown geometry kind {kind!r}")
