"""Weighted line bundles on the tower and the positivity certificate.

On the top tower level one studies F = O(a_1, ..., a_kappa) (x) pi* A^l and
G = pi* A^{l+1}, where O(a_1, ..., a_kappa) twists by weight a_i along level i
and A is the hyperplane bundle of the base (c_1(A) = h).  Holomorphic Morse
inequalities reduce "F - G has sections asymptotically" to positivity of the
single intersection number

    I = integral over X_kappa of  c_1(F)^{n_kappa}
        - n_kappa * c_1(F)^{n_kappa - 1} * c_1(G),

which this module evaluates exactly through any (or all) of the three
integration pipelines.

Two classical sufficient conditions on the weights make F a genuinely
"tautological-positive" twist; they are exposed as predicates so callers can
scan over valid weight vectors.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .demailly import (
    TowerConfig,
    change_of_variables,
    integrate_phi_form,
    integrate_residue,
    integrate_stepwise,
)
from .graded_ring import BaseGeometry, chern_of_geometry
from .laurent import LaurentPoly


class PipelineDisagreementError(RuntimeError):
    """The independent pipelines returned different exact values."""


@dataclass(frozen=True)
class WeightVector:
    """Twist weights (a_1, ..., a_kappa) plus the base ample power l."""

    a: tuple[int, ...]
    ample_power: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        if len(self.a) < 1:
            raise ValueError("need at least one weight")
        if any(not isinstance(x, int) or x < 0 for x in self.a):
            raise ValueError("weights must be nonnegative integers")
        if not isinstance(self.ample_power, int) or self.ample_power < 0:
            raise ValueError("ample_power must be a nonnegative integer")

    @property
    def kappa(self) -> int:
        return len(self.a)


def weights_valid_demailly(a, kappa: int) -> bool:
    """Positivity condition in the tautological basis:

        a_{kappa-1} > 2 a_kappa > 0   and   a_i >= 3 a_{i+1} for i <= kappa-2.

    Needs kappa >= 2 weights; raises on a length mismatch.
    """
    a = tuple(a)
    if len(a) != kappa:
        raise ValueError("length mismatch")
    if kappa < 2:
        raise ValueError("condition needs kappa >= 2 weights")
    if not (a[-2] > 2 * a[-1] > 0):
        return False
    return all(a[i] >= 3 * a[i + 1] for i in range(kappa - 2))


def weights_valid_L(a, kappa: int) -> bool:
    """Positivity condition in the L basis:

        a_{kappa-1} > a_kappa >= 1   and   a_i >= 2 (a_{i+1} + ... + a_kappa)
        for i <= kappa-2.

    Needs kappa >= 2 weights; raises on a length mismatch.
    """
    a = tuple(a)
    if len(a) != kappa:
        raise ValueError("length mismatch")
    if kappa < 2:
        raise ValueError("condition needs kappa >= 2 weights")
    if not (a[-2] > a[-1] >= 1):
        return False
    return all(a[i] >= 2 * sum(a[i + 1:]) for i in range(kappa - 2))


def morse_class(weights: WeightVector, cfg: TowerConfig,
                geom: BaseGeometry) -> tuple[LaurentPoly, LaurentPoly]:
    """(c_1(F), c_1(G)) as polynomials in the tower variables.

    The weighted twist is sum a_i u_i in the relative hyperplane classes u_i;
    ``change_of_variables`` rewrites it in the v/t coordinates the pipelines
    integrate.  The base contribution enters through h = c_1(A).
    """
    if weights.kappa != cfg.kappa:
        raise ValueError("length mismatch")
    kappa = cfg.kappa
    u_poly = LaurentPoly.zero(kappa)
    for i, a_i in enumerate(weights.a):
        if a_i:
            u_poly = u_poly + a_i * LaurentPoly.variable(kappa, i)
    t_poly = change_of_variables(u_poly)
    h = geom.ring.generator("h")
    l = weights.ample_power
    zero_expts = (0,) * kappa
    c1_f = t_poly.map_coefficients(geom.ring.scalar)
    if l:
        c1_f = c1_f + LaurentPoly.monomial(kappa, zero_expts, l * h)
    c1_g = LaurentPoly.monomial(kappa, zero_expts, (l + 1) * h)
    return c1_f, c1_g


_PIPELINES = {
    "stepwise": integrate_stepwise,
    "phi": integrate_phi_form,
    "residue": integrate_residue,
}


def _normalize_pipeline(name: str) -> str:
    if name == "phi_form":
        return "phi"
    if name in _PIPELINES or name == "all":
        return name
    raise ValueError(f"unknown pipeline {name!r}")


@dataclass
class MorseReport:
    """Everything one run of ``morse_number`` decided, exactly."""

    geometry: str
    n: int
    degree: int | None
    kappa: int
    r: int
    n_kappa: int
    weights: tuple[int, ...]
    ample_power: int
    pipeline: str
    value: Fraction
    positive: bool
    values: dict = field(default_factory=dict)
    timings_ms: dict = field(default_factory=dict)


def morse_number(geom: BaseGeometry, cfg: TowerConfig, weights: WeightVector,
                 pipeline: str = "residue", geometry_label: str = "custom",
                 degree: int | None = None) -> MorseReport:
    """Evaluate the Morse-inequality intersection number I exactly.

    ``pipeline`` is one of "residue", "stepwise", "phi" (alias "phi_form"),
    or "all".  With "all", the three results are compared and any mismatch
    raises PipelineDisagreementError - exact arithmetic means disagreement is
    a bug, never noise.
    """
    pipeline = _normalize_pipeline(pipeline)
    c1_f, c1_g = morse_class(weights, cfg, geom)
    n_top = cfg.n_top
    f_pow = c1_f ** (n_top - 1)
    integrand = f_pow * c1_f - (n_top * f_pow) * c1_g
    names = list(_PIPELINES) if pipeline == "all" else [pipeline]
    values: dict[str, Fraction] = {}
    timings: dict[str, float] = {}
    for name in names:
        start = time.perf_counter()
        values[name] = _PIPELINES[name](integrand, geom, cfg)
        timings[name] = (time.perf_counter() - start) * 1000.0
    distinct = set(values.values())
    if len(distinct) > 1:
        detail = ", ".join(f"{k}={v}" for k, v in sorted(values.items()))
        raise PipelineDisagreementError(f"pipelines disagree: {detail}")
    value = values[names[0]]
    return MorseReport(
        geometry=geometry_label,
        n=cfg.n,
        degree=degree,
        kappa=cfg.kappa,
        r=cfg.r,
        n_kappa=n_top,
        weights=weights.a,
        ample_power=weights.ample_power,
        pipeline=pipeline,
        value=value,
        positive=value > 0,
        values=values,
        timings_ms=timings,
    )


@dataclass
class DegreeScan:
    """Result of scanning hypersurface/log degrees for a positive Morse number."""

    found_degree: int | None
    reports: list[MorseReport]


def minimal_degree_search(kind: str, n: int, kappa: int, weights: WeightVector,
                          d_max: int, pipeline: str = "residue") -> DegreeScan:
    """Scan d = 1..d_max and report the smallest d with a positive Morse number.

    Only degree-parameterized geometries can be scanned; asking for
    "projective_space" raises ValueError("degree not applicable").  The scan
    always covers the full range so the caller sees every computed sign -
    monotonicity beyond the first positive degree is reported, not assumed.
    """
    if kind == "projective_space":
        raise ValueError("degree not applicable")
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    reports = []
    found = None
    for d in range(1, d_max + 1):
        geom = chern_of_geometry(kind, n, d)
        cfg = TowerConfig.for_geometry(geom, kappa)
        report = morse_number(
            geom, cfg, weights, pipeline, geometry_label=kind, degree=d
        )
        reports.append(report)
        if found is None and report.positive:
            found = d
    return DegreeScan(found_degree=found, reports=reports)
