"""Acceptance suite: seven end-to-end checks, one [PASS]/[FAIL] line each.

Every comparison is an exact equality of rational numbers (or of exponent
supports); there are no numeric tolerances anywhere in this file.  Run

    pytest tests/test_acceptance.py -v -s

to see the per-criterion lines next to pytest's own report.  Each check
derives its expected values from an independent construction (a base-ring
pairing, a power-sum identity, polynomial interpolation) rather than from
the code under test.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import product

import pytest

from demres import (
    Generator,
    LaurentPoly,
    RingSpec,
    TowerConfig,
    WeightVector,
    Window,
    base_integral,
    chern_of_geometry,
    expand_geometric,
    expand_rational_product,
    integrate_base,
    integrate_phi_form,
    integrate_residue,
    integrate_stepwise,
    minimal_degree_search,
    morse_number,
    phi_kl,
    ring_inv_unit,
    ring_mul,
)

GEOMETRIES = [
    ("P2", chern_of_geometry("projective_space", 2)),
    ("P3", chern_of_geometry("projective_space", 3)),
    ("X2 in P4", chern_of_geometry("hypersurface_tangent", 3, 2)),
    ("X5 in P4", chern_of_geometry("hypersurface_tangent", 3, 5)),
    ("log-P2 d=3", chern_of_geometry("log_projective", 2, 3)),
    ("log-P2 d=4", chern_of_geometry("log_projective", 2, 4)),
]

PIPELINES = {
    "stepwise": integrate_stepwise,
    "phi": integrate_phi_form,
    "residue": integrate_residue,
}


def monomials_of_degree(kappa, total):
    """All (e_1, ..., e_kappa, m) with e_i, m >= 0 summing to ``total``."""
    for e in product(range(total + 1), repeat=kappa):
        m = total - sum(e)
        if m >= 0:
            yield e, m


def tower_monomial(geom, kappa, e, m):
    h = geom.ring.generator("h")
    return LaurentPoly.monomial(kappa, e, h ** m)


def _conclude(num, label, failures, capsys):
    """Print the one-line verdict for a criterion, then fail if needed.

    The line is emitted with capture disabled so it shows up in a plain
    ``pytest`` run, not only under ``-s``.
    """
    if failures:
        shown = "; ".join(str(f) for f in failures[:3])
        with capsys.disabled():
            print(f"\n[FAIL] criterion {num}: {label} -- {len(failures)} "
                  f"failure(s), first: {shown}", flush=True)
        pytest.fail(f"criterion {num}: {len(failures)} failure(s), first: {shown}")
    with capsys.disabled():
        print(f"\n[PASS] criterion {num}: {label}", flush=True)


def test_criterion_1_triple_agreement(capsys):
    """The three pipelines return identical exact rationals on a full grid."""
    start = time.monotonic()
    failures = []
    count = 0
    for label, geom in GEOMETRIES:
        for kappa in (1, 2, 3):
            cfg = TowerConfig.for_geometry(geom, kappa)
            for e, m in monomials_of_degree(kappa, cfg.n_top):
                f = tower_monomial(geom, kappa, e, m)
                vals = {name: run(f, geom, cfg) for name, run in PIPELINES.items()}
                count += 1
                if len(set(vals.values())) != 1:
                    failures.append((label, kappa, e, m, vals))
    elapsed = time.monotonic() - start
    if elapsed >= 300.0:
        failures.append(f"runtime {elapsed:.0f}s over the 300s budget")
    _conclude(
        1,
        f"stepwise/phi/residue agree exactly on all {count} monomials of total "
        f"degree n_kappa (6 geometries, kappa 1..3) in {elapsed:.1f}s",
        failures,
        capsys,
    )


def test_criterion_2_first_level_pushforward_matches_segre(capsys):
    """kappa=1 oracle: the v-power integral is a base Segre pairing.

    Integrating v^(j+r) h^m over the first projectivization must equal the
    plain base pairing of s_j(V_0) h^m -- including all the zero cases where
    j + m is not the base dimension.
    """
    failures = []
    count = 0
    for label, geom in GEOMETRIES:
        cfg = TowerConfig.for_geometry(geom, 1)
        h = geom.ring.generator("h")
        parts = geom.segre_parts()
        for j in range(geom.n + 1):
            for m in range(geom.n + 1):
                expected = integrate_base(parts[j] * h ** m)
                f = LaurentPoly.monomial(1, (j + cfg.r,), h ** m)
                for name, run in PIPELINES.items():
                    count += 1
                    got = run(f, geom, cfg)
                    if got != expected:
                        failures.append((label, j, m, name, got, expected))
    _conclude(
        2,
        "kappa=1 integrals of v^(j+r) h^m equal base pairings of s_j(V0) h^m "
        f"for 0 <= j, m <= n ({count} cases across pipelines)",
        failures,
        capsys,
    )


def test_criterion_3_ring_and_series_property_suite(capsys):
    """100 unit inverses, 50 windowed reciprocals, 20 geometric series."""
    rng = random.Random(20260814)
    failures = []

    # (a) 100 random units c with constant term 1: ring_inv_unit(c) * c == 1,
    # split between single-generator truncated rings and a two-generator one.
    two_gen = RingSpec(
        (Generator("x", 1, 3), Generator("y", 2, 3)),
        4,
        {(2, 1): Fraction(2), (0, 2): Fraction(-1)},
    )
    for i in range(100):
        if i % 3 == 2:
            ring = two_gen
            x, y = ring.generator("x"), ring.generator("y")
            c = ring.one()
            for cls in (x, y, x * x, x * y, y * y):
                c = c + rng.randint(-3, 3) * cls
        else:
            n = rng.randint(1, 4)
            ring = RingSpec((Generator("h", 1, n + 1),), n, {(n,): Fraction(1)})
            h = ring.generator("h")
            c = ring.one()
            for j in range(1, n + 1):
                c = c + Fraction(rng.randint(-6, 6), rng.randint(1, 4)) * h ** j
        if ring_mul(c, ring_inv_unit(c)) != ring.one():
            failures.append(("unit inverse", i, c.terms))

    # (b) 50 windowed reciprocal checks Q * Q^{-1} == 1: 30 univariate with
    # fully random Laurent polynomials, 20 bivariate from the family whose
    # lex-leading monomial is t_2 with tails in t_1 (the shape the expansion
    # regime t_1 << t_2 << 1 certifies; see the package notes on windows).
    w1 = Window.from_pairs([(-4, 4)])
    for i in range(30):
        def rand_laurent():
            while True:
                p = LaurentPoly(1, {
                    (k,): Fraction(rng.randint(-4, 4))
                    for k in range(rng.randint(-2, 0), rng.randint(1, 3))
                })
                if p:
                    return p
        p1, p2 = rand_laurent(), rand_laurent()
        s = expand_rational_product([(p1, p2), (p2, p1)], w1)
        if s.terms != {(0,): 1}:
            failures.append(("univariate reciprocal", i, p1.terms, p2.terms))
    t1, t2 = LaurentPoly.variable(2, 0), LaurentPoly.variable(2, 1)
    w2 = Window.cube(2, -3, 3)
    for i in range(20):
        def rand_bivariate():
            p = rng.choice([-3, -2, -1, 1, 2, 3]) * t2
            p = p + rng.randint(-3, 3) * t1
            p = p + rng.randint(-2, 2) * (t1 * t2)
            p = p + rng.randint(-2, 2) * (t1 * t1)
            return p
        num, den = rand_bivariate(), rand_bivariate()
        s = expand_rational_product([(num, den), (den, num)], w2)
        if s.terms != {(0, 0): 1}:
            failures.append(("bivariate reciprocal", i, num.terms, den.terms))

    # (c) 20 geometric expansions 1/(1 - X) against the explicit power sum
    # for monomial X, compared coefficient by coefficient on the window.
    for i in range(20):
        nv = rng.randint(1, 3)
        expts = [0] * nv
        lead = rng.randrange(nv)
        expts[lead] = rng.randint(1, 2)
        for j in range(lead + 1, nv):
            expts[j] = rng.randint(-2, 2)
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
        x = LaurentPoly.monomial(nv, tuple(expts), c)
        w = Window.cube(nv, -8, 8)
        s = expand_geometric(LaurentPoly.one(nv), -x, w)
        expected = LaurentPoly.one(nv)
        power = LaurentPoly.one(nv)
        for _ in range(12):
            power = power * x
            expected = expected + power
        want = {e: v for e, v in expected.terms.items() if w.contains(e)}
        if s.terms != want:
            failures.append(("geometric series", i, x.terms))

    _conclude(
        3,
        "exact ring/series laws hold: 100 random unit inverses, 50 windowed "
        "reciprocals (30 univariate + 20 bivariate), 20 geometric power sums",
        failures,
        capsys,
    )


def test_criterion_4_partial_extraction_degree_bounds(capsys):
    """After extracting t_kappa..t_{j+1} at r, deg_{t_j} stays <= n_j.

    Extracting t_l brings in every pairwise factor phi_{k,l} with k < l, so
    the multiplier for a block of top variables is the product of all their
    factors.  The assertion is on the exact exponent support of the result.
    """
    failures = []
    checked = 0
    for label, geom in GEOMETRIES:
        for kappa in (2, 3):
            cfg = TowerConfig.for_geometry(geom, kappa)
            multiplier = {kappa: LaurentPoly.one(kappa)}
            acc = LaurentPoly.one(kappa)
            for l in range(kappa, 0, -1):
                for k in range(1, l):
                    acc = acc * phi_kl(k, l, cfg)
                multiplier[l - 1] = acc
            for e, m in monomials_of_degree(kappa, cfg.n_top):
                ipoly = base_integral(tower_monomial(geom, kappa, e, m), geom, cfg)
                if not ipoly:
                    continue
                for j in range(1, kappa + 1):
                    partial = ipoly * multiplier[j]
                    for slot in range(j, kappa):
                        partial = partial.extract_slot(slot, cfg.r)
                    if partial:
                        checked += 1
                        if partial.slot_range(j - 1)[1] > cfg.dims[j]:
                            failures.append((label, kappa, e, m, j))
    _conclude(
        4,
        f"deg_t_j of every partial extraction is <= n_j "
        f"({checked} nonzero supports, kappa in {{2,3}}, 6 geometries)",
        failures,
        capsys,
    )


def test_criterion_5_fiber_vanishing_and_grading(capsys):
    """Top powers below the fiber dimension and off-degree monomials vanish."""
    rng = random.Random(5)
    failures = []
    low_count = 0
    graded_count = 0
    for label, geom in GEOMETRIES:
        for kappa in (1, 2, 3):
            cfg = TowerConfig.for_geometry(geom, kappa)
            # v_kappa^j times a pullback from below integrates to zero for
            # every j < r, in every pipeline (the first elimination hits a
            # negative-index Segre class; the other pipelines must agree).
            for j in range(cfg.r):
                for e, m in monomials_of_degree(kappa - 1, cfg.n_top - j):
                    f = tower_monomial(geom, kappa, e + (j,), m)
                    for name, run in PIPELINES.items():
                        low_count += 1
                        got = run(f, geom, cfg)
                        if got != 0:
                            failures.append(("fiber", label, kappa, e + (j,), m, name, got))
            # wrong total degree: the integral is zero whatever the pipeline.
            for delta in (-2, -1, 1, 2):
                total = cfg.n_top + delta
                if total < 0:
                    continue
                pool = list(monomials_of_degree(kappa, total))
                sample = pool if len(pool) <= 12 else rng.sample(pool, 12)
                for e, m in sample:
                    f = tower_monomial(geom, kappa, e, m)
                    for name, run in PIPELINES.items():
                        graded_count += 1
                        got = run(f, geom, cfg)
                        if got != 0:
                            failures.append(("grading", label, kappa, e, m, name, got))
    _conclude(
        5,
        f"vanishing holds exactly: {low_count} below-fiber-power cases and "
        f"{graded_count} wrong-total-degree cases are all zero in all pipelines",
        failures,
        capsys,
    )


def test_criterion_6_hypersurface_scan_is_cubic_in_degree(capsys):
    """For n=2, kappa=2, weights (3,1), twist 1, the Morse number is a cubic
    polynomial in the hypersurface degree d.

    The polynomial is pinned by Lagrange interpolation through d = 1..4 and
    must then reproduce d = 5 and 6, and a fresh cross-checked computation
    at d = 7.
    """
    failures = []
    weights = WeightVector((3, 1), ample_power=1)

    def value_at(d, pipeline="residue"):
        geom = chern_of_geometry("hypersurface_tangent", 2, d)
        cfg = TowerConfig.for_geometry(geom, 2)
        return morse_number(geom, cfg, weights, pipeline=pipeline,
                            geometry_label="hypersurface", degree=d).value

    nodes = {d: value_at(d) for d in (1, 2, 3, 4)}

    def interpolated(d):
        total = Fraction(0)
        for di, vi in nodes.items():
            term = vi
            for dj in nodes:
                if dj != di:
                    term *= Fraction(d - dj, di - dj)
            total += term
        return total

    for d in (5, 6):
        got = value_at(d)
        if got != interpolated(d):
            failures.append((d, got, interpolated(d)))
    fresh = value_at(7, pipeline="all")  # raises if the pipelines disagree
    if fresh != interpolated(7):
        failures.append((7, fresh, interpolated(7)))
    _conclude(
        6,
        "hypersurface n=2 kappa=2 weights (3,1) twist 1: the degree-<=3 "
        "polynomial through d=1..4 reproduces d=5,6 and a fresh run at d=7 "
        f"(value {fresh})",
        failures,
        capsys,
    )


def test_criterion_7_desk_scale_search_not_asymptotic_bounds(capsys):
    """The search reports computed signs at desk scale, nothing more.

    Known asymptotic existence bounds for these positivity questions have
    shapes like (5n)^2 n^n, n^(8n), and 2^(n^5); they live far beyond exact
    desk-scale computation and this package does not attempt to reproduce
    or test them.  What is tested: the scan covers every degree it was asked
    for, reports each exact sign, and its values match independent
    recomputation.
    """
    failures = []
    n, kappa, d_max = 2, 2, 15
    weights = WeightVector((3, 1), ample_power=1)
    scan = minimal_degree_search("hypersurface_tangent", n, kappa, weights,
                                 d_max=d_max, pipeline="stepwise")
    if [rep.degree for rep in scan.reports] != list(range(1, d_max + 1)):
        failures.append(("incomplete scan", [rep.degree for rep in scan.reports]))
    if scan.found_degree != 1:
        failures.append(("found_degree", scan.found_degree))
    for rep in (scan.reports[0], scan.reports[-1]):
        geom = chern_of_geometry("hypersurface_tangent", n, rep.degree)
        cfg = TowerConfig.for_geometry(geom, kappa)
        again = morse_number(geom, cfg, weights, pipeline="all").value
        if again != rep.value:
            failures.append(("recompute", rep.degree, rep.value, again))
    # The quoted literature bounds are astronomically beyond this scan; make
    # the non-overlap concrete so nobody mistakes the scan for a proof.
    literature = min((5 * n) ** 2 * n ** n, n ** (8 * n), 2 ** n ** 5)
    if d_max >= literature:
        failures.append(("scan overlaps asymptotic regime", d_max, literature))
    _conclude(
        7,
        f"search is desk-scale reporting only (n={n}, kappa={kappa}, "
        f"d<={d_max}: first positive at d={scan.found_degree}); asymptotic "
        "existence bounds of shapes (5n)^2 n^n, n^(8n), 2^(n^5) are quoted "
        f"context (smallest here: {literature}), not reproduced, not tested",
        failures,
        capsys,
    )
