# One intersection number, three independent computations.
#
# A monomial v_1^{e_1} ... v_kappa^{e_kappa} h^m of total degree n_kappa has
# a well-defined integral over the top of the tower.  The package computes
# it three ways that share almost no code:
#
#   stepwise  - eliminate one level at a time with twisted Segre multipliers
#   phi       - a single truncated universal polynomial against I(t)
#   residue   - iterated Laurent expansion of the universal rational factors
#
# Exact rational arithmetic means the three answers must match bit for bit.

from fractions import Fraction

from demres import (
    LaurentPoly,
    TowerConfig,
    chern_of_geometry,
    integrate_phi_form,
    integrate_residue,
    integrate_stepwise,
)

p2 = chern_of_geometry("projective_space", 2)
h = p2.ring.generator("h")

# --- a first number ---------------------------------------------------------
# Two levels over P^2: dim X_2 = 2 + 2*1 = 4, so v_2^4 is a top monomial.

cfg = TowerConfig.for_geometry(p2, 2)
print("tower dims over P^2, kappa=2:", cfg.dims)

f = LaurentPoly.monomial(2, (0, 4), p2.ring.one())
for name, run in (("stepwise", integrate_stepwise),
                  ("phi     ", integrate_phi_form),
                  ("residue ", integrate_residue)):
    print(f"  int v_2^4  via {name} =", run(f, p2, cfg))

# --- the whole degree-4 slice -----------------------------------------------
# Every monomial of total degree 4 in (v_1, v_2, h) gets the same treatment.
# Wrong-degree monomials integrate to zero, as they must.

print("\nall monomials v_1^a v_2^b h^m with a+b+m = 4:")
for a in range(5):
    for b in range(5 - a):
        m = 4 - a - b
        f = LaurentPoly.monomial(2, (a, b), h ** m)
        vals = {integrate_stepwise(f, p2, cfg),
                integrate_phi_form(f, p2, cfg),
                integrate_residue(f, p2, cfg)}
        assert len(vals) == 1, (a, b, m, vals)
        value = vals.pop()
        if value:
            print(f"  v_1^{a} v_2^{b} h^{m}: {value}")

wrong = LaurentPoly.monomial(2, (1, 1), h)     # degree 3 != 4
assert integrate_stepwise(wrong, p2, cfg) == 0
assert integrate_residue(wrong, p2, cfg) == 0

# --- a power below the fiber dimension vanishes -----------------------------
# Over P^3 the fibers are 2-dimensional (r = 2), so v_kappa^j with j < 2
# times anything pulled back from below integrates to zero.  The stepwise
# pipeline sees this as a negative-index Segre class; the other two have to
# find the same zero numerically.

p3 = chern_of_geometry("projective_space", 3)
cfg3 = TowerConfig.for_geometry(p3, 2)
g = LaurentPoly.monomial(2, (6, 1), p3.ring.one())   # v_1^6 v_2^1, degree 7
print("\nover P^3 (r=2): int v_1^6 v_2 =",
      integrate_stepwise(g, p3, cfg3), "/",
      integrate_phi_form(g, p3, cfg3), "/",
      integrate_residue(g, p3, cfg3))

# --- a bigger one, with a sign ----------------------------------------------
cfg33 = TowerConfig.for_geometry(p3, 3)
big = LaurentPoly.monomial(3, (0, 0, 9), p3.ring.one())
value = integrate_residue(big, p3, cfg33)
assert value == integrate_stepwise(big, p3, cfg33) == Fraction(-16944)
print("\nover P^3, kappa=3: int v_3^9 =", value)
