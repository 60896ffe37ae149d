# Windowed iterated Laurent expansion, and what "certified" means.
#
# The residue pipeline expands rational functions like (t2 - t1)/(t2 - 2 t1)
# as Laurent series in the regime t1 << t2 << 1.  Infinitely many terms
# exist; the package only ever materializes a finite window of exponents,
# together with support bounds that prove no contributing term was cut off.
# When a product cannot be certified on the requested window, the operation
# refuses loudly instead of returning a silently wrong coefficient.

from fractions import Fraction

from demres import (
    LaurentPoly,
    Window,
    WindowError,
    cauchy_mul,
    expand_geometric,
    expand_rational_product,
)

t1 = LaurentPoly.variable(2, 0)
t2 = LaurentPoly.variable(2, 1)

# --- a single universal factor ----------------------------------------------
# 1/(t2 - 2 t1) = (1/t2) * 1/(1 - 2 t1/t2) = sum_k 2^k t1^k t2^{-1-k}.

w = Window.cube(2, -5, 5)
series = expand_rational_product([(t2 - t1, t2 - 2 * t1)], w)
print("(t2 - t1)/(t2 - 2 t1) on", w)
for k in range(4):
    print(f"  coefficient of t1^{k} t2^{-k} =", series.coeff((k, -k)))
# (the k=0 term is 1; after that each diagonal coefficient is 2^{k-1})

# Asking for a coefficient outside the window is an error, not a zero:
try:
    series.coeff((9, -9))
except WindowError as err:
    print("  outside the window:", err)

# --- geometric series, checked against the power sum -------------------------
# expand_geometric computes 1/(leading * (1 + tail)).  For a monomial tail
# the answer is literally the geometric sum, so we can compare directly.

x = LaurentPoly.monomial(2, (1, 1), Fraction(1, 2))
geo = expand_geometric(LaurentPoly.one(2), -x, Window.cube(2, -4, 4))
explicit = LaurentPoly.one(2)
power = LaurentPoly.one(2)
for _ in range(8):
    power = power * x
    explicit = explicit + power
assert geo.terms == {e: v for e, v in explicit.terms.items()
                     if Window.cube(2, -4, 4).contains(e)}
print("\n1/(1 - t1 t2 / 2) matches sum_k (t1 t2 / 2)^k on the window")

# --- certified refusal --------------------------------------------------------
# Multiplying two windowed series is only allowed when the support bounds
# prove the requested output coefficients are complete.  Ask for more than
# the operands can support and the product refuses instead of guessing.

t = LaurentPoly.variable(1, 0)
narrow = expand_geometric(LaurentPoly.one(1), -t, Window.from_pairs([(0, 2)]))
try:
    cauchy_mul(narrow, narrow, Window.from_pairs([(0, 5)]))
except WindowError as err:
    print("\noverreaching product refused:", err)
# (the coefficient of t^5 in (1/(1-t))^2 needs operand terms past t^2)

a = expand_rational_product([(t2, t2 - 2 * t1)], Window.cube(2, -6, 6))
b = expand_rational_product([(t2 - 2 * t1, t2)], Window.cube(2, -6, 6))
product = cauchy_mul(a, b, Window.cube(2, -2, 2))
assert product.terms == {(0, 0): 1}
print("nested-window product certified: Q * Q^{-1} = 1 exactly")

# --- why the window can stay small -------------------------------------------
# The universal factors all have total degree zero and only nonnegative
# powers of t1 once expanded, and every partial sum of exponents stays
# nonnegative.  Those support bounds are what the certification uses; they
# are carried on the series objects themselves.

print("\nsupport bounds carried by the factor above:")
print("  prefix minimums:", a.prefix_mins)
print("  prefix maximums:", a.prefix_maxs)
