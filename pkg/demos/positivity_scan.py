# Morse-inequality numbers for weighted line bundles, and a degree scan.
#
# Given weights (a_1, ..., a_kappa) and a twist l, the class of interest is
#
#   c1(F) = a_1 u_1 + ... + a_kappa u_kappa + l h,      c1(G) = (l+1) h,
#
# with u_i the relative hyperplane class of level i.  The Morse-type number
#
#   I = int c1(F)^{n_kappa}  -  n_kappa * int c1(F)^{n_kappa - 1} c1(G)
#
# is an exact rational; a positive value is the interesting outcome.  The
# search command scans hypersurface degrees for the first positive value.

from demres import (
    TowerConfig,
    WeightVector,
    chern_of_geometry,
    minimal_degree_search,
    morse_number,
    weights_valid_L,
    weights_valid_demailly,
)

# --- a single evaluation ------------------------------------------------------
# The smallest interesting case: one level over P^2, weight 1, no twist.

p2 = chern_of_geometry("projective_space", 2)
cfg = TowerConfig.for_geometry(p2, 1)
report = morse_number(p2, cfg, WeightVector((1,), ample_power=0),
                      pipeline="all", geometry_label="pn")
print("P^2, kappa=1, weights (1), twist 0:")
print("  value    =", report.value)
print("  positive =", report.positive)
print("  pipelines:", {k: str(v) for k, v in report.values.items()})

# --- weight validity ----------------------------------------------------------
# Two sufficient conditions for the weighted bundle to be ample-ish enough to
# feed the Morse inequality.  They are checks on the weight vector only.

for a in ((3, 1), (2, 1), (9, 3, 1), (8, 3, 1)):
    print(f"weights {a}: tautological-basis condition:",
          weights_valid_demailly(a, len(a)),
          "/ L-basis condition:", weights_valid_L(a, len(a)))

# --- scanning hypersurface degrees ---------------------------------------------
# Over degree-d hypersurfaces in P^3 with two levels and weights (3, 1), the
# Morse number turns out to be a cubic polynomial in d, positive only for
# small d.  The scan reports every sign it computed.

scan = minimal_degree_search("hypersurface_tangent", 2, 2,
                             WeightVector((3, 1), ample_power=1), d_max=8)
print("\nhypersurface scan, n=2, kappa=2, weights (3,1), twist 1:")
for rep in scan.reports:
    flag = "positive" if rep.positive else "negative"
    print(f"  d={rep.degree}: {rep.value}  ({flag})")
print("first positive degree:", scan.found_degree)

# The third difference of consecutive values is constant: the scan values lie
# on an exact cubic in d.

vals = [rep.value for rep in scan.reports]
third = [vals[i + 3] - 3 * vals[i + 2] + 3 * vals[i + 1] - vals[i]
         for i in range(len(vals) - 3)]
print("third differences:", sorted(set(third)))
