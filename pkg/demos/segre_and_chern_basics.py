# Base geometries: Chern classes, Segre inverses, and exact pairings.
#
# Everything downstream is built on a tiny graded ring: Q[h]/(h^{n+1}) with
# the pairing "integrate h^n".  A geometry packages that ring together with
# the total Chern class of the bundle the tower is built from.  This script
# walks through the three supported families and checks the basic identities
# by hand.

from demres import chern_of_geometry, integrate_base, ring_inv_unit, ring_mul

# --- projective space -------------------------------------------------------
# On P^2 the relevant bundle has total Chern class (1+h)^3 truncated past
# degree 2, i.e. 1 + 3h + 3h^2, and the pairing integrates h^2 to 1.

p2 = chern_of_geometry("projective_space", 2)
h = p2.ring.generator("h")

print("P^2:")
print("  c(V0)      =", p2.total_chern_V0)
print("  rank V0    =", p2.rank_V0, " (fiber dimension r =", p2.r, ")")
print("  int h^2    =", integrate_base(h * h))

# The Segre class is the multiplicative inverse of the Chern class, solved
# degree by degree.  chern * segre == 1 exactly.

segre = ring_inv_unit(p2.total_chern_V0)
print("  s(V0)      =", segre)
assert ring_mul(p2.total_chern_V0, segre) == p2.ring.one()

# segre_parts() hands out the same data split by degree; the parts are what
# the tower integrals consume.

for j, part in enumerate(p2.segre_parts()):
    print(f"  s_{j}(V0)    =", part)

# --- hypersurfaces ----------------------------------------------------------
# For a smooth degree-d hypersurface X_d in P^{n+1} the tangent bundle has
# c(T) = (1+h)^{n+2} / (1+dh) and the pairing is int h^n = d (the class h is
# the restriction of the ambient hyperplane).  Degree 1 recovers P^n.

for d in (1, 2, 5):
    xd = chern_of_geometry("hypersurface_tangent", 3, d)
    hh = xd.ring.generator("h")
    print(f"X_{d} in P^4:  c(T) = {xd.total_chern_V0},  int h^3 = "
          f"{integrate_base(hh ** 3)}")

p3 = chern_of_geometry("projective_space", 3)
x1 = chern_of_geometry("hypersurface_tangent", 3, 1)
assert x1.total_chern_V0.terms == p3.total_chern_V0.terms

# --- log pairs --------------------------------------------------------------
# The log variant keeps the P^n pairing (int h^n = 1) but divides the Chern
# class by (1+dh): the bundle is the log tangent sheaf along a degree-d
# divisor.

for d in (3, 4):
    logp = chern_of_geometry("log_projective", 2, d)
    print(f"log-P^2 (divisor degree {d}):  c = {logp.total_chern_V0}")

# All three families share rank V0 = n, so every tower over them has fiber
# dimension r = n - 1.
