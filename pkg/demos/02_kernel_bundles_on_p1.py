"""Kernel bundles on the projective line and their splitting types.

For sl2 at p odd, the p-nilpotent cone is a quadric cone; pulling back along
the conic chart (s^2, -t^2, st) turns the operator on a highest-weight
module V_m into a matrix of quadrics in (s, t), whose graded kernel is a
free module — i.e. a direct sum of line bundles O(d)."""

from jordanbundles import (
    construct_weyl_sl2,
    kernel_graded,
    restrict_p1,
    splitting_type,
    theta_global,
)

p = 5
print("p =", p)
for m in range(0, 2 * p - 1):
    rep = construct_weyl_sl2(m, p)
    b = restrict_p1(theta_global(rep))
    sub = kernel_graded(b, 1)
    st = splitting_type(sub)
    print("V_%d (dim %2d):  Ker = %s   (generators in degrees %s, certified %s)"
          % (m, rep.dim, st, sub.degrees, sub.certified_free))

print("\nnote the jump at m = p: a second generator of degree 2(p-1)-m "
      "appears and the kernel becomes a rank-2 bundle.")
