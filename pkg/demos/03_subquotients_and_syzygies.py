"""Graded subquotient sheaves: zig-zag modules and syzygies of the trivial
module over k[x,y]/(x^p, y^p) produce explicit line bundles O(d) — including
positive twists, which no kernel of a global operator can produce alone."""

from jordanbundles import (
    construct_syzygy_E2,
    construct_zigzag,
    dual_module,
    restrict_p1,
    subquotient_mj,
    theta_global,
)

p = 3
print("zig-zag modules and their duals (operator nilpotency degree 2,")
print("so the subquotient is ker Theta / im Theta):")
for n in range(1, 5):
    rep = construct_zigzag(n, p)
    sub = subquotient_mj(restrict_p1(theta_global(rep)), 1, im_power=1)
    subd = subquotient_mj(
        restrict_p1(theta_global(dual_module(rep))), 1, im_power=1)
    print("  n=%d:  X_n -> %s,   X_n dual -> %s" % (n, sub.splitting, subd.splitting))

print("\nsyzygy modules Omega^n(k) over k[x,y]/(x^p, y^p), p = %d:" % p)
for n in range(1, 5):
    rep = construct_syzygy_E2(n, p)
    sub = subquotient_mj(restrict_p1(theta_global(rep)), 1)
    print("  Omega^%d (dim %2d) -> %s" % (n, rep.dim, sub.splitting))
