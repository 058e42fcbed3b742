"""Global sections detect non-self-duality; projectivity and endotriviality
are decided by rank constancy plus fiber vanishing; K-theory classes of
kernel bundles satisfy a twist recursion on projective modules."""

from jordanbundles import (
    construct_duals_example,
    construct_syzygy_E2,
    construct_zigzag,
    dual_module,
    endotrivial_test,
    free_module_E,
    k0_class,
    kernel_graded,
    principal_indecomposable_sl2,
    projectivity_test,
    restrict_p1,
    rho_kappa_matrix,
    theta_global,
)

p = 3

# A 3-dimensional module M over the height-2 additive kernel whose dual has
# a different number of operator-killed global sections: M and M^# are not
# isomorphic even though they share all local Jordan types.
rep = construct_duals_example(p)
from jordanbundles import global_sections

for name, m in (("M", rep), ("M dual", dual_module(rep))):
    basis, note = global_sections(theta_global(m), 1)
    print("sections of Ker(Theta) on %-7s: dim %d  (%s)" % (name, len(basis), note))

print("\nprojectivity / endotriviality verdicts:")
for name, m in (("free module", free_module_E(p, 1)),
                ("P_0", principal_indecomposable_sl2(0, p)),
                ("zig-zag n=2", construct_zigzag(2, p)),
                ("Omega^1(k)", construct_syzygy_E2(1, p))):
    pj = projectivity_test(theta_global(m)).verdict
    et = endotrivial_test(theta_global(m)).verdict
    print("  %-12s projective=%-5s endotrivial=%s" % (name, pj, et))

print("\nsection-dimension matrix (rows j = 1..p, cols P_0..P_%d):" % (p - 1))
for row in rho_kappa_matrix(p):
    print("  ", row)

print("\nK-class twist recursion on principal indecomposables:")
for lam in range(p):
    b = restrict_p1(theta_global(principal_indecomposable_sl2(lam, p)))
    ks = [k0_class(kernel_graded(b, j)) for j in range(1, p)]
    holds = all(ks[j - 1] == ks[0] + ks[j - 2].twist(2) for j in range(2, p))
    print("  P_%d: kappa_j = kappa_1 + kappa_{j-1}(2)?" % lam, holds,
          " classes:", ", ".join(str(k) for k in ks))
