"""Validate the stepper against the closed-form single-mode solution.

With constant diffusivity and initial datum sin(pi x), the solution is
E_alpha(-pi^2 t^alpha) sin(pi x), so absolute errors are available; no
self-convergence is needed.  The temporal order is cleanly first;
the spatial order is second until the fixed-step temporal error floor
(~ 0.02 * tau in L2) overtakes the shrinking spatial error, which this
script makes visible on the finest meshes.

Run with:  python demos/oracle_validation.py
"""

from expandiff import mode_error, oracle_study, solve
from expandiff import CoefficientLaw, PiecewiseFn, ProblemSpec, SourceTerm
from expandiff.cli import print_table

for alpha in (0.5, 0.8):
    print(f"== alpha = {alpha}: temporal axis (h = 1/256) ==")
    tb = oracle_study(alpha, 1.0, 1, final_time=1.0, n_cells=256,
                      tau_list=[1 / 50, 1 / 100, 1 / 200, 1 / 400],
                      label=f"alpha={alpha}")
    print_table(tb)

    print(f"== alpha = {alpha}: spatial axis (tau = 1/2000) ==")
    tb = oracle_study(alpha, 1.0, 1, final_time=1.0, tau=1 / 2000,
                      n_cells_list=[16, 32, 64, 128], label=f"alpha={alpha}")
    print_table(tb)
    print("   (the last rate collapses: the tau-floor of the first-order"
          " stepper exceeds the h = 1/128 spatial error)\n")

# Show the floor directly: refine tau at fixed h and watch the error
# against the closed form saturate at the spatial level.
spec = ProblemSpec(alpha=0.5, final_time=1.0,
                   coefficient=CoefficientLaw.constant(1.0),
                   initial=PiecewiseFn.sine(1), source=SourceTerm.zero())
print("fixed h = 1/64, shrinking tau: error vs closed form")
for steps in (100, 400, 1600, 6400):
    run = solve(spec, 64, steps)
    err = mode_error(run.mesh, run.final, 0.5, 1.0, 1, 1.0)
    print(f"  tau = 1/{steps}: {err:.3e}")
print("the error saturates near the spatial level ~1.3e-05; the dip below it"
      "\nis sign cancellation between the temporal and spatial components")
