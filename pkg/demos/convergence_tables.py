"""Reproduce the three benchmark convergence tables by self-convergence.

Temporal runs compare final states at steps tau and tau/2 on one mesh;
spatial runs prolong to the refined mesh.  First-order rates in time and
second-order rates in space are the expected outcomes.

Run with:  python demos/convergence_tables.py       (about half a minute)
"""

from expandiff import (CoefficientLaw, PiecewiseFn, ProblemSpec, SourceTerm,
                       spatial_study, temporal_study)
from expandiff.cli import print_table

TAUS = [1 / 50, 1 / 100, 1 / 200, 1 / 400, 1 / 800]

print("== forced problem, temporal rates (h = 1/128) ==")
for alpha in (0.3, 0.7):
    spec = ProblemSpec(alpha=alpha, final_time=1.0,
                       coefficient=CoefficientLaw.power(1.0, 1.01),
                       initial=PiecewiseFn.zero(),
                       source=SourceTerm.separable(PiecewiseFn.indicator(0.0, 0.5),
                                                   time_exponent=0.1))
    print_table(temporal_study(spec, 128, TAUS, label=f"alpha={alpha}"))

print("\n== homogeneous problem, temporal rates (h = 1/128) ==")
for alpha in (0.4, 0.6):
    spec = ProblemSpec(alpha=alpha, final_time=1.0,
                       coefficient=CoefficientLaw.power(1.0, 2.01),
                       initial=PiecewiseFn.indicator(0.5, 1.0),
                       source=SourceTerm.zero())
    print_table(temporal_study(spec, 128, TAUS, label=f"alpha={alpha}"))

print("\n== forced problem with datum, spatial rates (tau = 1/1000, T = 2) ==")
for alpha in (0.2, 0.7):
    spec = ProblemSpec(alpha=alpha, final_time=2.0,
                       coefficient=CoefficientLaw.power(10.0, 1.01),
                       initial=PiecewiseFn.indicator(0.5, 1.0),
                       source=SourceTerm.separable(PiecewiseFn.indicator(0.0, 0.5),
                                                   time_exponent=0.1))
    print_table(spatial_study(spec, 1 / 1000, [32, 64, 128, 256, 512],
                              label=f"alpha={alpha}"))
