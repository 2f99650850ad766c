"""
Checking identities over a grid
===============================

The ``verify`` module evaluates both sides of each registered identity on a
fixed grid of complex points, skips points near poles and reports the worst
relative residual.  The command line ``gengamma verify`` drives the same code.
"""

from gengamma import ArithParams
from gengamma.identities import REGISTRY
from gengamma.verify import GridSpec, SuiteConfig, run_all, run_identity

print(len(REGISTRY), "identities registered\n")

# One identity, one parameter set.
rep = run_identity("complement", ArithParams(3, 2))
print(f"complement: {rep.points_tested} points, worst residual {rep.max_rel_residual:.1e} at {rep.worst_point}")

# A coarser grid with a wider pole margin keeps fewer points.
coarse = GridSpec(re_points=(-1.3, 0.2, 1.7), im_points=(0.0, 1.1), pole_margin=0.3)
rep = run_identity("duplication", ArithParams(0.5, 1), grid=coarse)
print(f"duplication on a coarse grid: {rep.points_tested} points, {rep.max_rel_residual:.1e}")

# A whole suite; every report serializes to one JSON record.
result = run_all(SuiteConfig(identities=("multiplication", "sin_mult")))
for r in result.reports[:4]:
    print(r.record())
print("...\noverall pass:", result.passed, f"({len(result.reports)} reports)")
