"""The whole generating set from a single differential operator.

Over the rationals the iteration can be replaced by one operator: the
determinant of the Jacobian dual extended by the column of partial
derivative operators.  Applying it repeatedly to f produces, up to
nonzero scalars, the same equations the iterations produce, so the
defining ideal is (ell_1, ..., ell_d, f, Df, D^2 f, ..., D^m f).
"""

from reesdual import (
    diffop_iterations,
    ideal_equal,
    ideal_instance_from_strings,
    mjd_iterations,
)

inst = ideal_instance_from_strings(
    2, 3, "x1^3", [["x1", "x3"], ["x2", "x1"], ["x3", "x2"]]
)

result = diffop_iterations(inst.psi, inst.f)
print("operator powers applied to f:")
for i, p in enumerate(result.powers):
    print(f"  D^{i} f = {p}")

euler_states = mjd_iterations(inst.psi, inst.f, "euler")
print("\nscalar ratios against the gradient-column iteration:")
for power, state in zip(result.powers[1:], euler_states):
    mon, coeff = next(iter(state.det.terms.items()))
    ratio = power.terms[mon] / coeff
    print(f"  D^{state.step} f = {ratio} * F_{state.step}")

greedy_states = mjd_iterations(inst.psi, inst.f)
ambient = greedy_states[-1].ideal.plus([greedy_states[-1].det])
print("\nsame ideal as the iterations:", ideal_equal(result.gens, ambient))
