"""A complete worked example, end to end.

Take the hypersurface ring k[x1,x2,x3]/(x1^3) and the grade-2 perfect
ideal presented by the circulant matrix

        [ x1  x3 ]
  psi = [ x2  x1 ]
        [ x3  x2 ]

The script builds the Jacobian dual, extends it by a column for f, and
runs the dual iterations, printing the new defining equation found at
each step.  With m = deg f = 3 there are exactly three steps, and the
x-degrees of the produced equations walk down 2, 1, 0 while the
T-degrees walk up 2, 4, 6.
"""

from reesdual import (
    defining_ideal,
    ideal_instance_from_strings,
    jacobian_dual,
    special_fiber,
)

inst = ideal_instance_from_strings(
    2, 3, "x1^3", [["x1", "x3"], ["x2", "x1"], ["x3", "x2"]]
)

print("presentation psi:")
for row in inst.psi.to_strings():
    print("   ", row)

B = jacobian_dual(inst.psi)
print("\nJacobian dual B(psi) (satisfies [x] * B = [T] * psi):")
for row in B.to_strings():
    print("   ", row)

result = defining_ideal(inst)
print("\ndual iterations:")
for state in result.states:
    bd = state.det.bidegree()
    print(f"  step {state.step}: F_{state.step} = {state.det}")
    print(f"           bidegree {bd.pair()}")

print("\ndefining ideal generators (ell_1, ell_2, f, F_1, F_2, F_3):")
for g in result.ambient.gens:
    print("   ", g)

fiber, degree = special_fiber(result.ambient)
print(f"\nspecial fiber equation (pure in T, degree m*d = {degree}):")
print("   ", fiber)
