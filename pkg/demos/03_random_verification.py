"""Randomized verification loop.

Draw seeded random instances, check the theorem hypotheses through
Fitting-ideal heights, then confirm on each instance that the iteration
ideal, the matrix-iteration ideal, and the saturation all coincide, the
stabilization index is m, the generator count is d + m + 1, and the
special fiber equation has degree m * d.
"""

from reesdual import (
    IdealGens,
    Poly,
    check_ideal_instance,
    ideal_equal,
    matrix_iterations,
    mjd_iterations,
    random_instance,
    saturate,
    special_fiber,
)

for d, m, seed in [(2, 2, 101), (2, 3, 102), (3, 2, 103)]:
    inst = random_instance(d, m, seed)
    report = check_ideal_instance(inst)
    print(f"d={d} m={m} seed={seed}:")
    for cond in report.conditions:
        print(f"    [{'ok' if cond.passed else 'XX'}] {cond.name}")

    states = mjd_iterations(inst.psi, inst.f)
    ambient = states[-1].ideal.plus([states[-1].det])
    _, matrix_ideal = matrix_iterations(inst.psi, inst.f, m)
    xs = IdealGens(
        inst.vars, [Poly.var(inst.vars, i) for i in inst.vars.x_indices()]
    )
    saturation, index = saturate(states[0].ideal, xs)

    agree = ideal_equal(ambient, saturation) and ideal_equal(
        matrix_ideal, saturation
    )
    fiber, degree = special_fiber(ambient)
    print(f"    three routes agree: {agree}")
    print(f"    saturation index {index} (= m: {index == m})")
    print(f"    {len(ambient)} generators (= d+m+1: {len(ambient) == d + m + 1})")
    print(f"    fiber degree {degree} (= m*d: {degree == m * d})")
    print()
