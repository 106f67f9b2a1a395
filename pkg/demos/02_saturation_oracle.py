"""The verification oracle at work.

The defining ideal can be described two independent ways:

  * by the dual iterations (fast, structural), and
  * as the saturation of the symmetric-algebra ideal with respect to
    the variable ideal (slow, but first principles: iterated Groebner
    colon computations until the chain stabilizes).

This script computes both on the worked example and checks they agree,
and that the chain stabilizes at exactly m steps: the colon at m-1 is
still strictly smaller.
"""

from reesdual import (
    IdealGens,
    Poly,
    colon_ideal,
    ideal_equal,
    ideal_instance_from_strings,
    mjd_iterations,
    saturate,
    saturation_index_bound,
)

inst = ideal_instance_from_strings(
    2, 3, "x1^3", [["x1", "x3"], ["x2", "x1"], ["x3", "x2"]]
)
vars = inst.vars

states = mjd_iterations(inst.psi, inst.f)
iterated = states[-1].ideal.plus([states[-1].det])
sym_ideal = states[0].ideal
xs = IdealGens(vars, [Poly.var(vars, i) for i in vars.x_indices()])

print("colon chain  L : (x1,x2,x3)^i  until it stabilizes:")
chain = [sym_ideal]
while True:
    nxt = colon_ideal(chain[-1], xs)
    grew = not ideal_equal(nxt, chain[-1])
    print(f"  i = {len(chain)}: {'strictly larger' if grew else 'stable'}")
    if not grew:
        break
    chain.append(nxt)

saturation, index = saturate(sym_ideal, xs)
print(f"\nstabilization index = {index} (m = {inst.m})")

bound = saturation_index_bound(
    [g.bidegree().x for g in sym_ideal.gens], vars.nx
)
print(f"a priori index bound from the generator degrees = {bound}")

print("\niteration ideal == saturation:", ideal_equal(iterated, saturation))
