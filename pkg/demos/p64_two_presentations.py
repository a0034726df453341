"""P(6,4) written down twice, and taken apart.

Two stacky fans over the fan of P^1 with N = Z + Z/2 differ only in the
torsion residue of the second ray.  Both give the same stack.
"""
from toricstack import (canonicalize, compare, decompose, dg_group, dm_torus, make_stacky_fan,
                        multiplicities, quotient_presentation, recompose, rigidify,
                        verify_pic_sequences)

beta1 = make_stacky_fan(1, [2], [[2, 1], [-3, 0]], [[0], [1]])
beta2 = make_stacky_fan(1, [2], [[2, 1], [-3, 1]], [[0], [1]])

for name, sf in [("beta1", beta1), ("beta2", beta2)]:
    pd = dg_group(sf)
    print(name, "Pic =", pd.pic, " divisor classes", [c[0] for c in pd.divisor_classes])

# the quotient [C^2 - 0 / C*] with weights 6 and 4
qp = quotient_presentation(beta1)
print("weights", qp.action_weights, "Cox patterns", [sorted(p) for p in qp.cox_patterns])
print("DM torus:", dm_torus(beta1))          # (C*)^1 x B mu_2

# kill the generic mu_2 and then the divisor roots
rig = rigidify(beta1)
print("rigidified classes", [c[0] for c in dg_group(rig).divisor_classes])   # P(3,2)
print("multiplicities", multiplicities(beta1))
print("coarse beta", canonicalize(beta1).beta_free.row(0))

dec = decompose(beta1)
print("decomposition", dec.as_dict())
print("beta2 gerbe", decompose(beta2).gerbe.entries)   # [3] = [5] = [1] in Pic(P(3,2))/2

print("compare:", compare(beta1, beta2))
print("round trip:", compare(beta1, recompose(dec)).verdict)

rep = verify_pic_sequences(beta1)
print("exact sequences pass:", rep.passed, " indices", rep.index_can_rig, rep.index_rig_full)
