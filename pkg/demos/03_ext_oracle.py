"""The bar-complex oracle: Ext dimensions, the symmetric group actions and Yoneda products."""
from propwheel import wheeled_prop as wp
from propwheel.cli.parser import element_text
from propwheel.ext_oracle import (ExtBasis, YonedaOracle, build_complex, check_d_squared,
                                  ext_dimensions, ext_lambda_dimensions)
from propwheel.ext_oracle.compare import compare_actions, wheel_degree_sign
from propwheel.koszul import Permutation

# Ext(a^l, a^q) lives in one degree, q - l, and counts surjections q -> l
for q in range(1, 5):
    print(q, [ext_dimensions(l, q) for l in range(1, q + 1)])

# exterior powers in the source give Stirling numbers
print([ext_lambda_dimensions(j, 4) for j in range(1, 5)])

cx = build_complex(2, 4)
print("cochains by degree:", {k: len(v) for k, v in cx.bases.items()}, "d^2 = 0:", check_d_squared(cx))

# how a transposition of inputs acts on cohomology, written in the diagram basis
basis = ExtBasis(3, 1, 0)
print([str(d) for d in basis.diagrams])
print(basis.matrix(Permutation([2, 1, 3]), "inputs"))

# the engine agrees with the oracle on every generator, up to a diagonal sign
print(compare_actions(3, 1, seed=wheel_degree_sign).ok)

# Yoneda products with pi^n against the corolla in each slot
y = YonedaOracle()
for k in (1, 2, 3):
    z = y.product(y.pi_power(3), 1, 3, [(1, k, None)])
    print("slot", k, {str(d): str(c) for d, c in y.class_of(z, 4, 1).items()})

# the engine's vertical composition says the same thing
print(element_text(wp.vertical(wp.mu(2), wp.tensor(wp.mu(2), wp.identity(1)))))
