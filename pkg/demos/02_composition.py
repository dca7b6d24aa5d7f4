"""Composing, relabeling and contracting elements, with all the Koszul signs."""
from propwheel import wheeled_prop as wp
from propwheel.cli.parser import element_text, eval_text
from propwheel.koszul import Permutation

mu2 = wp.mu(2)
print("mu(2) =", element_text(mu2))

# the quadratic relation: the two ways of composing corollas cancel
left = wp.vertical(mu2, wp.tensor(mu2, wp.identity(1)))
right = wp.vertical(mu2, wp.tensor(wp.identity(1), mu2))
print("left  =", element_text(left))
print("right =", element_text(right))
print("sum is zero:", (left + right).is_zero())

# same thing through the expression language
print(eval_text("mu(2) . (mu(2) * id(1)) + mu(2) . (id(1) * mu(2))").is_zero())

# corollas are odd: swapping two inputs flips the sign
swap = Permutation([2, 1, 3])
print(wp.act_inputs(swap, wp.mu(3)) == -wp.mu(3))

# contracting an input with an output closes a loop into a wheel
print("xi(1,1) mu(3) =", element_text(wp.contract(1, 1, wp.mu(3))))

# graded interchange: moving b past c costs (-1)^(deg b * deg c); here both are odd
a, b = mu2, mu2
c, d = wp.tensor(mu2, wp.identity(1)), wp.identity(2)
lhs = wp.vertical(wp.horizontal(a, b), wp.horizontal(c, d))
rhs = wp.horizontal(wp.vertical(a, c), wp.vertical(b, d))
print(b.degree, c.degree, lhs == -rhs)
