"""Counting wheeled diagrams: basis sizes and the dimension table."""
from propwheel.combinatorics import bell, dimension_formula
from propwheel.diagrams import dimension, enumerate_basis

# a basis diagram of biarity (q, l) splits q inputs into l output fibers plus wheels
for d in enumerate_basis(3, 1):
    print(d, " degree", d.degree)

# the count matches the closed formula
print(dimension(3, 1), dimension_formula(3, 1))

# no outputs at all: every input sits on a wheel, so we get Bell numbers
print([dimension(q, 0) for q in range(8)])
print([bell(q) for q in range(8)])

# q == l is the symmetric group
print([dimension(q, q) for q in range(7)])

# the whole table up to q = 5
for q in range(6):
    print(q, [dimension(q, l) for l in range(q + 1)])
