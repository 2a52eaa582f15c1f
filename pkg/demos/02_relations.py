"""Checking braid relations with the free-group word problem.

Run: python demos/02_relations.py
"""

from braidcong.braid import artin_generator, commutator, invert, is_trivial
from braidcong.burau import integral_burau

a12, a13, a23 = (artin_generator(i, j, 3) for i, j in ((1, 2), (1, 3), (2, 3)))

# %% The squared lantern relation: a commutator of two Artin generators is a
# product of squares.
lhs = commutator(a12, a13)
rhs = a12 ** 2 * (a13 ** 2).conj(a12) * a23 ** 2 * (a13 * a12 * a23) ** -2
print("relator trivial:", is_trivial(lhs * invert(rhs)))
print("rho(lhs) == rho(rhs):", (integral_burau(lhs) == integral_burau(rhs)).all())

# %% A commutator relation in B_4 (proved with the Witt-Hall identity)
A = lambda i, j: artin_generator(i, j, 4)  # noqa: E731
x = A(1, 3) * invert(A(2, 3))
lhs = commutator(A(1, 3), A(2, 4))
rhs = commutator(A(2, 3), A(2, 4)).conj(invert(x)) * commutator(A(2, 4), A(2, 3)).conj(A(2, 3))
print("B_4 relator trivial:", is_trivial(lhs * invert(rhs)))
