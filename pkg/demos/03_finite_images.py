"""Images of braid groups in Sp(Z/4), computed by exact enumeration.

Run: python demos/03_finite_images.py   (takes a few seconds)
"""

from math import comb, factorial

from braidcong.finite import closure, equals, subgroup_index
from braidcong.suite import artin_images, push_images, sigma_images, transvection_squares
from braidcong.symplectic import generating_sets

# %% The pure braid group maps onto a group of order 2^C(n,2) mod 4
for n in (3, 4, 5):
    G = closure(artin_images(n, 4))
    print(f"n={n}: |rho(PB_n) mod 4| = {G.order} (2^{comb(n, 2)} = {2 ** comb(n, 2)})")

# %% The whole braid group adds the symmetric group on top
for n in (3, 4):
    print(f"n={n}: |rho(B_n) mod 4| = {closure(sigma_images(n, 4)).order}",
          f"= 2^{comb(n, 2)} * {factorial(n)}")

# %% Ten transvection squares generate the same group as rho(PB_5)
T = closure(transvection_squares(generating_sets(2, "odd"), 4))
P = closure(artin_images(5, 4))
print("generating set closure:", T.order, "equal to rho(PB_5):", equals(T, P))

# %% Pushing the first point around gives a small subgroup
push = closure(push_images(5, 4))
print("point-pushing image:", push.order, "index", subgroup_index(P, push))
