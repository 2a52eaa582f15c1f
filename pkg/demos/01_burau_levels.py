"""A first look at the integral Burau representation and its congruence levels.

Run: python demos/01_burau_levels.py
"""

from braidcong import (artin_generator, burau_unreduced, in_level, in_pb_squared, integral_burau,
                       linking_numbers, parse_braid)

# %% The Burau matrix of a half twist, before and after specializing t = -1
s1 = parse_braid("n=3; 1")
print("Burau(s1):", burau_unreduced(s1))
print("rho(s1):\n", integral_burau(s1))

# %% Pure braids are exactly the level-2 braids; the level-4 braids are the
# pure braids with every pairwise linking number even.
for text in ["n=3; 1", "n=3; 1 1", "n=3; 1 1 1 1", "n=3; 1 1 2 2", "n=3; 1 2 -1 -2"]:
    w = parse_braid(text)
    print(f"{text:18} level2={in_level(w, 2)!s:5} level4={in_level(w, 4)!s:5} PB^2={in_pb_squared(w)}")

# %% An Artin generator links one pair of strands once
a13 = artin_generator(1, 3, 3)
print("a_13 =", a13)
print(linking_numbers(a13))
print("a_13^2 level 4:", in_level(a13 ** 2, 4))
