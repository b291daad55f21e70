"""Elementary modifications along the reducible fiber, and their cost.

Run:  python3 demos/hecke_patterns.py
"""

from ellspec import SpectralParams, hecke_pattern_ch, means_gap, spectral_ch
from ellspec.threefold import pullback_from_b

# Start from the rank-3 spectral character and modify along both
# components of the reducible fiber with one point of multiplicity 2.
w = spectral_ch(SpectralParams(3, 6, 10))
plain = pullback_from_b(w)
modified = hecke_pattern_ch(w, [2, 0, 0])

print("before:", plain)
print("after: ", modified)
print("ch1 drop:", plain.c1_bp - modified.c1_bp)
print("ch2 drop on f x pt:", plain.h4_fpt - modified.h4_fpt)

# Each point of multiplicity a costs a^2 on the quadratic term but only a
# on the linear term, so spreading multiplicity across points is cheaper.
# The gap between the two is what the second constraint window spends.
for a in ([2, 0], [1, 1], [0, 2], [3, 0, 0], [1, 1, 1]):
    i = len(a)
    print(f"means gap for i={i}, a={a}: {means_gap(i, a)}")

# The gap vanishes exactly on constant lists; anything lopsided pays.
assert means_gap(2, [1, 1]) == 0
assert means_gap(2, [0, 2]) < 0
print("\nconstant lists are free, lopsided lists pay a negative gap")
