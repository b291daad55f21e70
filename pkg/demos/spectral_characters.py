"""From a curve class and a degree to a bundle character, in closed form.

Run:  python3 demos/spectral_characters.py
"""

from ellspec import (
    SpectralParams,
    curve_pushforward_ch,
    fourier_mukai_b,
    linear_system_dims,
    spectral_ch,
    spectral_genus,
)

# Spectral data: a curve in the class r*e + m*f plus a line bundle of
# degree d on it.  The transform of its pushforward is a rank-r bundle.
p = SpectralParams(r=3, m=6, d=10)

staged = fourier_mukai_b(curve_pushforward_ch(p))
direct = spectral_ch(p)
print("step-by-step:", staged)
print("closed form: ", direct)
print("agree?", staged == direct)

# The genus of the spectral curve controls how many parameters the line
# bundle contributes to the moduli count.
for r, m in ((2, 2), (2, 3), (3, 6)):
    print(f"genus of the (r={r}, m={m}) curve:", spectral_genus(r, m))

# Dimensions of the linear systems the curves move in, split into the
# invariant and anti-invariant parts under the fiberwise involution.
for r, k in ((2, 2), (3, 3), (3, 6)):
    dims = linear_system_dims(r, k)
    print(
        f"r={r}, k={k}: h0 = {dims.h0}, "
        f"invariant {dims.invariant} (projective {dims.invariant - 1}), "
        f"anti-invariant {dims.anti_invariant} (projective {dims.anti_invariant - 1})"
    )
