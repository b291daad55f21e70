"""The finite character lattice of the reducible spectral curve.

Run:  python3 demos/character_lattice.py
"""

from ellspec import (
    SPANNING_CHARACTERS,
    chi_in_lattice,
    full_lattice_rank,
    lambda_rank,
    lambda_representation,
)
from ellspec.characters import COMPONENTS, LAMBDA_COLUMNS, POINTS, component_image

# Characters live on the 12 marked points; membership in the lattice means
# the induced component function vanishes.
print("points:", ", ".join(f"p{i}{j}" for i, j in POINTS))
print("components:", ", ".join(COMPONENTS))

chi = SPANNING_CHARACTERS[0]
print("\nfirst character:", chi)
print("component image:", component_image(chi), "-> in lattice?", chi_in_lattice(chi))

# A character that weights a single point never balances out.
unbalanced = tuple(1 if i == 0 else 0 for i in range(12))
print("single-point character in lattice?", chi_in_lattice(unbalanced))

# Inside the lattice, each character is determined by 8 coordinates.
print("\ncolumns:", ", ".join(LAMBDA_COLUMNS))
reps = []
for chi in SPANNING_CHARACTERS:
    rep = lambda_representation(chi)
    reps.append(rep)
    print("  ", rep)

print("\nrank of the seven representations:", lambda_rank(reps))
print("rank reported for the full span:", full_lattice_rank())
