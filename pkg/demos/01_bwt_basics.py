"""Runs, rotations and the single-cycle test.

Run with:  python demos/01_bwt_basics.py
"""

from unclustered_bwt import bwt, format_word, inverse_bwt, is_bwt_image_aperiodic, rle, run_count
from unclustered_bwt.words import standard_permutation

necklace = "220011021002211201"
image = bwt(necklace)
print("necklace        ", necklace)
print("BWT             ", format_word(image))
print("runs            ", run_count(image), "of", len(image))
print("run-length code ", rle(image)[:4], "...")

# The standard permutation of a BWT image of an aperiodic necklace is one cycle.
pi = standard_permutation(image)
print("standard perm   ", pi)
print("single cycle?   ", pi.is_single_cycle())

# Inversion walks that cycle and returns the canonical rotation.
print("inverse BWT     ", inverse_bwt(image))

# Not every word is a BWT image.
for w in ("210201102102120", "120102120"):
    print(f"{w:<16} image? {is_bwt_image_aperiodic(w)}")
