"""Completely unclustered necklaces of every length over every alphabet.

Lengths that are not multiples of three come from inserting or deleting a
single 2 in a suitable ternary image. Larger alphabets relabel letters without
changing the standard permutation.
"""

from unclustered_bwt import bwt, construct_unclustered, format_word, run_count
from unclustered_bwt.extend import delete_two, extend_alphabet, insert_two

print("insert a 2:", format_word(insert_two("201021201")))
print("delete a 2:", format_word(delete_two("120102120")))
print("relabel to six letters:", format_word(extend_alphabet("201021201", 6)))
print()
print(f"{'n':>3} {'k':>2}  necklace             BWT")
for k in (3, 4, 6):
    for n in (1, 2, 5, 8, 13, 20):
        if n < k:
            continue
        u = construct_unclustered(n, k, require_all_letters=True)
        w = bwt(u)
        assert run_count(w) == n
        print(f"{n:>3} {k:>2}  {str(u):<20} {format_word(w)}")
