"""Untying a generalized de Bruijn BWT image block by block.

The starting word 201021120 is an alphabet-permutation power with one tie.
Each step reroutes a Hamiltonian cycle of DB(3, 9) and removes the rightmost tie.
"""

from unclustered_bwt import format_word, inverse_bwt
from unclustered_bwt.untie import find_ties, untie_all

w = "201021120"
print("start  ", w, "ties at blocks", find_ties(w, 3).blocks)
final, steps = untie_all(w, 3)
for s in steps:
    print(f"block {s.block} witness {s.witness}")
    print("   path      ", s.path.labels)
    print("   rerouted  ", s.rerouted.labels)
    print("   segments  ", s.plan.segments)
    print("   word      ", format_word(s.after), "ties", find_ties(s.after, 3).blocks)
print("final  ", format_word(final), "necklace", inverse_bwt(final))

# Larger alphabets work the same way.
from unclustered_bwt import make_unclustered_gdbw, bwt, run_count

u = make_unclustered_gdbw(5, 4)
print("\nk=5, n=4:", u, "runs", run_count(bwt(u)))
