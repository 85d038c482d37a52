"""
Counting solutions of x^4 - y^4 = m
===================================

The number of solutions mod p depends only on the quartic character of m
and on the normalized decomposition p = alpha4^2 + beta4^2.  Here the
closed forms are compared against direct counting.
"""

from balanced_pairing import alpha_beta, quartic_character
from balanced_pairing.quartic_counts import brute_N_all, formula_N, formula_Nprime, nprime_table, table_row

p = 29
sig = alpha_beta(p)
print("g =", sig.g, " alpha4 =", sig.alpha4, " beta4 =", sig.beta4)

# histogram count against the closed form, one line per m
counts = brute_N_all(p)
for m in range(1, 8):
    print(m, "chi exponent", quartic_character(m, p), " brute", counts[m], " formula", formula_N(m, p, sig))

# solutions among distinct quartic residues
table = nprime_table(p, sig.g)
print([(m, table.get(m, 0), formula_Nprime(m, p, sig)) for m in range(1, 8)])

# residues of alpha4 and beta4 fall in a fixed row of a mod-32 table
for q in (5, 13, 17, 29, 37, 41):
    print(q, table_row(alpha_beta(q)))
