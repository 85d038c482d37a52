"""
Inversions of x i and Gauss's count
===================================

Gauss's lemma counts how many of x, 2x, ..., ((p-1)/2) x land above p/2.
The inversion count of the folded sequence is pinned down by that count.
"""

import numpy as np

from balanced_pairing import gamma, gauss_count, legendre
from balanced_pairing.pairing import gamma_and_gauss_rows, linear_sequence

p = 13
print(linear_sequence(5, p), "inversions:", gamma(5, p), " Gauss count:", gauss_count(5, p))

# the lemma itself
print(all((-1) ** gauss_count(x, p) == legendre(x, p) for x in range(1, p)))

# all x at once; gamma = G ((p-1)/2 - G)
xs, gam, gau = gamma_and_gauss_rows(1009)
h = (1009 - 1) // 2
print(bool(np.all(gam == gau * (h - gau))))

# the relation is not limited to primes in this range
n = 45
xs, gam, gau = gamma_and_gauss_rows(n)
print(bool(np.all(gam == gau * ((n - 1) // 2 - gau))))
