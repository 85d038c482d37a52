"""
Balanced matchings beyond primes
================================

A matching of 1..n is balanced when its crossing, disjoint and nesting
counts agree.  The prime pairings give examples at n = (p-1)/2; exhaustive
enumeration and pruned search look at other n.
"""

from balanced_pairing.balanced_search import GeneralMatching, enumerate_all, feasibility_precheck, from_prime, search

# a divisibility condition rules out n = 4 (mod 6) at once
print([n for n in range(2, 30, 2) if feasibility_precheck(n)])

# exhaustive counts for small n
for n in (6, 8, 12):
    print(enumerate_all(n).summary())

# the prime pairing for p = 29 is a certificate for n = 14
cert = from_prime(29)
print(cert.serialize(), cert.has_difference_property())
print(GeneralMatching.parse(cert.serialize()) == cert)

# pruned search stops at the first certificate
res = search(20)
print(res.found[0].serialize() if res.found else "none", res.summary())
