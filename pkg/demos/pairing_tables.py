"""
Pairing the half residues of a prime
====================================

For a prime p = 1 (mod 4) the half factorial t = ((p-1)/2)! squares to -1.
Multiplying by t and folding back into 1..(p-1)/2 pairs every half residue
with a partner.  This walk-through builds the pairing for p = 29 and counts
how its pairs interleave.
"""

from balanced_pairing import build_pairing, classify, half_reduce, prime_context

# t and its square
ctx = prime_context(29)
print("t =", ctx.t, " t^2 mod p =", ctx.t * ctx.t % 29)

# fold a few residues into the half system
print([half_reduce(x, 29) for x in (1, 15, 28, 40, -3)])

# each a in V meets its partner abar = half_reduce(t a)
pairing = build_pairing(ctx)
for a, abar in pairing.pairs:
    print(f"{a:>3} <-> {abar:<3}")

# two pairs either cross, sit side by side, or nest; the three counts agree
counts = classify(pairing)
print("(crossing, disjoint, nesting) =", counts, " L_p =", ctx.L_p)

# the same holds for every prime = 1 mod 4 tried here
for p in (13, 101, 1009, 10009):
    c = classify(build_pairing(p))
    print(p, c, prime_context(p).L_p)
