# Deterministic key material.
#
# The +1/-1 classification sequence maps straight to key bits (+1 -> 1,
# -1 -> 0).  Nothing is stored: a key is fully described by its origin
# descriptor, and regenerating from the descriptor is bit-exact, even from
# a pool of worker threads.  Gopala-Hemachandra residue streams with a
# custom seed pair are available as raw material too.

from concurrent.futures import ThreadPoolExecutor

from fibrand import gh_residue_stream, keygen_from_primes, regenerate

key = keygen_from_primes(64, start_prime_index=1)
print("origin:", key.origin.describe())
print("bits:  ", key.bit_string())
print("hex:   ", key.hex())

# Regeneration is pure: same descriptor, same bits, any number of threads.
with ThreadPoolExecutor(max_workers=8) as pool:
    copies = list(pool.map(regenerate, [key.origin] * 32))
assert all(copy == key for copy in copies)
print("\n32 regenerations across 8 threads: all bit-identical")

# A residue stream from the (2, 1) seed, the classic 2, 1, 3, 4, 7, 11, ...
stream = gh_residue_stream((2, 1), m=251, count=12)
print("\n(2,1) residue stream mod 251:", stream)
