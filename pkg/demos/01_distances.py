#!/usr/bin/env python3
"""
Ulam distance basics.

The Ulam distance between two permutations counts the fewest
remove-one-symbol-and-reinsert-it moves turning one into the other.
It equals n minus the length of their longest common subsequence, and
for distinct-symbol strings the LCS reduces to a longest increasing
subsequence after relabeling, so it is computable in O(n log n).
"""
from ulamcodes import lcs_length, lcs_length_dp, random_permutation, restrict, ulam_distance

a = (0, 1, 2, 3, 4, 5, 6, 7)
b = (2, 7, 4, 1, 6, 5, 3, 0)
print(f"a = {a}")
print(f"b = {b}")
print(f"LCS length        : {lcs_length(a, b)}")
print(f"Ulam distance     : {ulam_distance(a, b)}  (= 8 - LCS)")

# the quadratic DP is kept as an independent oracle; the two always agree
big_a = random_permutation(200, seed=1)
big_b = random_permutation(200, seed=2)
assert lcs_length(big_a, big_b) == lcs_length_dp(big_a, big_b)
print(f"\nn=200 random pair : patience {lcs_length(big_a, big_b)}"
      f" == quadratic DP {lcs_length_dp(big_a, big_b)}")

# restrictions: delete all symbols outside a set, keeping the order;
# LCS is subadditive across any partition of the symbols
evens = {s for s in range(8) if s % 2 == 0}
odds = set(range(8)) - evens
print(f"\nb restricted to evens: {restrict(b, evens)}")
print(f"b restricted to odds : {restrict(b, odds)}")
whole = lcs_length(a, b)
split = lcs_length(restrict(a, evens), restrict(b, evens)) + lcs_length(
    restrict(a, odds), restrict(b, odds)
)
print(f"LCS(a,b) = {whole} <= {split} = LCS over the even/odd partition")

# two random permutations of [n] share an increasing pattern of only
# about 2*sqrt(n) symbols, so their Ulam distance is nearly n
n = 400
d = ulam_distance(random_permutation(n, seed=3), random_permutation(n, seed=4))
print(f"\nrandom pair at n={n}: distance {d} (n - Theta(sqrt(n)))")
