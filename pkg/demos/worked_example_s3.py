"""A guided tour of the rank-3 worked example.

Builds the top class, walks the isobaric operators letter by letter to the
permuted class of (w, gamma) = ([1,3,2], [2,1,3]), restricts it at all six
torus-fixed points, and compares the support against the permuted Bruhat
interval.

Run with:  python3 demos/worked_example_s3.py
"""

from kflag import (
    Permutation,
    all_permutations,
    canonical_reduced_word,
    canonical_zero_test,
    permuted_bruhat_leq,
    restrict,
    support,
    top,
)
from kflag.ddo import pi
from kflag.groth import permuted_grothendieck
from kflag.laurent import permute_y

n = 3
w = Permutation((1, 3, 2))       # the transposition swapping 2 and 3
gamma = Permutation((2, 1, 3))   # the transposition swapping 1 and 2

print("top class G_id for rank 3:")
g_id = top(n)
print("   ", g_id)

print()
print(f"relabel the y-variables by gamma = {gamma}:")
start = permute_y(gamma, g_id)
print("   ", start)

word = canonical_reduced_word(w.inverse() * gamma)
print()
print(f"operator word of w^-1 * gamma = {w.inverse() * gamma}: letters {word}")
current = start
for letter in reversed(word):
    current = pi(letter, current)
    print(f"    after pi_{letter}: {current}")

assert current == permuted_grothendieck(w, gamma)
print()
print(f"the permuted class of (w={w}, gamma={gamma}) is: {current}")

print()
print("restrictions at the six fixed points (x_i -> y_{z(i)}):")
for z in all_permutations(n):
    value = restrict(current, z)
    flag = "zero" if canonical_zero_test(value) else "nonzero"
    print(f"    at z = {z}: {str(value):24s} [{flag}]")

supp = sorted(support(current), key=lambda p: p.images)
interval = [
    v for v in all_permutations(n) if permuted_bruhat_leq(v, w, gamma)
]
print()
print("support:                 ", [str(z) for z in supp])
print("permuted Bruhat interval:", [str(z) for z in interval])
assert supp == interval
print("the support equals the permuted interval, as it must.")
