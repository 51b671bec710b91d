"""Top, double, and permuted double Grothendieck polynomials.

The top class is G_id(x, y) = prod_{i<j} (1 - y_j/x_i). For w in S_n the
class G_w is obtained by applying the isobaric operator word of w^{-1} to
the top class; the gamma-permuted class is G_w with gamma^{-1}w in place of
w and the y-variables relabeled by gamma.

Results are cached per (rank, permutation). The cache is filled along
canonical reduced words, so exhaustive sweeps over S_n share every
intermediate operator application. Cached values are immutable and any
racing fills compute identical polynomials, so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ddo import pi, pi_word
from .errors import InvalidInputError
from .laurent import LaurentPoly, permute_y
from .perm import Permutation, all_permutations


@dataclass(frozen=True)
class GrothendieckKey:
    """Cache key for a (possibly permuted) class: rank, w, and gamma.

    Only identity-gamma entries are stored; permuted classes are derived on
    demand by relabeling the y-variables, which keeps one shared cache
    across all gamma during exhaustive sweeps.
    """

    n: int
    w: tuple[int, ...]
    gamma: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (self.n == len(self.w) == len(self.gamma)):
            raise InvalidInputError("mismatched ranks in cache key")


_CACHE: dict[GrothendieckKey, LaurentPoly] = {}


def top(n: int) -> LaurentPoly:
    """The top class prod_{i<j} (1 - y_j/x_i), expanded to canonical form.

    >>> str(top(2))
    '1 - y2*x1^-1'
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"rank must be a positive integer, got {n!r}")
    poly = LaurentPoly.one(n)
    unit = (0,) * (2 * n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            key = [0] * (2 * n)
            key[i - 1] = -1
            key[n + j - 1] = 1
            poly = poly * LaurentPoly(n, {unit: 1, tuple(key): -1})
    return poly


def grothendieck(w: Permutation) -> LaurentPoly:
    """The double Grothendieck polynomial of w (operator word of w^{-1} on the top class)."""
    key = GrothendieckKey(w.n, w.images, tuple(range(1, w.n + 1)))
    cached = _CACHE.get(key)
    if cached is not None:
        return cached
    images = w.images
    a = next((i for i in range(1, w.n) if images[i - 1] > images[i]), None)
    if a is None:
        value = top(w.n)
    else:
        # peeling the smallest right descent follows the canonical reduced
        # word of w^{-1}, so cached and word-built values agree bit-exactly
        value = pi(a, grothendieck(w * Permutation.simple(w.n, a)))
    return _CACHE.setdefault(key, value)


def permuted_grothendieck(w: Permutation, gamma: Permutation) -> LaurentPoly:
    """The gamma-permuted class; equals the operator word of w^{-1}gamma applied
    to the gamma-relabeled top class.

    Computed as the y-relabeling by gamma of the plain class of gamma^{-1}w,
    which is the same polynomial because the operators only touch the
    x-variables; this keeps one shared cache across all gamma.
    """
    if w.n != gamma.n:
        raise InvalidInputError(f"rank mismatch: {w.n} vs {gamma.n}")
    if gamma.is_identity():
        return grothendieck(w)
    return permute_y(gamma, grothendieck(gamma.inverse() * w))


def permuted_grothendieck_by_word(w: Permutation, gamma: Permutation) -> LaurentPoly:
    """The defining operator-word route; slower, kept for cross-validation."""
    if w.n != gamma.n:
        raise InvalidInputError(f"rank mismatch: {w.n} vs {gamma.n}")
    return pi_word(w.inverse() * gamma, permute_y(gamma, top(w.n)))


def warm_cache(n: int) -> None:
    """Precompute the classes of every element of S_n in a deterministic order."""
    for w in all_permutations(n):
        grothendieck(w)


def clear_cache() -> None:
    _CACHE.clear()
