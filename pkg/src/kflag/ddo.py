"""Divided difference operators on the Laurent ring.

``delta(i, f) = (f - s_i f) / (x_i - x_{i+1})`` where s_i swaps x_i and
x_{i+1}; the isobaric variant is ``pi(i, f) = delta(i, x_i * f)``. Operator
words apply their rightmost letter first, so ``pi_word(w, f)`` with the
canonical reduced word (i_1, ..., i_l) of w computes
pi_{i_1}(pi_{i_2}(... pi_{i_l}(f) ...)); the result is independent of the
choice of reduced word.
"""

from __future__ import annotations

from typing import Iterable

from .errors import InternalInvariantError, InvalidInputError, NotDivisibleError
from .laurent import LaurentPoly, exact_div, permute_x
from .perm import Permutation, canonical_reduced_word


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise InvalidInputError(f"operator index {i} out of range for rank {n}")


def delta(i: int, f: LaurentPoly) -> LaurentPoly:
    """Divided difference: (f - s_i f) / (x_i - x_{i+1}).

    The numerator is antisymmetric in x_i, x_{i+1}, so the division is
    always exact; a failure is an internal invariant violation, never a
    property of the input.

    >>> str(delta(1, LaurentPoly.x(2, 1) * LaurentPoly.x(2, 1)))
    'x1 + x2'
    """
    _check_index(i, f.n)
    numerator = f - permute_x(Permutation.simple(f.n, i), f)
    divisor = LaurentPoly.x(f.n, i) - LaurentPoly.x(f.n, i + 1)
    try:
        return exact_div(numerator, divisor)
    except NotDivisibleError as exc:
        raise InternalInvariantError(
            f"divided difference {i} produced a non-divisible numerator"
        ) from exc


def pi(i: int, f: LaurentPoly) -> LaurentPoly:
    """Isobaric divided difference: delta(i, x_i * f). Idempotent."""
    _check_index(i, f.n)
    return delta(i, LaurentPoly.x(f.n, i) * f)


def apply_pi_word(letters: Iterable[int], f: LaurentPoly) -> LaurentPoly:
    """Apply pi operators along an explicit word, rightmost letter first."""
    for i in reversed(tuple(letters)):
        f = pi(i, f)
    return f


def pi_word(w: Permutation, f: LaurentPoly) -> LaurentPoly:
    """Apply the operator word of w (via its canonical reduced word) to f."""
    if w.n != f.n:
        raise InvalidInputError(f"rank mismatch: {w.n} vs {f.n}")
    return apply_pi_word(canonical_reduced_word(w), f)
