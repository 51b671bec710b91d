"""Exact Laurent polynomials in x_1..x_n, y_1..y_n over the integers.

Terms are keyed by the concatenated exponent vector (x exponents, then y
exponents). The canonical term order is descending lexicographic on that
key, so leading terms come first in every rendering and serialization.
Coefficients are arbitrary-precision integers throughout; nothing in this
module (or the package) touches floating point.
"""

from __future__ import annotations

import heapq
import itertools
from typing import Mapping, Sequence

from .errors import InvalidInputError, NotDivisibleError
from .perm import Permutation


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    >>> f = LaurentPoly.x(2, 1) - LaurentPoly.y(2, 2)
    >>> str(f)
    'x1 - y2'
    >>> str(f * f)
    'x1^2 - 2*x1*y2 + y2^2'
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if not isinstance(n, int) or n < 1:
            raise InvalidInputError(f"rank must be a positive integer, got {n!r}")
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for key, coeff in terms.items():
                key = tuple(key)
                if len(key) != 2 * n or not all(isinstance(e, int) for e in key):
                    raise InvalidInputError(f"exponent key {key!r} does not fit rank {n}")
                if not isinstance(coeff, int):
                    raise InvalidInputError(f"coefficient {coeff!r} is not an integer")
                if coeff:
                    clean[key] = coeff
        self.n = n
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict[tuple[int, ...], int]) -> "LaurentPoly":
        # internal: takes ownership of an already-clean term dict
        self = object.__new__(cls)
        self.n = n
        self.terms = terms
        return self

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n)

    @classmethod
    def const(cls, n: int, c: int) -> "LaurentPoly":
        return cls(n, {(0,) * (2 * n): c})

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls.const(n, 1)

    @classmethod
    def x(cls, n: int, i: int) -> "LaurentPoly":
        """The variable x_i."""
        if not 1 <= i <= n:
            raise InvalidInputError(f"x index {i} out of range for rank {n}")
        key = [0] * (2 * n)
        key[i - 1] = 1
        return cls(n, {tuple(key): 1})

    @classmethod
    def y(cls, n: int, i: int) -> "LaurentPoly":
        """The variable y_i."""
        if not 1 <= i <= n:
            raise InvalidInputError(f"y index {i} out of range for rank {n}")
        key = [0] * (2 * n)
        key[n + i - 1] = 1
        return cls(n, {tuple(key): 1})

    @classmethod
    def monomial(
        cls,
        n: int,
        coeff: int,
        xexp: Sequence[int] | None = None,
        yexp: Sequence[int] | None = None,
    ) -> "LaurentPoly":
        xexp = tuple(xexp) if xexp is not None else (0,) * n
        yexp = tuple(yexp) if yexp is not None else (0,) * n
        if len(xexp) != n or len(yexp) != n:
            raise InvalidInputError("exponent vectors must have length n")
        return cls(n, {xexp + yexp: coeff})

    # -- ring structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, int):
            return LaurentPoly.const(self.n, other)
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise InvalidInputError(f"rank mismatch: {self.n} vs {other.n}")
            return other
        return None

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for key, c in b.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) - c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly._raw(self.n, out)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.n)
            return LaurentPoly._raw(self.n, {k: c * other for k, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        for k2, c2 in b.items():
            for k1, c1 in a.items():
                key = tuple(e1 + e2 for e1, e2 in zip(k1, k2))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return LaurentPoly._raw(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(self.n, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __getstate__(self):
        return (self.n, self.terms)

    def __setstate__(self, state):
        self.n, self.terms = state

    # -- inspection --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in the canonical (descending lex) order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def is_y_only(self) -> bool:
        n = self.n
        return all(not any(key[:n]) for key in self.terms)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.n}, {str(self)!r})"


# -- symmetric building blocks ----------------------------------------------


def elementary_symmetric(i: int, block: str, n: int) -> LaurentPoly:
    """The i-th elementary symmetric polynomial in the x- or y-variables.

    >>> str(elementary_symmetric(2, "x", 3))
    'x1*x2 + x1*x3 + x2*x3'
    """
    if block not in ("x", "y"):
        raise InvalidInputError(f"block must be 'x' or 'y', got {block!r}")
    if not 1 <= i <= n:
        raise InvalidInputError(f"symmetric polynomial index {i} out of range for rank {n}")
    offset = 0 if block == "x" else n
    terms: dict[tuple[int, ...], int] = {}
    for combo in itertools.combinations(range(n), i):
        key = [0] * (2 * n)
        for j in combo:
            key[offset + j] = 1
        terms[tuple(key)] = 1
    return LaurentPoly._raw(n, terms)


# -- variable relabelings ----------------------------------------------------


def permute_x(sigma: Permutation, f: LaurentPoly) -> LaurentPoly:
    """Relabel x_i as x_{sigma(i)}; a ring automorphism."""
    if sigma.n != f.n:
        raise InvalidInputError(f"rank mismatch: {sigma.n} vs {f.n}")
    if sigma.is_identity():
        return f
    n = f.n
    inv = sigma.inverse().images
    srcs = [inv[t] - 1 for t in range(n)]
    out = {
        tuple(key[s] for s in srcs) + key[n:]: c
        for key, c in f.terms.items()
    }
    return LaurentPoly._raw(n, out)


def permute_y(sigma: Permutation, f: LaurentPoly) -> LaurentPoly:
    """Relabel y_i as y_{sigma(i)}; a ring automorphism."""
    if sigma.n != f.n:
        raise InvalidInputError(f"rank mismatch: {sigma.n} vs {f.n}")
    if sigma.is_identity():
        return f
    n = f.n
    inv = sigma.inverse().images
    srcs = [n + inv[t] - 1 for t in range(n)]
    out = {
        key[:n] + tuple(key[s] for s in srcs): c
        for key, c in f.terms.items()
    }
    return LaurentPoly._raw(n, out)


# -- substitution -------------------------------------------------------------


def _monomial_key(value: LaurentPoly, n: int) -> tuple[int, ...]:
    if value.n != n:
        raise InvalidInputError(f"rank mismatch in substitution target: {value.n} vs {n}")
    if len(value.terms) != 1:
        raise InvalidInputError("substitution values must be single monomials")
    ((key, coeff),) = value.terms.items()
    if coeff != 1:
        raise InvalidInputError("substitution values must have coefficient 1")
    return key


def substitute(
    f: LaurentPoly,
    x_map: Mapping[int, LaurentPoly] | None = None,
    y_map: Mapping[int, LaurentPoly] | None = None,
) -> LaurentPoly:
    """Monomial substitution homomorphism; unassigned variables map to themselves.

    >>> f = 1 - LaurentPoly.y(3, 3) * LaurentPoly.monomial(3, 1, (-1, 0, 0))
    >>> substitute(f, x_map={1: LaurentPoly.y(3, 3)}).is_zero
    True
    """
    n = f.n
    width = 2 * n
    images: list[tuple[int, ...] | None] = [None] * width
    for i, g in (x_map or {}).items():
        if not 1 <= i <= n:
            raise InvalidInputError(f"x index {i} out of range for rank {n}")
        images[i - 1] = _monomial_key(g, n)
    for i, g in (y_map or {}).items():
        if not 1 <= i <= n:
            raise InvalidInputError(f"y index {i} out of range for rank {n}")
        images[n + i - 1] = _monomial_key(g, n)
    out: dict[tuple[int, ...], int] = {}
    for key, c in f.terms.items():
        vec = [0] * width
        for slot, e in enumerate(key):
            if not e:
                continue
            img = images[slot]
            if img is None:
                vec[slot] += e
            else:
                for t, ex in enumerate(img):
                    if ex:
                        vec[t] += e * ex
        k2 = tuple(vec)
        s = out.get(k2, 0) + c
        if s:
            out[k2] = s
        else:
            out.pop(k2, None)
    return LaurentPoly._raw(n, out)


# -- exact division -----------------------------------------------------------


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """The exact quotient f / g in the Laurent ring, if it exists.

    Both operands are shifted by their monomial content so the division
    happens among honest polynomials, where reduction against the lex
    leading term of g terminates; any remainder raises NotDivisibleError.

    >>> x1, x2 = LaurentPoly.x(2, 1), LaurentPoly.x(2, 2)
    >>> str(exact_div(x1 * x1 - x2 * x2, x1 - x2))
    'x1 + x2'
    """
    if f.n != g.n:
        raise InvalidInputError(f"rank mismatch: {f.n} vs {g.n}")
    if g.is_zero:
        raise InvalidInputError("division by the zero polynomial")
    if f.is_zero:
        return LaurentPoly.zero(f.n)
    width = 2 * f.n
    fmin = [min(key[t] for key in f.terms) for t in range(width)]
    gmin = [min(key[t] for key in g.terms) for t in range(width)]
    fpoly = {tuple(e - m for e, m in zip(key, fmin)): c for key, c in f.terms.items()}
    gpoly = {tuple(e - m for e, m in zip(key, gmin)): c for key, c in g.terms.items()}
    glead = max(gpoly)
    gcoeff = gpoly[glead]
    gtail = [(k, c) for k, c in gpoly.items() if k != glead]

    cur = dict(fpoly)
    heap = [tuple(-e for e in k) for k in fpoly]
    heapq.heapify(heap)
    quotient: dict[tuple[int, ...], int] = {}
    while heap:
        k = tuple(-e for e in heapq.heappop(heap))
        c = cur.pop(k, 0)
        if not c:
            continue
        qkey = tuple(a - b for a, b in zip(k, glead))
        if any(e < 0 for e in qkey):
            raise NotDivisibleError("no exact quotient exists")
        qc, rem = divmod(c, gcoeff)
        if rem:
            raise NotDivisibleError("no exact quotient exists")
        quotient[qkey] = quotient.get(qkey, 0) + qc
        for tk, tc in gtail:
            nk = tuple(a + b for a, b in zip(qkey, tk))
            s = cur.get(nk, 0) - qc * tc
            if s:
                if nk not in cur:
                    heapq.heappush(heap, tuple(-e for e in nk))
                cur[nk] = s
            else:
                cur.pop(nk, None)
    shift = tuple(mf - mg for mf, mg in zip(fmin, gmin))
    out = {
        tuple(q + s for q, s in zip(key, shift)): c
        for key, c in quotient.items()
        if c
    }
    return LaurentPoly._raw(f.n, out)


# -- the determinant-relation zero test ---------------------------------------


def canonical_zero_test(f: LaurentPoly) -> bool:
    """Whether a y-only polynomial vanishes modulo (y_1 * ... * y_n - 1).

    Eliminates y_n via y_n -> (y_1 ... y_{n-1})^{-1} and checks that the
    result is identically zero, which is decidable because the reduced ring
    is an integral domain.

    >>> n = 3
    >>> det = LaurentPoly(n, {(0, 0, 0, 1, 1, 1): 1}) - 1
    >>> canonical_zero_test(det)
    True
    """
    n = f.n
    acc: dict[tuple[int, ...], int] = {}
    for key, c in f.terms.items():
        if any(key[:n]):
            raise InvalidInputError("canonical zero test applies to y-only polynomials")
        last = key[-1]
        red = tuple(key[n + j] - last for j in range(n - 1))
        acc[red] = acc.get(red, 0) + c
    return not any(acc.values())


# -- serialization -------------------------------------------------------------


def poly_to_json(f: LaurentPoly) -> list[dict]:
    """JSON term list in the canonical order; coefficients as decimal strings."""
    n = f.n
    return [
        {"coeff": str(c), "x": list(key[:n]), "y": list(key[n:])}
        for key, c in f.sorted_terms()
    ]


def poly_from_json(data: Sequence[Mapping]) -> LaurentPoly:
    """Parse the term-list format; the rank is inferred from the exponent arrays."""
    if not isinstance(data, Sequence) or isinstance(data, (str, bytes)):
        raise InvalidInputError("polynomial JSON must be an array of terms")
    if not data:
        raise InvalidInputError("cannot infer the rank from an empty term list")
    terms: dict[tuple[int, ...], int] = {}
    n = None
    for item in data:
        try:
            xexp = tuple(int(e) for e in item["x"])
            yexp = tuple(int(e) for e in item["y"])
            coeff = int(str(item["coeff"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed polynomial term {item!r}") from exc
        if n is None:
            n = len(xexp)
        if len(xexp) != n or len(yexp) != n or n < 1:
            raise InvalidInputError("inconsistent exponent vector lengths")
        key = xexp + yexp
        if key in terms:
            raise InvalidInputError(f"duplicate exponent key {key}")
        if coeff == 0:
            raise InvalidInputError("zero coefficients are not stored")
        terms[key] = coeff
    assert n is not None
    return LaurentPoly._raw(n, terms)


# -- text rendering -------------------------------------------------------------


def _render_factor(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def render_poly(f: LaurentPoly) -> str:
    """Human-readable form: terms in canonical order, e.g. ``1 - y3*x1^-1``."""
    if f.is_zero:
        return "0"
    n = f.n
    parts: list[str] = []
    for key, coeff in f.sorted_terms():
        factors: list[str] = []
        for i in range(n):
            if key[i] > 0:
                factors.append(_render_factor(f"x{i + 1}", key[i]))
        for i in range(n):
            if key[n + i] > 0:
                factors.append(_render_factor(f"y{i + 1}", key[n + i]))
        for i in range(n):
            if key[i] < 0:
                factors.append(_render_factor(f"x{i + 1}", key[i]))
        for i in range(n):
            if key[n + i] < 0:
                factors.append(_render_factor(f"y{i + 1}", key[n + i]))
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(parts)
