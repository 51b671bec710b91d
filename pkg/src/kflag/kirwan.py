"""The weight-variety layer.

A generic orbit is pinned by a strictly decreasing zero-sum rational vector
lam; the reduction level mu is another zero-sum rational vector. The fixed
point indexed by w sits over the permuted vector lam_w. Tail-sum
functionals eta_k^gamma cut out half-spaces through mu; the kernel of the
reduction map is generated by the operator classes of all (v, gamma) whose
lam tail sum drops below the mu tail sum for some cut position k. The
presentation assembles those generators with the symmetric-difference
ideal and the determinant relation.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInputError, NotRegularError, SoundnessFailureError
from .gkm import support
from .groth import grothendieck
from .laurent import LaurentPoly, elementary_symmetric, permute_y, poly_to_json
from .perm import Permutation, act_on_weights, all_permutations


def _fraction_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


@dataclass(frozen=True)
class WeightVector:
    """An exact rational vector with zero sum (an su(n) weight)."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        try:
            entries = tuple(Fraction(e) for e in self.entries)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"cannot read weight entries {self.entries!r}") from exc
        object.__setattr__(self, "entries", entries)
        if len(entries) < 1:
            raise InvalidInputError("weight vector must have at least one entry")
        if sum(entries) != 0:
            raise InvalidInputError(f"weight entries must sum to zero, got {entries}")

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """Parse comma-separated exact rationals such as ``"1/4,1/8,-3/8"``."""
        try:
            entries = tuple(Fraction(part) for part in text.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"cannot parse weight vector {text!r}") from exc
        return cls(entries)

    @classmethod
    def from_json(cls, data) -> "WeightVector":
        """Parse the JSON form: an array of {"num": int, "den": int}."""
        try:
            entries = tuple(
                Fraction(int(item["num"]), int(item["den"])) for item in data
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"cannot read weight JSON {data!r}") from exc
        return cls(entries)

    def to_json_obj(self) -> list[dict]:
        return [_fraction_json(e) for e in self.entries]

    @classmethod
    def staircase(cls, n: int) -> "WeightVector":
        """The strictly decreasing vector (n-1, n-3, ..., 1-n)."""
        return cls(tuple(Fraction(n - 1 - 2 * i) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def is_generic(self) -> bool:
        """Strictly decreasing entries (pairwise distinct eigenvalues)."""
        return all(a > b for a, b in zip(self.entries, self.entries[1:]))

    def require_generic(self) -> None:
        if not self.is_generic:
            raise InvalidInputError(f"weight vector {self.format()} is not strictly decreasing")

    def permuted_by(self, gamma: Permutation) -> "WeightVector":
        return WeightVector(act_on_weights(gamma, self.entries))

    def format(self) -> str:
        return ",".join(str(e) for e in self.entries)

    def __str__(self) -> str:
        return self.format()


def moment_image(lam: WeightVector, w: Permutation) -> WeightVector:
    """The moment-map image lam_w of the fixed point indexed by w."""
    if lam.n != w.n:
        raise InvalidInputError(f"rank mismatch: {lam.n} vs {w.n}")
    return lam.permuted_by(w)


def eta_value(gamma: Permutation, k: int, nu: WeightVector) -> Fraction:
    """The tail-sum functional: sum of nu over the slots gamma(k+1), ..., gamma(n)."""
    if gamma.n != nu.n:
        raise InvalidInputError(f"rank mismatch: {gamma.n} vs {nu.n}")
    if not 1 <= k <= gamma.n - 1:
        raise InvalidInputError(f"cut position {k} out of range for rank {gamma.n}")
    entries = nu.entries
    return sum(
        (entries[gamma.images[i] - 1] for i in range(k, gamma.n)), Fraction(0)
    )


@dataclass(frozen=True)
class HalfSpaceSpec:
    """A linear functional sum_i b_i e_i, optionally tagged as eta_k^gamma."""

    coefficients: tuple[Fraction, ...]
    gamma: Permutation | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(b) for b in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) < 1:
            raise InvalidInputError("functional needs at least one coefficient")

    @classmethod
    def eta(cls, gamma: Permutation, k: int) -> "HalfSpaceSpec":
        """Indicator coefficients of the slots gamma(k+1), ..., gamma(n)."""
        if not 1 <= k <= gamma.n - 1:
            raise InvalidInputError(f"cut position {k} out of range for rank {gamma.n}")
        coeffs = [Fraction(0)] * gamma.n
        for i in range(k, gamma.n):
            coeffs[gamma.images[i] - 1] = Fraction(1)
        return cls(tuple(coeffs), gamma=gamma, k=k)

    def value(self, nu: WeightVector) -> Fraction:
        if len(self.coefficients) != nu.n:
            raise InvalidInputError(f"rank mismatch: {len(self.coefficients)} vs {nu.n}")
        return sum(
            (b * e for b, e in zip(self.coefficients, nu.entries)), Fraction(0)
        )


# -- regularity of the reduction level -------------------------------------------


@dataclass(frozen=True)
class WallHit:
    v: Permutation
    gamma: Permutation
    k: int
    value: Fraction

    def to_json_obj(self) -> dict:
        return {
            "v": list(self.v.images),
            "gamma": list(self.gamma.images),
            "k": self.k,
            "value": _fraction_json(self.value),
        }


@dataclass(frozen=True)
class RegularityCertificate:
    regular: bool
    walls: tuple[WallHit, ...]

    def to_json_obj(self) -> dict:
        return {"regular": self.regular, "walls": [w.to_json_obj() for w in self.walls]}


def _tail_sums(vec: WeightVector, perms: Sequence[Permutation]) -> dict[Permutation, tuple[Fraction, ...]]:
    # tails[p][k-1] = sum of vec over the slots p(k+1), ..., p(n)
    n = vec.n
    out = {}
    for p in perms:
        vals = [vec.entries[i - 1] for i in p.images]
        suffix = [Fraction(0)] * (n + 1)
        for i in range(n - 1, -1, -1):
            suffix[i] = suffix[i + 1] + vals[i]
        out[p] = tuple(suffix[k] for k in range(1, n))
    return out


def is_regular(lam: WeightVector, mu: WeightVector) -> RegularityCertificate:
    """Whether mu avoids every wall {tail sum of lam = tail sum of mu}.

    The certificate lists all (v, gamma, k) with
    sum_{i>k} lam_{v(i)} == sum_{i>k} mu_{gamma(i)}; mu is regular iff the
    list is empty. This tail-sum avoidance is the operative definition used
    throughout the module.
    """
    if lam.n != mu.n:
        raise InvalidInputError(f"rank mismatch: {lam.n} vs {mu.n}")
    lam.require_generic()
    perms = list(all_permutations(lam.n))
    lam_tails = _tail_sums(lam, perms)
    mu_tails = _tail_sums(mu, perms)
    walls = []
    for v in perms:
        lt = lam_tails[v]
        for g in perms:
            mt = mu_tails[g]
            for k in range(1, lam.n):
                if lt[k - 1] == mt[k - 1]:
                    walls.append(WallHit(v, g, k, lt[k - 1]))
    return RegularityCertificate(not walls, tuple(walls))


# -- kernel generators -------------------------------------------------------------


@dataclass(frozen=True)
class KernelGenerator:
    """A qualifying pair (v, gamma) with its witnesses and operator class.

    The polynomial is the operator word of v applied to the top class with
    y-variables relabeled by gamma; witnesses are the cut positions k at
    which the defining strict inequality holds.
    """

    v: Permutation
    gamma: Permutation
    witnesses: tuple[int, ...]
    poly: LaurentPoly

    def to_json_obj(self) -> dict:
        return {
            "v": list(self.v.images),
            "gamma": list(self.gamma.images),
            "witness_k": list(self.witnesses),
            "poly": poly_to_json(self.poly),
        }


def _generator_poly(pair: tuple[tuple[int, ...], tuple[int, ...]]) -> LaurentPoly:
    v_imgs, g_imgs = pair
    v = Permutation(v_imgs)
    gamma = Permutation(g_imgs)
    # pi_v of the top class is the plain class of v^{-1}; the operators
    # commute with the y-relabeling by gamma
    return permute_y(gamma, grothendieck(v.inverse()))


def kernel_generators(
    lam: WeightVector, mu: WeightVector, jobs: int = 1
) -> tuple[KernelGenerator, ...]:
    """All (v, gamma) with sum_{i>k} lam_{v(i)} < sum_{i>k} mu_{gamma(i)} for some k.

    Requires mu regular (wall avoidance) and lam generic; refuses to emit
    anything otherwise. One generator is returned per qualifying pair, with
    every qualifying k recorded, in lexicographic (v, gamma) order.
    """
    cert = is_regular(lam, mu)
    if not cert.regular:
        raise NotRegularError(
            f"level {mu.format()} lies on {len(cert.walls)} wall(s) for lambda {lam.format()}",
            certificate=cert,
        )
    n = lam.n
    perms = list(all_permutations(n))
    lam_tails = _tail_sums(lam, perms)
    mu_tails = _tail_sums(mu, perms)
    qualifying: list[tuple[Permutation, Permutation, tuple[int, ...]]] = []
    for v in perms:
        lt = lam_tails[v]
        for g in perms:
            mt = mu_tails[g]
            ks = tuple(k for k in range(1, n) if lt[k - 1] < mt[k - 1])
            if ks:
                qualifying.append((v, g, ks))
    # fill the shared cache deterministically before any fork
    for v in sorted({v for v, _, _ in qualifying}, key=lambda p: p.images):
        grothendieck(v.inverse())
    pairs = [(v.images, g.images) for v, g, _ in qualifying]
    if jobs <= 1 or len(pairs) <= 1:
        polys = [_generator_poly(pair) for pair in pairs]
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=jobs) as pool:
            polys = pool.map(_generator_poly, pairs, chunksize=max(1, len(pairs) // (jobs * 4)))
    return tuple(
        KernelGenerator(v, g, ks, poly)
        for (v, g, ks), poly in zip(qualifying, polys)
    )


# -- soundness certificates ----------------------------------------------------------


@dataclass(frozen=True)
class SoundnessCheck:
    z: Permutation
    k: int
    fixed_point_value: Fraction
    level_value: Fraction


@dataclass(frozen=True)
class SoundnessCertificate:
    generator: KernelGenerator
    checks: tuple[SoundnessCheck, ...]


def half_space_soundness(
    gen: KernelGenerator, lam: WeightVector, mu: WeightVector
) -> SoundnessCertificate:
    """Check that every support point of a generator sits strictly inside its half-spaces.

    For each z in the support of the generator's polynomial and each
    recorded witness k, asserts
    eta_k^gamma(lam_z) < eta_k^gamma(mu); any violation raises
    SoundnessFailureError naming the offending (z, k).
    """
    if lam.n != gen.v.n or mu.n != gen.v.n:
        raise InvalidInputError("rank mismatch between generator and weight data")
    level_values = {k: eta_value(gen.gamma, k, mu) for k in gen.witnesses}
    checks = []
    for z in sorted(support(gen.poly), key=lambda p: p.images):
        image = moment_image(lam, z)
        for k in gen.witnesses:
            lhs = eta_value(gen.gamma, k, image)
            rhs = level_values[k]
            if not lhs < rhs:
                raise SoundnessFailureError(
                    f"support point {z} violates the k={k} inequality: {lhs} >= {rhs}"
                )
            checks.append(SoundnessCheck(z, k, lhs, rhs))
    return SoundnessCertificate(gen, tuple(checks))


# -- the assembled presentation --------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    """Generators and relations for the K-theory of the weight variety at (lam, mu).

    Relations: the n symmetric differences e_i(x) - e_i(y), the determinant
    relation y_1 ... y_n - 1, and one operator class per kernel generator.
    """

    n: int
    variables: tuple[str, ...]
    ideal_i: tuple[LaurentPoly, ...]
    det_relation: LaurentPoly
    kernel: tuple[KernelGenerator, ...]

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "ideal_I": [poly_to_json(p) for p in self.ideal_i],
            "det_relation": poly_to_json(self.det_relation),
            "kernel": [gen.to_json_obj() for gen in self.kernel],
        }


def det_relation(n: int) -> LaurentPoly:
    """y_1 * y_2 * ... * y_n - 1."""
    return LaurentPoly(n, {(0,) * n + (1,) * n: 1}) - 1


def presentation(lam: WeightVector, mu: WeightVector, jobs: int = 1) -> Presentation:
    """Assemble the full generators-and-relations presentation for (lam, mu)."""
    kernel = kernel_generators(lam, mu, jobs=jobs)
    n = lam.n
    variables = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(
        f"y{i}" for i in range(1, n + 1)
    )
    ideal = tuple(
        elementary_symmetric(i, "x", n) - elementary_symmetric(i, "y", n)
        for i in range(1, n + 1)
    )
    return Presentation(n, variables, ideal, det_relation(n), kernel)
