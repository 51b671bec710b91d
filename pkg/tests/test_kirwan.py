from fractions import Fraction

import pytest

from kflag.errors import (
    InvalidInputError,
    NotRegularError,
    SoundnessFailureError,
)
from kflag.gkm import support
from kflag.groth import permuted_grothendieck
from kflag.kirwan import (
    HalfSpaceSpec,
    KernelGenerator,
    WeightVector,
    det_relation,
    eta_value,
    half_space_soundness,
    is_regular,
    kernel_generators,
    moment_image,
    presentation,
)
from kflag.laurent import LaurentPoly, elementary_symmetric
from kflag.perm import Permutation, all_permutations, permuted_bruhat_leq


def W(text):
    return WeightVector.parse(text)


class TestWeightVector:
    def test_parse_and_format(self):
        lam = W("1/4,1/8,-3/8")
        assert lam.entries == (Fraction(1, 4), Fraction(1, 8), Fraction(-3, 8))
        assert lam.format() == "1/4,1/8,-3/8"

    def test_zero_sum_enforced(self):
        with pytest.raises(InvalidInputError):
            W("1,0,0")
        with pytest.raises(InvalidInputError):
            WeightVector((Fraction(1),))

    def test_parse_rejects_garbage(self):
        with pytest.raises(InvalidInputError):
            W("1,abc,-1")
        with pytest.raises(InvalidInputError):
            W("1/0,0,-1")

    def test_generic_flag(self):
        assert W("1,0,-1").is_generic
        assert not W("0,0,0").is_generic
        with pytest.raises(InvalidInputError):
            W("0,0,0").require_generic()

    def test_staircase(self):
        lam = WeightVector.staircase(4)
        assert lam.entries == (3, 1, -1, -3)
        assert lam.is_generic

    def test_json_roundtrip(self):
        lam = W("1/4,1/8,-3/8")
        data = lam.to_json_obj()
        assert data == [
            {"num": 1, "den": 4},
            {"num": 1, "den": 8},
            {"num": -3, "den": 8},
        ]
        assert WeightVector.from_json(data) == lam
        with pytest.raises(InvalidInputError):
            WeightVector.from_json([{"num": 1}])


class TestMomentImage:
    def test_identity(self):
        lam = W("1,0,-1")
        assert moment_image(lam, Permutation.identity(3)) == lam

    def test_definition_table(self):
        lam = W("1,0,-1")
        assert moment_image(lam, Permutation((2, 1, 3))).entries == (0, 1, -1)

    def test_entries_are_permuted(self):
        lam = W("5,2,-3,-4")
        for w in all_permutations(4):
            image = moment_image(lam, w)
            assert sorted(image.entries) == sorted(lam.entries)

    def test_rank_mismatch(self):
        with pytest.raises(InvalidInputError):
            moment_image(W("1,-1"), Permutation.identity(3))


class TestEtaValue:
    def test_identity_gamma_is_tail_sum(self):
        lam = W("1,0,-1")
        e = Permutation.identity(3)
        assert eta_value(e, 1, lam) == Fraction(-1)
        assert eta_value(e, 2, lam) == Fraction(-1)

    def test_unfolded_definition(self):
        lam = W("2,1,-1,-2")
        for gamma in all_permutations(4):
            for w in all_permutations(4):
                for k in (1, 2, 3):
                    winv = w.inverse()
                    expected = sum(
                        (lam.entries[winv(gamma(i)) - 1] for i in range(k + 1, 5)),
                        Fraction(0),
                    )
                    assert eta_value(gamma, k, moment_image(lam, w)) == expected

    def test_minimum_attained_at_gamma(self):
        lam = W("3,1,-1,-3")
        for gamma in all_permutations(4):
            for k in (1, 2, 3):
                values = [
                    eta_value(gamma, k, moment_image(lam, w))
                    for w in all_permutations(4)
                ]
                assert min(values) == eta_value(gamma, k, moment_image(lam, gamma))

    def test_k_out_of_range(self):
        with pytest.raises(InvalidInputError):
            eta_value(Permutation.identity(3), 3, W("1,0,-1"))

    def test_half_space_spec_agrees(self):
        lam = W("1,0,-1")
        for gamma in all_permutations(3):
            for k in (1, 2):
                spec = HalfSpaceSpec.eta(gamma, k)
                for w in all_permutations(3):
                    nu = moment_image(lam, w)
                    assert spec.value(nu) == eta_value(gamma, k, nu)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_monotone_along_permuted_order(self, n):
        lam = WeightVector.staircase(n)
        perms = list(all_permutations(n))
        for gamma in perms:
            for k in range(1, n):
                values = {w: eta_value(gamma, k, moment_image(lam, w)) for w in perms}
                for v in perms:
                    for w in perms:
                        if permuted_bruhat_leq(v, w, gamma):
                            assert values[v] <= values[w]


class TestIsRegular:
    def test_rank_two_regular(self):
        cert = is_regular(W("1/2,-1/2"), W("0,0"))
        assert cert.regular
        assert cert.walls == ()

    def test_rank_three_wall(self):
        cert = is_regular(W("1,0,-1"), W("0,0,0"))
        assert not cert.regular
        assert any(hit.value == 0 for hit in cert.walls)

    def test_mu_equal_lambda_never_regular(self):
        lam = W("1,0,-1")
        cert = is_regular(lam, lam)
        assert not cert.regular

    def test_walls_through_vertices(self):
        lam = W("1,0,-1")
        for w in all_permutations(3):
            assert not is_regular(lam, moment_image(lam, w)).regular

    def test_non_generic_rejected(self):
        with pytest.raises(InvalidInputError):
            is_regular(W("0,0"), W("0,0"))

    def test_certificate_lists_exact_triples(self):
        lam = W("1,0,-1")
        mu = W("0,0,0")
        cert = is_regular(lam, mu)
        # independent count: tail sums of lam over (v, k) hitting mu's zeros
        expected = 0
        perms = list(all_permutations(3))
        for v in perms:
            for g in perms:
                for k in (1, 2):
                    lam_tail = sum(lam.entries[v(i) - 1] for i in range(k + 1, 4))
                    mu_tail = sum(mu.entries[g(i) - 1] for i in range(k + 1, 4))
                    if lam_tail == mu_tail:
                        expected += 1
        assert len(cert.walls) == expected


class TestKernelGenerators:
    def test_rank_two_exact_output(self):
        lam, mu = W("1/2,-1/2"), W("0,0")
        gens = kernel_generators(lam, mu)
        labels = [(g.v.images, g.gamma.images, g.witnesses) for g in gens]
        assert labels == [
            ((1, 2), (1, 2), (1,)),
            ((1, 2), (2, 1), (1,)),
        ]
        x1inv = LaurentPoly.monomial(2, 1, xexp=(-1, 0))
        assert gens[0].poly == 1 - LaurentPoly.y(2, 2) * x1inv
        assert gens[1].poly == 1 - LaurentPoly.y(2, 1) * x1inv

    def test_not_regular_refused(self):
        lam = W("1,0,-1")
        with pytest.raises(NotRegularError) as excinfo:
            kernel_generators(lam, W("0,0,0"))
        assert excinfo.value.certificate is not None
        assert not excinfo.value.certificate.regular

    def test_scaling_invariance(self):
        lam, mu = W("1,0,-1"), W("1/4,1/8,-3/8")
        scale = Fraction(3, 7)
        lam2 = WeightVector(tuple(scale * e for e in lam.entries))
        mu2 = WeightVector(tuple(scale * e for e in mu.entries))
        gens = kernel_generators(lam, mu)
        gens2 = kernel_generators(lam2, mu2)
        assert [(g.v, g.gamma, g.witnesses) for g in gens] == [
            (g.v, g.gamma, g.witnesses) for g in gens2
        ]

    def test_downward_closed_in_tail_order(self):
        lam, mu = W("1,0,-1"), W("1/4,1/8,-3/8")
        gens = kernel_generators(lam, mu)
        emitted = {(g.v, g.gamma): set(g.witnesses) for g in gens}
        perms = list(all_permutations(3))

        def tails(v):
            return tuple(
                sum(lam.entries[v(i) - 1] for i in range(k + 1, 4)) for k in (1, 2)
            )

        for (v, gamma), ks in emitted.items():
            for v2 in perms:
                if all(a <= b for a, b in zip(tails(v2), tails(v))):
                    assert (v2, gamma) in emitted
                    assert ks <= emitted[(v2, gamma)]

    def test_polynomials_match_word_route(self):
        from kflag.ddo import pi_word
        from kflag.groth import top
        from kflag.laurent import permute_y

        lam, mu = W("1,0,-1"), W("1/4,1/8,-3/8")
        for gen in kernel_generators(lam, mu):
            direct = pi_word(gen.v, permute_y(gen.gamma, top(3)))
            assert gen.poly == direct

    def test_jobs_do_not_change_output(self):
        lam, mu = W("1,0,-1"), W("1/4,1/8,-3/8")
        serial = kernel_generators(lam, mu, jobs=1)
        parallel = kernel_generators(lam, mu, jobs=2)
        assert serial == parallel


class TestSoundness:
    def test_rank_two_certificate(self):
        lam, mu = W("1/2,-1/2"), W("0,0")
        gens = kernel_generators(lam, mu)
        for gen in gens:
            cert = half_space_soundness(gen, lam, mu)
            assert cert.checks
            for check in cert.checks:
                assert check.fixed_point_value < check.level_value

    def test_full_rank_three_sweep(self):
        lam, mu = W("1,0,-1"), W("1/4,1/8,-3/8")
        for gen in kernel_generators(lam, mu):
            half_space_soundness(gen, lam, mu)

    def test_corrupted_generator_fails(self):
        lam, mu = W("1/2,-1/2"), W("0,0")
        gens = kernel_generators(lam, mu)
        # v = s1 has lam tail 1/2 at k=1, violating the strict inequality
        bad = KernelGenerator(
            v=Permutation((2, 1)),
            gamma=Permutation((1, 2)),
            witnesses=(1,),
            poly=permuted_grothendieck(Permutation((2, 1)), Permutation((1, 2))),
        )
        with pytest.raises(SoundnessFailureError):
            half_space_soundness(bad, lam, mu)

    def test_support_subset_of_half_space(self):
        # the geometric statement: every support point of an emitted
        # generator lands strictly inside every witnessed half-space
        lam, mu = W("1,0,-1"), W("1/4,1/8,-3/8")
        for gen in kernel_generators(lam, mu):
            for z in support(gen.poly):
                for k in gen.witnesses:
                    assert eta_value(gen.gamma, k, moment_image(lam, z)) < eta_value(
                        gen.gamma, k, mu
                    )


class TestPresentation:
    def test_rank_two_contents(self):
        lam, mu = W("1/2,-1/2"), W("0,0")
        pres = presentation(lam, mu)
        assert pres.n == 2
        x1, x2 = LaurentPoly.x(2, 1), LaurentPoly.x(2, 2)
        y1, y2 = LaurentPoly.y(2, 1), LaurentPoly.y(2, 2)
        assert pres.ideal_i == (x1 + x2 - (y1 + y2), x1 * x2 - y1 * y2)
        assert pres.det_relation == y1 * y2 - 1
        assert len(pres.kernel) == 2

    def test_relation_counts(self):
        lam, mu = W("1,0,-1"), W("1/4,1/8,-3/8")
        pres = presentation(lam, mu)
        assert len(pres.ideal_i) == pres.n == 3
        assert pres.det_relation == det_relation(3)
        assert pres.variables == ("x1", "x2", "x3", "y1", "y2", "y3")

    def test_ideal_members_match_symmetric_differences(self):
        lam, mu = W("1,0,-1"), W("1/4,1/8,-3/8")
        pres = presentation(lam, mu)
        for i, rel in enumerate(pres.ideal_i, start=1):
            assert rel == elementary_symmetric(i, "x", 3) - elementary_symmetric(
                i, "y", 3
            )

    def test_not_regular_propagates(self):
        with pytest.raises(NotRegularError):
            presentation(W("1,0,-1"), W("0,0,0"))

    def test_rank_one_degenerate(self):
        pres = presentation(W("0"), W("0"))
        assert pres.n == 1
        assert pres.kernel == ()
        assert pres.det_relation == LaurentPoly.y(1, 1) - 1
