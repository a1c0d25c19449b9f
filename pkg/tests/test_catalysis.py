import random
from fractions import Fraction

import pytest

from trumpkit import (ProbVec, build_catalyst_thm1, combine_catalysts, in_Mk,
                      lift_catalyst, majorizes, make_probvec,
                      multicopy_catalyst_scan, search_catalyst, tensor)
from trumpkit.catalysis import reduce_catalyst

from conftest import random_rational_vec

F = Fraction


def fv(*args):
    return make_probvec([F(a) for a in args])


PAPER_X = fv("0.4", "0.4", "0.1", "0.1")
PAPER_Y = fv("0.5", "0.25", "0.25", "0")
Z = fv("0.6", "0.4")
Z_PRIME = fv("0.55", "0.45")


def incomparable_multicopy_pairs(rng, count, k_hi=3):
    """Random pairs with x not majorized by y but some k-copy witness."""
    found = []
    while len(found) < count:
        n = rng.randint(3, 4)
        x = random_rational_vec(rng, n)
        y = random_rational_vec(rng, n)
        if majorizes(x, y).holds:
            continue
        for k in range(2, k_hi + 1):
            if in_Mk(x, y, k):
                found.append((x, y, k))
                break
    return found


class TestBuildCatalystThm1:
    def test_paper_pair_k3(self):
        cert = build_catalyst_thm1(PAPER_X, PAPER_Y, 3)
        assert cert.catalyst.dim == 3 * 4 ** 2 == 48
        assert cert.verified
        assert cert.dim_bound_ok

    def test_k1_trivial_catalyst(self):
        cert = build_catalyst_thm1(PAPER_Y, PAPER_Y, 1)
        assert cert.catalyst == fv("1")
        assert cert.verified

    def test_precondition_guarded(self):
        with pytest.raises(ValueError):
            build_catalyst_thm1(PAPER_X, PAPER_Y, 2)

    def test_random_witnesses_always_verify(self):
        rng = random.Random(89)
        for x, y, k in incomparable_multicopy_pairs(rng, 8):
            cert = build_catalyst_thm1(x, y, k)
            assert cert.verified
            assert cert.catalyst.dim == k * x.dim ** (k - 1)

    def test_scaling_invariance(self):
        # the 1/k normalization cannot affect the comparison: both sides
        # scale identically under c -> c/k
        cert = build_catalyst_thm1(PAPER_X, PAPER_Y, 3)
        c = cert.catalyst
        scaled = ProbVec([v * 3 for v in c.entries])
        lhs = ProbVec([a * b for a in PAPER_X for b in scaled])
        rhs = ProbVec([a * b for a in PAPER_Y for b in scaled])
        ex = F(0)
        ey = F(0)
        for l in range(lhs.dim - 1):
            ex += lhs.entries[l]
            ey += rhs.entries[l]
            assert ex <= ey

    def test_reduce_view_merges_values(self):
        cert = build_catalyst_thm1(PAPER_X, PAPER_Y, 3)
        view = reduce_catalyst(cert.catalyst)
        assert view.total_count == 48
        assert len(view.blocks) < 48


class TestCombineCatalysts:
    def test_trivial_cprime_reduces_to_thm1(self):
        cert = combine_catalysts(PAPER_X, PAPER_Y, 3, fv("1"))
        assert cert.verified
        assert cert.catalyst.dim == 48

    def test_k1_returns_cprime(self):
        cert = combine_catalysts(PAPER_X, PAPER_Y, 1, Z)
        assert cert.catalyst == Z
        assert cert.verified

    def test_bad_cprime_rejected(self):
        with pytest.raises(ValueError):
            combine_catalysts(PAPER_X, PAPER_Y, 1, Z_PRIME)

    def test_random_premises_always_verify(self):
        rng = random.Random(97)
        done = 0
        pairs = incomparable_multicopy_pairs(rng, 10)
        for x, y, k in pairs:
            cp = random_rational_vec(rng, 2)
            from trumpkit import (spectrum_majorizes, spectrum_of,
                                  spectrum_tensor, tensor_power_spectrum)
            sx = spectrum_tensor(tensor_power_spectrum(x, k),
                                 spectrum_of(cp))
            sy = spectrum_tensor(tensor_power_spectrum(y, k),
                                 spectrum_of(cp))
            if not spectrum_majorizes(sx, sy).holds:
                continue
            assert combine_catalysts(x, y, k, cp).verified
            done += 1
        assert done >= 5


class TestLiftCatalyst:
    def test_paper_catalyst_two_copies(self):
        cert = lift_catalyst(PAPER_X, PAPER_Y, Z, 2)
        assert cert.verified
        assert cert.catalyst.dim == 4

    def test_single_copy_unchanged(self):
        cert = lift_catalyst(PAPER_X, PAPER_Y, Z, 1)
        assert cert.catalyst == Z

    def test_invalid_catalyst_rejected(self):
        with pytest.raises(ValueError):
            lift_catalyst(PAPER_X, PAPER_Y, Z_PRIME, 2)

    def test_random_lifts_always_verify(self):
        rng = random.Random(101)
        for x, y, k in incomparable_multicopy_pairs(rng, 5):
            c = build_catalyst_thm1(x, y, k).catalyst
            for n_copies in (2, 3):
                assert lift_catalyst(x, y, c, n_copies).verified


class TestSearchCatalyst:
    def test_paper_pair_finds_dim2_catalyst(self):
        cert = search_catalyst(PAPER_X, PAPER_Y, 2, 10_000, seed=0)
        assert cert is not None
        assert cert.verified
        c = cert.catalyst
        assert majorizes(tensor(PAPER_X, c), tensor(PAPER_Y, c)).holds

    def test_filter_excludes_immediately(self):
        x = fv("0.6", "0.2", "0.1", "0.1")
        assert search_catalyst(x, PAPER_Y, 2, 100, seed=0) is None

    def test_dim1_is_vacuous(self):
        assert search_catalyst(PAPER_X, PAPER_Y, 1, 10, seed=0) is None
        ok = search_catalyst(fv("0.375", "0.375", "0.125", "0.125"),
                             PAPER_Y, 1, 10, seed=0)
        assert ok is not None and ok.verified

    def test_deterministic_given_seed(self):
        a = search_catalyst(PAPER_X, PAPER_Y, 2, 5_000, seed=3)
        b = search_catalyst(PAPER_X, PAPER_Y, 2, 5_000, seed=3)
        assert (a is None) == (b is None)
        if a is not None:
            assert a.catalyst == b.catalyst


class TestMulticopyCatalystScan:
    def test_paper_eight_copies(self):
        result = multicopy_catalyst_scan(PAPER_X, PAPER_Y, Z_PRIME, 8)
        assert result[1] is False
        assert result[8] is True
        assert set(result) == set(range(1, 9))

    def test_good_catalyst_all_m(self):
        result = multicopy_catalyst_scan(PAPER_X, PAPER_Y, Z, 2)
        assert result == {1: True, 2: True}


class TestUniformCatalystIsVacuous:
    def test_uniform_catalyst_implies_plain_majorization(self):
        rng = random.Random(103)
        for _ in range(20):
            n = rng.randint(2, 4)
            x = random_rational_vec(rng, n)
            y = random_rational_vec(rng, n)
            for dim_c in (2, 3):
                u = ProbVec([F(1, dim_c)] * dim_c)
                assisted = majorizes(tensor(x, u), tensor(y, u)).holds
                assert assisted == majorizes(x, y).holds
