"""Shared helpers: random rational vector generators and brute-force
oracles kept independent of the compressed code paths they check."""

import itertools
import random
from fractions import Fraction
from pathlib import Path

import pytest

from trumpkit import ProbVec, make_probvec

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def corpus_path(name):
    return CORPUS / name


def random_rational_vec(rng, n, denom_max=40, positive=False):
    """Random sorted rational probability vector with denominator <= denom_max."""
    while True:
        denom = rng.randint(n, denom_max)
        lo = 1 if positive else 0
        cuts = sorted(rng.randint(0, denom) for _ in range(n - 1))
        parts = [a - b for a, b in zip(cuts + [denom], [0] + cuts)]
        if positive and min(parts) < lo:
            continue
        return make_probvec([Fraction(p, denom) for p in parts],
                            normalize=False)


def random_majorized_below(rng, y):
    """Random x with x majorized by y: mix y toward uniform, then apply a
    few mass-preserving Robin Hood moves.  Independent of the predicates
    under test."""
    n = y.dim
    t = Fraction(rng.randint(0, 8), 8)
    u = Fraction(1, n)
    vals = [t * v + (1 - t) * u for v in y.entries]
    for _ in range(rng.randint(0, 3)):
        vals.sort(reverse=True)
        i = rng.randrange(n - 1)
        j = rng.randrange(i + 1, n)
        gap = vals[i] - vals[j]
        if gap > 0:
            move = gap * Fraction(rng.randint(0, 4), 8)
            vals[i] -= move
            vals[j] += move
    return ProbVec(vals)


def random_strict_interior(rng, y):
    """Random x strictly inside the majorization region of a non-uniform y:
    a proper mix of y with the uniform vector."""
    n = y.dim
    t = Fraction(rng.randint(1, 7), 8)
    u = Fraction(1, n)
    return ProbVec([t * v + (1 - t) * u for v in y.entries])


def brute_tensor_power(x, k):
    """Oracle: all n^k products, sorted, as a plain list of Fractions."""
    vals = [Fraction(1)]
    for _ in range(k):
        vals = [a * b for a in vals for b in x.entries]
    return sorted(vals, reverse=True)


def brute_majorizes(xs, ys):
    """Oracle on plain sorted lists: (holds, first_violation_l)."""
    ex = Fraction(0)
    ey = Fraction(0)
    for l, (a, b) in enumerate(zip(xs, ys), start=1):
        ex += a
        ey += b
        if ex > ey:
            return False, l
    return True, None


def brute_strict_interior(xs, ys):
    ex = Fraction(0)
    ey = Fraction(0)
    for a, b in zip(xs[:-1], ys[:-1]):
        ex += a
        ey += b
        if ex >= ey:
            return False
    return True
