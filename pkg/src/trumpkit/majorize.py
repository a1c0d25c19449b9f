"""Majorization predicates.

Standard majorization on sorted probability vectors, its strict-interior
and generalized-interior refinements, and the compressed-spectrum variant
used for tensor powers.  The spectrum comparison only evaluates prefix
sums at block breakpoints: between consecutive breakpoints the difference
e_l(sx) - e_l(sy) is linear in l (both prefix functions advance by a fixed
per-unit value there), so its sign pattern over all l is determined by its
endpoint values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .backend import ScalarBackend
from .specvec import ProbVec, Spectrum, spectrum_of


@dataclass(frozen=True)
class MajReport:
    """Outcome of a majorization comparison.

    verdict:
      strict_interior -- every interior prefix inequality strict
      boundary        -- x majorized by y, some interior equality
      fails           -- some prefix sum of x exceeds y's
    equality_indices: prefix positions l (1 <= l < n) with e_l(x) = e_l(y);
      for spectra these are breakpoint positions, and zero_segment marks a
      whole segment of equalities between two breakpoints.
    first_violation: (l, e_l(x), e_l(y)) at the least violating l.
    """
    verdict: str
    equality_indices: frozenset = frozenset()
    first_violation: Optional[tuple] = None
    zero_segment: bool = False

    @property
    def holds(self) -> bool:
        """True iff x is majorized by y."""
        return self.verdict != "fails"

    def to_json(self):
        fv = None
        if self.first_violation is not None:
            l, ex, ey = self.first_violation
            fv = {"l": str(l), "ex": str(ex), "ey": str(ey)}
        return {
            "verdict": self.verdict,
            "equality_indices": sorted(str(i) for i in self.equality_indices),
            "first_violation": fv,
        }


def majorizes(x: ProbVec, y: ProbVec) -> MajReport:
    """Compare x against y: does y majorize x (x ~ convertible to y)?

    Dimensions must already match; padding with zeros is the caller's
    explicit act (see pad_to) since it changes the answer.
    """
    if x.dim != y.dim:
        raise ValueError("dimension mismatch: %d vs %d (pad explicitly)"
                         % (x.dim, y.dim))
    be = x.backend
    n = x.dim
    ex = be.zero()
    ey = be.zero()
    equalities = set()
    for l in range(1, n):
        ex = ex + x.entries[l - 1]
        ey = ey + y.entries[l - 1]
        c = be.cmp(ex, ey)
        if c > 0:
            return MajReport("fails", frozenset(equalities), (l, ex, ey))
        if c == 0:
            equalities.add(l)
    if equalities:
        return MajReport("boundary", frozenset(equalities))
    return MajReport("strict_interior")


def spectrum_majorizes(sx: Spectrum, sy: Spectrum) -> MajReport:
    """Compressed-spectrum majorization, equivalent to majorizes() on the
    fully expanded vectors but evaluated only at breakpoints."""
    if sx.total_count != sy.total_count:
        raise ValueError("total_count mismatch: %d vs %d"
                         % (sx.total_count, sy.total_count))
    be = sx.backend
    if not be.eq(sx.total_mass(), sy.total_mass()):
        raise ValueError("total mass mismatch: %s vs %s"
                         % (sx.total_mass(), sy.total_mass()))
    total = sx.total_count
    bps = sorted(set(sx.breakpoints()) | set(sy.breakpoints()))
    equalities = set()
    zero_segment = False
    if be.exact:
        # rescale both spectra to one integer grid: the comparison at each
        # breakpoint is then pure integer arithmetic
        d = math.lcm(sx._scale, sy._scale)
        mx, my = d // sx._scale, d // sy._scale
    else:
        mx = my = 1
    prev_l, prev_eq = 0, True
    for l in bps:
        ex = sx._int_prefix(l) * mx
        ey = sy._int_prefix(l) * my
        if be.exact:
            c = (ex > ey) - (ex < ey)
        else:
            c = be.cmp(ex, ey)
        if c > 0:
            return _fail_report(sx, sy, equalities, prev_l, l)
        if c == 0 and l < total:
            equalities.add(l)
        if c == 0 and prev_eq and l - prev_l > 1:
            # difference identically zero on the whole segment
            zero_segment = True
        prev_l, prev_eq = l, c == 0
    if equalities or zero_segment:
        return MajReport("boundary", frozenset(equalities),
                         zero_segment=zero_segment)
    return MajReport("strict_interior")


def _fail_report(sx, sy, equalities, lo, hi):
    """Locate the least integer l in (lo, hi] with e_l(sx) > e_l(sy).

    On the segment the difference is linear with slope vx - vy (the block
    values), so the crossing point solves exactly in rational arithmetic;
    fall back to the breakpoint itself if the slope degenerates.
    """
    be = sx.backend
    d_lo = sx.prefix_mass(lo) - sy.prefix_mass(lo)
    vx = sx.value_at(lo + 1)
    vy = sy.value_at(lo + 1)
    slope = vx - vy
    if be.cmp(slope, 0) > 0:
        # first l with d_lo + (l - lo) * slope > 0
        steps = int(-d_lo // slope) + 1 if be.cmp(d_lo, 0) <= 0 else 1
        l = max(lo + steps, lo + 1)
        l = min(l, hi)
    else:
        l = hi
    ex = sx.prefix_mass(l)
    ey = sy.prefix_mass(l)
    return MajReport("fails", frozenset(equalities), (l, ex, ey))


def is_interior(x: ProbVec, y: ProbVec) -> bool:
    """Strict interior of the majorization region: all interior prefix
    inequalities strict."""
    return majorizes(x, y).verdict == "strict_interior"


def is_generalized_interior(x: ProbVec, y: ProbVec) -> bool:
    """Generalized interior membership: x majorized by y with strict head
    (x_1 < y_1) and strict tail (x_n > y_n); interior equalities allowed."""
    rep = majorizes(x, y)
    be = x.backend
    return (rep.holds
            and be.lt(x.entries[0], y.entries[0])
            and be.lt(y.entries[-1], x.entries[-1]))


def check_direct_sum_interior_condition(y: ProbVec, yp: ProbVec) -> bool:
    """Overlap condition under which interior points stay interior after a
    direct sum: y_1 > yp_n and yp_1 > y_m.  Undefined (raises) when either
    vector is uniform."""
    if y.is_uniform() or yp.is_uniform():
        raise ValueError("condition undefined for uniform vectors")
    be = y.backend
    return (be.lt(yp.entries[-1], y.entries[0])
            and be.lt(y.entries[-1], yp.entries[0]))


def check_overlap_chain(ys) -> bool:
    """Chain overlap conditions for a list of (vector, repeat_count):
    (i) the first vector carries the maximal head, (ii) the last carries
    the minimal tail, (iii) consecutive vectors overlap (tail of i < head
    of i+1)."""
    vecs = [v for v, _ in ys]
    if not vecs:
        raise ValueError("empty chain")
    if len(vecs) == 1:
        return True
    be = vecs[0].backend
    heads = [v.entries[0] for v in vecs]
    tails = [v.entries[-1] for v in vecs]
    if any(be.lt(heads[0], h) for h in heads[1:]):
        return False
    if any(be.lt(t, tails[-1]) for t in tails[:-1]):
        return False
    return all(be.lt(tails[i], heads[i + 1]) for i in range(len(vecs) - 1))
