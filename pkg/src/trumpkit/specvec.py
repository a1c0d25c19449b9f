"""Probability vectors and compressed spectra.

A ProbVec is a sorted (nonincreasing) probability vector -- the Schmidt
coefficient vector identifying a bipartite pure state.  A Spectrum is the
compressed multiset view of a huge sorted vector such as a k-fold tensor
power: distinct values with arbitrary-precision multiplicities, so x^(x)k
at n=4, k=30 stays at a few thousand blocks instead of 4^30 entries.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_right
from fractions import Fraction

from .backend import EXACT, ScalarBackend


class ProbVec:
    """Immutable probability vector, entries sorted nonincreasing."""

    __slots__ = ("entries", "backend")

    def __init__(self, entries, backend: ScalarBackend = EXACT, _sorted=False):
        entries = tuple(entries) if _sorted else tuple(
            sorted(entries, reverse=True))
        if not entries:
            raise ValueError("empty probability vector")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "backend", backend)

    def __setattr__(self, *a):
        raise AttributeError("ProbVec is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def nonzero_dim(self) -> int:
        """d_x: number of nonzero entries (zeros are retained, not stripped,
        because trailing zeros change classification)."""
        return sum(1 for v in self.entries if not self.backend.eq(v, 0))

    def total(self):
        return sum(self.entries, self.backend.zero())

    def prefix(self, l: int):
        """e_l: sum of the l largest entries."""
        if not 0 <= l <= self.dim:
            raise ValueError("prefix index out of range")
        return sum(self.entries[:l], self.backend.zero())

    def __eq__(self, other):
        return (isinstance(other, ProbVec)
                and self.entries == other.entries
                and self.backend == other.backend)

    def __hash__(self):
        return hash((self.entries, self.backend))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return "ProbVec(%s)" % (", ".join(map(str, self.entries)))

    def is_uniform(self) -> bool:
        return self.backend.eq(self.entries[0], self.entries[-1])

    def distinct(self):
        """Distinct values with multiplicities, value-descending."""
        out = []
        for v in self.entries:
            if out and self.backend.eq(out[-1][0], v):
                out[-1] = (out[-1][0], out[-1][1] + 1)
            else:
                out.append((v, 1))
        return out

    def to_json(self):
        return [self.backend.format(v) if self.backend.exact else v
                for v in self.entries]


def make_probvec(raw, normalize: bool = False,
                 backend: ScalarBackend = EXACT) -> ProbVec:
    """Build a ProbVec from raw scalars or literals.

    With normalize set the entries are divided by their sum; otherwise the
    sum must already be 1 (exactly, or within tolerance in float mode).
    """
    vals = [backend.parse(v) for v in raw]
    if not vals:
        raise ValueError("empty input")
    for v in vals:
        if v < 0:
            raise ValueError("negative entry %s" % (v,))
    total = sum(vals, backend.zero())
    if backend.eq(total, 0):
        raise ValueError("zero total mass")
    if normalize:
        vals = [v / total for v in vals]
    elif not backend.eq(total, 1):
        raise ValueError("entries sum to %s, not 1 (pass normalize=True "
                         "to rescale)" % (total,))
    return ProbVec(vals, backend)


def pad_to(x: ProbVec, n: int) -> ProbVec:
    """Append zeros up to dimension n.  Padding is always an explicit caller
    act: it changes classification (appending a zero to (0.5,0.25,0.25)
    makes multi-copy transformations useful)."""
    if n < x.dim:
        raise ValueError("cannot pad to a smaller dimension")
    return ProbVec(x.entries + (x.backend.zero(),) * (n - x.dim),
                   x.backend, _sorted=True)


def tensor(a: ProbVec, b: ProbVec) -> ProbVec:
    """Tensor product: all pairwise products, re-sorted."""
    if a.backend != b.backend:
        raise ValueError("backend mismatch")
    return ProbVec([u * v for u in a.entries for v in b.entries], a.backend)


def tensor_power(x: ProbVec, k: int) -> ProbVec:
    """x^(x)k fully expanded (n^k entries); only for small k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = x
    for _ in range(k - 1):
        out = tensor(out, x)
    return out


def direct_sum(a: ProbVec, b: ProbVec, renormalize: bool = False) -> ProbVec:
    """Concatenation re-sorted; renormalize rescales the mass-2 result
    back to 1."""
    if a.backend != b.backend:
        raise ValueError("backend mismatch")
    vals = list(a.entries) + list(b.entries)
    if renormalize:
        total = sum(vals, a.backend.zero())
        vals = [v / total for v in vals]
    return ProbVec(vals, a.backend)


class Spectrum:
    """Compressed multiset: (value, count) blocks, values strictly
    decreasing, counts arbitrary-precision integers.

    On the exact backend all block values are rescaled to one common
    denominator internally, so cumulative masses and prefix comparisons
    run on plain integers (rational normalization per block is the
    bottleneck at tens of thousands of blocks).
    """

    __slots__ = ("blocks", "backend", "_cum_counts", "_scale", "_int_vals",
                 "_int_cum")

    def __init__(self, blocks, backend: ScalarBackend = EXACT):
        blocks = tuple((v, int(c)) for v, c in blocks)
        for (v1, c1), (v2, c2) in zip(blocks, blocks[1:]):
            if not v1 > v2:
                raise ValueError("block values must be strictly decreasing")
        for _, c in blocks:
            if c < 1:
                raise ValueError("block counts must be >= 1")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "backend", backend)
        counts = []
        cc = 0
        for _, c in blocks:
            cc += c
            counts.append(cc)
        object.__setattr__(self, "_cum_counts", counts)
        if backend.exact:
            scale = math.lcm(*(v.denominator for v, _ in blocks)) \
                if blocks else 1
            ivals = [v.numerator * (scale // v.denominator) for v, _ in blocks]
        else:
            scale = 1.0
            ivals = [v for v, _ in blocks]
        cum = []
        cm = 0 if backend.exact else 0.0
        for iv, (_, c) in zip(ivals, blocks):
            cm += iv * c
            cum.append(cm)
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(self, "_int_vals", ivals)
        object.__setattr__(self, "_int_cum", cum)

    def __setattr__(self, *a):
        raise AttributeError("Spectrum is immutable")

    @property
    def total_count(self) -> int:
        return self._cum_counts[-1] if self.blocks else 0

    def total_mass(self):
        if not self.blocks:
            return self.backend.zero()
        if self.backend.exact:
            return Fraction(self._int_cum[-1], self._scale)
        return self._int_cum[-1]

    def __eq__(self, other):
        return (isinstance(other, Spectrum) and self.blocks == other.blocks
                and self.backend == other.backend)

    def __repr__(self):
        return "Spectrum(%d blocks, total_count=%d)" % (
            len(self.blocks), self.total_count)

    def breakpoints(self):
        """Cumulative count boundaries (excluding 0)."""
        return list(self._cum_counts)

    def prefix_mass(self, l: int):
        """e_l: mass of the l largest components, blockwise."""
        l = int(l)
        if not 0 <= l <= self.total_count:
            raise ValueError("prefix position out of range")
        if l == 0:
            return self.backend.zero()
        num = self._int_prefix(l)
        if self.backend.exact:
            return Fraction(num, self._scale)
        return num

    def _int_prefix(self, l: int):
        """Prefix mass at the internal scale (exact: integer numerator
        over _scale)."""
        # block containing position l: first block whose cumulative count >= l
        i = bisect_right(self._cum_counts, l - 1)
        base = self._int_cum[i - 1] if i else 0
        prev = self._cum_counts[i - 1] if i else 0
        return base + self._int_vals[i] * (l - prev)

    def value_at(self, l: int):
        """Value of the l-th largest component (1-based)."""
        if not 1 <= l <= self.total_count:
            raise ValueError("position out of range")
        i = bisect_right(self._cum_counts, l - 1)
        return self.blocks[i][0]

    def expand(self) -> ProbVec:
        """Materialize the full sorted vector; only for small totals."""
        vals = []
        for v, c in self.blocks:
            vals.extend([v] * c)
        return ProbVec(vals, self.backend, _sorted=True)

    def to_json(self):
        return {
            "blocks": [[self.backend.format(v), str(c)]
                       for v, c in self.blocks],
            "total": str(self.total_count),
        }


def _merge_blocks(pairs, backend: ScalarBackend) -> Spectrum:
    merged = {}
    for v, c in pairs:
        merged[v] = merged.get(v, 0) + c
    blocks = sorted(merged.items(), key=lambda vc: vc[0], reverse=True)
    return Spectrum(blocks, backend)


def spectrum_of(x: ProbVec) -> Spectrum:
    return _merge_blocks(x.distinct(), x.backend)


def spectrum_tensor(a: Spectrum, b: Spectrum) -> Spectrum:
    """Tensor product of two compressed spectra."""
    if a.backend != b.backend:
        raise ValueError("backend mismatch")
    return _merge_blocks(
        ((va * vb, ca * cb) for va, ca in a.blocks for vb, cb in b.blocks),
        a.backend)


def _compositions(total, parts):
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def tensor_power_spectrum(x: ProbVec, k: int) -> Spectrum:
    """Compressed spectrum of x^(x)k.

    Enumerates exponent vectors over the *distinct* values of x, so the
    block count is bounded by C(d-1+k, d-1) with d the number of distinct
    values.  Counts are multinomial(k; a) times the product of within-value
    multiplicities, summing to n^k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    dist = x.distinct()
    d = len(dist)
    fact_k = math.factorial(k)
    pairs = []
    for expo in _compositions(k, d):
        count = fact_k
        value = x.backend.one()
        for (v, m), a in zip(dist, expo):
            count = count // math.factorial(a) * (m ** a)
            if a:
                value = value * v ** a
        pairs.append((value, count))
    return _merge_blocks(pairs, x.backend)


# --- vector literal I/O -----------------------------------------------------

def parse_vector_literal(text: str, backend: ScalarBackend = EXACT,
                         normalize: bool = False) -> ProbVec:
    """Parse the shared JSON vector format: an array of strings ("0.4",
    "2/5") for exact mode, or of numbers (float mode only)."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("vector literal must be a JSON array")
    return make_probvec(data, normalize=normalize, backend=backend)


def load_vector(path, backend: ScalarBackend = EXACT,
                normalize: bool = False) -> ProbVec:
    with open(path) as fh:
        return parse_vector_literal(fh.read(), backend, normalize)
