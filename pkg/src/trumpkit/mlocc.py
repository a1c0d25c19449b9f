"""Multiple-copy transformation analysis.

Membership in the k-copy convertibility set (x^(x)k majorized by y^(x)k),
bounded scans over k, the single-equality boundary criterion and its
uniform-k corollary, interior classification of the multi-copy region,
the usefulness characterization with its averaging witness, and the
non-closedness perturbation witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from .majorize import MajReport, majorizes, spectrum_majorizes
from .specvec import ProbVec, tensor_power_spectrum


@dataclass(frozen=True)
class MloccScan:
    x: ProbVec
    y: ProbVec
    k_max: int
    results: Dict[int, str]  # k -> verdict
    first_success: Optional[int]
    short_circuited: bool = False  # endpoint filter excluded x outright

    def to_json(self):
        return {
            "k_max": self.k_max,
            "results": {str(k): v for k, v in sorted(self.results.items())},
            "first_success": self.first_success,
            "short_circuited": self.short_circuited,
        }


@dataclass(frozen=True)
class UsefulnessVerdict:
    useful: bool
    witness_l: Optional[int] = None
    witness_x: Optional[ProbVec] = None

    def to_json(self):
        return {
            "useful": self.useful,
            "witness_l": self.witness_l,
            "witness_x": self.witness_x.to_json() if self.witness_x else None,
        }


def in_Mk(x: ProbVec, y: ProbVec, k: int) -> bool:
    """Whether k copies of x convert jointly to k copies of y."""
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")
    if k < 1:
        raise ValueError("k must be >= 1")
    return spectrum_majorizes(tensor_power_spectrum(x, k),
                              tensor_power_spectrum(y, k)).holds


def endpoint_filter_passes(x: ProbVec, y: ProbVec) -> bool:
    """Necessary condition for membership at any k: x_1 <= y_1 and
    x_n >= y_n.  Exact, not heuristic."""
    be = x.backend
    return (be.le(x.entries[0], y.entries[0])
            and be.le(y.entries[-1], x.entries[-1]))


def scan_Mk(x: ProbVec, y: ProbVec, k_max: int) -> MloccScan:
    """Check every k up to k_max.  Success is not monotone in k, so all
    requested k are evaluated; the endpoint filter short-circuits the
    hopeless case."""
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if not endpoint_filter_passes(x, y):
        return MloccScan(x, y, k_max, {k: "fails" for k in range(1, k_max + 1)},
                         None, short_circuited=True)
    results = {}
    first = None
    for k in range(1, k_max + 1):
        rep = spectrum_majorizes(tensor_power_spectrum(x, k),
                                 tensor_power_spectrum(y, k))
        results[k] = rep.verdict
        if rep.holds and first is None:
            first = k
    return MloccScan(x, y, k_max, results, first)


def lemma3_k_condition(y: ProbVec, d: int, k: int) -> bool:
    """Strict overlap condition y_d^k < y_1^{k-1} y_{d+1} and
    y_{d+1}^k > y_d y_n^{k-1}: exactly when every boundary point with a
    single prefix equality at d becomes strictly interior at k copies."""
    n = y.dim
    if not 1 < d < n - 1:
        raise ValueError("d must satisfy 1 < d < n-1")
    if k < 1:
        raise ValueError("k must be >= 1")
    be = y.backend
    y1, yd, yd1, yn = (y.entries[0], y.entries[d - 1], y.entries[d],
                       y.entries[-1])
    return (be.lt(yd ** k, y1 ** (k - 1) * yd1)
            and be.lt(yd * yn ** (k - 1), yd1 ** k))


def _d_min_max(y: ProbVec):
    """d_min = least index with y_1 > y_i; d_max = greatest with y_i > y_n
    (1-based)."""
    be = y.backend
    d_min = next((i + 1 for i, v in enumerate(y.entries)
                  if be.lt(v, y.entries[0])), None)
    d_max = next((y.dim - i for i, v in enumerate(reversed(y.entries))
                  if be.lt(y.entries[-1], v)), None)
    return d_min, d_max


def corollary4_k_bound(y: ProbVec, k_max: int) -> Optional[int]:
    """Least k <= k_max whose single overlap condition covers the whole
    generalized interior at once (one k working for every boundary point).
    Returns None when no such k exists in range; with a zero tail the
    condition is unsatisfiable for every k."""
    if y.is_uniform():
        raise ValueError("y must be non-uniform")
    if not classify_usefulness(y).useful:
        raise ValueError("usefulness condition fails for y")
    be = y.backend
    d_min, d_max = _d_min_max(y)
    a = y.entries[d_min - 1]       # y_{d_min}
    b = y.entries[d_max]           # y_{d_max + 1}
    y1, yn = y.entries[0], y.entries[-1]
    for k in range(1, k_max + 1):
        if be.lt(a ** k, y1 ** (k - 1) * b) and be.lt(a * yn ** (k - 1), b ** k):
            return k
    return None


def is_interior_of_M(x: ProbVec, y: ProbVec, k_max: int) -> str:
    """Classify x against the multi-copy region of y within a bounded scan:
    'interior' / 'boundary' once membership is found (endpoints decide),
    'not_member' when the endpoint filter excludes x, else 'unknown'."""
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")
    if not endpoint_filter_passes(x, y):
        return "not_member"
    scan = scan_Mk(x, y, k_max)
    if scan.first_success is None:
        return "unknown"
    be = x.backend
    if (be.lt(x.entries[0], y.entries[0])
            and be.lt(y.entries[-1], x.entries[-1])):
        return "interior"
    return "boundary"


def classify_usefulness(y: ProbVec) -> UsefulnessVerdict:
    """Do extra copies ever help in producing y?

    Useful iff some l with 1 < l < n-1 has y_1 > y_l and y_{l+1} > y_n.
    The witness averages the first l and the last n-l components of y: it
    sits on the single-copy boundary (equality at l) yet is interior to
    the multi-copy region.  Least valid l wins, for determinism.
    """
    be = y.backend
    n = y.dim
    for l in range(2, n - 1):
        if (be.lt(y.entries[l - 1], y.entries[0])
                and be.lt(y.entries[-1], y.entries[l])):
            head = y.prefix(l) / l
            tail = (y.total() - y.prefix(l)) / (n - l)
            witness = ProbVec([head] * l + [tail] * (n - l), be)
            return UsefulnessVerdict(True, l, witness)
    return UsefulnessVerdict(False)


def nonclosedness_witness(y: ProbVec) -> ProbVec:
    """Perturbation witness showing the multi-copy region is not closed:
    push the first non-maximal component up and the last non-minimal one
    down by the same margin.  The result strictly majorizes y, so it lies
    outside the region for every k, yet it is a limit of members."""
    if not classify_usefulness(y).useful:
        raise ValueError("usefulness condition fails for y")
    be = y.backend
    n = y.dim
    l = next(i for i, v in enumerate(y.entries) if be.lt(v, y.entries[0]))
    m = next(n - 1 - i for i, v in enumerate(reversed(y.entries))
             if be.lt(y.entries[-1], v))
    delta = min(y.entries[0] - y.entries[l], y.entries[m] - y.entries[-1])
    vals = list(y.entries)
    vals[l] = vals[l] + delta
    vals[m] = vals[m] - delta
    return ProbVec(vals, be)
