"""Second-order linear recurrence sequences over exact rationals.

A :class:`SequenceDef` fixes coefficients (c1, c2) and initial values
(x0, x1) of the bi-infinite sequence

    X_n = c1*X_{n-1} + c2*X_{n-2},

with negative indices reached through the inverted step
X_{n-2} = (X_n - c1*X_{n-1}) / c2, which is well defined because c2 != 0.
Terms are memoized per definition instance in two growable runs (indices
>= 0 and < 0): verification sweeps re-read overlapping windows, and
recomputation would be quadratic without the cache.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .numeric import ensure_fraction, rat_pow


@dataclass(frozen=True)
class SequenceDef:
    """Immutable definition of one sequence; the caches never affect equality."""

    c1: Fraction
    c2: Fraction
    x0: Fraction
    x1: Fraction
    label: str = ""
    _fwd: list = field(default_factory=list, init=False, repr=False, compare=False)
    _bwd: list = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("c1", "c2", "x0", "x1"):
            object.__setattr__(self, name, ensure_fraction(getattr(self, name)))
        if self.c2 == 0:
            raise ValueError("c2 must be nonzero (the recurrence must be second order)")
        self._fwd.extend((self.x0, self.x1))


FIBONACCI = SequenceDef(1, 1, 0, 1, label="Fibonacci")
LUCAS = SequenceDef(1, 1, 2, 1, label="Lucas")
PELL = SequenceDef(2, 1, 0, 1, label="Pell")
PELL_LUCAS = SequenceDef(2, 1, 1, 1, label="Pell-Lucas")
BRONZE = SequenceDef(3, 1, 0, 1, label="bronze")
A015530 = SequenceDef(4, 3, 0, 1, label="A015530")

_PLAIN_FAMILIES = {
    "fibonacci": FIBONACCI,
    "lucas": LUCAS,
    "pell": PELL,
    "pelllucas": PELL_LUCAS,
    "bronze": BRONZE,
    "a015530": A015530,
}


def _cached(seq: SequenceDef, m: int) -> Fraction:
    return seq._fwd[m] if m >= 0 else seq._bwd[-m - 1]


def term(seq: SequenceDef, n: int) -> Fraction:
    """Value of the sequence at any integer index, forward or backward."""
    if n >= 0:
        fwd = seq._fwd
        while len(fwd) <= n:
            fwd.append(seq.c1 * fwd[-1] + seq.c2 * fwd[-2])
        return fwd[n]
    bwd = seq._bwd
    while len(bwd) < -n:
        m = -(len(bwd) + 1)
        bwd.append((_cached(seq, m + 2) - seq.c1 * _cached(seq, m + 1)) / seq.c2)
    return bwd[-n - 1]


def generalized_u(a, b, label: str = "") -> SequenceDef:
    """U-sequence for coefficients (a, b): starts 0, 1 (Fibonacci when a=b=1)."""
    a = ensure_fraction(a)
    b = ensure_fraction(b)
    return SequenceDef(a, b, 0, 1, label=label or f"U({a},{b})")


def generalized_v_def(a, b, label: str = "") -> SequenceDef:
    """V-sequence for coefficients (a, b): starts 2, a (Lucas when a=b=1)."""
    a = ensure_fraction(a)
    b = ensure_fraction(b)
    return SequenceDef(a, b, 2, a, label=label or f"V({a},{b})")


def named_def(name: str, a=None, b=None) -> SequenceDef:
    """Look up a family by name; generalized_u / generalized_v need (a, b)."""
    key = name.lower().replace("-", "").replace("_", "").replace(" ", "")
    if key in _PLAIN_FAMILIES:
        return _PLAIN_FAMILIES[key]
    if key in ("generalizedu", "u"):
        builder = generalized_u
    elif key in ("generalizedv", "v"):
        builder = generalized_v_def
    else:
        raise ValueError(f"unknown sequence family: {name!r}")
    if a is None or b is None:
        raise ValueError(f"family {name!r} requires parameters a and b")
    return builder(a, b)


def generalized_v(c1, c2, j: int) -> Fraction:
    """j-th term of the V-sequence (2, c1, c1^2 + 2*c2, ...) for (c1, c2)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    c1 = ensure_fraction(c1)
    c2 = ensure_fraction(c2)
    lo, hi = Fraction(2), c1
    for _ in range(j):
        lo, hi = hi, c1 * hi + c2 * lo
    return lo


def subsequence_def(seq: SequenceDef, j: int, k: int = 0) -> SequenceDef:
    """Definition of Y_n = X_{j*n + k}, the every-j-th-term subsequence.

    Y is itself second order with coefficients (V_j, -(-c2)^j), where V_j is
    the V-sequence value for (c1, c2); its initial values are X_k and X_{j+k}.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    offset = f"+{k}" if k >= 0 else str(k)
    return SequenceDef(
        generalized_v(seq.c1, seq.c2, j),
        -rat_pow(-seq.c2, j),
        term(seq, k),
        term(seq, j + k),
        label=f"{seq.label or 'X'}[{j}n{offset}]",
    )
