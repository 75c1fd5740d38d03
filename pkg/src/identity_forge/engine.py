"""Identities as data: weighted geometric sums equated to geometric terms.

An :class:`IdentityDescriptor` asserts, for every n >= n_min,

    sum of GeometricTerm values at n  =  SumSide value at n,

where the sum side is outer_coef * outer_ratio^n * sum_{i=0..n} beta^i * (...).
The classical "t^(n-i)" presentation is stored as outer_ratio = t with
beta = 1/t, so a single evaluation loop covers every identity shape in the
catalog. Two generators produce descriptors mechanically:

* :func:`theorem1_descriptor` for normalized sequences (first term 1), with
  weight t = c1 - A_1;
* :func:`theorem2_descriptor` for arbitrary sequences and a summand offset k,
  with weight t = -c2 * X_{k-1} / X_k, valid whenever X_k and X_{k-1} are
  both nonzero (k may be negative).

Product identities of d'Ocagne and Cassini type are provided as exact
two-sided evaluations; the companion-matrix determinant gives an independent
oracle for them.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .numeric import ensure_fraction, rat_pow
from .sequences import FIBONACCI, LUCAS, SequenceDef, term


class DegenerateRatioError(ValueError):
    """The normalized-sequence generator needs t = c1 - x1 to be nonzero."""


class OffsetInvalidError(ValueError):
    """The offset generator needs X_k and X_{k-1} to both be nonzero."""


@dataclass(frozen=True)
class GeometricTerm:
    """coef * ratio^n * X_{stride*n + offset}; a pure geometric when seq is None."""

    coef: Fraction
    ratio: Fraction
    seq: SequenceDef | None = None
    stride: int = 0
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coef", ensure_fraction(self.coef))
        object.__setattr__(self, "ratio", ensure_fraction(self.ratio))
        if self.stride < 0:
            raise ValueError("stride must be >= 0")

    def value_at(self, n: int) -> Fraction:
        value = self.coef * rat_pow(self.ratio, n)
        if self.seq is not None:
            value *= term(self.seq, self.stride * n + self.offset)
        return value


@dataclass(frozen=True)
class Summand:
    """coef * X_{stride*i + offset}, evaluated at the running sum index i."""

    coef: Fraction
    seq: SequenceDef
    stride: int = 1
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coef", ensure_fraction(self.coef))
        if self.stride < 0:
            raise ValueError("stride must be >= 0")

    def value_at(self, i: int) -> Fraction:
        return self.coef * term(self.seq, self.stride * i + self.offset)


@dataclass(frozen=True)
class SumSide:
    """outer_coef * outer_ratio^n * sum_{i=0..n} beta^i * (summand values at i)."""

    outer_coef: Fraction
    outer_ratio: Fraction
    beta: Fraction
    summands: tuple[Summand, ...]

    def __post_init__(self):
        object.__setattr__(self, "outer_coef", ensure_fraction(self.outer_coef))
        object.__setattr__(self, "outer_ratio", ensure_fraction(self.outer_ratio))
        object.__setattr__(self, "beta", ensure_fraction(self.beta))
        object.__setattr__(self, "summands", tuple(self.summands))

    def inner_at(self, i: int) -> Fraction:
        return sum((s.value_at(i) for s in self.summands), Fraction(0))

    def value_at(self, n: int) -> Fraction:
        total = Fraction(0)
        weight = Fraction(1)
        for i in range(n + 1):
            total += weight * self.inner_at(i)
            weight *= self.beta
        return self.outer_coef * rat_pow(self.outer_ratio, n) * total


@dataclass(frozen=True)
class IdentityDescriptor:
    """Machine form of one identity: LHS terms = weighted sum, for n >= n_min."""

    id: str
    lhs: tuple[GeometricTerm, ...]
    rhs: SumSide
    n_min: int = 0
    citation: str = ""

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        if self.n_min < 0:
            raise ValueError("n_min must be >= 0")


def descriptor_eval(d: IdentityDescriptor, n: int) -> tuple[Fraction, Fraction]:
    """Exact values of both sides at n; the sum is computed term by term."""
    if n < d.n_min:
        raise ValueError(f"n={n} is below the descriptor's n_min={d.n_min}")
    lhs = sum((t.value_at(n) for t in d.lhs), Fraction(0))
    return lhs, d.rhs.value_at(n)


def theorem1_descriptor(a: SequenceDef) -> IdentityDescriptor:
    """Weighted-sum identity for a normalized sequence (A_0 = 1).

    Asserts A_{n+2} - A_1*A_{n+1} = (A_2 - A_1^2) * sum_{i=0..n} t^{n-i} A_i
    with t = c1 - A_1; degenerate t = 0 is rejected rather than skipped.
    """
    if a.x0 != 1:
        raise ValueError("normalized sequence required: x0 must equal 1")
    t = a.c1 - a.x1
    if t == 0:
        raise DegenerateRatioError("degenerate weight: c1 - x1 = 0")
    a1 = a.x1
    a2 = term(a, 2)
    return IdentityDescriptor(
        id=f"theorem1[{a.label or 'A'}]",
        lhs=(
            GeometricTerm(1, 1, a, 1, 2),
            GeometricTerm(-a1, 1, a, 1, 1),
        ),
        rhs=SumSide(a2 - a1 * a1, t, 1 / t, (Summand(1, a, 1, 0),)),
        n_min=0,
        citation="generated: normalized-sequence weighted sum",
    )


def theorem2_descriptor(x: SequenceDef, k: int) -> IdentityDescriptor:
    """Weighted-sum identity for an arbitrary sequence with summand offset k.

    Asserts X_0*X_{n+2} - X_1*X_{n+1}
              = ((X_0*X_2 - X_1^2) / X_k) * sum_{i=0..n} t^{n-i} X_{i+k}
    with t = -c2*X_{k-1}/X_k. Requires X_k != 0 and X_{k-1} != 0, which also
    forces t != 0 (c2 is nonzero by construction).
    """
    xk = term(x, k)
    if xk == 0:
        raise OffsetInvalidError(f"X_k = 0 at k={k}: offset violates the nonzero hypothesis")
    xk1 = term(x, k - 1)
    if xk1 == 0:
        raise OffsetInvalidError(f"X_(k-1) = 0 at k={k}: offset violates the nonzero hypothesis")
    t = -x.c2 * xk1 / xk
    outer = (x.x0 * term(x, 2) - x.x1 * x.x1) / xk
    return IdentityDescriptor(
        id=f"theorem2[{x.label or 'X'},k={k}]",
        lhs=(
            GeometricTerm(x.x0, 1, x, 1, 2),
            GeometricTerm(-x.x1, 1, x, 1, 1),
        ),
        rhs=SumSide(outer, t, 1 / t, (Summand(1, x, 1, k),)),
        n_min=0,
        citation=f"generated: offset-{k} weighted sum",
    )


def docagne_general(x: SequenceDef, k: int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the two-index product identity

    X_{n+k+2}*X_k - X_{k+1}*X_{n+k+1} = (-c2)^k * (X_{n+2}*X_0 - X_{n+1}*X_1),

    which holds for k positive, negative, or zero.
    """
    lhs = term(x, n + k + 2) * term(x, k) - term(x, k + 1) * term(x, n + k + 1)
    rhs = rat_pow(-x.c2, k) * (term(x, n + 2) * x.x0 - term(x, n + 1) * x.x1)
    return lhs, rhs


def cassini_general(x: SequenceDef, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of X_{k+2}*X_k - X_{k+1}^2 = (-c2)^k * (X_2*X_0 - X_1^2)."""
    lhs = term(x, k + 2) * term(x, k) - term(x, k + 1) ** 2
    rhs = rat_pow(-x.c2, k) * (term(x, 2) * x.x0 - x.x1 * x.x1)
    return lhs, rhs


def _fib(n: int) -> Fraction:
    return term(FIBONACCI, n)


def _luc(n: int) -> Fraction:
    return term(LUCAS, n)


def _ruggles(a: int, b: int):
    return _fib(a + b), _luc(b) * _fib(a) + rat_pow(-1, b + 1) * _fib(a - b)


def _lucas_add(a: int, b: int):
    return _luc(a + b), _luc(b) * _luc(a) + rat_pow(-1, b + 1) * _luc(a - b)


def _koshy55(j: int, n: int):
    return (
        _luc(j * (n + 2)),
        5 * _fib(j) * _fib(j * (n + 1)) - rat_pow(-1, j + 1) * _luc(j * n),
    )


def _catalan_fib(a: int, b: int, c: int):
    return (
        _fib(a + c) * _fib(b - c) - _fib(a) * _fib(b),
        rat_pow(-1, b + c + 1) * _fib(a + c - b) * _fib(c),
    )


def _lucas_fib_mixed(a: int, b: int, c: int):
    return (
        _luc(a + c) * _fib(b - c) - _luc(a) * _fib(b),
        rat_pow(-1, b + c + 1) * _luc(a + c - b) * _fib(c),
    )


def _lucas_lucas(a: int, b: int, c: int):
    return (
        _luc(a + c) * _luc(b - c) - _luc(a) * _luc(b),
        5 * rat_pow(-1, b + c) * _fib(a + c - b) * _fib(c),
    )


_CLASSICAL = {
    "ruggles": (_ruggles, 2),
    "lucas_add": (_lucas_add, 2),
    "koshy55": (_koshy55, 2),
    "catalan_fib": (_catalan_fib, 3),
    "lucas_fib_mixed": (_lucas_fib_mixed, 3),
    "lucas_lucas": (_lucas_lucas, 3),
}


def classical_eval(name: str, *args: int) -> tuple[Fraction, Fraction]:
    """Evaluate both sides of a classical Fibonacci/Lucas product identity.

    Supported names: ruggles(a, b), lucas_add(a, b), koshy55(j, n),
    catalan_fib(a, b, c), lucas_fib_mixed(a, b, c), lucas_lucas(a, b, c).
    Negative indices are fine; the contract is lhs == rhs for every input.
    """
    try:
        fn, arity = _CLASSICAL[name]
    except KeyError:
        raise ValueError(f"unknown classical identity: {name!r}") from None
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} integer arguments, got {len(args)}")
    return fn(*args)


def rewrite_scale(d: IdentityDescriptor, sigma, lam) -> IdentityDescriptor:
    """Multiply both sides by sigma * lam^n; truth is preserved for all n."""
    sigma = ensure_fraction(sigma)
    lam = ensure_fraction(lam)
    if sigma == 0 or lam == 0:
        raise ValueError("scale factors must be nonzero")
    lhs = tuple(replace(t, coef=t.coef * sigma, ratio=t.ratio * lam) for t in d.lhs)
    rhs = replace(
        d.rhs,
        outer_coef=d.rhs.outer_coef * sigma,
        outer_ratio=d.rhs.outer_ratio * lam,
    )
    return replace(d, lhs=lhs, rhs=rhs)
