"""Systems of arithmetic sequences, covering functions, and window criteria.

The central objects are a :class:`System` of weighted residue classes and
its covering function w(x) = sum of weights over the sequences containing x.
w is periodic mod the lcm of the moduli, but the point of this module is
that its key properties are decidable from a far shorter window of
consecutive integers:

* a sum of periodic maps vanishes everywhere iff it vanishes on a window
  whose length is a totient sum over the moduli's divisors
  (:func:`window_zero_check`);
* equality of w with any candidate periodic function follows from equality
  on such a window (:func:`verify_covering_function`), which also decides
  exact m-covers;
* cover-by-zero-sets criteria and minimum-location windows come from subset
  sumsets of the moduli reciprocals (:func:`expsum_cover_check`,
  :func:`min_on_window`);
* the least period of a weighted covering function is read off from which
  exact cyclotomic coefficients survive (:func:`least_period`).

Weights are exact rationals (not arbitrary complex numbers): every "is this
coefficient zero" verdict then stays inside Q(zeta_N) where it is decidable
exactly.  Full-period scans go through the int64 kernels in
:mod:`coverkit._kernels` whenever the scaled values provably fit, and fall
back to big-integer arithmetic otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .cyclotomic import CyclotomicElement, root_power
from .fracsets import (
    SUBSET_ENUMERATION_CAP,
    FractionSet,
    fraction_set,
    multiples_set,
    phi_sum_cardinality,
    subset_sum_set,
    window_bound,
)
from .numtheory import f_additive, lcm_all, least_prime_factor

DEFAULT_ORACLE_CAP = 10**6

# scaled table values must stay clear of int64 overflow before the fast
# kernels may be used
_INT64_GUARD = 2**62

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "WeightedSequence",
    "System",
    "PeriodicValueTable",
    "Verdict",
    "ExpSumSequence",
    "cover_count",
    "cover_values",
    "cover_scaled",
    "cover_table",
    "first_mismatch",
    "sum_tables_window",
    "tables_scaled",
    "window_zero_check",
    "verify_covering_function",
    "is_exact_m_cover",
    "non_exact_witness",
    "expsum_cover_check",
    "min_on_window",
    "least_period",
    "weighted_average_check",
    "zero_system_coefficients",
    "equal_cover_superset_check",
]


@dataclass(frozen=True)
class WeightedSequence:
    """Residue class a(n) = {a + n*x} carrying an exact rational weight."""

    residue: int
    modulus: int
    weight: Fraction = Fraction(1)

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)
        object.__setattr__(self, "weight", Fraction(self.weight))

    def contains(self, x: int) -> bool:
        return (x - self.residue) % self.modulus == 0

    def __str__(self) -> str:
        base = f"{self.residue}({self.modulus})"
        return base if self.weight == 1 else f"{base}*{self.weight}"


@dataclass(frozen=True)
class System:
    """Nonempty finite family of weighted arithmetic sequences."""

    seqs: tuple[WeightedSequence, ...]

    def __post_init__(self):
        object.__setattr__(self, "seqs", tuple(self.seqs))
        if not self.seqs:
            raise ValueError("a system needs at least one sequence")

    @classmethod
    def of(cls, *entries: tuple) -> System:
        """Build from (residue, modulus) or (residue, modulus, weight) tuples."""
        return cls(tuple(WeightedSequence(*e) for e in entries))

    @property
    def k(self) -> int:
        return len(self.seqs)

    @property
    def moduli(self) -> list[int]:
        return [s.modulus for s in self.seqs]

    def lcm(self) -> int:
        return lcm_all(self.moduli)

    def is_unweighted(self) -> bool:
        return all(s.weight == 1 for s in self.seqs)


def _is_prime(p: int) -> bool:
    return p > 1 and least_prime_factor(p) == p


@dataclass(frozen=True)
class PeriodicValueTable:
    """Periodic map Z -> F given by one period of values.

    ``char`` 0 means F = Q (values are ints or Fractions); a prime p means
    F = F_p (values are reduced into [0, p) at construction).
    """

    period: int
    values: tuple
    char: int = 0

    def __post_init__(self):
        if self.period < 1:
            raise ValueError(f"period must be positive, got {self.period}")
        if len(self.values) != self.period:
            raise ValueError(f"need {self.period} values, got {len(self.values)}")
        if self.char:
            if not _is_prime(self.char):
                raise ValueError(f"characteristic must be 0 or prime, got {self.char}")
            object.__setattr__(self, "values", tuple(int(v) % self.char for v in self.values))
        else:
            object.__setattr__(self, "values", tuple(self.values))

    @classmethod
    def constant(cls, value, period: int = 1, char: int = 0) -> PeriodicValueTable:
        return cls(period, (value,) * period, char)

    def value_at(self, x: int):
        return self.values[x % self.period]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check; ``witness`` locates the first failure when not ok."""

    ok: bool
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# covering function evaluation


def cover_count(system: System, x: int) -> Fraction:
    """w(x): exact sum of the weights of the sequences containing x."""
    return sum((s.weight for s in system.seqs if s.contains(x)), Fraction(0))


def _scaled_weights(seqs: Sequence[WeightedSequence]) -> tuple[list[int], int]:
    D = math.lcm(*(s.weight.denominator for s in seqs))
    return [int(s.weight * D) for s in seqs], D


def cover_scaled(system: System, start: int, length: int):
    """(int64 array of D*w(x) for x in the window, denominator D), or None
    when the scaled weights might not fit int64."""
    nums, D = _scaled_weights(system.seqs)
    big = max(abs(start), abs(start + length)) if length else abs(start)
    if sum(abs(w) for w in nums) >= _INT64_GUARD or big >= _INT64_GUARD:
        return None
    arr = _kernels.cover_counts(
        [s.residue for s in system.seqs], system.moduli, nums, start, length
    )
    return arr, D


def cover_values(system: System, start: int, length: int) -> tuple:
    """Exact values of w(x) for x in [start, start+length).

    Integers for unweighted systems, Fractions otherwise.  Uses the fast
    int64 kernels when the scaled weights provably fit.
    """
    scaled = cover_scaled(system, start, length)
    if scaled is not None:
        arr, D = scaled
        if D == 1:
            return tuple(int(v) for v in arr)
        return tuple(Fraction(int(v), D) for v in arr)
    # big-integer fallback, exact for any weights
    out = [Fraction(0)] * length
    for s in system.seqs:
        first = (s.residue - start) % s.modulus
        for j in range(first, length, s.modulus):
            out[j] += s.weight
    return tuple(out)


def cover_table(system: System, cap: int = DEFAULT_ORACLE_CAP) -> PeriodicValueTable:
    """Covering function over one full period N = lcm of the moduli."""
    N = system.lcm()
    if N > cap:
        raise ValueError(f"period too large: lcm {N} exceeds cap {cap}")
    return PeriodicValueTable(N, cover_values(system, 0, N))


# ---------------------------------------------------------------------------
# window criterion for vanishing sums of periodic maps


def _common_char(psis: Sequence[PeriodicValueTable]) -> int:
    chars = {t.char for t in psis}
    if len(chars) != 1:
        raise ValueError("tables must live over one common field")
    return chars.pop()


def tables_scaled(psis: Sequence[PeriodicValueTable], start: int, length: int):
    """(int64 array of scaled sums of the tables over the window, denominator),
    or None when the scaled values might not fit int64.  Sums over F_p come
    back reduced mod p with denominator 1."""
    char = _common_char(psis)
    periods = [t.period for t in psis]
    if char:
        flat, offs = [], []
        for t in psis:
            offs.append(len(flat))
            flat.extend(t.values)
        return _kernels.table_sums(flat, offs, periods, start, length, char), 1
    vals = [tuple(Fraction(v) for v in t.values) for t in psis]
    D = math.lcm(*(v.denominator for t in vals for v in t))
    flat, offs = [], []
    for t in vals:
        offs.append(len(flat))
        flat.extend(int(v * D) for v in t)
    big = max(abs(start), abs(start + length)) if length else abs(start)
    if max(abs(v) for v in flat) * len(psis) >= _INT64_GUARD or big >= _INT64_GUARD:
        return None
    return _kernels.table_sums(flat, offs, periods, start, length, 0), D


def sum_tables_window(psis: Sequence[PeriodicValueTable], start: int, length: int) -> list:
    """Exact values of sum_s psi_s(x) for x in [start, start+length).

    All tables must share one field; sums over F_p come back reduced mod p.
    """
    scaled = tables_scaled(psis, start, length)
    if scaled is not None:
        arr, D = scaled
        if D == 1:
            return [int(v) for v in arr]
        return [Fraction(int(v), D) for v in arr]
    return [
        sum((t.value_at(x) for t in psis), Fraction(0))
        for x in range(start, start + length)
    ]


def window_zero_check(
    psis: Sequence[PeriodicValueTable],
    start: int = 0,
    *,
    enforce_field_hypothesis: bool = True,
) -> Verdict:
    """Decide whether sum_s psi_s vanishes identically from one short window.

    The window length is the totient sum over the union of the divisor sets
    of the periods; vanishing there certifies vanishing on all of Z.  Over
    F_p the criterion requires p to divide no period, and violating inputs
    are rejected.  Passing ``enforce_field_hypothesis=False`` runs the
    (unguaranteed) window comparison anyway — exploratory use only, the
    certificate is void.
    """
    if not psis:
        raise ValueError("need at least one periodic map")
    chars = {t.char for t in psis}
    if len(chars) != 1:
        raise ValueError("tables must live over one common field")
    char = chars.pop()
    if char and enforce_field_hypothesis:
        for t in psis:
            if t.period % char == 0:
                raise ValueError(
                    f"characteristic divides period: p={char} divides n={t.period}"
                )
    L = phi_sum_cardinality([t.period for t in psis])
    vals = sum_tables_window(psis, start, L)
    for i, v in enumerate(vals):
        if v != 0:
            return Verdict(False, start + i)
    return Verdict(True)


# ---------------------------------------------------------------------------
# covering-function verification from a window


def first_mismatch(
    system: System, target: PeriodicValueTable, start: int, length: int
) -> int | None:
    """Least x in [start, start+length) with w(x) != target(x), or None."""
    if target.char != 0:
        raise ValueError("target must be rational-valued")
    scaled = cover_scaled(system, start, length)
    if scaled is not None:
        arr, D = scaled
        tnums = [Fraction(v) * D for v in target.values]
        if (
            all(t.denominator == 1 for t in tnums)
            and max((abs(int(t)) for t in tnums), default=0) < _INT64_GUARD
        ):
            tarr = np.asarray([int(t) for t in tnums], dtype=np.int64)
            idx = np.arange(start, start + length, dtype=np.int64) % target.period
            diff = arr != tarr[idx]
            if diff.any():
                return start + int(diff.argmax())
            return None
    for i, v in enumerate(cover_values(system, start, length)):
        if v != target.value_at(start + i):
            return start + i
    return None


def verify_covering_function(
    system: System, target: PeriodicValueTable, start: int = 0
) -> Verdict:
    """Check w(x) = target(x) on a window that certifies equality on all of Z.

    The window length is |union over {target period} + moduli of the sets
    {r/n}|; the system must be unweighted (weight 1 everywhere) and the
    target rational-valued.
    """
    if not system.is_unweighted():
        raise ValueError("covering-function verification expects an unweighted system")
    L = phi_sum_cardinality(system.moduli + [target.period])
    x = first_mismatch(system, target, start, L)
    return Verdict(True) if x is None else Verdict(False, x)


def is_exact_m_cover(system: System, m: int) -> bool:
    """True iff every integer is covered exactly m times."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return verify_covering_function(system, PeriodicValueTable.constant(m)).ok


def non_exact_witness(system: System, m: int) -> int:
    """Some x in [0, |S|) with w(x) != m, where S is the union of the
    fraction sets {r/n} of the moduli.

    Such an x is guaranteed whenever m exceeds k - f(lcm of moduli) with f
    the additive function valued p-1 on primes; smaller m is rejected.
    """
    if not system.is_unweighted():
        raise ValueError("witness search expects an unweighted system")
    N = system.lcm()
    bound = system.k - f_additive(N)
    if m <= bound:
        raise ValueError(f"hypothesis not met: need m > k - f(N) = {bound}, got m={m}")
    size = phi_sum_cardinality(system.moduli)
    for x, w in enumerate(cover_values(system, 0, size)):
        if w != m:
            return x
    raise AssertionError("no witness in the window; this contradicts the guarantee")


# ---------------------------------------------------------------------------
# cover criteria for zero sets of exponential sums


@dataclass(frozen=True)
class ExpSumSequence:
    """Zero set X = {x : sum_t c_t * e^(2*pi*i*t*x/n) = 0} of an exponential
    sum with exact cyclotomic coefficients."""

    modulus: int
    terms: tuple[tuple[int, CyclotomicElement], ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "terms", tuple(self.terms))

    @classmethod
    def from_arith_sequence(cls, seq: WeightedSequence, multiplier: int = 1) -> ExpSumSequence:
        """Two-term instance whose zero set is exactly the residue class of
        ``seq``: coefficients 1 and -zeta_n^(-a*multiplier) at term indices 0
        and ``multiplier``.  Requires gcd(multiplier, modulus) = 1."""
        n = seq.modulus
        if math.gcd(multiplier, n) != 1:
            raise ValueError(f"multiplier {multiplier} not coprime to modulus {n}")
        c0 = CyclotomicElement.constant(1, 1)
        c1 = -root_power(n, -seq.residue * multiplier)
        return cls(n, ((0, c0), (multiplier % n, c1)))

    def term_fractions(self) -> FractionSet:
        return fraction_set(Fraction(t, self.modulus) for t, _ in self.terms)

    def membership_table(self) -> tuple[bool, ...]:
        """Zero-set indicator over one period (x enters only via x mod n)."""
        level = math.lcm(self.modulus, *(c.level for _, c in self.terms))
        step = level // self.modulus
        out = []
        for x in range(self.modulus):
            total = CyclotomicElement.zero(level)
            for t, c in self.terms:
                total = total + c.lift(level) * root_power(level, step * t * x)
            out.append(total.is_zero())
        return tuple(out)


def expsum_cover_check(
    exp_seqs: Sequence[ExpSumSequence],
    m: int,
    start: int = 0,
    subset_cap: int = SUBSET_ENUMERATION_CAP,
) -> Verdict:
    """Certify that the zero sets cover every integer at least m times.

    The window length is the largest sumset cardinality of the term-fraction
    sets over index subsets of size k-m+1; covering that many consecutive
    integers at least m times covers all of Z at least m times.
    """
    k = len(exp_seqs)
    if not 1 <= m <= k:
        raise ValueError(f"m must lie in [1, {k}], got {m}")
    W = window_bound([es.term_fractions() for es in exp_seqs], m, subset_cap)
    tables = [es.membership_table() for es in exp_seqs]
    for x in range(start, start + W):
        hits = sum(tab[x % es.modulus] for es, tab in zip(exp_seqs, tables))
        if hits < m:
            return Verdict(False, x)
    return Verdict(True)


# ---------------------------------------------------------------------------
# location of the covering-function minimum


def min_on_window(
    system: System,
    multipliers: Sequence[int],
    l: int,
    start: int = 0,
    cap: int = DEFAULT_ORACLE_CAP,
    subset_cap: int = SUBSET_ENUMERATION_CAP,
) -> tuple[int, int, int]:
    """(window length W_l, min of w on [start, start+W_l), global min of w).

    W_l is the largest number of distinct fractional parts of subset sums of
    m_s/n_s over index subsets of size k-l; the covering function attains
    its global minimum on every W_l consecutive integers, so the two minima
    returned are always equal.  Each multiplier must be coprime to its
    modulus, and l may not exceed the global minimum.
    """
    if not system.is_unweighted():
        raise ValueError("minimum-window search expects an unweighted system")
    if len(multipliers) != system.k:
        raise ValueError("need one multiplier per sequence")
    for ms, seq in zip(multipliers, system.seqs):
        if math.gcd(ms, seq.modulus) != 1:
            raise ValueError(f"multiplier {ms} not coprime to modulus {seq.modulus}")
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    table = cover_table(system, cap)
    global_min = min(table.values)
    if l > global_min:
        raise ValueError(f"l={l} exceeds the minimum coverage {global_min}")
    if l == system.k:
        W_l = 1
    else:
        R_sets = [
            fraction_set([0, Fraction(ms, seq.modulus)])
            for ms, seq in zip(multipliers, system.seqs)
        ]
        W_l = window_bound(R_sets, l + 1, subset_cap)
    window_min = min(cover_values(system, start, W_l))
    assert window_min == global_min, "window missed the global minimum"
    return W_l, window_min, global_min


# ---------------------------------------------------------------------------
# least period and the coefficients that determine it


def _coefficient(system: System, alpha: Fraction) -> CyclotomicElement:
    # c_alpha = sum over {s : alpha*n_s integral} of (weight/n) * zeta_q^(p*a),
    # built directly at level q = denominator(alpha)
    q, p = alpha.denominator, alpha.numerator
    c = CyclotomicElement.zero(q)
    for seq in system.seqs:
        if (alpha * seq.modulus).denominator == 1:
            c = c + root_power(q, p * seq.residue) * Fraction(seq.weight, seq.modulus)
    return c


def least_period(system: System) -> int:
    """Smallest positive period of the weighted covering function.

    Equals the least n making alpha*n integral for every alpha in [0,1)
    whose coefficient c_alpha is nonzero; concretely the lcm of the
    denominators of the surviving alphas (1 when none survive).
    """
    result = 1
    for alpha in multiples_set(system.moduli):
        if not _coefficient(system, alpha).is_zero():
            result = math.lcm(result, alpha.denominator)
    return result


def weighted_average_check(system: System, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Verify the exact identity (1/N) * sum of w over a period = sum of
    weight/modulus."""
    table = cover_table(system, cap)
    lhs = sum(map(Fraction, table.values), Fraction(0)) / table.period
    rhs = sum((Fraction(s.weight, s.modulus) for s in system.seqs), Fraction(0))
    return lhs == rhs


def zero_system_coefficients(
    system: System, cap: int = DEFAULT_ORACLE_CAP
) -> list[tuple[Fraction, CyclotomicElement]]:
    """All (alpha, c_alpha) pairs of a system whose covering function is
    identically zero; every coefficient is asserted to vanish."""
    table = cover_table(system, cap)
    if any(v != 0 for v in table.values):
        raise ValueError("covering function is not identically zero")
    out = []
    for alpha in multiples_set(system.moduli):
        c = _coefficient(system, alpha)
        assert c.is_zero(), f"nonzero coefficient at alpha={alpha} for a zero system"
        out.append((alpha, c))
    return out


def equal_cover_superset_check(system: System, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """For a system covering all integers equally often, check that the
    subset sums of the reciprocals 1/n cover every fraction r/n (mod 1)."""
    if not system.is_unweighted():
        raise ValueError("superset check expects an unweighted system")
    table = cover_table(system, cap)
    if any(v != table.values[0] for v in table.values):
        raise ValueError("system does not cover all integers equally often")
    sums = set(subset_sum_set([Fraction(1, n) for n in system.moduli]))
    return sums.issuperset(multiples_set(system.moduli))
