"""Brute-force re-derivation of every count, independent of the gcd formulas.

All computation happens in the finite quotient Z_M (M = 2N); the subgroup
Lambda lying over the involution is represented as {0, N}.  Oval classes
are counted two independent ways, neither using gcd:

  * double cosets: the conjugacy classes of a reflection inside Lambda
    biject with the cosets of the subgroup generated by {N, v} in Z_M,
    found by closure enumeration;
  * exponents: delta = least d with d*v in {0, N} and epsilon = least d
    with d*v = 0, found by incremental search; the class count is N/delta
    and the oval is twisted exactly when epsilon = 2*delta.

Isolated fixed points are recounted by enumerating the cosets of the
subgroup generated by each elliptic image and checking which cosets the
translation by i fixes, with no divisibility shortcut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .epimorphism import image_order, subgroup_generated, validate
from .fixedpoints import isolated_fixed_points, twist_classification


@dataclass(frozen=True)
class CycleTranscript:
    v: int
    delta: int
    epsilon: int
    class_count_doublecoset: int
    class_count_exponent: int
    twisted_by_theta_prime: bool


@dataclass(frozen=True)
class PowerCosetCount:
    i: int
    period_index: int
    fixed_cosets: int


@dataclass(frozen=True)
class OracleTranscript:
    modulus: int
    per_cycle: tuple[CycleTranscript, ...]
    per_power_fixed: tuple[PowerCosetCount, ...]
    agreement: bool
    disagreements: tuple[str, ...] = ()


@dataclass(frozen=True)
class SweepEntry:
    v: int
    delta: int
    epsilon: int
    class_count_doublecoset: int
    class_count_exponent: int
    twisted_oracle: bool
    oval_formula: int
    twisted_formula: bool


@dataclass(frozen=True)
class SweepTranscript:
    modulus: int
    entries: tuple[SweepEntry, ...]
    agreement: bool
    disagreements: tuple[str, ...] = ()


def _require_even(order):
    if order % 2:
        raise ValueError(f"order {order} is odd; the action has no involution")


def oval_classes_doublecoset(order, v):
    """Class count via double cosets: index of <N, v> in Z_M by closure."""
    _require_even(order)
    return order // len(subgroup_generated(order, [order // 2, v]))


def exponents(order, v):
    """(delta, epsilon) for a connecting image t^v, by incremental search.

    delta is the least d >= 1 with d*v in {0, N} (the exponent landing in
    Lambda), epsilon the least with d*v = 0 (landing in the kernel).
    """
    _require_even(order)
    half = order // 2
    v %= order
    delta = epsilon = None
    multiple = 0
    d = 0
    while epsilon is None:
        d += 1
        multiple = (multiple + v) % order
        if delta is None and multiple in (0, half):
            delta = d
        if multiple == 0:
            epsilon = d
    assert half % delta == 0 and order % epsilon == 0
    return delta, epsilon


def twist_oracle(order, v):
    """Twisted iff the delta-th power of the connecting element maps to the
    involution, i.e. epsilon = 2*delta."""
    delta, epsilon = exponents(order, v)
    return epsilon == 2 * delta


def _fixed_cosets(order, u, i):
    """Cosets of <u> in Z_M fixed by translation by i, counted explicitly."""
    subgroup = set(subgroup_generated(order, [u]))
    seen = set()
    fixed = 0
    for c in range(order):
        if c in seen:
            continue
        coset = {(c + h) % order for h in subgroup}
        seen |= coset
        if (c + i) % order in coset:
            fixed += 1
    return fixed


def coset_orbit_fixed_points(sig, order, x_images, i):
    """Isolated fixed points of t^i recounted from the cone-point fibres.

    The points over the j-th cone point form the coset space Z_M/<u_j>
    with t acting by translation; a point is fixed by t^i exactly when its
    coset is.  Requires smoothness (each u_j of order m_j).
    """
    if len(x_images) != len(sig.periods):
        raise ValueError(f"expected {len(sig.periods)} elliptic images, got {len(x_images)}")
    for m, u in zip(sig.periods, x_images):
        if image_order(order, u) != m:
            raise ValueError(
                f"smoothness violation: image {u} has order {image_order(order, u)}, period is {m}"
            )
    i %= order
    if i == 0:
        raise ValueError("t^i is the identity; its fixed-point set is the whole surface")
    return sum(_fixed_cosets(order, u, i) for u in x_images)


def cross_check(epi):
    """Run every oracle path against the closed-form counts for one action."""
    report = validate(epi)
    if not report.valid:
        raise ValueError(f"invalid epimorphism (failed checks: {', '.join(report.failed())})")
    sig = epi.sig
    order = epi.modulus
    disagreements = []

    per_cycle = []
    if sig.empty_cycles:
        half = order // 2
        formula = twist_classification(epi)
        for j, v in enumerate(epi.e_images):
            delta, epsilon = exponents(order, v)
            doublecoset = oval_classes_doublecoset(order, v)
            by_exponent = half // delta
            twisted = twist_oracle(order, v)
            per_cycle.append(
                CycleTranscript(v, delta, epsilon, doublecoset, by_exponent, twisted)
            )
            count_formula, twisted_formula = formula[j]
            if not (doublecoset == by_exponent == count_formula):
                disagreements.append(
                    f"cycle {j + 1} (v={v}): double-coset {doublecoset}, "
                    f"N/delta {by_exponent}, gcd formula {count_formula}"
                )
            if twisted != twisted_formula:
                disagreements.append(
                    f"cycle {j + 1} (v={v}): twist oracle {twisted}, gcd criterion {twisted_formula}"
                )

    per_power = []
    for i in range(1, order):
        counts = [_fixed_cosets(order, u, i) for u in epi.x_images]
        per_power.extend(
            PowerCosetCount(i, j, count) for j, count in enumerate(counts)
        )
        total = sum(counts)
        expected = isolated_fixed_points(sig, order, i)
        if total != expected:
            disagreements.append(f"power {i}: coset count {total}, formula {expected}")

    return OracleTranscript(
        order,
        tuple(per_cycle),
        tuple(per_power),
        not disagreements,
        tuple(disagreements),
    )


def involution_sweep(order):
    """Exhaustive oracle-vs-formula comparison for every v in [0, order).

    Checks, for each v: the double-coset count, N/delta and gcd(N, v) agree;
    epsilon is delta or 2*delta; the twist oracle matches the gcd criterion
    gcd(2N, v) = gcd(N, v).
    """
    _require_even(order)
    half = order // 2
    entries = []
    disagreements = []
    for v in range(order):
        delta, epsilon = exponents(order, v)
        doublecoset = oval_classes_doublecoset(order, v)
        by_exponent = half // delta
        twisted = twist_oracle(order, v)
        oval_formula = math.gcd(half, v)
        twisted_formula = math.gcd(order, v) == math.gcd(half, v)
        entries.append(
            SweepEntry(
                v, delta, epsilon, doublecoset, by_exponent, twisted, oval_formula, twisted_formula
            )
        )
        if not (doublecoset == by_exponent == oval_formula):
            disagreements.append(
                f"v={v}: double-coset {doublecoset}, N/delta {by_exponent}, gcd {oval_formula}"
            )
        if epsilon not in (delta, 2 * delta):
            disagreements.append(f"v={v}: epsilon {epsilon} not in {{delta, 2*delta}}")
        if twisted != twisted_formula:
            disagreements.append(
                f"v={v}: twist oracle {twisted}, gcd criterion {twisted_formula}"
            )
    return SweepTranscript(order, tuple(entries), not disagreements, tuple(disagreements))
