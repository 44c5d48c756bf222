"""Fixed points, ovals and twist types of a validated cyclic action.

For a cyclic action of order M = 2N on a closed non-orientable surface,
every non-involution power t^i has a finite set of isolated fixed points
whose size depends only on the signature.  The involution t^N additionally
fixes disjoint simple closed curves (ovals), each lying on a Moebius band
(twisted) or an annulus (untwisted) neighbourhood; their number and types
depend on the connecting-generator images.  Everything here is closed form;
the `oracle` module recomputes the same numbers by brute force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .epimorphism import validate


@dataclass(frozen=True)
class PowerFixedPoints:
    """Isolated fixed-point count of t^i, where t^i has the given order."""

    i: int
    order: int
    isolated_count: int


@dataclass(frozen=True)
class CycleOvals:
    """Ovals contributed by one period cycle with connecting image t^v."""

    v: int
    oval_count: int
    twisted: bool


@dataclass(frozen=True)
class InvolutionReport:
    oval_total: int
    isolated_total: int
    per_cycle: tuple[CycleOvals, ...]
    scherrer_lhs: int
    scherrer_rhs: int
    scherrer_equality: bool


@dataclass(frozen=True)
class FixedPointReport:
    modulus: int
    kernel_genus: int
    per_power: tuple[PowerFixedPoints, ...]
    involution: InvolutionReport | None


class ScherrerStatus(NamedTuple):
    holds: bool
    slack: int
    equality: bool


def isolated_fixed_points(sig, order, i):
    """Number of isolated fixed points of t^i, for t of the given order.

    If t^i has order d, the count is order * sum(1/m_j) over the proper
    periods m_j divisible by d; each qualifying period contributes the
    integer order/m_j.  The count never depends on the generator images.
    Undefined for t^i the identity (i divisible by the order).
    """
    i %= order
    if i == 0:
        raise ValueError("t^i is the identity; its fixed-point set is the whole surface")
    d = order // math.gcd(order, i)
    return sum(order // m for m in sig.periods if m % d == 0)


def _require_involution(epi):
    report = validate(epi)
    if not report.valid:
        raise ValueError(f"invalid epimorphism (failed checks: {', '.join(report.failed())})")
    if epi.modulus % 2:
        raise ValueError(f"order {epi.modulus} is odd; the action has no involution")
    return report


def oval_count(epi):
    """Total ovals of the involution t^N: sum of gcd(N, v_j) over cycles."""
    _require_involution(epi)
    half = epi.modulus // 2
    return sum(math.gcd(half, v) for v in epi.e_images)


def twist_classification(epi):
    """Per-cycle (oval count, twisted?) for the involution t^N.

    The j-th cycle contributes gcd(N, v_j) ovals; they are twisted exactly
    when gcd(2N, v_j) = gcd(N, v_j), untwisted when it is twice that.
    """
    _require_involution(epi)
    order = epi.modulus
    half = order // 2
    out = []
    for v in epi.e_images:
        count = math.gcd(half, v)
        out.append((count, math.gcd(order, v) == count))
    return out


def scherrer_check(fixed, ovals, genus):
    """Status of |F| + 2|V| <= p + 2 for an involution of a genus-p surface."""
    slack = genus + 2 - fixed - 2 * ovals
    return ScherrerStatus(slack >= 0, slack, slack == 0)


def full_report(epi):
    """Complete fixed-point data of the action defined by a valid epi.

    The per-power table covers every i in [1, order); the involution block
    is present exactly when the order is even.
    """
    report = validate(epi)
    if not report.valid:
        raise ValueError(f"invalid epimorphism (failed checks: {', '.join(report.failed())})")
    sig = epi.sig
    order = epi.modulus
    genus = report.kernel_genus
    per_power = tuple(
        PowerFixedPoints(i, order // math.gcd(order, i), isolated_fixed_points(sig, order, i))
        for i in range(1, order)
    )
    involution = None
    if order % 2 == 0:
        half = order // 2
        per_cycle = tuple(
            CycleOvals(v, math.gcd(half, v), math.gcd(order, v) == math.gcd(half, v))
            for v in epi.e_images
        )
        ovals = sum(c.oval_count for c in per_cycle)
        fixed = isolated_fixed_points(sig, order, half)
        status = scherrer_check(fixed, ovals, genus)
        involution = InvolutionReport(
            oval_total=ovals,
            isolated_total=fixed,
            per_cycle=per_cycle,
            scherrer_lhs=fixed + 2 * ovals,
            scherrer_rhs=genus + 2,
            scherrer_equality=status.equality,
        )
    return FixedPointReport(order, genus, per_power, involution)


def twists_field(report):
    """Flatten per-cycle twist data to "c1:2u;c2:1t" for census CSV rows."""
    if report.involution is None:
        return ""
    return ";".join(
        f"c{j + 1}:{c.oval_count}{'t' if c.twisted else 'u'}"
        for j, c in enumerate(report.involution.per_cycle)
    )
