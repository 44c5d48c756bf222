"""Exhaustive enumeration of signatures and smooth epimorphisms.

The search space is finite once the group order M and a genus bound are
fixed: the kernel genus p = M * measure + 2 caps the normalized measure at
(max_genus - 2)/M, which in turn bounds the quotient genus, the cycle
count and the number of periods (each period contributes at least 1/2),
while smoothness restricts every period to a divisor of M.  Those bounds
are documented in the README together with the file formats.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product

from .epimorphism import (
    CyclicEpimorphism,
    format_map_text,
    image_order,
    validate,
)
from .fixedpoints import FixedPointReport, full_report, twists_field
from .oracle import cross_check
from .signature import NecSignature, Sign, format_signature, kernel_genus, orbifold_measure


@dataclass(frozen=True)
class CensusRow:
    signature: NecSignature
    modulus: int
    epi: CyclicEpimorphism
    kernel_genus: int
    report: FixedPointReport
    scherrer_equality: bool
    canonical: bool
    shadow_key: str


def _period_multisets(divisors, budget):
    """Nondecreasing period tuples with total cost sum(1 - 1/m) <= budget."""
    yield ()
    for idx, m in enumerate(divisors):
        cost = 1 - Fraction(1, m)
        if cost <= budget:
            for rest in _period_multisets(divisors[idx:], budget - cost):
                yield (m,) + rest


def _signature_sort_key(sig):
    return (sig.sign is Sign.MINUS, sig.genus, sig.empty_cycles, len(sig.periods), sig.periods)


def enumerate_signatures(order, max_genus):
    """All signatures whose kernel genus at this order lands in [3, max_genus].

    Periods are restricted to divisors of the order (smoothness needs an
    element of that exact order in the cyclic target) and emitted sorted
    nondecreasing; only empty period cycles are generated.  Output order is
    deterministic.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    out = []
    if max_genus < 3:
        return out
    bound = Fraction(max_genus - 2, order)
    budget = bound + 2
    divisors = [m for m in range(2, order + 1) if order % m == 0]
    for sign in (Sign.PLUS, Sign.MINUS):
        alpha = 2 if sign is Sign.PLUS else 1
        genus = 0 if sign is Sign.PLUS else 1
        while alpha * genus <= budget:
            cycles = 0
            while alpha * genus + cycles <= budget:
                remaining = budget - alpha * genus - cycles
                for periods in _period_multisets(divisors, remaining):
                    sig = NecSignature(genus, sign, periods, cycles)
                    measure = orbifold_measure(sig)
                    if measure <= 0:
                        continue
                    p = order * measure + 2
                    if p.denominator == 1 and 3 <= p <= max_genus:
                        out.append(sig)
                cycles += 1
            genus += 1
    out.sort(key=_signature_sort_key)
    return out


def _iter_epimorphisms(sig, order):
    """Yield the valid assignments for one signature, in lexicographic order
    of the (x, e, orientation) image tuple."""
    if sig.nonempty_cycles:
        return
    cycles = sig.empty_cycles
    if cycles and order % 2:
        return
    x_candidates = [
        [u for u in range(order) if image_order(order, u) == m] for m in sig.periods
    ]
    if any(not c for c in x_candidates):
        return
    c_fixed = (order // 2,) * cycles
    n_orient = 2 * sig.genus if sig.sign is Sign.PLUS else sig.genus
    free = [range(order)] * (cycles + n_orient)
    for xs in product(*x_candidates):
        for rest in product(*free):
            epi = CyclicEpimorphism(
                sig, order, xs, rest[:cycles], c_fixed, rest[cycles:]
            )
            if validate(epi).valid:
                yield epi


def units(order):
    if order == 1:
        return [1]
    return [u for u in range(1, order) if math.gcd(u, order) == 1]


def _image_key(epi):
    return (*epi.x_images, *epi.e_images, *epi.orient_images)


def unit_multiple(epi, unit):
    """The assignment with every image multiplied by the given unit."""
    order = epi.modulus
    scale = lambda images: tuple(unit * v % order for v in images)
    return CyclicEpimorphism(
        epi.sig,
        order,
        scale(epi.x_images),
        scale(epi.e_images),
        scale(epi.c_images),
        scale(epi.orient_images),
    )


def is_canonical(epi):
    """True when the image tuple is lexicographically least in its orbit
    under unit multiplication (the Aut(C_M) action)."""
    key = _image_key(epi)
    return all(key <= _image_key(unit_multiple(epi, u)) for u in units(epi.modulus))


def enumerate_epimorphisms(sig, order, up_to_aut=False):
    """All valid assignments for sig onto the cyclic group of this order.

    Reflection images are pinned to order/2 (the only candidate value), so
    the search runs over the x, e and orientation images.  With up_to_aut,
    only the lexicographically least representative of each orbit under
    unit multiplication is kept.  Returns an empty list when no smooth
    epimorphism with non-orientable surface kernel exists.
    """
    epis = list(_iter_epimorphisms(sig, order))
    if up_to_aut:
        epis = [e for e in epis if is_canonical(e)]
    return epis


def shadow_key(epi):
    """Sort-normalized key identifying rows up to permuting equal periods,
    cycles and genus generators; a dedup aid for downstream tools, not an
    equivalence the census itself quotients by."""
    sig = epi.sig
    xs = ",".join(f"{m}:{u}" for m, u in sorted(zip(sig.periods, epi.x_images)))
    es = ",".join(str(v) for v in sorted(epi.e_images))
    if sig.sign is Sign.PLUS:
        pairs = sorted(zip(epi.orient_images[0::2], epi.orient_images[1::2]))
        orient = ",".join(f"{a}.{b}" for a, b in pairs)
    else:
        orient = ",".join(str(w) for w in sorted(epi.orient_images))
    return f"M{epi.modulus}|g{sig.genus}{sig.sign.value}|x[{xs}]|e[{es}]|o[{orient}]"


def _row_from_epi(epi):
    report = full_report(epi)
    return CensusRow(
        signature=epi.sig,
        modulus=epi.modulus,
        epi=epi,
        kernel_genus=report.kernel_genus,
        report=report,
        scherrer_equality=(
            report.involution.scherrer_equality if report.involution else False
        ),
        canonical=is_canonical(epi),
        shadow_key=shadow_key(epi),
    )


def rows_for_signature(sig, order, up_to_aut=False):
    return [_row_from_epi(e) for e in enumerate_epimorphisms(sig, order, up_to_aut)]


def _census_task(args):
    sig, order, up_to_aut, verify = args
    rows = rows_for_signature(sig, order, up_to_aut)
    disagreements = []
    if verify:
        for row in rows:
            transcript = cross_check(row.epi)
            if not transcript.agreement:
                disagreements.append(
                    f"{format_signature(sig)} M={order} {format_map_text(row.epi)}: "
                    + transcript.disagreements[0]
                )
    return rows, disagreements


def run_census(order, max_genus, up_to_aut=False, verify=False, workers=1):
    """Census of every valid assignment at one order up to a genus bound.

    Returns (rows, disagreements); disagreements is non-empty only when
    verify is set and an oracle path contradicts a closed-form count.
    Rows come out in deterministic order (signatures sorted, image tuples
    lexicographic) regardless of the worker count.
    """
    tasks = [(sig, order, up_to_aut, verify) for sig in enumerate_signatures(order, max_genus)]
    rows = []
    disagreements = []
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_census_task, tasks, chunksize=1))
    else:
        results = [_census_task(t) for t in tasks]
    for task_rows, task_disagreements in results:
        rows.extend(task_rows)
        disagreements.extend(task_disagreements)
    return rows, disagreements


def scherrer_extremal(order, max_genus, up_to_aut=True):
    """Census rows where the involution attains |F| + 2|V| = p + 2."""
    rows, _ = run_census(order, max_genus, up_to_aut=up_to_aut)
    return [row for row in rows if row.scherrer_equality]


def max_cyclic_order(genus, cap=12):
    """Largest cyclic-group order acting on a non-orientable surface of the
    given genus, found by descending exhaustive search from 2*genus + 2.

    The start point sits above the known maxima (2p for odd p, 2(p-1) for
    even), so the search genuinely confirms that nothing larger exists in
    that window.  The cap keeps the search affordable.
    """
    if genus < 3:
        raise ValueError(f"genus must be at least 3, got {genus}")
    if genus > cap:
        raise ValueError(f"exhaustive search is capped at genus {cap}, got {genus}")
    for order in range(2 * genus + 2, 0, -1):
        for sig in enumerate_signatures(order, genus):
            if kernel_genus(sig, order) != genus:
                continue
            if next(_iter_epimorphisms(sig, order), None) is not None:
                return order
    raise AssertionError("unreachable: the trivial group always acts")


CSV_COLUMNS = (
    "signature",
    "M",
    "images",
    "p",
    "F",
    "V",
    "twists",
    "scherrer_slack",
    "canonical",
)


class _HashingStream:
    """Write-through wrapper that hashes everything written."""

    def __init__(self, fh):
        self.fh = fh
        self.digest = hashlib.sha256()

    def write(self, text):
        self.fh.write(text)
        self.digest.update(text.encode("utf-8"))
        return len(text)


def census_row_csv(row):
    involution = row.report.involution
    if involution is None:
        fixed = ovals = twists = slack = ""
    else:
        fixed = str(involution.isolated_total)
        ovals = str(involution.oval_total)
        twists = twists_field(row.report)
        slack = str(involution.scherrer_rhs - involution.scherrer_lhs)
    return [
        format_signature(row.signature),
        str(row.modulus),
        format_map_text(row.epi),
        str(row.kernel_genus),
        fixed,
        ovals,
        twists,
        slack,
        "true" if row.canonical else "false",
    ]


def census_row_record(row):
    return {
        "signature": format_signature(row.signature),
        "modulus": row.modulus,
        "images": format_map_text(row.epi),
        "kernel_genus": row.kernel_genus,
        "scherrer_equality": row.scherrer_equality,
        "canonical": row.canonical,
        "shadow_key": row.shadow_key,
        "report": asdict(row.report),
    }


def write_census_csv(rows, fh):
    """Stream rows as CSV, then a trailer record with the row count and the
    sha256 of all preceding bytes."""
    stream = _HashingStream(fh)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    count = 0
    for row in rows:
        writer.writerow(census_row_csv(row))
        count += 1
    trailer = csv.writer(fh, lineterminator="\n")
    trailer.writerow(["#trailer", f"rows={count}", f"sha256={stream.digest.hexdigest()}"])
    return count


def write_census_jsonl(rows, fh):
    """Stream rows as JSON lines, then a trailer object (same checksum idea)."""
    stream = _HashingStream(fh)
    count = 0
    for row in rows:
        stream.write(json.dumps(census_row_record(row), sort_keys=True) + "\n")
        count += 1
    fh.write(
        json.dumps(
            {"rows": count, "sha256": stream.digest.hexdigest(), "type": "trailer"},
            sort_keys=True,
        )
        + "\n"
    )
    return count
