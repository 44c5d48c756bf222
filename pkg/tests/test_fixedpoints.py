import math

import pytest

from necfix import (
    CyclicEpimorphism,
    full_report,
    isolated_fixed_points,
    oval_count,
    parse_map_text,
    parse_signature,
    scherrer_check,
    twist_classification,
)
from necfix.fixedpoints import twists_field

EXAMPLE1_ODD = parse_signature("(0;+;[2,7];{()})")
EXAMPLE1_EVEN = parse_signature("(0;+;[2,10];{()})")
EXAMPLE2 = parse_signature("(0;+;[2,2,4,4];{()})")


def example1_odd_epi():
    return parse_map_text(EXAMPLE1_ODD, 14, "x=7,2;e=5")


def example1_even_epi():
    return parse_map_text(EXAMPLE1_EVEN, 10, "x=5,1;e=4")


def example2_epi(cycles=1):
    sig = parse_signature("(0;+;[2,2,4,4];" + "{" + "()" * cycles + "})")
    return parse_map_text(sig, 4, "x=2,2,1,3;e=" + ",".join("0" * cycles))


# Valid map with no period cycles on an even-order group: two glides whose
# images differ by an odd amount keep the kernel non-orientable.
def no_cycle_epi():
    sig = parse_signature("(2;-;[3];{})")
    return parse_map_text(sig, 6, "x=2;d=1,4")


@pytest.mark.parametrize(
    "sig, order, i, expected",
    [
        (EXAMPLE1_ODD, 14, 7, 7),
        (EXAMPLE2, 4, 2, 6),
        (EXAMPLE1_ODD, 14, 2, 2),
        (EXAMPLE1_ODD, 14, 1, 0),
    ],
)
def test_isolated_fixed_points(sig, order, i, expected):
    assert isolated_fixed_points(sig, order, i) == expected


def test_isolated_fixed_points_rejects_identity():
    with pytest.raises(ValueError, match="identity"):
        isolated_fixed_points(EXAMPLE1_ODD, 14, 0)
    with pytest.raises(ValueError, match="identity"):
        isolated_fixed_points(EXAMPLE1_ODD, 14, 28)


def test_oval_count_examples():
    assert oval_count(example1_odd_epi()) == 1
    assert oval_count(example2_epi(cycles=2)) == 4
    assert oval_count(no_cycle_epi()) == 0


def test_oval_count_rejects_invalid():
    epi = parse_map_text(EXAMPLE1_ODD, 14, "x=7,3;e=4")
    with pytest.raises(ValueError, match="SMOOTH-ELLIPTIC"):
        oval_count(epi)


def test_oval_count_rejects_odd_order():
    sig = parse_signature("(3;-;[];{})")
    epi = parse_map_text(sig, 3, "d=1,1,1")
    with pytest.raises(ValueError, match="odd"):
        oval_count(epi)


def test_twist_classification_examples():
    assert twist_classification(example1_odd_epi()) == [(1, True)]
    assert twist_classification(example1_even_epi()) == [(1, False)]
    assert twist_classification(example2_epi()) == [(2, False)]


def test_twist_dichotomy_exhaustive():
    # gcd(2N, v) is gcd(N, v) or twice it; never anything else.
    for half in range(1, 51):
        for v in range(2 * half):
            g1 = math.gcd(half, v)
            g2 = math.gcd(2 * half, v)
            assert g2 in (g1, 2 * g1)


def test_full_report_example1():
    report = full_report(example1_odd_epi())
    inv = report.involution
    assert report.kernel_genus == 7
    assert inv.isolated_total == 7
    assert inv.oval_total == 1
    assert inv.per_cycle[0].twisted
    assert inv.scherrer_lhs == inv.scherrer_rhs == 9
    assert inv.scherrer_equality


def test_full_report_example2():
    report = full_report(example2_epi())
    inv = report.involution
    assert report.kernel_genus == 8
    assert inv.isolated_total == 6
    assert inv.oval_total == 2
    assert not inv.per_cycle[0].twisted
    assert inv.scherrer_equality


def test_full_report_fixed_point_free_involution():
    report = full_report(no_cycle_epi())
    inv = report.involution
    assert inv.isolated_total == 0
    assert inv.oval_total == 0
    assert not inv.scherrer_equality


def test_full_report_covers_every_power():
    report = full_report(example1_odd_epi())
    assert [row.i for row in report.per_power] == list(range(1, 14))
    by_i = {row.i: row for row in report.per_power}
    assert by_i[7].order == 2 and by_i[7].isolated_count == 7
    assert by_i[2].order == 7 and by_i[2].isolated_count == 2
    assert by_i[1].order == 14 and by_i[1].isolated_count == 0


def test_full_report_odd_order_has_no_involution():
    sig = parse_signature("(3;-;[];{})")
    report = full_report(parse_map_text(sig, 3, "d=1,1,1"))
    assert report.involution is None
    assert len(report.per_power) == 2


def test_involution_matches_even_period_formula():
    # At i = N the general formula restricts to the even periods.
    for epi in (example1_odd_epi(), example1_even_epi(), example2_epi()):
        order = epi.modulus
        half = order // 2
        expected = sum(order // m for m in epi.sig.periods if m % 2 == 0)
        assert isolated_fixed_points(epi.sig, order, half) == expected


def test_counts_do_not_depend_on_images():
    a = parse_map_text(EXAMPLE1_ODD, 14, "x=7,2;e=5")
    b = parse_map_text(EXAMPLE1_ODD, 14, "x=7,4;e=3")
    ra, rb = full_report(a), full_report(b)
    assert ra.per_power == rb.per_power


@pytest.mark.parametrize(
    "fixed, ovals, genus, expected",
    [
        (7, 1, 7, (True, 0, True)),
        (6, 2, 8, (True, 0, True)),
        (0, 0, 3, (True, 5, False)),
        (9, 2, 7, (False, -4, False)),
    ],
)
def test_scherrer_check(fixed, ovals, genus, expected):
    assert tuple(scherrer_check(fixed, ovals, genus)) == expected


def test_twists_field_flattening():
    assert twists_field(full_report(example2_epi(cycles=2))) == "c1:2u;c2:2u"
    assert twists_field(full_report(example1_odd_epi())) == "c1:1t"
