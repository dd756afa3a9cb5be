"""Self-checks behind the ``verify`` CLI command.

Each check re-derives one documented invariant group from scratch and
compares against frozen reference data, yielding one PASS/FAIL line.  The
reference tables here are intentionally written out by hand: the library
computes its tables from the family roots, so agreement is evidence, not
circularity.
"""

from __future__ import annotations

from collections import Counter
from math import comb
from typing import Callable

from .classify import (
    ROOT_CHORDS,
    SeventhFamily,
    TriadFamily,
    classify,
    dual_pairing,
    family_row,
    is_harmonic_seventh,
    is_harmonic_triad,
    seventh_table,
    triad_table,
)
from .core import (
    chord_to_composition,
    chord_to_partition,
    chords_of_partition,
    composition_to_chord,
    enumerate_chords,
    enumerate_partitions,
)
from .graph import Operator, build_chord_graph, component_isomorphism, connected_components
from .transform import augdim, dual, invert

CheckResult = tuple[bool, str]

# Reference classification rows (root position first, then successive
# inversions), used to cross-check the computed tables.
SEVENTH_ROWS: dict[SeventhFamily, tuple] = {
    SeventhFamily.MM: ((0, 4, 7, 11), (0, 3, 7, 8), (0, 4, 5, 9), (0, 1, 5, 8)),
    SeventhFamily.mM: ((0, 3, 7, 11), (0, 4, 8, 9), (0, 4, 5, 8), (0, 1, 4, 8)),
    SeventhFamily.AM: ((0, 4, 8, 11), (0, 4, 7, 8), (0, 3, 4, 8), (0, 1, 5, 9)),
    SeventhFamily.Mm: ((0, 4, 7, 10), (0, 3, 6, 8), (0, 3, 5, 9), (0, 2, 6, 9)),
    SeventhFamily.dm: ((0, 3, 6, 10), (0, 3, 7, 9), (0, 4, 6, 9), (0, 2, 5, 8)),
    SeventhFamily.mm: ((0, 3, 7, 10), (0, 4, 7, 9), (0, 3, 5, 8), (0, 2, 5, 9)),
    SeventhFamily.dd: ((0, 3, 6, 9),),
}

TRIAD_ROWS: dict[TriadFamily, tuple] = {
    TriadFamily.MAJOR: ((0, 4, 7), (0, 3, 8), (0, 5, 9)),
    TriadFamily.MINOR: ((0, 3, 7), (0, 4, 9), (0, 5, 8)),
    TriadFamily.DIMINISHED: ((0, 3, 6), (0, 3, 9), (0, 6, 9)),
    TriadFamily.AUGMENTED: ((0, 4, 8),),
}


def _check_roundtrip() -> CheckResult:
    for k in range(1, 7):
        for chord in enumerate_chords(k):
            gaps = chord_to_composition(chord)
            if sum(gaps) != 12:
                return False, f"gaps of {chord} sum to {sum(gaps)}"
            if composition_to_chord(gaps) != chord:
                return False, f"round trip broke at {chord}"
    return True, ""


def _check_chord_counts() -> CheckResult:
    for k in range(1, 13):
        expected = comb(11, k - 1)
        actual = len(enumerate_chords(k))
        if actual != expected:
            return False, f"k={k}: {actual} != {expected}"
    return True, ""


def _check_partition_fibers() -> CheckResult:
    for k in range(1, 7):
        covered: list = []
        for partition in enumerate_partitions(k):
            fiber = chords_of_partition(partition)
            if any(chord_to_partition(c) != partition for c in fiber):
                return False, f"fiber of {partition} leaks"
            covered.extend(fiber)
        if sorted(covered) != enumerate_chords(k) or len(set(covered)) != len(covered):
            return False, f"fibers do not tile the k={k} chords"
    return True, ""


def _relations_check(k: int) -> Callable[[], CheckResult]:
    def check() -> CheckResult:
        for chord in enumerate_chords(k):
            power = chord
            for _ in range(k):
                power = invert(power)
            if power != chord:
                return False, f"inversion order broke at {chord}"
            if dual(dual(chord)) != chord:
                return False, f"duality involution broke at {chord}"
            if k == 4 and augdim(augdim(chord)) != chord:
                return False, f"augdim involution broke at {chord}"
            for n in range(k + 1):
                # dual after n inversions == (k-n) inversions after dual
                expected = dual(chord)
                for _ in range((k - n) % k):
                    expected = invert(expected)
                image = chord
                for _ in range(n):
                    image = invert(image)
                if dual(image) != expected:
                    return False, f"dihedral identity broke at {chord}, n={n}"
        return True, ""

    return check


def _check_composition_action() -> CheckResult:
    for chord in enumerate_chords(4):
        gaps = chord_to_composition(chord)
        if chord_to_composition(invert(chord)) != gaps[1:] + gaps[:1]:
            return False, f"inversion is not rotate-left at {chord}"
        if chord_to_composition(dual(chord)) != gaps[::-1]:
            return False, f"duality is not reverse at {chord}"
        if chord_to_composition(augdim(chord)) != (gaps[0], gaps[2], gaps[1], gaps[3]):
            return False, f"augdim is not the middle swap at {chord}"
        for op in (invert, dual, augdim):
            if chord_to_partition(op(chord)) != chord_to_partition(chord):
                return False, f"{op.__name__} changed the partition of {chord}"
    return True, ""


def _check_permutation_closure() -> CheckResult:
    rotate, reverse, swap = (1, 2, 3, 0), (3, 2, 1, 0), (0, 2, 1, 3)
    closure = {rotate, reverse, swap}
    while True:
        extra = {
            tuple(p[q[i]] for i in range(4)) for p in closure for q in closure
        } - closure
        if not extra:
            break
        closure |= extra
    if len(closure) != 24:
        return False, f"closure has {len(closure)} elements"
    return True, ""


def _check_triads() -> CheckResult:
    heavy = {p for p in enumerate_partitions(3) if min(p) >= 3}
    if heavy != {(3, 3, 6), (3, 4, 5), (4, 4, 4)}:
        return False, f"triad partitions are {sorted(heavy)}"
    harmonic = [c for c in enumerate_chords(3) if is_harmonic_triad(c)]
    table = triad_table()
    if len(harmonic) != 10 or set(harmonic) != set(table):
        return False, f"{len(harmonic)} harmonic triads, table has {len(table)}"
    if len({str(label) for label in table.values()}) != 10:
        return False, "triad labels are not distinct"
    return True, ""


def _check_sevenths() -> CheckResult:
    harmonic = [c for c in enumerate_chords(4) if is_harmonic_seventh(c)]
    table = seventh_table()
    if len(harmonic) != 25 or set(harmonic) != set(table):
        return False, f"{len(harmonic)} harmonic sevenths, table has {len(table)}"
    partitions = Counter(chord_to_partition(c) for c in harmonic)
    if partitions != {(1, 3, 4, 4): 12, (2, 3, 3, 4): 12, (3, 3, 3, 3): 1}:
        return False, f"partition multiset is {dict(partitions)}"
    if len({str(label) for label in table.values()}) != 25:
        return False, "seventh labels are not distinct"
    return True, ""


def _check_table() -> CheckResult:
    for family, expected in {**TRIAD_ROWS, **SEVENTH_ROWS}.items():
        if family_row(family) != expected:
            return False, f"{family.value} row is {family_row(family)}"
    return True, ""


def _check_spot_values() -> CheckResult:
    cases = [
        (invert((0, 4, 7)), (0, 3, 8)),
        (dual((0, 4, 7)), (0, 5, 8)),
        (dual((0, 3, 6)), (0, 6, 9)),
        (invert((0, 4, 8)), (0, 4, 8)),
        (dual((0, 4, 8)), (0, 4, 8)),
        (augdim((0, 4, 7, 11)), (0, 4, 8, 11)),
        (augdim((0, 3, 6, 10)), (0, 3, 7, 10)),
    ]
    for actual, expected in cases:
        if actual != expected:
            return False, f"{actual} != {expected}"
    return True, ""


def _check_dual_pairing() -> CheckResult:
    expected_pairs = {
        SeventhFamily.MM: (SeventhFamily.MM, 3),
        SeventhFamily.mM: (SeventhFamily.AM, 3),
        SeventhFamily.Mm: (SeventhFamily.dm, 3),
        SeventhFamily.mm: (SeventhFamily.mm, 3),
        TriadFamily.MAJOR: (TriadFamily.MINOR, 2),
        TriadFamily.DIMINISHED: (TriadFamily.DIMINISHED, 2),
        TriadFamily.AUGMENTED: (TriadFamily.AUGMENTED, 0),
    }
    for family, expected in expected_pairs.items():
        if dual_pairing(family) != expected:
            return False, f"{family.value} pairs as {dual_pairing(family)}"
    for family in ROOT_CHORDS:
        partner, shift = dual_pairing(family)
        row_length = len(family_row(partner))
        for n, chord in enumerate(family_row(family)):
            label = classify(dual(chord))
            if label is None or label.family is not partner:
                return False, f"dual of {family.value}{n} left the partner family"
            if label.inversion != (shift - n) % row_length:
                return False, f"dual of {family.value}{n} is {label}"
    return True, ""


def _check_degree_regularity() -> CheckResult:
    graph = build_chord_graph(include_dd=True)
    for node in graph.nodes:
        out_i = sum(
            1 for e in graph.edges if e.op is Operator.INVERSION and e.source == node.id
        )
        for op in (Operator.DUALITY, Operator.AUGDIM):
            incident = sum(
                1
                for e in graph.edges
                if e.op is op and node.id in (e.source, e.target)
            )
            if incident != 1:
                return False, f"{node.id} has {incident} {op.value}-edges"
        if out_i != 1:
            return False, f"{node.id} has {out_i} outgoing i-edges"
    return True, ""


def _check_fixed_points() -> CheckResult:
    table = seventh_table()
    chords = [c for c, label in table.items() if label.family is not SeventhFamily.dd]
    a_fixed = {str(table[c]) for c in chords if augdim(c) == c}
    if a_fixed != {"mM0", "AM3", "Mm0", "dm3"}:
        return False, f"a-fixed points are {sorted(a_fixed)}"
    d_fixed = [c for c in chords if dual(c) == c]
    if d_fixed:
        return False, f"duality fixes {d_fixed}"
    return True, ""


def _check_components() -> CheckResult:
    sizes = [len(c) for c in connected_components(build_chord_graph(include_dd=False))]
    sizes_with_dd = [
        len(c) for c in connected_components(build_chord_graph(include_dd=True))
    ]
    ok = sizes == [12, 12] and sizes_with_dd == [12, 12, 1]
    return ok, "+".join(str(s) for s in sizes)


def _check_isomorphism() -> CheckResult:
    for include_dd in (False, True):
        mapping = component_isomorphism(build_chord_graph(include_dd=include_dd))
        if len(mapping) != 12 or mapping["MM0"] != "mm0":
            return False, f"map has {len(mapping)} pairs"
    return True, ""


CHECKS: list[tuple[str, Callable[[], CheckResult]]] = [
    ("core-roundtrip", _check_roundtrip),
    ("chord-counts", _check_chord_counts),
    ("partition-fibers", _check_partition_fibers),
    *[(f"relations(k={k})", _relations_check(k)) for k in range(2, 7)],
    ("composition-action", _check_composition_action),
    ("permutation-closure", _check_permutation_closure),
    ("triads", _check_triads),
    ("sevenths", _check_sevenths),
    ("table-1", _check_table),
    ("spot-checks", _check_spot_values),
    ("dual-pairing", _check_dual_pairing),
    ("degree-regularity", _check_degree_regularity),
    ("a-fixed-points", _check_fixed_points),
    ("components", _check_components),
    ("isomorphism", _check_isomorphism),
]


def run_checks() -> list[tuple[str, bool, str]]:
    """Run every invariant group; returns (name, passed, detail) triples."""
    results = []
    for name, check in CHECKS:
        try:
            passed, detail = check()
        except Exception as exc:  # a crashed check is a failed check
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, passed, detail))
    return results
