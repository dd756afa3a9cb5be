"""Group actions on pitch-class chords in a twelve-tone scale.

Chords are strictly increasing tuples of pitch classes rooted at 0.  The
package provides the inversion / major-minor duality / augmented-diminished
duality operators, the harmonic classification of three- and four-tone
chords they generate, and the labeled transformation graph over the
harmonic four-tone chords.
"""

from .classify import (
    ChordLabel,
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
    Chord,
    Composition,
    EmptyChordError,
    FirstToneNotZeroError,
    InvalidChordError,
    InvalidSizeError,
    NotStrictlyIncreasingError,
    Partition,
    ToneOutOfRangeError,
    WrongArityError,
    chord_to_composition,
    chord_to_partition,
    chords_of_partition,
    composition_to_chord,
    enumerate_chords,
    enumerate_partitions,
    format_chord,
    format_parts,
    make_chord,
    make_composition,
    make_partition,
    normalize_chord,
    parse_chord,
)
from .graph import (
    ChordGraph,
    GraphEdge,
    GraphNode,
    IsomorphismViolationError,
    build_chord_graph,
    component_isomorphism,
    connected_components,
    export_dot,
    export_json,
)
from .transform import Operator, apply_word, augdim, dual, invert, orbit, parse_word

__all__ = [
    "Chord",
    "ChordGraph",
    "ChordLabel",
    "Composition",
    "EmptyChordError",
    "FirstToneNotZeroError",
    "GraphEdge",
    "GraphNode",
    "InvalidChordError",
    "InvalidSizeError",
    "IsomorphismViolationError",
    "NotStrictlyIncreasingError",
    "Operator",
    "Partition",
    "SeventhFamily",
    "ToneOutOfRangeError",
    "TriadFamily",
    "WrongArityError",
    "apply_word",
    "augdim",
    "build_chord_graph",
    "chord_to_composition",
    "chord_to_partition",
    "chords_of_partition",
    "classify",
    "component_isomorphism",
    "composition_to_chord",
    "connected_components",
    "dual",
    "dual_pairing",
    "enumerate_chords",
    "enumerate_partitions",
    "export_dot",
    "export_json",
    "family_row",
    "format_chord",
    "format_parts",
    "invert",
    "is_harmonic_seventh",
    "is_harmonic_triad",
    "make_chord",
    "make_composition",
    "make_partition",
    "normalize_chord",
    "orbit",
    "parse_chord",
    "parse_word",
    "seventh_table",
    "triad_table",
]
