"""Adelic entropy invariants of Alexander polynomials.

The entropy of the meridian action splits over the places of Q: at a prime
``p`` it is read off the Newton polygon of the Alexander polynomial, at the
real place it is the sum of ``log|alpha|`` over roots outside the unit
circle.  The finite part recovers ``log|a_n|`` exactly and the total equals
the Mahler measure, which is also the growth rate of ``|H_1|`` of the
branched cyclic covers.
"""
from .arch import (
    CertifiedRoot,
    Circle,
    all_roots_of_unity,
    archimedean_entropy,
    mahler_measure,
    mahler_measure_graeffe,
    mahler_measure_roots,
    on_unit_circle_exact,
    roots_certified,
)
from .branched import (
    GrowthReport,
    HomologySequence,
    growth_estimate,
    homology_order,
    homology_sequence,
    p_part_profile,
    periodicity_check,
)
from .intervals import INF, PlaceEntropy, RealInterval
from .knotdata import KnotRecord, builtin_table, load_csv, lookup, write_csv
from .padic import (
    EntropySpectrum,
    NewtonPolygon,
    entropy_spectrum,
    finitely_generated_obstruction,
    leading_decomposition,
    newton_polygon,
    place_entropy,
)
from .polycore import (
    IntPoly,
    ValidationReport,
    content,
    cyclotomic,
    normalize,
    resultant_with_cyclotomic_power,
    validate_alexander,
)

__version__ = "0.1.0"
