"""Exact construction, verification, and counting of multistate nested
canalyzing functions over prime fields."""

from .count import (
    BoundsReport,
    BoundsRow,
    boolean_e,
    bounds_report,
    incf,
    ncf_count,
    rncf,
    rncf_nn,
    rncf_split,
)
from .errors import (
    ArityMismatch,
    BadArity,
    BadExponent,
    BadVariable,
    BudgetExceeded,
    DegenerateDescriptor,
    InvalidDescriptor,
    NcfKitError,
    ParseError,
    ZeroInverse,
)
from .field import IntervalSet, PrimeField, complement, interval_sets, is_prime
from .functions import (
    Point,
    Restriction,
    TruthTable,
    all_points,
    index_of,
    parse_table,
    point_at,
    restrict,
    slice_table,
)
from .ncf import NcfDescriptor, build_polynomial, build_table, complement_last, detect, shift
from .oracle import EnumerationResult, census, descriptor_space_size, enumerate_ncfs, random_ncf
from .param import ParamReport, check_parametrization, coefficients_from_parameters
from .poly import (
    PolyR,
    UniPoly,
    coefficient_at,
    evaluate,
    interpolate,
    mul_univariate,
    parse_poly,
    point_indicator,
    set_indicator,
    table_of,
)

__version__ = "0.1.0"
