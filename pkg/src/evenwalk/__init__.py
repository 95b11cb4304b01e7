"""Counting closed walks on the integer line that visit every site but the
origin an even number of times, and the random ring-matrix moments they
correspond to."""
from .counting import (
    ConsistencyError,
    ExponentProfile,
    adjacency_product,
    binomial,
    ck_by_composition,
    ck_fast,
    ck_series,
    class_multiplicity,
    class_sum,
    compositions,
)
from .moments import exact_moment, mc_moment, resolvent_series, trace_power
from .series import PUBLISHED_CK, SeriesTable
from .walks import WalkPath, count_by_profile, count_even_visiting, is_even_visiting

__version__ = "0.1.0"
