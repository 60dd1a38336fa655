"""Exact enumeration and counting of Bachet partitions and their relatives."""

__version__ = "0.1.0"

from .enumeration import (
    EnumerationResult,
    LiftRefusal,
    enumerate_bachet,
    enumerate_er,
    lattice_points,
    lift_up,
    minimal_part_count,
    project_down,
)
from .macmahon import (
    MultiplicityPartition,
    OrderedFactorization,
    factorization_from_perfect,
    factorization_from_subperfect,
    is_perfect,
    is_subperfect,
    ordered_factorizations,
    perfect_from_factorization,
    perfect_partitions,
    subperfect_from_factorization,
    subperfect_partitions,
)
from .partition import (
    BACHET,
    ERROR_CORRECTING,
    ONE_SCALE,
    ErParams,
    Partition,
    ReachableSet,
    canonical_w,
    is_bachet,
    is_er_complete,
    part_bound_n,
    reachable_sums,
    satisfies_park_inequalities,
)
from .series import (
    TruncatedSeries,
    ary_count,
    count_bachet,
    is_sandwiched,
    rodseth_g,
    series_geometric,
    series_mul,
    series_substitute_power,
    ternary_f,
)
from .weighing import Mode, WeighingPlan, plan, render_table
