"""Finite-scale interpolation diagnostics on the unit disk.

Pseudohyperbolic geometry, computable positive harmonic majorants, finite
Blaschke products, divided-difference sup statistics, weak-separation
partitions, disk coverings, and the chained interpolation construction.
"""

from .blaschke import (
    BlaschkeProduct,
    LocalBoundReport,
    MarginReport,
    interpolation_margin,
    local_lower_bound_check,
    margin_reports,
)
from .covering import (
    Covering,
    CoveringReport,
    build_covering,
    extend_values,
    extension_majorants,
    verify_covering,
)
from .divdiff import (
    BudgetExceeded,
    InclusionBound,
    LabeledSequence,
    SupStatistic,
    TraceInclusionReport,
    divided_difference,
    inclusion_bound,
    sup_statistic,
    trace_inclusion_check,
)
from .geometry import (
    DiskPoint,
    PseudoDisk,
    blaschke_factor,
    harnack_interval,
    point_to_set_dist,
    pseudo_disk_gap,
    pseudo_dist,
)
from .generate import (
    attach_random_values,
    clustered,
    radial_exponential,
    random_union,
)
from .interpolate import (
    CardinalInterpolant,
    InterpolantChain,
    StageBoundRow,
    StageNote,
    base_interpolate,
    chained_solve,
    node_residual,
    stage_bound_report,
)
from .majorant import (
    DEFAULT_CONSTANT_GRID,
    HarmonicMajorant,
    combine,
    harnack_check,
    poisson_kernel,
    search_majorant,
)
from .pipeline import verify_main_theorem
from .separation import (
    BlowupRecord,
    CountConditionExceeded,
    CounterexampleResult,
    CriticalRadius,
    DyadicSquare,
    PartitionResult,
    SeparationReport,
    build_counterexample,
    count_condition,
    critical_radii,
    partition_weakly_separated,
    square_of,
    weakly_separated,
)

__version__ = "0.1.0"
