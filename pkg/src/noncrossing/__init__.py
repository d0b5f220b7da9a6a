"""Exact enumeration of crossing-restricted set partitions and braids.

The package models set partitions and braids as arc diagrams, converts
them to and from vacillating tableaux, implements the contraction
duality between partitions over [n] and braids over [n-1], enumerates
every class exhaustively, and evaluates the count of 3-noncrossing
braids without isolated points by four independent routes (brute force,
kernel constant term, closed-form binomial sum, P-recurrence) together
with its asymptotic law.
"""

__version__ = "0.1.0"

from .diagrams import (
    ArcDiagram,
    BraidDiagram,
    InvalidDiagramError,
    PartitionDiagram,
    braid_crossing_number,
    diagram_svg,
    format_diagram,
    has_isolated_points,
    is_k_noncrossing,
    is_two_regular,
    loop_isolated_vertices,
    parse_diagram,
    partition_blocks,
    partition_crossing_number,
    partition_from_blocks,
    strip_loops,
)
from .duality import (
    RestrictedDomainError,
    contract_partition,
    contract_partition_via_tableaux,
    contract_two_regular,
    expand_braid,
    expand_braid_no_isolated,
)
from .enumeration import (
    CountTable,
    RangeGuardError,
    bell_number,
    count_table,
    gen_2regular_k,
    gen_braids,
    gen_braids_no_isolated,
    gen_partitions_k,
    gen_set_partitions,
)
from .tableaux import (
    BRAID_STEPS,
    PARTITION_STEPS,
    MalformedTableauError,
    VacillatingTableau,
    diagram_to_tableau,
    format_tableau,
    parse_tableau,
    step_pairs,
    tableau_from_step_pairs,
    tableau_to_diagram,
    validate_tableau,
)
from .walks import (
    AsymptoticParams,
    FITTED_K,
    REFERENCE_K,
    RecurrenceError,
    asymptotic_estimate,
    fit_leading_constant,
    kernel_root_series,
    quadrant_walk_counts,
    rho3_closed_form,
    rho3_kernel_ct,
    rho3_recurrence,
    rho3_walk_dp,
    root_power_coefficient,
    solve_asymptotics,
)
