"""Exact counts of m-endomorphisms of free semigroups and monoids up to relabelling."""
from .burnside import (
    Variant,
    count_classes,
    count_classes_naive,
    cycle_weight,
    divisor_weight,
    fixed_map_count,
    total_maps,
)
from .closed_form import (
    ClosedFormExpr,
    build_closed_form,
    evaluate_closed_form,
    evaluate_text,
    render_closed_form,
)
from .errors import BudgetExceeded, ConsistencyError, DomainError
from .oracle import (
    act,
    apply_endomorphism,
    check_cycle_criterion,
    enumerate_maps,
    fixed_points_oracle,
    orbit_count_oracle,
    orbits,
)
from .partitions import Partition, class_size, cycle_multiplicities, enumerate_partitions
from .sequences import (
    SequenceSpec,
    compare_with_published,
    emit_bfile,
    generate_sequence,
    parse_bfile,
    published_tables,
)

__version__ = "0.1.0"
