"""d-VFCSR: vectorial feedback-with-carry shift registers over F_p[beta].

Exact integer arithmetic in the carry ring Z[pi, beta] (pi^d = p, beta a
root of a primitive polynomial), register simulation, connection-element
analysis, periodicity verification against the norm-order bounds, and
search for maximal-period connection grids. Pure Python, no runtime
dependencies; every value type is immutable and every operation is pure.
"""

from .algebra import (
    BetaPoly,
    GroundParams,
    RingElement,
    ZPiElement,
    add_ring,
    det_int,
    det_Zpi,
    embed_beta,
    make_ground_params,
    mod_p,
    mul_beta,
    mul_ring,
    mult_matrix_Q,
    mult_matrix_Zpi,
    neg_ring,
    norm_Zpi_to_Z,
    ring_basis,
    ring_element,
    ring_one,
    ring_zero,
    sub_ring,
    zpi_add,
    zpi_mul,
    zpi_neg,
    zpi_sub,
)
from .analysis import (
    PAdicExpansion,
    PeriodReport,
    RationalityReport,
    detect_period,
    max_period_criterion,
    mult_order,
    periodicity_report,
    verify_rationality,
)
from .connection import (
    ConnectionAnalysis,
    analyze,
    mult_matrix_Q_2_2,
    spec_from_connection,
)
from .errors import (
    DvfcsrError,
    DegreeZeroError,
    FactorizationBudgetError,
    MemoryDivergedError,
    ModulusTooSmallError,
    NonSquareMatrixError,
    NotCongruentMinusOneError,
    NotCoprimeError,
    NotPrimeError,
    NotPrimitivePolynomialError,
    PrecisionTooLowError,
    UndeterminedPeriodError,
)
from .ntheory import factorize, is_prime
from .register import (
    RegisterSpec,
    RegisterState,
    RunResult,
    StepTrace,
    register_spec,
    register_state,
    run,
    step,
    subsequence,
)
from .search import (
    Candidate,
    NormTableReport,
    NormTableRow,
    SearchConfig,
    enumerate_candidates,
    verify_norm_table,
)
from .serde import (
    analysis_to_dict,
    dumps,
    ground_from_dict,
    ground_to_dict,
    period_report_to_dict,
    rationality_report_to_dict,
    spec_from_dict,
    spec_to_dict,
    state_from_dict,
    state_to_dict,
    trace_from_csv,
    trace_labels,
    trace_to_csv,
)

__version__ = "0.1.0"
