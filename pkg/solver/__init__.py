"""First-order difference equations and telescoping sums."""
from .recurrence import (
    FirstOrderRecurrence,
    StepCheck,
    solve_forward,
    telescope_sum,
    verify_solution,
)
from .equations import (
    qlaguerre_beta_recurrence,
    qlaguerre_printed_R_recurrence,
    qlaguerre_r_recurrence,
    qlaguerre_scaled_p1_recurrence,
    sw_R_recurrence,
    sw_r_recurrence,
    unscale_p1,
)

__all__ = [
    "FirstOrderRecurrence",
    "StepCheck",
    "solve_forward",
    "telescope_sum",
    "verify_solution",
    "qlaguerre_beta_recurrence",
    "qlaguerre_printed_R_recurrence",
    "qlaguerre_r_recurrence",
    "qlaguerre_scaled_p1_recurrence",
    "sw_R_recurrence",
    "sw_r_recurrence",
    "unscale_p1",
]
