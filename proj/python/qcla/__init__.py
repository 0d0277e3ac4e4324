"""Control modular adders on a carry-lookahead adder.

Circuits are synthesized in C++; this package re-exports the core
operations. Reports and verdicts come back as plain dicts.
"""

from ._core import (
    Circuit,
    __version__,
    assign,
    average_report,
    distillation,
    closed_form_t_width,
    lower,
    model_kq_t,
    model_t_depth,
    optimal_t_width,
    parse_qasm,
    report,
    schedule_t_width,
    simulate,
    strategies,
    synth_modadd,
    verify,
)

__all__ = [
    "Circuit",
    "__version__",
    "assign",
    "average_report",
    "distillation",
    "closed_form_t_width",
    "lower",
    "model_kq_t",
    "model_t_depth",
    "optimal_t_width",
    "parse_qasm",
    "report",
    "schedule_t_width",
    "simulate",
    "strategies",
    "synth_modadd",
    "verify",
]
