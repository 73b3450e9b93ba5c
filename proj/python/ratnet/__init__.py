"""Exact rational-activation network toolkit.

Thin re-export of the _ratnet extension module. Structured inputs (networks,
instantiations, experiment configs) are JSON strings in the formats described
in the project README; reports come back as JSON strings.
"""

from _ratnet import (  # noqa: F401
    cell_bound,
    cells,
    compile_divfree,
    cts_density,
    cts_length_condition,
    cts_minimal_length,
    cts_oracle,
    equivalence_min_length,
    equivalence_test,
    eval_network,
    evasive,
    expand,
    growth,
    growth_bound,
    identity_min_length,
    identity_test,
    induced_instantiation,
    pham_bound,
    vcdim,
    zero_oracle,
)

__all__ = [
    "cell_bound",
    "cells",
    "compile_divfree",
    "cts_density",
    "cts_length_condition",
    "cts_minimal_length",
    "cts_oracle",
    "equivalence_min_length",
    "equivalence_test",
    "eval_network",
    "evasive",
    "expand",
    "growth",
    "growth_bound",
    "identity_min_length",
    "identity_test",
    "induced_instantiation",
    "pham_bound",
    "vcdim",
    "zero_oracle",
]
