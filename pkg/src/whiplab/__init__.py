"""whiplab: sequential ZY-rotation circuit laboratory.

Three independent expectation engines (dense statevector, naive Pauli
propagation, early-evaluation Pauli propagation), exact combinatorics and
closed forms, loop-ansatz circuits on the cube, and variational benchmarks.
"""

from .analytic import (cycle_count_layer, cycle_expectation, energy_1d,
                       energy_density_2d, lgv_count, order_parameter_closed_form,
                       zz_closed_form, zz_series)
from .lattice import WhipCircuit, ZYGate, build_cycle, build_whip, build_whip_no_pt
from .pauli import PauliString, PauliSum, conjugate, evaluate_on_plus, evaluate_on_zero
from .propagation import (TruncationPolicy, diagonal_pair, early_eval_expectation,
                          naive_expectation, scan_expectation, sink_pair)

__all__ = [
    "WhipCircuit", "ZYGate", "build_whip", "build_cycle", "build_whip_no_pt",
    "PauliString", "PauliSum", "conjugate", "evaluate_on_plus", "evaluate_on_zero",
    "TruncationPolicy", "naive_expectation", "early_eval_expectation",
    "scan_expectation", "sink_pair", "diagonal_pair",
    "zz_closed_form", "zz_series", "energy_density_2d", "energy_1d",
    "lgv_count", "cycle_count_layer", "cycle_expectation",
    "order_parameter_closed_form",
]

__version__ = "0.1.0"
