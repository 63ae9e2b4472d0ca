"""Numeric kernel backend selection.

The compiled Cython extension is preferred; the pure-Python reference backend
is the fallback and the ground truth for parity tests.  Set HZDLAB_KERNELS to
"python" or "compiled" to force a backend (the latter raises if the extension
is unavailable).
"""

import os

from . import reference

_choice = os.environ.get("HZDLAB_KERNELS", "").strip().lower()

if _choice == "python":
    _impl = reference
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        if _choice == "compiled":
            raise
        _impl = reference

BACKEND = _impl.BACKEND

dyn_terms = _impl.dyn_terms
dyn_core = _impl.dyn_core
solve_dense = _impl.solve_dense
accel = _impl.accel
accel_torque_map = _impl.accel_torque_map
rk4_step = _impl.rk4_step
impact_solve = _impl.impact_solve
fk_points = _impl.fk_points
guard_eval = _impl.guard_eval
energy = _impl.energy

__all__ = [
    "BACKEND", "reference", "dyn_terms", "dyn_core", "solve_dense", "accel",
    "accel_torque_map", "rk4_step", "impact_solve", "fk_points", "guard_eval",
    "energy",
]
