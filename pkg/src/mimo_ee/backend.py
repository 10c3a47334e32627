"""Kernel backend selection: compiled extension if available, numpy otherwise."""

from __future__ import annotations

try:
    from mimo_ee import _capacity_kernel as _impl

    BACKEND = "cython"
except ImportError:  # extension not built
    from mimo_ee import _capacity_fallback as _impl

    BACKEND = "python"

expected_log_capacity = _impl.expected_log_capacity
bisect_rate = _impl.bisect_rate
