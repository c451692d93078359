"""Thermodynamics of Brownian-oscillator impurity systems."""

try:
    from ._impurity_thermo import *  # noqa: F401,F403  (installed layout)
except ImportError:  # pragma: no cover - development layout
    from _impurity_thermo import *  # noqa: F401,F403
