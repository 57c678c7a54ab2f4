"""
Wedge Casimir Engine

Vacuum stress component T^phiphi and Casimir torque density for a
perfectly conducting wedge, with every analytic step of the
Green-function pipeline cross-checked numerically.
"""

__version__ = "0.1.0"
