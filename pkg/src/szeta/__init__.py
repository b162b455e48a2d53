"""Bandlimited extremal approximations, explicit-formula checks, and
argument-bound envelopes for the Riemann zeta-function."""

__version__ = "0.1.0"
