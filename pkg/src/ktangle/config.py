"""Centralized numerical tolerances and error types."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Project-wide numerical thresholds.

    eps_herm  bounds acceptable Hermiticity defects of matrix inputs.
    eps_norm  bounds norm / trace / probability-sum defects.
    eps_eig   classifies an eigenvalue as genuinely negative; values in
              [-eps_eig, 0) are treated as zero.
    """

    eps_herm: float = 1e-10
    eps_norm: float = 1e-9
    eps_eig: float = 1e-10


DEFAULT_TOLERANCES = Tolerances()

# Clamp threshold for eigenvalues of the spin-flipped product matrix before
# square roots.  The exact zeros of rank-deficient inputs otherwise pick up
# O(sqrt(machine eps)) noise which would dominate the concurrence.
WOOTTERS_CLAMP = 1e-12

# Discriminant magnitude below which the slice quadratic is treated as a
# double root (single canonical form returned).
CANONICAL_DISC_EPS = 1e-12

# Maximum allowed leakage outside the canonical support after reduction.
CANONICAL_RESIDUAL = 1e-8


class ValidationError(ValueError):
    """An input violates a documented invariant (norm, trace, Hermiticity...)."""


class NumericalError(RuntimeError):
    """An iterative numerical procedure failed to converge."""
