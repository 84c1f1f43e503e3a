"""Uniform 1-D lattices and real-valued fields on them."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["Grid1D", "Field"]


@dataclass(frozen=True)
class Grid1D:
    """Uniform spatial lattice with values carried at cell centers.

    Cell centers are ``x_min + (i + 1/2) * dx``.  ``boundary`` is either
    ``"periodic"`` (default; differences and convolutions wrap) or
    ``"truncated"`` (zero padding outside, one-sided differences at the
    edges).
    """

    x_min: float
    x_max: float
    n_cells: int
    boundary: str = "periodic"

    def __post_init__(self):
        if self.n_cells < 2:
            raise ValueError(f"n_cells must be >= 2, got {self.n_cells}")
        if not self.x_max > self.x_min:
            raise ValueError("x_max must exceed x_min")
        if self.boundary not in ("periodic", "truncated"):
            raise ValueError(f"unknown boundary {self.boundary!r}")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx

    @property
    def periodic(self) -> bool:
        return self.boundary == "periodic"

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    def index_of(self, x: float) -> int:
        """Cell index containing position x (clipped to the grid)."""
        i = int(np.floor((x - self.x_min) / self.dx))
        return min(max(i, 0), self.n_cells - 1)


@dataclass
class Field:
    """Real-valued function sampled on the cells of a grid."""

    grid: Grid1D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape[-1] != self.grid.n_cells:
            raise ValueError(
                f"values last axis {self.values.shape[-1]} != n_cells {self.grid.n_cells}"
            )

    def check_finite(self):
        if not np.all(np.isfinite(self.values)):
            raise FloatingPointError("field contains non-finite entries")
        return self

    def integral(self) -> float:
        """Midpoint-rule integral over the grid."""
        return float(self.values.sum(axis=-1) * self.grid.dx)

    def interp(self, x) -> np.ndarray:
        """Linear interpolation at positions x (periodic wrap or edge clamp)."""
        return interp_values(self.grid, self.values, x)


def interp_values(grid: Grid1D, values: np.ndarray, x) -> np.ndarray:
    """Linear interpolation of cell-centered values at arbitrary positions."""
    x = np.asarray(x, dtype=float)
    pos = (x - grid.x_min) / grid.dx - 0.5
    if grid.periodic:
        pos = np.mod(pos, grid.n_cells)
        i0 = np.floor(pos).astype(np.int64)
        frac = pos - i0
        i1 = (i0 + 1) % grid.n_cells
        i0 = i0 % grid.n_cells
    else:
        pos = np.clip(pos, 0.0, grid.n_cells - 1.0)
        i0 = np.minimum(np.floor(pos).astype(np.int64), grid.n_cells - 2)
        frac = pos - i0
        i1 = i0 + 1
    return (1.0 - frac) * values[..., i0] + frac * values[..., i1]
