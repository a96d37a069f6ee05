"""Nodal-set point clouds: midpoints of grid edges across which a function changes sign."""

from __future__ import annotations

from typing import IO, Sequence

import numpy as np
from pydantic import BaseModel, Field, model_validator

from hzoo.core.config import DEFAULT_NODAL_RESOLUTION, MAX_NODAL_DIM, config
from hzoo.core.errors import UsageError
from hzoo.numerics.stencils import ScalarFunction
from hzoo.utils.logs import logger
from hzoo.utils.utils import parallel_map

Point = tuple[float, ...]


class GridSpec(BaseModel):
    lo: list[float] = Field(..., description="Lower box corner")
    hi: list[float] = Field(..., description="Upper box corner")
    resolution: int = Field(DEFAULT_NODAL_RESOLUTION, description="Grid points per axis")
    h: float = Field(default_factory=lambda: config.HZOO_FD_STEP, description="Stencil step")

    @model_validator(mode="after")
    def _check_box(self) -> "GridSpec":
        if not self.lo or len(self.lo) != len(self.hi):
            raise ValueError("lo and hi must be non-empty and of equal length")
        if any(a >= b for a, b in zip(self.lo, self.hi)):
            raise ValueError("lo must be strictly below hi in every coordinate")
        if self.resolution < 2:
            raise ValueError("resolution must be at least 2")
        if self.h <= 0:
            raise ValueError("h must be positive")
        return self

    @property
    def dim(self) -> int:
        return len(self.lo)

    def axes(self) -> list[np.ndarray]:
        return [np.linspace(a, b, self.resolution) for a, b in zip(self.lo, self.hi)]

    def cell_width(self) -> float:
        return max((b - a) / (self.resolution - 1) for a, b in zip(self.lo, self.hi))


def _positive(value: float) -> bool:
    # exact zeros count as positive
    return value >= 0


class NodalCloud(BaseModel):
    function_id: str
    lo: list[float]
    hi: list[float]
    resolution: int
    points: list[Point] = Field(default_factory=list)
    edges: list[tuple[Point, Point]] = Field(
        default_factory=list,
        description="Endpoints of the edge behind each point; a zero node is recorded as (node, node)",
    )

    @property
    def dim(self) -> int:
        return len(self.lo)

    def to_csv(self, stream: IO[str]) -> None:
        """Header x1,...,xd then one point per row, full double precision."""
        stream.write(",".join(f"x{i + 1}" for i in range(self.dim)) + "\n")
        if self.points:
            np.savetxt(stream, np.asarray(self.points, dtype=float), fmt="%.17g", delimiter=",", newline="\n")

    def check_soundness(self, f: ScalarFunction) -> bool:
        """Re-evaluate f at every recorded edge and confirm the sign change (or the zero node)."""
        for start, end in self.edges:
            if start == end:
                if f(start) != 0:
                    return False
            elif _positive(f(start)) == _positive(f(end)):
                return False
        return True


def nodal_sample(f: ScalarFunction, grid: GridSpec, function_id: str = "f") -> NodalCloud:
    """Scan every axis-aligned grid edge and emit the midpoints of sign-changing edges.

    Nodes where f is exactly zero are emitted as well. Output is ordered
    lexicographically by grid index, zero nodes before the edges leaving them.
    """
    d = grid.dim
    if d > MAX_NODAL_DIM:
        raise UsageError(f"nodal sampling supports at most {MAX_NODAL_DIM} dimensions, got {d}")
    axes = grid.axes()
    shape = (grid.resolution,) * d

    def _slab(i0: int) -> list[float]:
        return [
            f(tuple(float(axes[a][i]) for a, i in enumerate((i0, *rest))))
            for rest in np.ndindex(*shape[1:])
        ]

    values = np.asarray(parallel_map(_slab, range(grid.resolution)), dtype=float).reshape(shape)
    finite = np.isfinite(values)
    positive = np.where(finite, values >= 0, False)

    def _coords(index: Sequence[int]) -> Point:
        return tuple(float(axes[a][i]) for a, i in enumerate(index))

    records: list[tuple[tuple[int, ...], int, Point, tuple[Point, Point]]] = []
    for index in np.argwhere(finite & (values == 0)):
        node = _coords(index)
        records.append((tuple(int(i) for i in index), -1, node, (node, node)))
    for a in range(d):
        lower = [slice(None)] * d
        upper = [slice(None)] * d
        lower[a], upper[a] = slice(0, -1), slice(1, None)
        lower, upper = tuple(lower), tuple(upper)
        change = (positive[lower] != positive[upper]) & finite[lower] & finite[upper]
        for index in np.argwhere(change):
            index = tuple(int(i) for i in index)
            neighbour = list(index)
            neighbour[a] += 1
            start, end = _coords(index), _coords(neighbour)
            mid = tuple(0.5 * (s + e) for s, e in zip(start, end))
            records.append((index, a, mid, (start, end)))
    records.sort(key=lambda r: (r[0], r[1]))

    skipped = int(values.size - np.count_nonzero(finite))
    if skipped:
        logger.warning(f"nodal scan of {function_id}: {skipped} non-finite grid values skipped")
    logger.info(f"nodal scan of {function_id}: {len(records)} points on a {shape} grid")
    return NodalCloud(
        function_id=function_id,
        lo=list(grid.lo),
        hi=list(grid.hi),
        resolution=grid.resolution,
        points=[r[2] for r in records],
        edges=[r[3] for r in records],
    )
