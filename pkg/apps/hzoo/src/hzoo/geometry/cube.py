"""Faces of the unit cube Q_d = [-1/2, 1/2]^d and restriction of polynomials to them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

from hzoo.core.errors import UsageError
from hzoo.core.polyring import Poly, substitute

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Face:
    """A closed k-face of Q_d: the coordinates in `fixed` are pinned to +-1/2.

    Attributes:
        dim: Ambient dimension d.
        fixed: Sorted (index, value) pairs, every value in {-1/2, 1/2}.
    """

    dim: int
    fixed: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        fixed = tuple(sorted((int(i), Fraction(v)) for i, v in self.fixed))
        indices = [i for i, _ in fixed]
        if len(set(indices)) != len(indices):
            raise UsageError(f"coordinate pinned twice in {fixed}")
        for i, v in fixed:
            if not 0 <= i < self.dim:
                raise UsageError(f"index {i} out of range for dimension {self.dim}")
            if abs(v) != HALF:
                raise UsageError(f"face coordinates are pinned to +-1/2, got {v}")
        object.__setattr__(self, "fixed", fixed)

    @property
    def k(self) -> int:
        return self.dim - len(self.fixed)

    @property
    def free(self) -> tuple[int, ...]:
        pinned = {i for i, _ in self.fixed}
        return tuple(i for i in range(self.dim) if i not in pinned)

    def label(self) -> str:
        if not self.fixed:
            return "interior"
        return ",".join(f"x{i + 1}={v}" for i, v in self.fixed)


def face_count(d: int, k: int) -> int:
    """C(d, k) * 2^(d-k)."""
    return comb(d, k) * 2 ** (d - k)


def enumerate_faces(d: int, k: int) -> list[Face]:
    """All k-faces of Q_d, ordered by pinned index set then by sign pattern."""
    if not 0 <= k <= d:
        raise UsageError(f"need 0 <= k <= d, got d={d}, k={k}")
    faces = []
    for pinned in combinations(range(d), d - k):
        for values in product((-HALF, HALF), repeat=d - k):
            faces.append(Face(d, tuple(zip(pinned, values))))
    return faces


def restrict(p: Poly, face: Face) -> Poly:
    """Substitute the pinned coordinates; the result lives in the free variables, in order."""
    if p.arity != face.dim:
        raise UsageError(f"polynomial arity {p.arity} does not match face dimension {face.dim}")
    free = face.free
    target = len(free)
    bindings = {i: Poly.constant(v, target, p.field) for i, v in face.fixed}
    bindings.update({i: Poly.variable(j, target, p.field) for j, i in enumerate(free)})
    return substitute(p, bindings, arity=target)


def sample_face(face: Face, n: int) -> list[tuple[Fraction, ...]]:
    """n distinct rational points on the face.

    Free coordinates take the evenly spaced values t_j = -1/2 + j/(n-1); the r-th
    free coordinate of point j is t_{(j + r) mod n}. For n = 1 this is the centroid.
    """
    if n < 1:
        raise UsageError(f"need at least one sample, got {n}")
    ticks = [Fraction(0)] if n == 1 else [-HALF + Fraction(j, n - 1) for j in range(n)]
    pinned = dict(face.fixed)
    free = face.free
    if not free:
        n = 1  # a vertex has a single point
    points = []
    for j in range(n):
        point = [Fraction(0)] * face.dim
        for i, v in pinned.items():
            point[i] = v
        for r, i in enumerate(free):
            point[i] = ticks[(j + r) % n]
        points.append(tuple(point))
    return points
