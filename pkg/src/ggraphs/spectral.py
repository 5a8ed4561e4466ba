"""Adjacency matrices, spectra and graph energy.

The adjacency matrix of a coset graph is integer-valued with zero diagonal
blocks (one block per partition class); entries are edge multiplicities.
Eigenvalues come from a cyclic Jacobi sweep over the dense symmetric matrix,
so exact integers enter floating point only at the eigen-decomposition.

Energy is the sum of absolute eigenvalues.  A graph on n vertices is
classified HYPO when energy < n and HYPER when energy > 2n - 2, both strict;
graphs sitting exactly on a boundary are NORMAL, and the report additionally
carries the booleans energy >= n and energy = 2n - 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidMatrixError, InvalidPairError, SizeLimitError
from .ggraph import GGraph
from .multigraph import Multigraph

DIMENSION_LIMIT = 700
GROUP_TOL = 1e-6
_CLASS_EPS = 1e-8

HYPO = "HYPO"
NORMAL = "NORMAL"
HYPER = "HYPER"


@dataclass(frozen=True, eq=False)
class AdjMatrix:
    """Symmetric integer adjacency matrix with partition block boundaries."""

    matrix: np.ndarray
    block_bounds: tuple[int, ...]

    def __post_init__(self):
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidMatrixError("adjacency matrix must be square")
        if not np.array_equal(m, m.T):
            raise InvalidMatrixError("adjacency matrix must be symmetric")
        if np.any(np.diag(m) != 0):
            raise InvalidMatrixError("diagonal must be zero")
        bounds = self.block_bounds
        if bounds[0] != 0 or bounds[-1] != m.shape[0] or list(bounds) != sorted(bounds):
            raise InvalidMatrixError("block bounds must partition the index range")
        for lo, hi in zip(bounds, bounds[1:]):
            if np.any(m[lo:hi, lo:hi] != 0):
                raise InvalidMatrixError(
                    f"diagonal block [{lo}:{hi}] must be entirely zero"
                )

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: tuple[tuple[float, int], ...]  # (value, multiplicity), descending
    energy: float
    energy_class: str
    distinct_count: int
    dimension: int
    energy_at_least_order: bool
    energy_at_upper_bound: bool


@dataclass(frozen=True)
class MatrixDiagnostics:
    row_sums: tuple[int, ...]
    block_row_sums: tuple[Optional[int], ...]
    blocks_uniform: bool
    row_sums_match_degrees: bool
    derived_orders: tuple[Optional[int], ...]
    derived_orders_match: bool
    edge_total: int
    edge_total_matches: bool
    not_a_ggraph: bool
    not_a_ggraph_reason: Optional[str]

    @property
    def ok(self) -> bool:
        return (
            self.blocks_uniform
            and self.row_sums_match_degrees
            and self.derived_orders_match
            and self.edge_total_matches
            and not self.not_a_ggraph
        )


def adjacency_matrix(gg: GGraph) -> AdjMatrix:
    """Adjacency matrix in the graph's canonical vertex order."""
    n = gg.vertex_count
    m = np.zeros((n, n), dtype=np.int64)
    for u, v, mult in gg.edges:
        m[u, v] = mult
        m[v, u] = mult
    return AdjMatrix(matrix=m, block_bounds=gg.class_offsets)


def adjacency_from_multigraph(
    mg: Multigraph, classes: Optional[list[list[int]]] = None
) -> AdjMatrix:
    """AdjMatrix for a plain multigraph.

    Without a partition every vertex is its own block, which leaves the
    zero-diagonal-block invariant trivially satisfied.
    """
    n = mg.n
    m = np.zeros((n, n), dtype=np.int64)
    for (u, v), mult in mg.edges.items():
        m[u, v] = mult
        m[v, u] = mult
    if classes is None:
        classes = mg.classes
    if classes is not None:
        expected = [v for cls in classes for v in cls]
        if expected != list(range(n)):
            raise InvalidMatrixError(
                "partition classes must be contiguous ranges in vertex order"
            )
        bounds = [0]
        for cls in classes:
            bounds.append(bounds[-1] + len(cls))
    else:
        bounds = list(range(n + 1))
    return AdjMatrix(matrix=m, block_bounds=tuple(bounds))


def _jacobi_eigenvalues(matrix: np.ndarray, tol: float) -> np.ndarray:
    """Eigenvalues of a symmetric matrix via cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below tol times
    the matrix Frobenius norm.
    """
    a = matrix.astype(np.float64).copy()
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0]])
    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return np.zeros(n)
    threshold = tol * scale
    for _ in range(100):
        off_sq = float(np.sum(np.square(a)) - np.sum(np.square(np.diag(a))))
        off = float(np.sqrt(max(off_sq, 0.0)))
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) if theta != 0 else 1.0
                t = t / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        raise ArithmeticError("Jacobi sweeps did not converge")
    return np.sort(np.diag(a))[::-1]


def spectrum(m: AdjMatrix, tol: float = 1e-10) -> SpectrumReport:
    """Sorted eigenvalues with multiplicities, energy, and energy class.

    Eigenvalues closer than GROUP_TOL are merged into one entry whose value
    is the group mean.  Internal consistency checks (zero trace, eigenvalue
    handshake against the squared entries) guard the decomposition.
    """
    n = m.dimension
    if n > DIMENSION_LIMIT:
        raise SizeLimitError(f"dimension {n} exceeds {DIMENSION_LIMIT}")
    values = _jacobi_eigenvalues(m.matrix, tol)

    trace = float(np.sum(values))
    if abs(trace) > 1e-8 * max(1, n):
        raise ArithmeticError(f"eigenvalue sum {trace} violates the zero trace")
    sq_sum = float(np.sum(np.square(values)))
    entry_sq = float(np.sum(np.square(m.matrix.astype(np.float64))))
    if entry_sq > 0 and abs(sq_sum - entry_sq) > 1e-6 * entry_sq:
        raise ArithmeticError("eigenvalue squares do not match matrix entries")

    grouped: list[tuple[float, int]] = []
    bucket: list[float] = []
    for v in values:
        if bucket and bucket[-1] - v > GROUP_TOL:
            grouped.append((float(np.mean(bucket)), len(bucket)))
            bucket = []
        bucket.append(float(v))
    if bucket:
        grouped.append((float(np.mean(bucket)), len(bucket)))

    energy = float(np.sum(np.abs(values)))
    upper = 2 * n - 2
    if energy < n - _CLASS_EPS:
        energy_class = HYPO
    elif energy > upper + _CLASS_EPS:
        energy_class = HYPER
    else:
        energy_class = NORMAL
    return SpectrumReport(
        eigenvalues=tuple(grouped),
        energy=energy,
        energy_class=energy_class,
        distinct_count=len(grouped),
        dimension=n,
        energy_at_least_order=energy >= n - _CLASS_EPS,
        energy_at_upper_bound=abs(energy - upper) <= 1e-6,
    )


def matrix_csv(m: AdjMatrix) -> str:
    """The integer matrix as CSV rows."""
    return "\n".join(",".join(str(int(x)) for x in row) for row in m.matrix) + "\n"


def matrix_diagnostics(m: AdjMatrix, gg: GGraph) -> MatrixDiagnostics:
    """Cross-checks between a matrix and the graph it was built from.

    Row sums must equal the multiplicity-weighted degrees, agree within each
    block, and divide by (k-1) back to the generator orders; the total entry
    sum halves to the edge count.  With three or more blocks, two row sums
    differing by exactly 1 cannot both come from integral generator orders,
    which flags the matrix as not arising from the coset construction.
    """
    if m.dimension != gg.vertex_count or tuple(m.block_bounds) != tuple(gg.class_offsets):
        raise InvalidPairError("matrix shape/blocks do not match the graph")
    k = gg.k
    row_sums = tuple(int(x) for x in m.matrix.sum(axis=1))
    degrees = gg.weighted_degrees()
    row_sums_match = list(row_sums) == degrees

    block_row_sums: list[Optional[int]] = []
    blocks_uniform = True
    for lo, hi in zip(m.block_bounds, m.block_bounds[1:]):
        sums = set(row_sums[lo:hi])
        if len(sums) == 1:
            block_row_sums.append(sums.pop())
        else:
            block_row_sums.append(None)
            blocks_uniform = False

    derived: list[Optional[int]] = []
    derived_match = True
    for c, block_sum in enumerate(block_row_sums):
        if k < 2:
            # a single class has no cross-class edges to derive orders from
            derived.append(None)
            continue
        if block_sum is None or block_sum % (k - 1) != 0:
            derived.append(None)
            derived_match = False
            continue
        order = block_sum // (k - 1)
        derived.append(order)
        if order != gg.gen_orders[c]:
            derived_match = False

    edge_total = int(m.matrix.sum()) // 2
    edge_total_matches = edge_total == sum(mult for _, _, mult in gg.edges)

    flagged = False
    reason = None
    if k > 2:
        distinct = sorted(set(row_sums))
        for a, b in zip(distinct, distinct[1:]):
            if b - a == 1:
                flagged = True
                reason = (
                    f"row sums {a} and {b} differ by 1 with {k} blocks; "
                    f"orders {a}/{k - 1} and {b}/{k - 1} cannot both be integers"
                )
                break

    return MatrixDiagnostics(
        row_sums=row_sums,
        block_row_sums=tuple(block_row_sums),
        blocks_uniform=blocks_uniform,
        row_sums_match_degrees=row_sums_match,
        derived_orders=tuple(derived),
        derived_orders_match=derived_match,
        edge_total=edge_total,
        edge_total_matches=edge_total_matches,
        not_a_ggraph=flagged,
        not_a_ggraph_reason=reason,
    )
