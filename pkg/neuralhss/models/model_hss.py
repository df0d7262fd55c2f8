# ruff: noqa: TID252
"""Cluster tree and HSS matrix data model."""

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

import numpy as np

from ..exceptions.structure_exception import StructureExceptionError


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass(frozen=True)
class ClusterTree:
    """Balanced binary partition of the index range [0, d).

    Every non-leaf splits exactly at its midpoint, so all leaves at depth L hold
    d / 2^L contiguous indices. Intervals are 0-based and half-open.
    """

    d: int
    depth: int

    # ----------------------------------------------------------------------------
    def __post_init__(self) -> None:
        """Reject trees whose leaves would be ragged."""

        if self.d < 1 or self.depth < 0:
            msg = f"Cluster tree needs d >= 1 and L >= 0, got d={self.d}, L={self.depth}"
            raise StructureExceptionError(msg)

        if self.d % (1 << self.depth) != 0:
            msg = (
                f"Cluster tree of depth L={self.depth} needs 2^L to divide "
                f"d={self.d}"
            )
            raise StructureExceptionError(msg)

    # ----------------------------------------------------------------------------
    @property
    def leaf_size(self) -> int:
        """Number of indices in every leaf."""
        return self.d >> self.depth

    @property
    def leaf_count(self) -> int:
        """Number of leaves."""
        return 1 << self.depth

    @property
    def leaves(self) -> list[tuple[int, int]]:
        """Leaf intervals from left to right."""
        return self.level(self.depth)

    @property
    def nodes(self) -> list[list[tuple[int, int]]]:
        """Node intervals per level, root level first."""
        return [self.level(ell) for ell in range(self.depth + 1)]

    # ----------------------------------------------------------------------------
    def level(self, ell: int) -> list[tuple[int, int]]:
        """Return the intervals of all nodes at depth ell."""

        if not 0 <= ell <= self.depth:
            msg = f"Level {ell} outside cluster tree of depth {self.depth}"
            raise StructureExceptionError(msg)

        size = self.d >> ell
        return [(i * size, (i + 1) * size) for i in range(1 << ell)]

    # ----------------------------------------------------------------------------
    def children(self, ell: int, index: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Return the two children of node index at depth ell."""

        if ell >= self.depth:
            msg = f"Leaf at level {ell} has no children"
            raise StructureExceptionError(msg)

        lo, hi = self.level(ell)[index]
        mid = (lo + hi) // 2
        return (lo, mid), (mid, hi)

    # ----------------------------------------------------------------------------
    def __repr__(self) -> str:
        """Return string representation of ClusterTree."""
        return f"d={self.d}, depth={self.depth}, leaf_size={self.leaf_size}"


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class HssLevel:
    """Stacked generators of all nodes on one level of the telescopic recursion."""

    # Diagonal blocks, shape (nodes, s, s).
    d: np.ndarray
    # Column bases, shape (nodes, s, r).
    u: np.ndarray
    # Row bases, shape (nodes, s, r).
    v: np.ndarray

    @property
    def node_count(self) -> int:
        """Number of nodes on the level."""
        return self.d.shape[0]

    @property
    def block_size(self) -> int:
        """Row count of every node block."""
        return self.d.shape[1]


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class HssMatrix:
    """Telescopic decomposition {U_tau, V_tau, D_tau} of a d x d operator.

    levels[0] holds the leaves (blocks of size d / 2^L), levels[k] for k >= 1 the
    reduced problem at depth L - k (blocks of size 2r). root is the depth-0
    remainder: 2r x 2r when L >= 1, the full d x d matrix when L = 0.
    """

    tree: ClusterTree
    rank: int
    levels: list[HssLevel] = field(default_factory=list)
    root: np.ndarray = field(default_factory=lambda: np.zeros((0, 0)))

    # ----------------------------------------------------------------------------
    def __post_init__(self) -> None:
        """Check every generator shape against the tree and rank."""

        tree = self.tree
        r = self.rank
        if r < 1:
            msg = f"HSS rank must be >= 1, got r={r}"
            raise StructureExceptionError(msg)

        if tree.depth >= 1 and tree.leaf_size < r:
            msg = (
                f"Leaf size d/2^L={tree.leaf_size} is smaller than rank r={r} "
                f"(d={tree.d}, L={tree.depth})"
            )
            raise StructureExceptionError(msg)

        if len(self.levels) != tree.depth:
            msg = f"Expected {tree.depth} levels, got {len(self.levels)}"
            raise StructureExceptionError(msg)

        for k, level in enumerate(self.levels):
            nodes = 1 << (tree.depth - k)
            size = tree.leaf_size if k == 0 else 2 * r
            expected = {
                "d": (nodes, size, size),
                "u": (nodes, size, r),
                "v": (nodes, size, r),
            }
            for name, shape in expected.items():
                actual = getattr(level, name).shape
                if actual != shape:
                    msg = f"levels.{k}.{name} has shape {actual}, expected {shape}"
                    raise StructureExceptionError(msg)

        root_size = 2 * r if tree.depth >= 1 else tree.d
        if self.root.shape != (root_size, root_size):
            msg = f"root has shape {self.root.shape}, expected {(root_size, root_size)}"
            raise StructureExceptionError(msg)

    # ----------------------------------------------------------------------------
    @property
    def d(self) -> int:
        """Operator extent."""
        return self.tree.d

    @property
    def depth(self) -> int:
        """Tree depth L."""
        return self.tree.depth

    @property
    def leaf_d(self) -> np.ndarray:
        """Leaf diagonal blocks."""
        return self.levels[0].d if self.levels else self.root[None]

    @property
    def leaf_u(self) -> np.ndarray:
        """Leaf column bases."""
        return self.levels[0].u

    @property
    def leaf_v(self) -> np.ndarray:
        """Leaf row bases."""
        return self.levels[0].v

    # ----------------------------------------------------------------------------
    def reduced(self) -> "HssMatrix":
        """Return the depth-(L-1) core A^(L-1) over 2^L r indices."""

        if self.depth == 0:
            msg = "Depth-zero HSS matrix has no reduced core"
            raise StructureExceptionError(msg)

        reduced_tree = ClusterTree(self.tree.leaf_count * self.rank, self.depth - 1)
        return HssMatrix(reduced_tree, self.rank, self.levels[1:], self.root)

    # ----------------------------------------------------------------------------
    def blocks(self) -> Iterator[tuple[str, np.ndarray]]:
        """Yield named generator blocks in declaration order."""

        for k, level in enumerate(self.levels):
            yield f"levels.{k}.d", level.d
            yield f"levels.{k}.u", level.u
            yield f"levels.{k}.v", level.v
        yield "root", self.root

    # ----------------------------------------------------------------------------
    def map_blocks(self, fn: Callable[[np.ndarray], np.ndarray]) -> "HssMatrix":
        """Return a new HssMatrix with fn applied to every block."""

        levels = [HssLevel(fn(lvl.d), fn(lvl.u), fn(lvl.v)) for lvl in self.levels]
        return HssMatrix(self.tree, self.rank, levels, fn(self.root))

    # ----------------------------------------------------------------------------
    def param_count(self) -> int:
        """Number of stored scalars."""
        return sum(block.size for _, block in self.blocks())

    # ----------------------------------------------------------------------------
    def __repr__(self) -> str:
        """Return string representation of HssMatrix."""
        return (
            f"d={self.d}, "
            f"depth={self.depth}, "
            f"rank={self.rank}, "
            f"leaf_size={self.tree.leaf_size}, "
            f"params={self.param_count()}"
        )
