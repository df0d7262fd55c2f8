# ruff: noqa: TID252
"""Neural-HSS layer and model data model."""

from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from ..const import MapVariant, Structure
from .model_hss import HssMatrix


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class HssLinearLayer:
    """HSS structured matrix followed by a learnable-slope LeakyReLU."""

    weight: HssMatrix
    # Activation slope for negative inputs, shape (1,).
    alpha: np.ndarray = field(default_factory=lambda: np.ones(1))
    use_activation: bool = True
    # Bumped whenever parameters change in place; tapes record it.
    version: int = 0

    @property
    def extent(self) -> int:
        """Input and output extent d."""
        return self.weight.d

    # ----------------------------------------------------------------------------
    def parameters(self) -> Iterator[tuple[str, np.ndarray]]:
        """Yield named parameter blocks in declaration order."""

        for name, block in self.weight.blocks():
            yield f"weight.{name}", block
        yield "alpha", self.alpha


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class NdHssLayer:
    """Sum over k of m-fold modal products with HSS factors W_j^(k)."""

    # factors[k][j] acts along spatial mode j of term k.
    factors: list[list[HssMatrix]]
    alpha: np.ndarray = field(default_factory=lambda: np.ones(1))
    use_activation: bool = True
    version: int = 0

    @property
    def outer_rank(self) -> int:
        """Number of separable terms r_out."""
        return len(self.factors)

    @property
    def modes(self) -> int:
        """Number of spatial modes m."""
        return len(self.factors[0])

    @property
    def extent(self) -> int:
        """Grid extent d shared by every mode."""
        return self.factors[0][0].d

    # ----------------------------------------------------------------------------
    def parameters(self) -> Iterator[tuple[str, np.ndarray]]:
        """Yield named parameter blocks in declaration order."""

        for k, term in enumerate(self.factors):
            for j, factor in enumerate(term):
                for name, block in factor.blocks():
                    yield f"factors.{k}.{j}.{name}", block
        yield "alpha", self.alpha


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class DenseLinearLayer:
    """Unstructured linear layer used by the parameter-matched baseline."""

    # Shape (out, in).
    weight: np.ndarray
    alpha: np.ndarray = field(default_factory=lambda: np.ones(1))
    use_activation: bool = True
    version: int = 0

    # ----------------------------------------------------------------------------
    def parameters(self) -> Iterator[tuple[str, np.ndarray]]:
        """Yield named parameter blocks in declaration order."""

        yield "weight", self.weight
        yield "alpha", self.alpha


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class LinearTensorMap:
    """Linear map between tensor spaces, dense or CP low-rank.

    The dense variant stores coefficients of shape out_shape + in_shape. The CP
    variant stores weights c (r,), out_factors u^(j) (r, d_j) and in_factors
    v^(j) (r, D_j): r * (1 + sum d_j + sum D_j) scalars.
    """

    in_shape: tuple[int, ...]
    out_shape: tuple[int, ...]
    variant: str = MapVariant.DENSE.value
    coefficients: np.ndarray | None = None
    weights: np.ndarray | None = None
    out_factors: list[np.ndarray] = field(default_factory=list)
    in_factors: list[np.ndarray] = field(default_factory=list)
    version: int = 0

    @property
    def rank(self) -> int:
        """CP rank; zero for the dense variant."""
        return 0 if self.weights is None else self.weights.shape[0]

    # ----------------------------------------------------------------------------
    def parameters(self) -> Iterator[tuple[str, np.ndarray]]:
        """Yield named parameter blocks in declaration order."""

        if self.variant == MapVariant.DENSE.value:
            assert self.coefficients is not None
            yield "coefficients", self.coefficients
            return

        assert self.weights is not None
        yield "c", self.weights
        for j, factor in enumerate(self.out_factors):
            yield f"u.{j}", factor
        for j, factor in enumerate(self.in_factors):
            yield f"v.{j}", factor


Layer = HssLinearLayer | NdHssLayer | DenseLinearLayer


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class NeuralHssModel:
    """Lift, a stack of layers and a projection."""

    layers: list[Layer]
    lift: LinearTensorMap | None = None
    project: LinearTensorMap | None = None

    #####################################
    # Normalization
    #####################################
    # Residual models predict (u_{t+dt} - u_t) / residual_scale.
    residual_scale: float | None = None
    # Steady models see x / input_scale and predict u / output_scale.
    input_scale: float = 1.0
    output_scale: float = 1.0

    #####################################
    # Provenance
    #####################################
    structure: str = Structure.HSS.value
    seed: int | None = None
    init_scale: float = 1.0

    # ----------------------------------------------------------------------------
    def parameters(self) -> dict[str, np.ndarray]:
        """Named parameter blocks in declaration order: lift, layers, project."""

        params: dict[str, np.ndarray] = {}
        if self.lift is not None:
            for name, block in self.lift.parameters():
                params[f"lift.{name}"] = block
        for i, layer in enumerate(self.layers):
            for name, block in layer.parameters():
                params[f"layers.{i}.{name}"] = block
        if self.project is not None:
            for name, block in self.project.parameters():
                params[f"project.{name}"] = block
        return params

    # ----------------------------------------------------------------------------
    def alphas(self) -> dict[str, np.ndarray]:
        """Activation slopes of all layers by parameter name."""
        return {
            f"layers.{i}.alpha": layer.alpha for i, layer in enumerate(self.layers)
        }

    # ----------------------------------------------------------------------------
    def bump_version(self) -> None:
        """Invalidate tapes recorded before an in-place parameter update."""

        components: list = [*self.layers]
        if self.lift is not None:
            components.append(self.lift)
        if self.project is not None:
            components.append(self.project)
        for component in components:
            component.version += 1

    # ----------------------------------------------------------------------------
    def param_count(self) -> int:
        """Total number of trainable scalars."""
        return sum(block.size for block in self.parameters().values())

    # ----------------------------------------------------------------------------
    def __repr__(self) -> str:
        """Return string representation of NeuralHssModel."""
        return (
            f"structure={self.structure}, "
            f"layers={len(self.layers)}, "
            f"lift={self.lift is not None}, "
            f"project={self.project is not None}, "
            f"params={self.param_count()}, "
            f"residual_scale={self.residual_scale}"
        )


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class GradientSet:
    """One gradient array per parameter block, keyed like the parameters."""

    blocks: dict[str, np.ndarray] = field(default_factory=dict)

    # ----------------------------------------------------------------------------
    def global_norm(self) -> float:
        """l2 norm over all blocks."""
        return float(
            np.sqrt(sum(float(np.sum(block * block)) for block in self.blocks.values()))
        )

    # ----------------------------------------------------------------------------
    def scaled(self, factor: float) -> "GradientSet":
        """Return a copy with every block multiplied by factor."""
        return GradientSet({name: block * factor for name, block in self.blocks.items()})

    # ----------------------------------------------------------------------------
    def is_finite(self) -> bool:
        """Check every block for NaN/Inf."""
        return all(bool(np.all(np.isfinite(b))) for b in self.blocks.values())

    # ----------------------------------------------------------------------------
    def merge(self, prefix: str, other: dict[str, np.ndarray]) -> None:
        """Add blocks of a component under prefix."""

        for name, block in other.items():
            self.blocks[f"{prefix}.{name}"] = block
