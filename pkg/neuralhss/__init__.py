"""Neural-HSS: neural operators built from hierarchical semi-separable layers."""

from .const import VERSION

__version__ = VERSION
