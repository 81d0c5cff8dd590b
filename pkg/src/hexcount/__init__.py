"""hexcount: exact tiling counts for hexagons with a two-triangle axis defect."""

__version__ = "0.1.0"
