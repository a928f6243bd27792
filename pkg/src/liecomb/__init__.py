"""liecomb — exact SU(3) tensor-product multiplicities and their pictographs."""

__version__ = "0.1.0"
