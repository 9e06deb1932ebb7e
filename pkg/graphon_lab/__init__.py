"""graphon_lab: spectral properties of graphs sampled from graphons."""

from .const import VERSION

__version__ = VERSION
