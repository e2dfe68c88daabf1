"""gasketgraph - Sierpinski gasket graphs, certificates and pebbling."""

from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("gasketgraph")
except PackageNotFoundError:
    __version__ = "0.0.0-dev"
