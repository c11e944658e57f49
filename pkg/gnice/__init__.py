"""gnice: Groebner bases, G-nice and S-nice pairs of polynomial ideals."""

__version__ = "0.1.0"

from gnice.main import cli

__all__ = ["cli"]
