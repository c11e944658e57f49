"""CLI command modules for gnice."""

from gnice.cli.basis import gb, ini, member, nf, spoly
from gnice.cli.closures import hat, nf_ideal_command, sharp, tilde
from gnice.cli.ideals import colon, intersect
from gnice.cli.lattice import (
    binomial_family,
    distrib,
    distrib_dual,
    family_intersect,
    regseq,
    snice_distrib,
    sum_split,
)
from gnice.cli.pairs import is_gnice_command, is_snice_command, order_sweep

__all__ = [
    "binomial_family",
    "colon",
    "distrib",
    "distrib_dual",
    "family_intersect",
    "gb",
    "hat",
    "ini",
    "intersect",
    "is_gnice_command",
    "is_snice_command",
    "member",
    "nf",
    "nf_ideal_command",
    "order_sweep",
    "regseq",
    "sharp",
    "snice_distrib",
    "spoly",
    "sum_split",
    "tilde",
]
