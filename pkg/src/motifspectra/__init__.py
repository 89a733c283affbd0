"""Exact spectra and degeneracy bounds of motif-solvable spin chains."""

__version__ = "0.1.0"

from . import anyon, fibnum, figures, motif, oracle, partition, spectrum, tableau

__all__ = [
    "__version__",
    "anyon",
    "fibnum",
    "figures",
    "motif",
    "oracle",
    "partition",
    "spectrum",
    "tableau",
]
