"""Exact equivariant-module data on 2x2x2 hypermatrices.

Core queries live in the submodules; the HTTP surface is in
:mod:`hypermod.service` and the thin command-line client in
:mod:`hypermod.cli`.
"""

from .weights import BottResult, TripleWeight, Weight2, bott_normalize
from .simples import ModuleId, SimpleId
from .localcoh import OrbitId
from .orbits import GroupElement, Tensor222

__version__ = "0.1.0"

__all__ = [
    "BottResult",
    "GroupElement",
    "ModuleId",
    "OrbitId",
    "SimpleId",
    "Tensor222",
    "TripleWeight",
    "Weight2",
    "bott_normalize",
    "__version__",
]
