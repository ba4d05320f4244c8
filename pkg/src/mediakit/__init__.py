"""Media, well-graded set families, and partial cubes.

Token systems and message predicates live in :mod:`mediakit.core`; the
medium decision procedure and its brute-force axiom oracles in
:mod:`mediakit.axioms`; graph machinery (Theta, semicubes, hypercube
embeddings) in :mod:`mediakit.pcube`; set families in
:mod:`mediakit.wgfamily`; contents and closed-message structure in
:mod:`mediakit.structure`; embeddings, reductions, and isomorphism in
:mod:`mediakit.morphisms`.
"""

from .axioms import Medium, MediumVerdict, is_medium
from .core import Message, TokenSystem
from .errors import EmptyReductionError, EnumerationLimitError, InputError
from .pcube import LabeledGraph
from .wgfamily import SetFamily

__all__ = [
    "EmptyReductionError",
    "EnumerationLimitError",
    "InputError",
    "LabeledGraph",
    "Medium",
    "MediumVerdict",
    "Message",
    "SetFamily",
    "TokenSystem",
    "is_medium",
]
