"""Exact Fourier expansions of genus-2 Siegel modular forms of weight Sym^6 x det^k."""

from .index_lattice import Index, SupportConstraint, act, enumerate_indices, partitions, reduce
from .kernels import available_backends, default_backend

__all__ = [
    "Index",
    "SupportConstraint",
    "act",
    "available_backends",
    "default_backend",
    "enumerate_indices",
    "partitions",
    "reduce",
]
