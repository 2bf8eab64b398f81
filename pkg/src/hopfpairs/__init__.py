"""Exact computations with twisted tensor products of Hopf algebras, the
modules induced from character pairs, and Cartan-type data."""

from .scalars import CycloElem, Field, Scalar, normalize

__version__ = "0.1.0"

__all__ = ["CycloElem", "Field", "Scalar", "normalize", "__version__"]
