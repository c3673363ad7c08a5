"""Counting homomorphisms in finite categories and graphs, and checking when hom counts determine objects."""

__version__ = "0.1.0"
