"""Derived functors of Lie and super-Lie functors on abelian groups and complexes."""

__version__ = "0.1.0"
