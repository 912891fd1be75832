"""Combinatorics and defining ideals of local models for GL_d."""

__version__ = "0.1.0"
