"""Exact structure theory of finite-dimensional Lie algebras over Q."""

__version__ = "0.1.0"
