"""Exact-arithmetic toolkit for dominating sets on geometric intersection graphs."""

__version__ = "0.1.0"

from .exactnum import QuadNum, SqrtExpr, quad, cmp_quadratic  # noqa: F401
