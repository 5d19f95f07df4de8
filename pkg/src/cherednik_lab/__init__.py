"""Exact-arithmetic lab for lowest-weight modules over rational Cherednik
algebras of finite Coxeter groups."""

__version__ = "0.1.0"
