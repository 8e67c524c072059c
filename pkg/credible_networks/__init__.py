"""Credible Bayesian network structures: every DAG scoring within epsilon of optimal."""

__version__ = "0.1.0"
