"""
Domain strategy interfaces.
"""
from .steady_state_strategy import ISteadyStateStrategy

__all__ = ["ISteadyStateStrategy"]
