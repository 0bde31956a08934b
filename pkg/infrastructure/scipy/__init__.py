from .steady_state_strategy import LongPropagationStrategy, PropagatorFixedPointStrategy

__all__ = ["LongPropagationStrategy", "PropagatorFixedPointStrategy"]
