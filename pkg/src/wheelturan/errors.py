"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the domain of an operation."""


class CapacityError(ValueError):
    """An input exceeds a configured size cap."""


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BudgetExceeded(RuntimeError):
    """A search ran out of its node budget before reaching a decision."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes
