"""Exception types shared across the package."""


class InvalidParameters(ValueError):
    """Raised when (n, k) does not describe a generalised Petersen graph."""


class NotApplicable(ValueError):
    """Raised when an operation needs GP(3k,k) but got some other GP(n,k)."""


class VertexNotInGraph(KeyError):
    pass


class NonIntegerResult(ArithmeticError):
    """A closed form that must be integral was not. Indicates a bug."""


class IncompleteColouring(ValueError):
    pass


class NotExtendable(ValueError):
    """The outer-cycle colouring has no extension to the whole graph.

    Attributes:
        index: first triple index i (1-based) at which the colouring fails.
        reason: short machine-readable tag.
    """

    def __init__(self, index: int, reason: str):
        super().__init__(f"not extendable at triple {index}: {reason}")
        self.index = index
        self.reason = reason


class InstanceTooLarge(ValueError):
    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what} = {size} exceeds bound {bound}")
        self.size = size
        self.bound = bound


class Unsolvable(Exception):
    """Complete search found no list colouring.

    ``nodes`` is the number of search nodes visited before the tree was
    exhausted; at the solver's size bound this is a proof of non-existence.
    """

    def __init__(self, nodes: int):
        super().__init__(f"no list colouring exists (search exhausted after {nodes} nodes)")
        self.nodes = nodes
