"""Exception hierarchy shared by every module."""


class HypercolorError(Exception):
    """Base class; the CLI maps any subclass to exit code 3."""


class EdgeIndexError(HypercolorError, IndexError):
    def __init__(self, index, n_edges):
        super().__init__(f"edge index {index} out of range (graph has {n_edges} edges)")
        self.index = index


class OutsideUniverse(HypercolorError, ValueError):
    def __init__(self, vertex, window):
        super().__init__(f"vertex {vertex} is outside the universe window {window}")
        self.vertex = vertex


class EdgeNotContained(HypercolorError, ValueError):
    def __init__(self, index):
        super().__init__(f"edge {index} is not contained in the chosen vertex set")
        self.index = index


class NonFiniteEdge(HypercolorError, ValueError):
    def __init__(self, index):
        super().__init__(f"edge {index} is not a finite edge")
        self.index = index


class Unbounded(HypercolorError, ValueError):
    """A characteristic-function edge without support bound was asked for its full extent."""

    def __init__(self, index=None):
        where = "" if index is None else f" (edge {index})"
        super().__init__(f"characteristic function has no support bound{where}")
        self.index = index


class MissingBound(Unbounded):
    pass


class OutOfDomain(HypercolorError, ValueError):
    def __init__(self, vertex, size):
        super().__init__(f"vertex {vertex} outside the domain of a finite coloring of size {size}")
        self.vertex = vertex


class RepresentationMismatch(HypercolorError, ValueError):
    pass


class RangesIntersect(HypercolorError, ValueError):
    pass


class NotFound(HypercolorError, LookupError):
    pass


class ImproperColoring(HypercolorError, ValueError):
    """A decoder was handed a coloring that fails its contract."""

    def __init__(self, mode, edge):
        super().__init__(f"coloring is not {mode} on edge {edge}")
        self.mode = mode
        self.edge = edge


class ExtractionStuck(HypercolorError, RuntimeError):
    def __init__(self, node):
        super().__init__(f"no red child below node {node!r}")
        self.node = node


class WindowTooSmall(HypercolorError, ValueError):
    pass
