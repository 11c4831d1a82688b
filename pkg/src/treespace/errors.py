"""Exception hierarchy. Every error is a ``ValueError`` so callers that only
care about bad input can catch one type."""


class TreeSpaceError(ValueError):
    pass


class MixedSpanError(TreeSpaceError):
    """Segments of a family do not share their top (or bottom) level."""


class OverlapError(TreeSpaceError):
    """Two segments of a family share a node."""


class DegenerateSpanError(TreeSpaceError):
    """A single-node segment was offered in strict mode."""


class NotAChainError(TreeSpaceError):
    pass


class DepthExceededError(TreeSpaceError):
    pass


class DuplicateNodesError(TreeSpaceError):
    pass


class TooLargeError(TreeSpaceError):
    """The brute-force oracle was asked to enumerate too big an instance."""


class DepthMismatchError(TreeSpaceError):
    pass


class ZeroFunctionalError(TreeSpaceError):
    pass


class NeedTwoBranchesError(TreeSpaceError):
    pass


class DuplicateBranchesError(TreeSpaceError):
    pass


class EmptyInputError(TreeSpaceError):
    pass


class TrieIncompleteError(TreeSpaceError):
    """The splitting trie has a leaf above the requested level."""


class LengthMismatchError(TreeSpaceError):
    pass
