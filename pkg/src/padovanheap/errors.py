"""Exception types shared by all three priority-queue implementations."""


class HeapError(Exception):
    pass


class EmptyHeapError(HeapError):
    """find_min / delete_min on an empty heap."""


class KeyIncreaseError(HeapError):
    """decrease_key called with a key larger than the current one."""


class StaleHandleError(HeapError):
    """Operation on a handle that was freed or belongs elsewhere."""
