"""Optional process parallelism, controlled by the CGRM_THREADS environment variable."""

from __future__ import annotations

import os
from multiprocessing import get_context


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("CGRM_THREADS", "1")))
    except ValueError:
        return 1


def pmap(fn, items):
    """map(fn, items), forking worker processes when CGRM_THREADS > 1."""
    items = list(items)
    k = thread_count()
    if k <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with get_context("fork").Pool(min(k, len(items))) as pool:
        return pool.map(fn, items)
