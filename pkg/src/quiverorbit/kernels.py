"""Kernel selection: compiled cycle checker when available, pure fallback.

Set ``QUIVERORBIT_PURE=1`` to force the fallback (used by the benchmark and
by tests comparing the two implementations).
"""

from __future__ import annotations

import os

from . import _cyclekernel_py as pure

try:
    from . import _cyclekernel as compiled  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    compiled = None

if compiled is not None and not os.environ.get("QUIVERORBIT_PURE"):
    active = compiled
else:
    active = pure

HAVE_COMPILED = compiled is not None
IMPLEMENTATION = active.IMPLEMENTATION
