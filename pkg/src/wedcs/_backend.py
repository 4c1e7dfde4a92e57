"""Pick the compiled core when it is importable.

Set ``WEDCS_BACKEND=python`` to force the pure-Python fallback.
"""

from __future__ import annotations

import os

core = None
if os.environ.get("WEDCS_BACKEND", "auto").lower() != "python":
    try:
        from . import _core as core  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        core = None

BACKEND = "cython" if core is not None else "python"
