from __future__ import annotations

import pytest

from wedcs._backend import core

BACKENDS = ["python"] + (["cython"] if core is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request) -> str:
    return request.param
