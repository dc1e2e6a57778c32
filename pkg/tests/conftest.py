from __future__ import annotations

import pytest

from diffalg import Context, parse_poly


@pytest.fixture
def uy() -> Context:
    return Context("u", "y")


@pytest.fixture
def P(uy):
    """Parse surface text over the (u, y) context."""
    return lambda text: parse_poly(text, uy)
