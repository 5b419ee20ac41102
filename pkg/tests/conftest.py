from __future__ import annotations

import pytest

from aury.iris.testing import IrisFactory


@pytest.fixture
def factory() -> IrisFactory:
    return IrisFactory(seed=1234)
