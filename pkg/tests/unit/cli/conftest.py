""" Test fixtures """

import json

from ...global_test_imports import pytest
from ...shared.constants import CONFIGS


@pytest.fixture
def config_file(tmp_path):
    """ Test fixture: writes a config document and returns its path """

    def _write(document, name='config.json'):
        path = tmp_path / name
        path.write_text(document if isinstance(document, str) else json.dumps(document))
        return str(path)
    return _write


@pytest.fixture
def bound_file(config_file):
    """ Test fixture: bound config on disk """
    return config_file(CONFIGS['BOUND'])
