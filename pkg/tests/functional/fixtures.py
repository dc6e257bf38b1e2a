""" Behave fixtures """

import shutil
import tempfile

from test_imports import fixture # pylint: disable=import-error


@fixture
def workspace(context):
    """Scratch directory for configs and CSV outputs, removed afterwards"""

    context.workdir = tempfile.mkdtemp(prefix='fermiqs-functional-')
    context.outputs = []
    yield context.workdir
    shutil.rmtree(context.workdir, ignore_errors=True)
