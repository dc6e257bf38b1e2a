""" Behave environments file """

# pylint: disable=import-error
from test_imports import use_fixture, fixtures


def before_scenario(context, scenario):  # pylint: disable=unused-argument
    """ Each scenario runs in its own scratch directory """
    use_fixture(fixtures.workspace, context)
