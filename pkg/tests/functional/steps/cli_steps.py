""" Command line feature steps """

# pylint: disable=function-redefined, import-error
import csv
import json
import math
import os

from test_imports import given, when, then

from fermiqs.cli import main


def _read_table(path):
    """ Header and rows of a CSV output, provenance comments skipped """

    with open(path, newline='') as csv_file:
        lines = [line for line in csv_file if not line.startswith('#')]
    reader = csv.reader(lines)
    header = next(reader)
    return header, list(reader)


def _row(context, label):
    header, rows = _read_table(context.outputs[-1])
    for row in rows:
        if row[0] == label:
            return dict(zip(header, row))
    raise AssertionError('no row labelled %s' % label)


@given('a config')
def step_impl(context):
    """ step impl """
    context.config_path = os.path.join(context.workdir, 'config.json')
    with open(context.config_path, 'w') as config_file:
        config_file.write(json.dumps(json.loads(context.text)))


@when('we run fermiqs {command:w}')
def step_impl(context, command):
    """ step impl """
    out = os.path.join(context.workdir, 'run%s.csv' % len(context.outputs))
    context.exit_code = main([command, '--config', context.config_path, '--out', out])
    context.outputs.append(out)


@when('we run fermiqs {command:w} twice')
def step_impl(context, command):
    """ step impl """
    for _ in range(2):
        context.execute_steps('When we run fermiqs %s' % command)


@then('the exit code is {code:d}')
def step_impl(context, code):
    """ step impl """
    assert context.exit_code == code, context.exit_code


@then('the {column} of row "{label}" is {value:g} within {tolerance:g}')
def step_impl(context, column, label, value, tolerance):
    """ step impl """
    cell = float(_row(context, label)[column])
    assert abs(cell - value) <= tolerance, cell


@then('the {column} of row "{label}" is {value:g} within {percent:g} percent')
def step_impl(context, column, label, value, percent):
    """ step impl """
    cell = float(_row(context, label)[column])
    assert math.isclose(cell, value, rel_tol=percent / 100.0), cell


@then('every {column} is below {limit:g}')
def step_impl(context, column, limit):
    """ step impl """
    header, rows = _read_table(context.outputs[-1])
    index = header.index(column)
    assert all(float(row[index]) < limit for row in rows)


@then('the outputs are byte-identical')
def step_impl(context):
    """ step impl """
    contents = []
    for path in context.outputs:
        with open(path, 'rb') as output:
            contents.append(output.read())
    assert len(set(contents)) == 1


@then('the {column} of row "{label}" reads {text}')
def step_impl(context, column, label, text):
    """ step impl """
    cell = _row(context, label)[column]
    assert cell == text, cell
