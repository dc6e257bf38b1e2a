"""Module for the command line frontend

    Example - Basic::

        from fermiqs.cli import parse_config, run

        config = parse_config('{"command": "bound", "a": 2.0}')
        table = run(config)
        table.rows[-1]  # ['infimum', 2.0, 0.0, 0.5]
"""

from .config import RunConfig, load_config, parse_config, serialize
from .runner import CsvTable, run
from .main import main

__all__ = [
    'RunConfig',
    'load_config',
    'parse_config',
    'serialize',
    'CsvTable',
    'run',
    'main'
]
