"""Python module containing helper file utility functions """

import csv
import json

from fermiqs.exceptions import FileLoadError


def load_file(file, **kwargs):
    """Load file (read + additional actions)

    Parameters
    ----------
    file : str
        location to configuration file
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    file_type : str
        the file type: json (default), raw

    Returns
    -------
    dict
        the loaded file
    """
    file_type = kwargs.pop('file_type', 'json')

    try:
        with open(file) as _f:
            data = _f.read()
    except (IOError, OSError) as err:
        raise FileLoadError('Unable to read %s: %s' % (file, err))

    # do stuff based on explicit file type
    if file_type == 'json':
        try:
            data = json.loads(data)
        except ValueError as err:
            raise FileLoadError('Invalid JSON in %s: %s' % (file, err))
    return data


def write_csv(file_object, header, rows, **kwargs):
    """Write a table with leading comment lines

    Parameters
    ----------
    file_object : object
        a writable text stream
    header : list
        column names
    rows : list
        rows of already formatted cells
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    comments : list
        lines written before the header, each prefixed with '# '

    Returns
    -------
    None
    """

    for comment in kwargs.pop('comments', []):
        file_object.write('# %s\n' % comment)

    writer = csv.writer(file_object, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
