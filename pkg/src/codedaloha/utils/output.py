"""
Writers for the records produced by the subcommands.
"""
import csv
import json

from .string import fmt_number


#: The output formats of records
FORMATS = ('csv', 'json')


def fmt_record(record):
    """Format the floats of a record with the output precision.

    Examples
    --------
    >>> fmt_record({'G_star': 2 / 3, 'k': 2, 'S_stderr': None})
    {'G_star': '0.666666667', 'k': '2', 'S_stderr': ''}
    """
    return {key: str(value) if isinstance(value, int) else fmt_number(value)
            for key, value in record.items()}


def json_value(value):
    """Round the floats of a value to the output precision for JSON."""
    if isinstance(value, float):
        return float(fmt_number(value))
    if isinstance(value, dict):
        return {k: json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_value(v) for v in value]
    return value


def write_records(records, stream, fmt='csv', columns=None, summary=None):
    """Write a list of flat records to a text stream.

    Parameters
    ----------
    records : List[Dict[str, Any]]
        The records. CSV columns follow the keys of the first record unless
        listed.
    stream : :obj:`io.TextIOBase`
        The stream to write to.
    fmt : Optional[str]
        'csv' or 'json'.
    columns : Optional[List[str]]
        The CSV columns.
    summary : Optional[Dict[str, Any]]
        Entries written next to the records in JSON output.

    Examples
    --------
    >>> import io
    >>> stream = io.StringIO()
    >>> write_records([{'G': 0.5, 'S': 1 / 3}], stream)
    >>> stream.getvalue()
    'G,S\\n0.5,0.333333333\\n'
    """
    if fmt not in FORMATS:
        raise ValueError("the output format '{}' is not one of "
                         "{}".format(fmt, ', '.join(FORMATS)))

    if fmt == 'json':
        document = dict(summary or {})
        document['records'] = [json_value(r) for r in records]
        json.dump(json_value(document), stream, indent=2, sort_keys=True)
        stream.write('\n')
        return

    if columns is None:
        columns = list(records[0].keys()) if records else []
    writer = csv.DictWriter(stream, fieldnames=columns, lineterminator='\n',
                            extrasaction='ignore')
    writer.writeheader()
    for record in records:
        writer.writerow(fmt_record(record))
