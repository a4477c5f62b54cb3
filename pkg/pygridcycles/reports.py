"""
    This module renders results as plain text, CSV or JSON.

    A report is a named list of records (one dict per row) that is shaped
    into a pandas DataFrame for the tabular formats. JSON keeps integers
    and fractions as decimal strings, so even the largest counts survive
    any JSON reader; `parse_report` turns them back into numbers.

"""

from dataclasses import dataclass, field
from fractions import Fraction
import json
import logging
import re

import numpy as np
import pandas as pd

_INTEGER_TEXT = re.compile(r'^-?\d+$')
_FRACTION_TEXT = re.compile(r'^-?\d+/\d+$')


def _native(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


@dataclass
class Report:
    """A result table. `kind` names what the rows hold."""

    kind: str
    records: list = field(default_factory=list)

    def __post_init__(self):
        self.records = [{key: _native(value) for key, value in record.items()} for record in self.records]

    @classmethod
    def from_frame(cls, kind, frame):
        return cls(kind, frame.to_dict('records'))

    @property
    def frame(self):
        return pd.DataFrame.from_records(self.records)


def format_plain(report):
    '''
        One line per row, each value written as `column=value`.
    '''
    lines = [' '.join(f"{key}={value}" for key, value in record.items()) for record in report.records]
    return '\n'.join(lines) + '\n'


def format_csv(report):
    if not report.records:
        return ''
    return report.frame.to_csv(index=False)


def _to_json_value(value):
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return str(value)
    return value


def format_json(report):
    document = {
        'report': report.kind,
        'rows': [{key: _to_json_value(value) for key, value in record.items()} for record in report.records],
    }
    return json.dumps(document, indent=2) + '\n'


# List of all output formats with their string identifiers as the keys
REPORT_FORMATS = {
    'plain': format_plain,
    'json': format_json,
    'csv': format_csv,
}


def format_report(report, fmt='plain'):
    try:
        formatter = REPORT_FORMATS[fmt]
    except KeyError:
        msg = f"Unknown output format {fmt!r}; expected one of {', '.join(REPORT_FORMATS)}."
        logging.error(msg)
        raise ValueError(msg)
    return formatter(report)


def _from_json_value(value):
    if isinstance(value, str):
        if _INTEGER_TEXT.match(value):
            return int(value)
        if _FRACTION_TEXT.match(value):
            return Fraction(value)
    return value


def parse_report(text):
    """Reads a JSON report back, with integers and fractions restored."""
    try:
        document = json.loads(text)
        kind, rows = document['report'], document['rows']
    except (ValueError, KeyError, TypeError) as error:
        msg = f"Not a JSON report: {error}"
        logging.error(msg)
        raise ValueError(msg)

    records = [{key: _from_json_value(value) for key, value in row.items()} for row in rows]
    return Report(kind, records)
