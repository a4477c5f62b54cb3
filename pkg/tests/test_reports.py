from fractions import Fraction
import io
import json

import pandas as pd
import pytest

from pygridcycles.reports import Report, format_report, parse_report
from pygridcycles.TransferMatrix.counts import ratio_series

COUNT_REPORT = Report('count', [{'n': 7, 'A': 56126499620491437281263608, 'B': 3079904455096, 'E': 510718}])


def test_plain_format():
    assert format_report(Report('rect', [{'width': 4, 'height': 4, 'count': 6}])) == "width=4 height=4 count=6\n"


def test_json_keeps_big_counts_as_strings():
    document = json.loads(format_report(COUNT_REPORT, 'json'))
    assert document['report'] == 'count'
    assert document['rows'][0]['A'] == '56126499620491437281263608'


@pytest.mark.parametrize('report', [
    COUNT_REPORT,
    Report('from-start', [{'state': '(....)', 'count': 397}, {'state': '()()()', 'count': 145}]),
    Report('census', [{'n': 3, 'mode': 'reflective', 'states': 12, 'continuations': 26}]),
    Report('ratios', [{'n': 3, 'max_over_unit': Fraction(397, 145), 'max_over_unit_float': 397 / 145}]),
])
def test_json_round_trip(report):
    assert parse_report(format_report(report, 'json')) == report


def test_ratio_series_round_trip():
    report = Report.from_frame('ratios', ratio_series(3))
    assert isinstance(report.records[0]['n'], int)
    assert parse_report(format_report(report, 'json')) == report


def test_csv_format():
    frame = pd.read_csv(io.StringIO(format_report(COUNT_REPORT, 'csv')), dtype=str)
    assert list(frame.columns) == ['n', 'A', 'B', 'E']
    assert frame['A'][0] == '56126499620491437281263608'


def test_unknown_format_and_bad_json():
    with pytest.raises(ValueError):
        format_report(COUNT_REPORT, 'xml')
    with pytest.raises(ValueError):
        parse_report('{"rows": []}')
    with pytest.raises(ValueError):
        parse_report('not json')
