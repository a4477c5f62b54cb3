import pytest

from pygridcycles import pipeline
from pygridcycles.errors import CrossCheckError
from pygridcycles.grid import ClassCounts, SymmetryCounts


@pytest.mark.parametrize('n, expected', [
    (1, SymmetryCounts(1, 1, 1, 1, 1, 1)),
    (2, SymmetryCounts(6, 4, 2, 2, 0, 0)),
    (3, SymmetryCounts(1072, 44, 28, 6, 2, 0)),
    (4, SymmetryCounts(4638576, 2828, 1504, 40, 0, 0)),
])
def test_all_symmetry_counts(n, expected):
    counts = pipeline.all_symmetry_counts(n, check=n <= 2)
    assert counts == expected
    assert counts.check_ordering()


@pytest.mark.slow
def test_brute_force_check_on_6x6():
    assert pipeline.symmetry_count(3, 'A', check=True) == 1072


@pytest.mark.parametrize('n, expected', [
    (1, ClassCounts(0, 0, 0, 0, 0, 1)),
    (3, ClassCounts(121, 19, 5, 3, 1, 0)),
    (4, ClassCounts(578937, 1394, 366, 20, 0, 0)),
    (5, ClassCounts(58407351059, 281990, 129871, 244, 102, 0)),
])
def test_class_counts(n, expected):
    _, classes = pipeline.class_counts(n)
    assert classes == expected


def test_selected_symbols_only():
    assert pipeline.symmetry_counts(3, ['B', 'F']) == {'B': 44, 'F': 0}
    with pytest.raises(ValueError):
        pipeline.symmetry_count(3, 'G')


def test_failed_cross_check(monkeypatch):
    monkeypatch.setattr(pipeline, 'count_B_central', lambda n, **options: 0)
    assert pipeline.symmetry_count(2, 'B') == 4
    with pytest.raises(CrossCheckError):
        pipeline.symmetry_count(2, 'B', check=True)
