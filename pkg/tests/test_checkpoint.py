import pytest

from pygridcycles.errors import CheckpointFormatError
from pygridcycles.TransferMatrix import ReflectiveTransferMatrix, UnrestrictedTransferMatrix
from pygridcycles.TransferMatrix.checkpoint import format_frontier, load_frontier, parse_frontier, save_frontier
from pygridcycles.TransferMatrix.states import is_ending


def test_format_of_a_starting_frontier():
    text = format_frontier(UnrestrictedTransferMatrix(4).starting_frontier())
    assert text == "HCFRONTIER v1 n=2 column=1 mode=U\n()() 1\n(..) 1\n"


@pytest.mark.parametrize('matrix_class', [UnrestrictedTransferMatrix, ReflectiveTransferMatrix])
def test_interrupted_run_matches_straight_run(tmp_path, matrix_class):
    matrix = matrix_class(8)
    straight = matrix.run(matrix.starting_frontier(), 6)

    path = tmp_path / 'frontier.txt'
    save_frontier(matrix.run(matrix.starting_frontier(), 3), path)
    frontier = load_frontier(path)
    assert frontier.column_index == 4
    assert frontier.mode is matrix.mode

    resumed = matrix.run_to(frontier, 7)
    assert resumed.entries == straight.entries
    assert resumed.total(is_ending) == straight.total(is_ending)


@pytest.mark.parametrize('text, line_number', [
    ("", 1),
    ("HCFRONTIER v2 n=2 column=1 mode=U\n", 1),
    ("HCFRONTIER v1 n=2 column=1 mode=X\n", 1),
    ("HCFRONTIER v1 n=0 column=1 mode=U\n", 1),
    ("HCFRONTIER v1 n=2 column=4 mode=U\n(..) 5\n", 1),
    ("HCFRONTIER v1 n=2 column=9 mode=U\n(..) 5\n", 1),
    ("HCFRONTIER v1 n=2 column=1 mode=U\n()() 1\n(..) x\n", 3),
    ("HCFRONTIER v1 n=2 column=1 mode=U\n()() 1\n(.)) 1\n", 3),
    ("HCFRONTIER v1 n=2 column=1 mode=U\n()() 0\n", 2),
    ("HCFRONTIER v1 n=2 column=1 mode=U\n() 1\n", 2),
    ("HCFRONTIER v1 n=2 column=1 mode=U\n(..) 1\n()() 1\n", 3),
    ("HCFRONTIER v1 n=2 column=1 mode=U\n()() 1\n()() 1\n", 3),
    ("HCFRONTIER v1 n=2 column=1 mode=R\n()() 1\n().. 1\n", 3),
])
def test_malformed_checkpoints_name_the_first_bad_line(text, line_number):
    with pytest.raises(CheckpointFormatError) as caught:
        parse_frontier(text)
    assert caught.value.line_number == line_number
    assert str(caught.value).startswith(f"line {line_number}: ")


def test_carriage_returns_are_rejected(tmp_path):
    path = tmp_path / 'frontier.txt'
    path.write_bytes(b"HCFRONTIER v1 n=2 column=1 mode=U\r\n()() 1\r\n")
    with pytest.raises(CheckpointFormatError) as caught:
        load_frontier(path)
    assert caught.value.line_number == 1


def test_large_counts_survive():
    text = "HCFRONTIER v1 n=2 column=3 mode=U\n(..) 123456789012345678901234567890\n"
    frontier = parse_frontier(text)
    assert frontier.entries == {"(..)": 123456789012345678901234567890}
    assert format_frontier(frontier) == text
