import pytest
from hypothesis import given

from bbdham.digraph import complete
from bbdham.fileformat import ParseError, parse, read_file, write, write_file

from conftest import digraphs

CANONICAL = "bbd 1\na 2\narc x1 y1\narc x1 y2\narc y2 x2\n"


def test_round_trip_bytes():
    assert write(parse(CANONICAL)) == CANONICAL


@given(digraphs(max_a=5))
def test_parse_write_identity(D):
    assert parse(write(D)) == D


def test_comments_and_blank_lines():
    text = "# made by hand\nbbd 1\n\na 2\n  # arcs follow\narc y2 x2\narc x1 y1\n\n"
    D = parse(text)
    assert D.arcs() == [(0, 2), (3, 1)]
    assert write(D) == "bbd 1\na 2\narc x1 y1\narc y2 x2\n"


def test_crlf_accepted():
    assert parse(CANONICAL.replace("\n", "\r\n")) == parse(CANONICAL)


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("bbd 2\na 2\n", 1),
        ("bbd 1\nb 2\n", 2),
        ("bbd 1\na 0\n", 2),
        ("bbd 1\na 2\narc x1 x2\n", 3),
        ("bbd 1\na 2\narc x1 y3\n", 3),
        ("bbd 1\na 2\narc x1 y1\narc x1 y1\n", 4),
        ("bbd 1\na 2\nedge x1 y1\n", 3),
        ("bbd 1\na 2\narc x1 y1 y2\n", 3),
        ("bbd 1\na 2\narc x1 yé\n", 3),
        ("bbd 1\n", 1),
        ("", 1),
    ],
)
def test_parse_errors_name_line(text, lineno):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"line {lineno}:")


def test_file_io(tmp_path):
    path = tmp_path / "k33.bbd"
    write_file(str(path), complete(3))
    assert read_file(str(path)) == complete(3)
    assert path.read_bytes().endswith(b"arc y3 x3\n")


def test_non_ascii_bytes_reported(tmp_path):
    path = tmp_path / "bad.bbd"
    path.write_bytes(b"bbd 1\na 2\narc x1 \xff1\n")
    with pytest.raises(ParseError) as info:
        read_file(str(path))
    assert info.value.lineno == 3
