"""Complex literals and coefficient files."""

import pytest

from ksverify.fileio import (
    format_complex,
    parse_complex,
    read_coeff_series,
    write_coeff_series,
)
from ksverify.series import PowerSeries


@pytest.mark.parametrize(
    "text,value",
    [
        ("1+2i", 1 + 2j),
        ("1+2j", 1 + 2j),
        ("i", 1j),
        ("-i", -1j),
        ("0.5i", 0.5j),
        ("3", 3 + 0j),
        ("-2.5", -2.5 + 0j),
        ("2.5e-3-1e2i", 2.5e-3 - 1e2j),
        (" 1 + 2i ", 1 + 2j),
        ("1-0.25I", 1 - 0.25j),
    ],
)
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("bad", ["", "abc", "1+2", "++i", "1i2", "inf", "nan+1i"])
def test_parse_complex_rejects(bad):
    with pytest.raises(ValueError):
        parse_complex(bad)


@pytest.mark.parametrize(
    "z", [0, 1, -1, 1j, -1j, 0.25 - 0.75j, 3 + 0j, -2.5 + 1e-3j, 1e-17j]
)
def test_format_parse_roundtrip(z):
    assert parse_complex(format_complex(z)) == complex(z)


def test_format_complex_spelling():
    assert format_complex(1 + 0j) == "1"
    assert format_complex(0.5 - 2j) == "0.5-2i"
    assert format_complex(1j) == "0+1i"


def test_coeff_file_roundtrip(tmp_path):
    path = tmp_path / "f.coeffs"
    s = PowerSeries([0.0, 1.0, 0.25 - 0.5j, -3.0])
    write_coeff_series(path, s)
    assert read_coeff_series(path) == s


def test_coeff_file_comments_and_blanks(tmp_path):
    path = tmp_path / "f.coeffs"
    path.write_text("# a normalized map\n\n0.0 0.0\n1.0 0.0\n\n0.5 -0.25\n")
    s = read_coeff_series(path)
    assert s.order == 2
    assert s[2] == 0.5 - 0.25j


@pytest.mark.parametrize(
    "body",
    [
        "0.0 0.0\n",  # only one coefficient
        "0.0 0.0\n1.0\n",  # missing imaginary column
        "0.0 0.0\n1.0 zero\n",  # not a number
        "0.0 0.0 0.0\n1.0 0.0\n",  # too many columns
    ],
)
def test_coeff_file_rejects(tmp_path, body):
    path = tmp_path / "bad.coeffs"
    path.write_text(body)
    with pytest.raises(ValueError):
        read_coeff_series(path)
