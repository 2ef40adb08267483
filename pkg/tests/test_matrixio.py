"""Tests for the plain-text matrix file format."""

import numpy as np
import pytest

from matcond.matrixio import format_entry, parse_entry, read_matrix, write_matrix


def test_format_real_shortest_roundtrip():
    assert format_entry(1.0) == "1.0"
    assert format_entry(0.1) == "0.1"
    assert format_entry(1e-10) == "1e-10"
    assert format_entry(-2.5e6) == "-2500000.0"


def test_format_complex():
    assert format_entry(1.5 - 2e-7j) == "1.5-2e-07i"
    assert format_entry(0.0 + 1.0j) == "0.0+1.0i"
    assert format_entry(np.complex128(-3.0 - 4.0j)) == "-3.0-4.0i"


def test_parse_entry():
    assert parse_entry("1e-10", want_complex=False) == 1e-10
    assert parse_entry("1.5-2e-07i", want_complex=True) == 1.5 - 2e-7j
    assert parse_entry("2.0", want_complex=True) == 2.0 + 0.0j


def test_entry_roundtrip_exact():
    rng = np.random.default_rng(0)
    for x in rng.standard_normal(50) * 10.0 ** rng.integers(-12, 12, size=50):
        assert parse_entry(format_entry(x), want_complex=False) == x
    for z in rng.standard_normal(50) + 1j * rng.standard_normal(50):
        assert parse_entry(format_entry(z), want_complex=True) == z


def test_real_file_roundtrip(tmp_path):
    rng = np.random.default_rng(1)
    a = rng.standard_normal((4, 3)) * 10.0 ** rng.integers(-9, 9, size=(4, 3))
    path = tmp_path / "a.txt"
    write_matrix(path, a)
    b = read_matrix(path)
    assert b.dtype == np.float64
    assert np.array_equal(a, b)


def test_complex_file_roundtrip(tmp_path):
    rng = np.random.default_rng(2)
    a = rng.standard_normal((3, 5)) + 1j * rng.standard_normal((3, 5))
    a[0, 0] = 1.5 - 2e-7j
    path = tmp_path / "z.txt"
    write_matrix(path, a)
    b = read_matrix(path)
    assert b.dtype == np.complex128
    assert np.array_equal(a, b)


def test_write_read_write_byte_identical(tmp_path):
    rng = np.random.default_rng(3)
    a = rng.standard_normal((5, 5))
    p1 = tmp_path / "one.txt"
    p2 = tmp_path / "two.txt"
    write_matrix(p1, a)
    write_matrix(p2, read_matrix(p1))
    assert p1.read_bytes() == p2.read_bytes()


def test_header_layout(tmp_path):
    path = tmp_path / "h.txt"
    write_matrix(path, np.eye(2))
    lines = path.read_text().splitlines()
    assert lines[0] == "2 2 real"
    assert lines[1] == "1.0 0.0"
    assert len(lines) == 3


def test_read_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 2 integer\n1 0\n0 1\n")
    with pytest.raises(ValueError, match="header"):
        read_matrix(path)


def test_read_rejects_row_count_mismatch(tmp_path):
    path = tmp_path / "short.txt"
    path.write_text("3 2 real\n1.0 0.0\n0.0 1.0\n")
    with pytest.raises(ValueError):
        read_matrix(path)


def test_read_rejects_bad_entry(tmp_path):
    path = tmp_path / "entry.txt"
    path.write_text("1 2 real\n1.0 zebra\n")
    with pytest.raises(ValueError, match="zebra"):
        read_matrix(path)


def test_read_rejects_entry_count_mismatch(tmp_path):
    path = tmp_path / "wide.txt"
    path.write_text("1 2 real\n1.0 2.0 3.0\n")
    with pytest.raises(ValueError):
        read_matrix(path)


def test_read_rejects_empty(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    with pytest.raises(ValueError, match="empty"):
        read_matrix(path)


def test_write_rejects_non_2d(tmp_path):
    with pytest.raises(ValueError):
        write_matrix(tmp_path / "v.txt", np.ones(3))
