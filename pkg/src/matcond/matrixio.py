"""Plain-text matrix files.

Format: a header line ``n m real`` or ``n m complex``, followed by n lines
of m whitespace-separated entries.  Real entries are shortest round-trip
decimals; complex entries are written ``a+bi`` / ``a-bi`` with no spaces,
e.g. ``1.5-2e-07i``.
"""

from __future__ import annotations

import numpy as np

__all__ = ["format_entry", "parse_entry", "read_matrix", "write_matrix"]


def format_entry(x) -> str:
    """One entry as text; shortest decimal that round-trips."""
    if np.iscomplexobj(x):
        z = complex(x)
        re, im = repr(z.real), repr(abs(z.imag))
        sign = "-" if z.imag < 0 else "+"
        return f"{re}{sign}{im}i"
    return repr(float(x))


def parse_entry(text: str, want_complex: bool):
    if want_complex:
        # complex() accepts the a+bj form including exponents in both parts
        return complex(text.replace("i", "j"))
    return float(text)


def write_matrix(path, a) -> None:
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("matrix files hold 2-d arrays")
    is_complex = np.iscomplexobj(a)
    field = "complex" if is_complex else "real"
    lines = [f"{a.shape[0]} {a.shape[1]} {field}"]
    for row in a:
        lines.append(" ".join(format_entry(x) for x in row))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="ascii") as fh:
        raw = [line.strip() for line in fh if line.strip()]
    if not raw:
        raise ValueError(f"{path}: empty matrix file")
    header = raw[0].split()
    if len(header) != 3 or header[2] not in ("real", "complex"):
        raise ValueError(f"{path}: header must be 'n m real|complex'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError(f"{path}: bad dimensions in header") from exc
    if n < 1 or m < 1:
        raise ValueError(f"{path}: dimensions must be positive")
    if len(raw) - 1 != n:
        raise ValueError(f"{path}: expected {n} rows, found {len(raw) - 1}")
    want_complex = header[2] == "complex"
    dtype = np.complex128 if want_complex else np.float64
    out = np.zeros((n, m), dtype=dtype)
    for i, line in enumerate(raw[1:]):
        parts = line.split()
        if len(parts) != m:
            raise ValueError(f"{path}: row {i + 1} has {len(parts)} entries, expected {m}")
        for j, tok in enumerate(parts):
            try:
                out[i, j] = parse_entry(tok, want_complex)
            except ValueError as exc:
                raise ValueError(f"{path}: bad entry {tok!r} at ({i + 1},{j + 1})") from exc
    return out
