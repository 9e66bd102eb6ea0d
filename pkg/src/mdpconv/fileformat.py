"""Plain-text polynomial matrix files.

::

    field 2                      # or: field 2^2 1 1 1  (ascending modulus)
    matrix 2 3
    0 1 1                        # entry (1,1): z + z^2, ascending coefficients
    0                            # the zero polynomial
    ...

Entries are listed row-major, one per line.  Over an extension field each
coefficient is a tuple ``(c0,...,c_{m-1})``.  ``#`` starts a comment and
blank lines are skipped.
"""

from __future__ import annotations

import re

from .finite_field import GF, is_prime
from .poly import Poly
from .poly_matrix import PolyMatrix

_TOKEN = re.compile(r"\([^)]*\)|\S+")


class MatrixFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


def format_field_header(field: GF) -> str:
    if field.prime:
        return f"field {field.p}"
    return f"field {field.p}^{field.m} " + " ".join(map(str, field.modulus))


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MatrixFormatError(f"expected an integer, got {tok!r}", lineno) from None


def parse_field_header(line: str, lineno: int = 1) -> GF:
    parts = line.split()
    if len(parts) < 2 or parts[0] != "field":
        raise MatrixFormatError("expected 'field <p>' or 'field <p>^<m> <c0> ... <cm>'", lineno)
    token = parts[1]
    if "^" not in token:
        if len(parts) != 2:
            raise MatrixFormatError("prime field header takes no modulus", lineno)
        p = _int(token, lineno)
        if not is_prime(p):
            raise MatrixFormatError(f"{p} is not prime", lineno)
        return GF(p)
    p_s, m_s = token.split("^", 1)
    p, m = _int(p_s, lineno), _int(m_s, lineno)
    modulus = [_int(t, lineno) for t in parts[2:]]
    if len(modulus) != m + 1:
        raise MatrixFormatError(f"modulus needs {m + 1} coefficients, got {len(modulus)}", lineno)
    try:
        return GF(p, m, modulus)
    except ValueError as exc:
        raise MatrixFormatError(str(exc), lineno) from None


def _parse_entry(field: GF, line: str, lineno: int) -> Poly:
    tokens = _TOKEN.findall(line)
    if not tokens:
        raise MatrixFormatError("empty entry", lineno)
    if tokens == ["0"]:
        return Poly.zero(field)
    coeffs = []
    for tok in tokens:
        if field.prime:
            c = _int(tok, lineno)
            if not 0 <= c < field.p:
                raise MatrixFormatError(f"coefficient {c} outside [0, {field.p})", lineno)
        else:
            if not (tok.startswith("(") and tok.endswith(")")):
                raise MatrixFormatError(f"expected a tuple (c0,...,c{field.m - 1}), got {tok!r}", lineno)
            parts = [s.strip() for s in tok[1:-1].split(",")]
            if len(parts) != field.m:
                raise MatrixFormatError(f"tuple {tok} needs {field.m} components", lineno)
            vec = [_int(s, lineno) for s in parts]
            if any(not 0 <= v < field.p for v in vec):
                raise MatrixFormatError(f"tuple component outside [0, {field.p})", lineno)
            c = field.from_vector(vec)
        coeffs.append(c)
    return Poly._raw(field, coeffs)


def parse_matrix(text: str) -> PolyMatrix:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise MatrixFormatError("empty file", 1)
    field = parse_field_header(lines[0][1], lines[0][0])
    if len(lines) < 2:
        raise MatrixFormatError("missing 'matrix <rows> <cols>' line", lines[0][0] + 1)
    lineno, shape_line = lines[1]
    parts = shape_line.split()
    if len(parts) != 3 or parts[0] != "matrix":
        raise MatrixFormatError("expected 'matrix <rows> <cols>'", lineno)
    rows, cols = _int(parts[1], lineno), _int(parts[2], lineno)
    if rows < 1 or cols < 1:
        raise MatrixFormatError("matrix dimensions must be positive", lineno)
    body = lines[2:]
    if len(body) != rows * cols:
        where = body[rows * cols][0] if len(body) > rows * cols else (body[-1][0] + 1 if body else lineno + 1)
        raise MatrixFormatError(f"expected {rows * cols} entries, found {len(body)}", where)
    entries = [_parse_entry(field, line, ln) for ln, line in body]
    return PolyMatrix(field, [entries[i * cols:(i + 1) * cols] for i in range(rows)])


def _format_entry(p: Poly) -> str:
    if p.is_zero():
        return "0"
    f = p.field
    if f.prime:
        return " ".join(map(str, p.coeffs))
    return " ".join("(" + ",".join(map(str, f.to_vector(c))) + ")" for c in p.coeffs)


def format_matrix(M: PolyMatrix) -> str:
    out = [format_field_header(M.field), f"matrix {M.rows} {M.cols}"]
    for row in M.entries:
        out.extend(_format_entry(e) for e in row)
    return "\n".join(out) + "\n"


def read_matrix(path) -> PolyMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def write_matrix(path, M: PolyMatrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(M))
