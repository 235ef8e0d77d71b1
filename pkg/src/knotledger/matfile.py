"""
Plain-text matrix files.

    # comment lines start with '#'
    2
    -1 1
     0 2

The first non-comment, non-blank line is the dimension n, followed by n
rows of n whitespace-separated integers.  format_matrix() writes the
canonical form, which parse_matrix() reads back to the same matrix and
which is reproduced byte for byte on a second write.
"""

import re

from .algebra import IntMatrix


class MatrixFormatError(ValueError):
    pass


class MalformedHeader(MatrixFormatError):
    pass


class RowLengthMismatch(MatrixFormatError):
    pass


class NonIntegerToken(MatrixFormatError):
    pass


_INT = re.compile(r"[+-]?\d+\Z")


def _to_int(token, lineno):
    if not _INT.match(token):
        raise NonIntegerToken("line %d: %r is not an integer" % (lineno, token))
    return int(token)


def parse_matrix(text):
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(i, s) for i, s in lines if s and not s.startswith("#")]
    if not lines:
        raise MalformedHeader("missing dimension header")
    header_no, header = lines[0]
    if len(header.split()) != 1:
        raise MalformedHeader("line %d: header must be a single integer, got %r" % (header_no, header))
    try:
        n = _to_int(header, header_no)
    except NonIntegerToken:
        raise MalformedHeader("line %d: header %r is not an integer" % (header_no, header)) from None
    if n < 0:
        raise MalformedHeader("line %d: negative dimension %d" % (header_no, n))
    body = lines[1:]
    if len(body) != n:
        raise MalformedHeader("header declares %d rows but %d follow" % (n, len(body)))
    rows = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != n:
            raise RowLengthMismatch("line %d: expected %d entries, got %d" % (lineno, n, len(tokens)))
        rows.append([_to_int(tok, lineno) for tok in tokens])
    return IntMatrix(rows)


def format_matrix(M):
    rows = M.rows if isinstance(M, IntMatrix) else IntMatrix(M).rows
    out = [str(len(rows))]
    out.extend(" ".join(str(x) for x in row) for row in rows)
    return "\n".join(out) + "\n"


def read_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def write_matrix(path, M):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_matrix(M))
