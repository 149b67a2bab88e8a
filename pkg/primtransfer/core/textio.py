"""Matrix text format.

::

    # optional comment lines
    3
    010
    001
    000

The first non-comment line is ``n``, followed by ``n`` lines of ``n``
characters from ``{0, 1}``. A single space between two entries is ignored
(``0 1 0``). Blank lines are skipped. Writers emit no spaces and no comments.
"""

from pathlib import Path

from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.exceptions import MatrixFormatError


def _parse_row(text: str, n: int, line: int, source: str) -> int:
    mask = 0
    column = 0
    previous = ""
    for offset, char in enumerate(text):
        position = offset + 1
        if char == " ":
            following = text[offset + 1 : offset + 2]
            if previous not in ("0", "1") or following not in ("0", "1"):
                raise MatrixFormatError(
                    "only single spaces between entries are allowed",
                    line,
                    position,
                    source,
                )
        elif char in ("0", "1"):
            if column >= n:
                raise MatrixFormatError(
                    f"row has more than {n} entries", line, position, source
                )
            if char == "1":
                mask |= 1 << column
            column += 1
        else:
            raise MatrixFormatError(
                f"unexpected character {char!r}", line, position, source
            )
        previous = char
    if column != n:
        raise MatrixFormatError(
            f"row has {column} entries, expected {n}", line, len(text) + 1, source
        )
    return mask


def parse_matrix(text: str, source: str = "<string>") -> ZeroOneMatrix:
    """Parse the matrix text format.

    Raises:
        MatrixFormatError: With the 1-based line and column of the first problem.
    """
    n: int | None = None
    rows: list[int] = []
    last_line = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        stripped = raw.rstrip()
        if not stripped or stripped.lstrip().startswith("#"):
            continue
        if n is None:
            token = stripped.strip()
            if not token.isdigit() or int(token) < 1:
                raise MatrixFormatError(
                    f"expected a positive dimension, got {token!r}", number, 1, source
                )
            n = int(token)
            continue
        if len(rows) == n:
            raise MatrixFormatError(f"more than {n} rows", number, 1, source)
        rows.append(_parse_row(stripped, n, number, source))

    if n is None:
        raise MatrixFormatError("missing dimension line", last_line + 1, 1, source)
    if len(rows) != n:
        raise MatrixFormatError(
            f"expected {n} rows, got {len(rows)}", last_line + 1, 1, source
        )
    return ZeroOneMatrix(n, tuple(rows))


def format_matrix(a: ZeroOneMatrix) -> str:
    """Render ``a`` in the text format, with a trailing newline."""
    return f"{a.n}\n{a}\n"


def _decode_utf8(data: bytes, source: str) -> str:
    """Decode UTF-8 file contents, locating the first undecodable byte.

    Raises:
        MatrixFormatError: At the line and column of the offending byte.
    """
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - data.rfind(b"\n", 0, e.start)
        raise MatrixFormatError(
            f"invalid UTF-8 byte 0x{data[e.start]:02x}", line, column, source
        ) from e


def read_matrix(path: str | Path) -> ZeroOneMatrix:
    path = Path(path)
    return parse_matrix(_decode_utf8(path.read_bytes(), str(path)), source=str(path))


def write_matrix(path: str | Path, a: ZeroOneMatrix) -> None:
    Path(path).write_text(format_matrix(a), encoding="utf-8")
