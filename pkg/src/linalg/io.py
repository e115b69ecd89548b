import logging
from pathlib import Path

from ..cyclotomic.field import CycNum
from ..cyclotomic.text import format_cyc, parse_cyc
from ..errors import DataFileError, Klein168Error
from .matrix import CycMatrix

logger = logging.getLogger(__name__)


def split_entries(row: str) -> list[str]:
    """Split on ';' outside parentheses"""
    parts, depth, current = [], 0, []
    for ch in row:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == ";" and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    tail = "".join(current).strip()
    if tail:
        parts.append(tail)
    return parts


def parse_matrix_rows(lines: list[str], conductor: int, scale: CycNum | None = None) -> CycMatrix:
    rows = [[parse_cyc(entry, conductor) for entry in split_entries(line)] for line in lines]
    matrix = CycMatrix.from_rows(rows, conductor)
    return matrix.scale(scale) if scale is not None else matrix


def loads_matrices(text: str, source: str = "<string>") -> dict[str, CycMatrix]:
    """Parse the matrix file format.

    Directives: `@conductor n` sets the default conductor for bare entries,
    `@matrix name` starts a matrix, `@scale expr` multiplies the next matrix.
    Every other non-blank, non-comment line is one row of ';'-separated entries.
    """
    matrices: dict[str, CycMatrix] = {}
    conductor = 1
    scale: CycNum | None = None
    name: str | None = None
    rows: list[str] = []

    def flush():
        nonlocal scale, rows, name
        if name is None:
            return
        if not rows:
            raise DataFileError("%s: matrix %r has no rows" % (source, name))
        matrices[name] = parse_matrix_rows(rows, conductor, scale)
        scale, rows, name = None, [], None

    try:
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("@conductor"):
                flush()
                conductor = int(line.split()[1])
            elif line.startswith("@matrix"):
                flush()
                name = line.split(None, 1)[1].strip()
            elif line.startswith("@scale"):
                if rows:
                    flush()
                scale = parse_cyc(line.split(None, 1)[1], conductor)
            else:
                if name is None:
                    raise DataFileError("%s:%d: row outside of a @matrix block" % (source, lineno))
                rows.append(line)
        flush()
    except (Klein168Error, IndexError, ValueError) as e:
        if isinstance(e, DataFileError):
            raise
        raise DataFileError("%s: %s" % (source, e)) from e

    logger.debug("Loaded %d matrices from %s", len(matrices), source)
    return matrices


def load_matrices(path: Path) -> dict[str, CycMatrix]:
    path = Path(path)
    if not path.exists():
        raise DataFileError("Matrix file not found: %s" % path)
    return loads_matrices(path.read_text(encoding="utf-8"), str(path))


def format_matrix_rows(matrix: CycMatrix) -> str:
    return "\n".join("; ".join(format_cyc(x) for x in matrix.row(i)) for i in range(matrix.rows))


def dumps_matrices(matrices: dict[str, CycMatrix]) -> str:
    blocks = []
    for name, matrix in matrices.items():
        blocks.append("@matrix %s\n%s" % (name, format_matrix_rows(matrix)))
    return "\n\n".join(blocks) + "\n"
