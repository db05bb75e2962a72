"""Plain-text, CSV and JSON encodings for matrices and vectors.

Matrix text format::

    rows cols
    #row <subset>        (optional, one line per row label, in order)
    #col <subset>        (optional, one line per column label, in order)
    a11 a12 ...
    ...

Other lines starting with ``#`` are comments.

Vectors are one entry per line, integers or ``p/q`` rationals, each optionally
followed by ``#<subset>``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .matrices import ExactMatrix
from .subsets import Subset, format_subset, parse_subset


def matrix_to_text(M: ExactMatrix, labels: bool = True) -> str:
    lines = [f"{M.nrows} {M.ncols}"]
    if labels and M.row_labels is not None:
        lines += [f"#row {format_subset(L)}".rstrip() for L in M.row_labels]
    if labels and M.col_labels is not None:
        lines += [f"#col {format_subset(L)}".rstrip() for L in M.col_labels]
    lines += [" ".join(str(x) for x in row) for row in M.entries]
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> ExactMatrix:
    lines = [ln for ln in text.splitlines()
             if ln.strip() and (not ln.startswith("#") or ln.startswith(("#row", "#col")))]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        nrows, ncols = (int(x) for x in lines[0].split())
    except ValueError:
        raise ValueError(f"bad matrix header: {lines[0]!r}") from None
    row_labels: List[Subset] = []
    col_labels: List[Subset] = []
    rows = []
    for ln in lines[1:]:
        if ln.startswith("#row"):
            row_labels.append(parse_subset(ln[4:]))
        elif ln.startswith("#col"):
            col_labels.append(parse_subset(ln[4:]))
        else:
            try:
                rows.append([int(x) for x in ln.split()])
            except ValueError:
                raise ValueError(f"non-integer matrix entry in {ln!r}") from None
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise ValueError(f"matrix body does not match the header {nrows} x {ncols}")
    return ExactMatrix.from_rows(rows, ncols, row_labels or None, col_labels or None)


def matrix_to_csv(M: ExactMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    has_row_labels = M.row_labels is not None
    if M.col_labels is not None:
        corner = [""] if has_row_labels else []
        writer.writerow(corner + [format_subset(L) for L in M.col_labels])
    for i, row in enumerate(M.entries):
        prefix = [format_subset(M.row_labels[i])] if has_row_labels else []
        writer.writerow(prefix + list(row))
    return buf.getvalue()


def matrix_to_dict(M: ExactMatrix) -> dict:
    out = {"rows": M.nrows, "cols": M.ncols, "entries": [list(r) for r in M.entries]}
    if M.row_labels is not None:
        out["row_labels"] = [format_subset(L) for L in M.row_labels]
    if M.col_labels is not None:
        out["col_labels"] = [format_subset(L) for L in M.col_labels]
    return out


def matrix_to_json(M: ExactMatrix) -> str:
    return json.dumps(matrix_to_dict(M))


def format_number(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_number(text: str):
    x = Fraction(text.strip())
    return x.numerator if x.denominator == 1 else x


def vector_to_text(values: Sequence, labels: Optional[Sequence[Subset]] = None) -> str:
    if labels is not None and len(labels) != len(values):
        raise ValueError("label count does not match the vector length")
    lines = []
    for i, x in enumerate(values):
        line = format_number(x)
        if labels is not None:
            line += f" #{format_subset(labels[i])}"
        lines.append(line)
    return "\n".join(lines) + ("\n" if lines else "")


def vector_from_text(text: str) -> Tuple[list, Optional[List[Subset]]]:
    """Parse a vector file; returns ``(values, labels)`` with labels ``None``
    unless every line carries one."""
    values = []
    labels: List[Subset] = []
    for ln in text.splitlines():
        body, sep, comment = ln.partition("#")
        if not body.strip():
            continue
        try:
            values.append(parse_number(body))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad vector entry {body.strip()!r}") from None
        if sep:
            labels.append(parse_subset(comment))
    return values, (labels if len(labels) == len(values) and labels else None)
