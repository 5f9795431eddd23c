"""Bit-exact text interchange format for weighing matrices and designs.

Grammar::

    header  = ("W" order weight | "OD" order type-csv) {flag}
    flag    = "sym" | "skew" | "circ"
    body    = order rows of exactly order tokens, single-space separated
    token   = "0" | "+" | "-"            (weighing; "1" and "-1" read as aliases)
            | "0" | "+j" | "-j"          (design; j is a 1-based variable index)

Parsing returns an unverified candidate (matrix, claim, flags); verification
is a separate step.  Emission is canonical: flags in the order sym, skew,
circ; weighing signs as ``+``/``-``; one trailing newline.  Re-emitting a
parsed file reproduces it byte for byte.
"""

from __future__ import annotations

from typing import Sequence, Union

import numpy as np

from .matrices import IntMatrix, ODType, SignedVarMatrix, WeighingType

__all__ = ["MatrixFileError", "parse_matrix_file", "emit_matrix_file", "FLAG_ORDER"]

FLAG_ORDER = ("sym", "skew", "circ")

Claim = Union[WeighingType, ODType]
Matrix = Union[IntMatrix, SignedVarMatrix]


class MatrixFileError(ValueError):
    """Malformed matrix file; the message carries line and token positions."""


def _fail(line: int, column: int | None, message: str) -> "MatrixFileError":
    place = f"line {line}" if column is None else f"line {line}, token {column}"
    return MatrixFileError(f"{place}: {message}")


def _parse_header(line: str) -> tuple[Claim, tuple[str, ...]]:
    fields = line.split(" ")
    if "" in fields:
        raise _fail(1, None, "header tokens must be separated by single spaces")
    if fields[0] == "W":
        if len(fields) < 3:
            raise _fail(1, None, "weighing header needs order and weight")
        kind_args, flag_fields = fields[1:3], fields[3:]
        try:
            n, k = int(kind_args[0]), int(kind_args[1])
        except ValueError:
            raise _fail(1, None, f"order and weight must be integers, got {kind_args}")
        try:
            claim: Claim = WeighingType(n, k)
        except Exception as err:
            raise _fail(1, None, str(err))
    elif fields[0] == "OD":
        if len(fields) < 3:
            raise _fail(1, None, "design header needs order and a type list")
        try:
            n = int(fields[1])
            type_tuple = tuple(int(part) for part in fields[2].split(","))
        except ValueError:
            raise _fail(1, None, "design header needs integer order and comma-joined type")
        try:
            claim = ODType(n, type_tuple)
        except Exception as err:
            raise _fail(1, None, str(err))
        flag_fields = fields[3:]
    else:
        raise _fail(1, 1, f"unknown matrix kind {fields[0]!r} (expected W or OD)")
    flags = []
    for pos, flag in enumerate(flag_fields, start=len(fields) - len(flag_fields) + 1):
        if flag not in FLAG_ORDER:
            raise _fail(1, pos, f"unknown flag {flag!r}")
        if flag in flags:
            raise _fail(1, pos, f"duplicate flag {flag!r}")
        flags.append(flag)
    return claim, tuple(sorted(flags, key=FLAG_ORDER.index))


_WEIGHING_TOKENS = {"0": 0, "+": 1, "-": -1, "1": 1, "-1": -1}


def _parse_weighing_token(token: str, line: int, column: int) -> int:
    try:
        return _WEIGHING_TOKENS[token]
    except KeyError:
        raise _fail(line, column, f"bad weighing token {token!r} (expected 0, +, -)")


def _parse_od_token(token: str, num_vars: int, line: int, column: int) -> int:
    if token == "0":
        return 0
    sign = {"+": 1, "-": -1}.get(token[:1])
    if sign is None or not token[1:].isdigit():
        raise _fail(line, column, f"bad design token {token!r} (expected 0, +j, -j)")
    index = int(token[1:])
    if not 1 <= index <= num_vars:
        raise _fail(
            line, column, f"variable index {index} outside 1..{num_vars}"
        )
    return sign * index


def parse_matrix_file(text: str) -> tuple[Matrix, Claim, tuple[str, ...]]:
    """Parse a matrix file into (matrix, claim, flags); no verification."""
    lines = text.split("\n")
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MatrixFileError("empty file")
    claim, flags = _parse_header(lines[0])
    n = claim.order
    if len(lines) - 1 != n:
        raise MatrixFileError(
            f"body has {len(lines) - 1} rows, header promises {n}"
        )
    grid = []
    for row_index, line in enumerate(lines[1:], start=2):
        tokens = line.split(" ")
        if "" in tokens:
            raise _fail(row_index, None, "tokens must be separated by single spaces")
        if len(tokens) != n:
            raise _fail(
                row_index, None, f"row has {len(tokens)} tokens, expected {n}"
            )
        if isinstance(claim, WeighingType):
            grid.append(
                [
                    _parse_weighing_token(tok, row_index, col)
                    for col, tok in enumerate(tokens, start=1)
                ]
            )
        else:
            grid.append(
                [
                    _parse_od_token(tok, claim.num_vars, row_index, col)
                    for col, tok in enumerate(tokens, start=1)
                ]
            )
    if isinstance(claim, WeighingType):
        return IntMatrix(grid), claim, flags
    return SignedVarMatrix(np.array(grid, dtype=np.int64), claim.num_vars), claim, flags


def _emit_weighing_token(value: int) -> str:
    if value == 0:
        return "0"
    if value == 1:
        return "+"
    if value == -1:
        return "-"
    raise MatrixFileError(f"weighing entries must lie in {{0, +1, -1}}, got {value}")


def _emit_od_token(code: int) -> str:
    if code == 0:
        return "0"
    return f"+{code}" if code > 0 else f"-{-code}"


def emit_matrix_file(
    matrix: Matrix, claim: Claim, flags: Sequence[str] = ()
) -> str:
    """Canonical text form of a matrix under its claim; ends with newline."""
    for flag in flags:
        if flag not in FLAG_ORDER:
            raise MatrixFileError(f"unknown flag {flag!r}")
    if len(set(flags)) != len(tuple(flags)):
        raise MatrixFileError("duplicate flags")
    ordered_flags = sorted(flags, key=FLAG_ORDER.index)
    suffix = ("" if not ordered_flags else " " + " ".join(ordered_flags))
    if isinstance(claim, WeighingType):
        if not isinstance(matrix, IntMatrix):
            raise MatrixFileError("weighing claim needs an integer matrix")
        header = f"W {claim.order} {claim.weight}{suffix}"
        token_of = _emit_weighing_token
        payload = matrix.entries
    else:
        if not isinstance(matrix, SignedVarMatrix):
            raise MatrixFileError("design claim needs a symbolic matrix")
        if matrix.num_vars != claim.num_vars:
            raise MatrixFileError(
                f"matrix has {matrix.num_vars} variables, claim has {claim.num_vars}"
            )
        type_csv = ",".join(str(s) for s in claim.type_tuple)
        header = f"OD {claim.order} {type_csv}{suffix}"
        token_of = _emit_od_token
        payload = matrix.codes
    if payload.shape != (claim.order, claim.order):
        raise MatrixFileError(
            f"matrix shape {payload.shape} does not match claimed order {claim.order}"
        )
    lines = [header]
    for row in payload:
        lines.append(" ".join(token_of(int(v)) for v in row))
    return "\n".join(lines) + "\n"
