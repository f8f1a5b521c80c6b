# -*- coding: utf-8 -*-
"""
Parsing of graph6 data and certificates.
"""
import json
from os import PathLike
from typing import Iterator, List, TextIO, Union

from .graph import Graph
from .writers import GRAPH6_HEADER


class ParseError(IOError):
    """
    General parsing error type.

    Parameters
    ----------
    message : str
        Description of the problem.
    offset : int or None, optional
        Byte offset of the offending character, when known.
    """

    def __init__(self, message: str, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


def _value(text: str, position: int) -> int:
    code = ord(text[position])
    if not (63 <= code <= 126):
        raise ParseError(f"Invalid graph6 character {text[position]!r}", offset=position)
    return code - 63


def graph6_decode(text: str) -> Graph:
    """
    Decode a single graph from its graph6 encoding.

    Parameters
    ----------
    text : str
        graph6 string, optionally prefixed with ``>>graph6<<``. Surrounding whitespace is ignored.

    Returns
    -------
    graph : Graph

    Raises
    ------
    ParseError
        If the header, length or padding is malformed. The byte offset of the problem is
        available as the ``offset`` attribute.

    Examples
    --------
    >>> graph6_decode("Bw").m
    3
    """
    stripped = text.strip()
    start = len(text) - len(text.lstrip())
    if stripped.startswith(GRAPH6_HEADER):
        stripped = stripped[len(GRAPH6_HEADER) :]
        start += len(GRAPH6_HEADER)
    if stripped.startswith(":") or stripped.startswith("&"):
        raise ParseError("sparse6 and digraph6 are not supported", offset=start)
    if not stripped:
        raise ParseError("Empty graph6 string", offset=start)

    # vertex count
    if stripped[0] != "~":
        n, pos = _value(stripped, 0), 1
    elif len(stripped) > 1 and stripped[1] == "~":
        if len(stripped) < 8:
            raise ParseError("Truncated graph6 size field", offset=start + len(stripped))
        n, pos = 0, 8
        for i in range(2, 8):
            n = (n << 6) | _value(stripped, i)
    else:
        if len(stripped) < 4:
            raise ParseError("Truncated graph6 size field", offset=start + len(stripped))
        n, pos = 0, 4
        for i in range(1, 4):
            n = (n << 6) | _value(stripped, i)

    nbits = n * (n - 1) // 2
    expected = pos + (nbits + 5) // 6
    if len(stripped) != expected:
        raise ParseError(
            f"Expected {expected} characters for {n} vertices, got {len(stripped)}",
            offset=start + min(len(stripped), expected),
        )

    adj = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            char_index = pos + bit // 6
            value = _value(stripped, char_index)
            if (value >> (5 - bit % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    if nbits % 6:
        last = pos + nbits // 6
        if _value(stripped, last) & ((1 << (6 - nbits % 6)) - 1):
            raise ParseError("Non-zero graph6 padding bits", offset=start + last)
    for char_index in range(pos, expected):
        _value(stripped, char_index)
    return Graph(n, adj)


def iter_graph6(stream: TextIO) -> Iterator[Graph]:
    """
    Yield graphs from a text stream with one graph6 string per line. Blank lines are skipped.

    Raises
    ------
    ParseError
        On the first malformed line; the message names the line number.
    """
    for lineno, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            yield graph6_decode(line)
        except ParseError as error:
            raise ParseError(f"Line {lineno}: {error}") from error


def read_graph6(fname: Union[str, PathLike]) -> List[Graph]:
    """Read all graphs from a graph6 file."""
    with open(fname, "rt", encoding="ascii") as file:
        return list(iter_graph6(file))


def parse_certificate(text: str):
    """
    Parse and re-verify a certificate from JSON text.

    Raises
    ------
    ParseError
        If the text is not valid JSON or lacks required fields.
    CertificateError
        If the certificate does not re-verify.
    """
    from .certificate import Certificate

    try:
        payload = json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(f"Invalid certificate JSON: {error.msg}", offset=error.pos) from error
    if not isinstance(payload, dict):
        raise ParseError("Certificate must be a JSON object")
    try:
        certificate = Certificate.from_dict(payload)
    except (KeyError, TypeError) as error:
        raise ParseError(f"Malformed certificate: {error}") from error
    return certificate.verify()


def load_certificate(fname: Union[str, PathLike]):
    """
    Load and re-verify a certificate from a JSON file.

    Raises
    ------
    ParseError
        If the file is not a certificate.
    CertificateError
        If the certificate does not re-verify.
    """
    with open(fname, "rt", encoding="utf-8") as file:
        return parse_certificate(file.read())
