# -*- coding: utf-8 -*-
"""
Serialization of ``planarturan`` data structures.

Graphs are written in the graph6 format, as documented at
https://users.cecs.anu.edu.au/~bdm/data/formats.txt . Certificates are JSON documents
which embed the graph6 encoding of their graph.
"""
import json
from os import PathLike
from typing import Iterable, TextIO, Union

from . import __version__
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def encode_size(n: int) -> str:
    """graph6 encoding of a vertex count."""
    if n < 0 or n > 68719476735:
        raise ValueError(f"graph6 cannot encode {n} vertices")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def graph6_encode(g: Graph, header: bool = False) -> str:
    """
    Encode a graph in the graph6 format.

    The upper triangle of the adjacency matrix is read column by column, packed into
    groups of six bits and offset by 63.

    Parameters
    ----------
    g : Graph
        Graph to encode.
    header : bool, optional
        If True, prefix the encoding with ``>>graph6<<``.

    Returns
    -------
    encoded : str
        Printable ASCII string, without trailing newline.

    Examples
    --------
    >>> from planarturan import complete_graph
    >>> graph6_encode(complete_graph(3))
    'Bw'
    """
    adj = g.adjacency
    chars = list()
    group, filled = 0, 0
    for j in range(1, g.n):
        for i in range(j):
            group = (group << 1) | ((adj[i] >> j) & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        chars.append(chr((group << (6 - filled)) + 63))
    prefix = GRAPH6_HEADER if header else ""
    return prefix + encode_size(g.n) + "".join(chars)


def write_graph6(graphs: Iterable[Graph], stream: TextIO, header: bool = False) -> int:
    """
    Write graphs to a text stream, one graph6 line per graph.

    Returns
    -------
    count : int
        Number of graphs written.
    """
    count = 0
    for g in graphs:
        stream.write(graph6_encode(g, header=header and count == 0) + "\n")
        count += 1
    return count


def write_certificate(certificate, fname: Union[str, PathLike, TextIO]) -> None:
    """
    Write a certificate as a JSON document.

    Parameters
    ----------
    certificate : Certificate
        Certificate to write.
    fname : path-like or text stream
        Destination. Files are overwritten.
    """
    payload = certificate.as_dict()
    if hasattr(fname, "write"):
        json.dump(payload, fname, indent=2)
        fname.write("\n")
        return
    with open(fname, "wt", encoding="utf-8") as file:
        json.dump(payload, file, indent=2)
        file.write("\n")


def certificate_json(certificate) -> str:
    """JSON text of a certificate."""
    return json.dumps(certificate.as_dict(), indent=2)


def tool_signature() -> str:
    return f"planarturan {__version__}"
