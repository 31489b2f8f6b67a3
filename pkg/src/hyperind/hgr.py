"""Reading and writing the HGR text format.

::

    c optional comment lines, only before the header
    p hg <n> <m> <k>        k = r + 1 vertices per edge
    e v1 v2 ... vk          m edge lines, vertices 1-indexed
"""

from __future__ import annotations

from pathlib import Path

from .errors import HGRSyntaxError, HyperindError
from .hypergraph import Hypergraph, build


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise HGRSyntaxError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_hgr(text: str) -> Hypergraph:
    header = None
    edges: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        tag = tokens[0]
        if tag == "c":
            if header is not None:
                raise HGRSyntaxError("comment lines must precede the header", lineno)
            continue
        if tag == "p":
            if header is not None:
                raise HGRSyntaxError("duplicate header", lineno)
            if len(tokens) != 5 or tokens[1] != "hg":
                raise HGRSyntaxError("header must read 'p hg <n> <m> <k>'", lineno)
            n, m, k = _ints(tokens[2:], lineno)
            if n < 0 or m < 0 or k < 2:
                raise HGRSyntaxError(f"bad header values n={n} m={m} k={k}", lineno)
            header = (n, m, k)
            continue
        if tag == "e":
            if header is None:
                raise HGRSyntaxError("edge line before header", lineno)
            vs = _ints(tokens[1:], lineno)
            if len(vs) != header[2]:
                raise HGRSyntaxError(f"edge has {len(vs)} vertices, header says {header[2]}", lineno)
            edges.append([v - 1 for v in vs])
            continue
        raise HGRSyntaxError(f"unknown line type {tag!r}", lineno)
    if header is None:
        raise HGRSyntaxError("missing 'p hg' header")
    n, m, k = header
    if len(edges) != m:
        raise HGRSyntaxError(f"header declares {m} edges, found {len(edges)}")
    return build(n, k - 1, edges)


def serialize_hgr(H: Hypergraph) -> str:
    lines = [f"p hg {H.n} {H.m} {H.r + 1}"]
    lines.extend("e " + " ".join(str(v + 1) for v in e) for e in H.edges)
    return "\n".join(lines) + "\n"


def read_hgr(path: str | Path) -> Hypergraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise HyperindError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_hgr(text)


def write_hgr(H: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(serialize_hgr(H), encoding="utf-8", newline="\n")
