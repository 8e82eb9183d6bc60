"""Edge-stream files and a sequential, rewindable reader.

File format: the first non-comment line holds the vertex count ``n``; every
following non-comment line holds one edge ``u v`` as whitespace-separated
0-based decimal ids. Lines starting with ``#`` and blank lines are ignored.
The edge count is not declared; it is counted while reading.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Optional


class StreamFormatError(ValueError):
    """Malformed stream content. ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message}, line {line}")
        self.line = line


class Edge:
    """Undirected edge. Equality and hashing use the (min, max) form."""

    __slots__ = ("u", "v")

    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v

    def canonical(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def __iter__(self) -> Iterator[int]:
        yield self.u
        yield self.v

    def __eq__(self, other) -> bool:
        if isinstance(other, Edge):
            return self.canonical() == other.canonical()
        if isinstance(other, tuple) and len(other) == 2:
            return self.canonical() == (min(other), max(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        return f"Edge({self.u}, {self.v})"


def _is_comment(text: str) -> bool:
    return not text or text.startswith("#")


class EdgeStream:
    """One-way reader over an edge-stream file.

    There is no random access: edges come out of :meth:`next_edge` in file
    order, and :meth:`rewind` starts a new pass. ``pass_index`` counts rewinds.
    Content errors surface lazily from :meth:`next_edge` with their line
    number, since validating up front would cost an extra pass.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)
        self.pass_index = 0
        self.edges_read_this_pass = 0
        self._fh = None
        self._lineno = 0
        self._exhausted = False
        self.n = self._open()

    def _open(self) -> int:
        self._fh = open(self.path, "r", encoding="ascii")
        self._lineno = 0
        self._exhausted = False
        for raw in self._fh:
            self._lineno += 1
            text = raw.strip()
            if _is_comment(text):
                continue
            tokens = text.split()
            if len(tokens) != 1:
                raise StreamFormatError("malformed header", self._lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise StreamFormatError("non-integer token", self._lineno) from None
            if n < 0:
                raise StreamFormatError("malformed header", self._lineno)
            return n
        raise StreamFormatError("malformed header", self._lineno + 1)

    def next_edge(self) -> Optional[Edge]:
        if self._exhausted:
            return None
        for raw in self._fh:
            self._lineno += 1
            text = raw.strip()
            if _is_comment(text):
                continue
            tokens = text.split()
            if len(tokens) != 2:
                raise StreamFormatError("expected two vertex ids", self._lineno)
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise StreamFormatError("non-integer token", self._lineno) from None
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise StreamFormatError("vertex id out of range", self._lineno)
            self.edges_read_this_pass += 1
            return Edge(u, v)
        self._exhausted = True
        return None

    def rewind(self) -> None:
        # legal mid-pass; the consumer owns whatever it had read so far
        self._fh.close()
        self.pass_index += 1
        self.edges_read_this_pass = 0
        n = self._open()
        if n != self.n:
            raise StreamFormatError("header changed between passes", self._lineno)

    def edges(self) -> Iterator[Edge]:
        """Yield the remaining edges of the current pass."""
        while (e := self.next_edge()) is not None:
            yield e

    def close(self) -> None:
        if self._fh is not None:
            self._fh.close()
            self._fh = None

    def __enter__(self) -> "EdgeStream":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def open_stream(path: str | os.PathLike) -> EdgeStream:
    return EdgeStream(path)


def write_stream(path: str | os.PathLike, n: int, edges: Iterable, comment: str | None = None) -> None:
    """Write ``n`` and the given edges in stream format."""
    with open(path, "w", encoding="ascii") as fh:
        if comment:
            for line in comment.splitlines():
                fh.write(f"# {line}\n")
        fh.write(f"{n}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")
