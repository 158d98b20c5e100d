"""Readers and writers for the on-disk formats. All indices on disk are 1-based.

Edge lists hold one ``i j`` pair per line (``i < j``, ascending). Writers add a
leading ``# n=<count>`` comment so isolated players survive a round trip;
readers accept it, and any other ``#`` line is ignored.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph
from .portfolio import ResourceModel
from .stability import as_cost_matrix, as_psi_matrix

_N_HEADER = re.compile(r"#\s*n\s*=\s*(\d+)")


class FormatError(ValueError):
    pass


def _write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def _format_real(x: float) -> str:
    x = float(x)
    if x == int(x):
        return str(int(x))
    return repr(x)


def format_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n}"] + [f"{i + 1} {j + 1}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse an edge list. Player count comes from the ``# n=`` header, else
    ``n``, else the largest index seen."""
    header_n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _N_HEADER.fullmatch(line)
            if match:
                header_n = int(match.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'i j', got {raw!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer entry in {raw!r}") from None
        if i < 1 or j < 1:
            raise FormatError(f"line {lineno}: indices are 1-based, got {raw!r}")
        pairs.append((i - 1, j - 1))
    if header_n is not None:
        n = header_n
    if n is None:
        n = max((max(p) + 1 for p in pairs), default=0)
    try:
        return Graph(n, frozenset(pairs))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def read_edge_list(path, n: int | None = None) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"), n)


def write_edge_list(path, g: Graph) -> None:
    _write_text(path, format_edge_list(g))


def parse_degree_sequence(text: str, as_json: bool) -> tuple[int, ...]:
    if as_json:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
    else:
        data = [line.strip() for line in text.splitlines() if line.strip()]
    if not isinstance(data, list):
        raise FormatError("degree sequence must be a JSON array")
    out = []
    for x in data:
        if isinstance(x, bool):
            raise FormatError(f"non-integer degree {x!r}")
        try:
            v = int(x)
        except (TypeError, ValueError):
            raise FormatError(f"non-integer degree {x!r}") from None
        if isinstance(x, float) and x != v:
            raise FormatError(f"non-integer degree {x!r}")
        if v < 0:
            raise FormatError(f"negative degree {v}")
        out.append(v)
    return tuple(out)


def read_degree_sequence(path) -> tuple[int, ...]:
    path = Path(path)
    return parse_degree_sequence(path.read_text(encoding="utf-8"), path.suffix.lower() == ".json")


def write_degree_sequence(path, k: Sequence[int]) -> None:
    path = Path(path)
    if path.suffix.lower() == ".json":
        _write_text(path, json.dumps([int(x) for x in k]) + "\n")
    else:
        _write_text(path, "".join(f"{int(x)}\n" for x in k))


def format_matrix_csv(m: np.ndarray) -> str:
    n = m.shape[0]
    lines = [str(n)] + [",".join(_format_real(x) for x in row) for row in m]
    return "\n".join(lines) + "\n"


def parse_matrix_csv(text: str) -> np.ndarray:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"first line must be the player count, got {lines[0]!r}") from None
    rows = lines[1:]
    if len(rows) != n:
        raise FormatError(f"expected {n} rows, got {len(rows)}")
    try:
        m = np.array([[float(x) for x in row.split(",")] for row in rows]) if n else np.zeros((0, 0))
    except ValueError as exc:
        raise FormatError(f"bad matrix entry: {exc}") from None
    if m.shape != (n, n):
        raise FormatError(f"expected {n}x{n} entries")
    return m


def read_cost_matrix(path) -> np.ndarray:
    m = parse_matrix_csv(Path(path).read_text(encoding="utf-8"))
    try:
        return as_cost_matrix(m)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def write_cost_matrix(path, c) -> None:
    _write_text(path, format_matrix_csv(as_cost_matrix(c)))


def read_psi_matrix(path) -> np.ndarray:
    m = parse_matrix_csv(Path(path).read_text(encoding="utf-8"))
    try:
        return as_psi_matrix(m)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def write_psi_matrix(path, psi) -> None:
    _write_text(path, format_matrix_csv(as_psi_matrix(psi).astype(int)))


def read_resource_model(path, resolution: float = 1e-3) -> ResourceModel:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return ResourceModel(np.array(data["A"], dtype=float), np.array(data["b"], dtype=float), resolution)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad resource model: {exc}") from None


def write_resource_model(path, resources: ResourceModel) -> None:
    write_json(path, {"A": resources.A.tolist(), "b": resources.b.tolist()})


def write_json(path, obj) -> None:
    _write_text(path, json.dumps(obj, indent=2) + "\n")


def format_histogram_csv(hist: Iterable[tuple[int, int]]) -> str:
    return "degree,count\n" + "".join(f"{d},{c}\n" for d, c in hist)


def format_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v + 1};" for v in range(g.n)]
    lines += [f"  {i + 1} -- {j + 1};" for i, j in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
