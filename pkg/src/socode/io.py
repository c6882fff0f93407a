"""File formats: MTX1 matrices, bounds CSV, JSON-lines search records, and runtime config."""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Union

from .gf2 import BitMatrix

PathLike = Union[str, Path]

BUNDLED = ("h3", "g8_3", "g10_3", "g11_4", "g14_4", "so45_5", "so53_5", "so60_5", "rm16_5")


class MatrixFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class MatrixFile:
    path: str
    k: int
    n: int
    matrix: BitMatrix


def parse_matrix_text(text: str, path: str = "<string>") -> MatrixFile:
    """MTX1: a ``k n`` header then k rows of n binary digits; ``#`` starts a comment line."""
    lines = [(no, raw.strip()) for no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(no, s) for no, s in lines if s and not s.startswith("#")]
    if not lines:
        raise MatrixFormatError("missing 'k n' header")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MatrixFormatError(f"malformed header {header!r}, expected 'k n'", no)
    k, n = int(parts[0]), int(parts[1])
    if k < 1 or n < 1:
        raise MatrixFormatError("k and n must be positive", no)
    body = lines[1:]
    if len(body) != k:
        where = body[k][0] if len(body) > k else (body[-1][0] if body else no)
        raise MatrixFormatError(f"expected {k} rows, found {len(body)}", where)
    rows = []
    for no, line in body:
        digits = "".join(line.split())
        bad = [ch for ch in digits if ch not in "01"]
        if bad:
            raise MatrixFormatError(f"invalid character {bad[0]!r}", no)
        if len(digits) != n:
            raise MatrixFormatError(f"row has {len(digits)} entries, expected {n}", no)
        rows.append(digits)
    return MatrixFile(path, k, n, BitMatrix.from_strings(rows))


def parse_matrix(path: PathLike) -> MatrixFile:
    p = Path(path)
    return parse_matrix_text(p.read_text(), str(p))


def format_matrix(m: BitMatrix, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{m.rows} {m.cols}")
    out.extend(m.to_strings())
    return "\n".join(out) + "\n"


def write_matrix(path: PathLike, m: BitMatrix, comment: str | None = None) -> None:
    Path(path).write_text(format_matrix(m, comment))


def bundled_path(name: str) -> Path:
    if name not in BUNDLED:
        raise KeyError(f"no bundled matrix {name!r}; have {', '.join(BUNDLED)}")
    return Path(str(resources.files("socode") / "data" / f"{name}.mtx"))


def load_bundled(name: str) -> BitMatrix:
    return parse_matrix(bundled_path(name)).matrix


def read_bounds(path: PathLike) -> dict[tuple[int, int], int]:
    """Bounds CSV with header ``n,k,d``; later rows override earlier ones."""
    out: dict[tuple[int, int], int] = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["n", "k", "d"]:
            raise ValueError(f"{path}: expected header 'n,k,d'")
        for lineno, row in enumerate(reader, start=2):
            try:
                n, k, d = (int(row[f].strip()) for f in ("n", "k", "d"))
            except (TypeError, ValueError, AttributeError):
                raise ValueError(f"{path}:{lineno}: bad bounds row {row}") from None
            out[(n, k)] = d
    return out


def write_jsonl(path: PathLike, items: Iterable[dict]) -> None:
    with open(path, "w") as fh:
        for item in items:
            fh.write(json.dumps(item, sort_keys=True) + "\n")


def read_jsonl(path: PathLike) -> list[dict]:
    with open(path) as fh:
        return [json.loads(line) for line in fh if line.strip()]


def default_cache_dir() -> Path:
    env = os.environ.get("SOCODE_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "socode"


@dataclass
class Config:
    max_k: int = 6
    max_table_k: int = 6
    mindist_limit_k: int = 28
    max_dual_dim: int = 24
    cache_dir: Path | None = field(default_factory=default_cache_dir)
    bounds_csv: Path | None = None
    output_format: str = "text"

    def __post_init__(self):
        for name in ("max_k", "max_table_k", "mindist_limit_k", "max_dual_dim"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.max_table_k > 7:
            raise ValueError("max_table_k cannot exceed 7")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    @property
    def allow_k7(self) -> bool:
        return self.max_table_k >= 7
