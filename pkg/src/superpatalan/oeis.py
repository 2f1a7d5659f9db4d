"""OEIS b-file reading, writing and cross-checking against local files.

Nothing here touches the network; reference files are supplied by the user.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .exact import Params
from .sequences import SequenceSlice

_DATA_LINE = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")

READ_ORDERS = ("antidiagonal", "row")


class BFileError(ValueError):
    """Malformed or non-contiguous b-file text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class BFile:
    pairs: tuple[tuple[int, int], ...]
    source: str = "<text>"

    @property
    def indices(self) -> list[int]:
        return [i for i, _ in self.pairs]

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.pairs]

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class CheckConfig:
    """How a generated sequence lines up with a reference b-file.

    ``prefix_skip`` reference terms are dropped first. If ``offset`` is None
    the remaining terms are compared position by position with the
    generated values; otherwise reference index ``r`` is compared with
    generated index ``r - offset``.
    """

    family: str = "patalan"
    params: Params | None = None
    offset: int | None = None
    prefix_skip: int = 0
    read_order: str = "antidiagonal"

    def __post_init__(self):
        if self.prefix_skip < 0:
            raise ValueError("prefix_skip must be >= 0")
        if self.read_order not in READ_ORDERS:
            raise ValueError(f"read order must be one of {READ_ORDERS}")


@dataclass(frozen=True)
class CrossCheckReport:
    status: str  # "match", "mismatch" or "inconclusive"
    compared: int
    index: int | None = None
    reference_value: int | None = None
    generated_value: int | None = None

    @property
    def ok(self) -> bool:
        return self.status != "mismatch"

    def line(self) -> str:
        if self.status == "match":
            return f"MATCH {self.compared} terms"
        if self.status == "inconclusive":
            return "INCONCLUSIVE no overlapping terms"
        return (
            f"MISMATCH at index {self.index}: reference={self.reference_value} "
            f"generated={self.generated_value} ({self.compared} terms matched before)"
        )


def read_bfile(text: str, source: str = "<text>") -> BFile:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _DATA_LINE.match(raw)
        if m is None:
            raise BFileError(f"malformed data line {raw!r}", lineno)
        index, value = int(m.group(1)), int(m.group(2))
        if pairs and index != pairs[-1][0] + 1:
            raise BFileError(f"index {index} does not follow {pairs[-1][0]}", lineno)
        pairs.append((index, value))
    return BFile(tuple(pairs), source)


def read_bfile_path(path: str | Path) -> BFile:
    path = Path(path)
    return read_bfile(path.read_text(), str(path))


def write_bfile(seq: SequenceSlice | list[int], offset: int = 0) -> str:
    """One ``index value`` line per term, starting at ``offset``."""
    values = seq.values if isinstance(seq, SequenceSlice) else seq
    return "".join(f"{offset + k} {v}\n" for k, v in enumerate(values))


def cross_check(
    generated: SequenceSlice | list[int], reference: BFile, config: CheckConfig = CheckConfig()
) -> CrossCheckReport:
    """Compare the overlap of ``generated`` and ``reference`` under ``config``.

    ``generated`` may be a 2-D table already linearized by the caller (see
    :func:`linearize`); it is treated as a flat list of values.
    """
    if not reference.pairs:
        raise ValueError("reference b-file is empty")
    values = list(generated.values if isinstance(generated, SequenceSlice) else generated)
    kept = reference.pairs[config.prefix_skip:]
    compared = 0
    for position, (ref_index, ref_value) in enumerate(kept):
        g = position if config.offset is None else ref_index - config.offset
        if g < 0 or g >= len(values):
            continue
        if values[g] != ref_value:
            return CrossCheckReport("mismatch", compared, ref_index, ref_value, values[g])
        compared += 1
    if compared == 0:
        return CrossCheckReport("inconclusive", 0)
    return CrossCheckReport("match", compared)


def linearize(table, read_order: str = "antidiagonal") -> list[int]:
    if read_order == "antidiagonal":
        return table.antidiagonals()
    if read_order == "row":
        return table.row_major()
    raise ValueError(f"unknown read order {read_order!r}")


def load_anumber_map(path: str | Path | None = None) -> dict[str, dict[str, str]]:
    """A-number to generation settings, from an INI file.

    Defaults to the mapping bundled with the package.
    """
    parser = configparser.ConfigParser()
    if path is None:
        text = resources.files("superpatalan").joinpath("data/anumbers.ini").read_text()
        parser.read_string(text)
    else:
        with open(path) as fh:
            parser.read_file(fh)
    return {section: dict(parser[section]) for section in parser.sections()}
