"""Score file repository implementation.

On disk, local scores are higher-is-better (the interchange convention of
score-and-search tools); in memory they are lower-is-better. The negation
happens only here.
"""

import math
from collections.abc import Iterator
from pathlib import Path
from typing import BinaryIO, Union

from credible_networks.domain.entities.candidates import (
    CandidateEntry,
    CandidateList,
    CandidateLists,
)
from credible_networks.domain.entities.local_score import LocalScore
from credible_networks.domain.exceptions.config_exceptions import InputNotFoundError
from credible_networks.domain.exceptions.input_exceptions import (
    DuplicateParentSetError,
    ParentCountMismatchError,
    ScoreFileParseError,
    SectionCountMismatchError,
    UnknownParentError,
)
from credible_networks.logger import get_logger

logger = get_logger(__name__)

_Line = tuple[int, list[str]]


class _Section:
    def __init__(self, name: str, line: int) -> None:
        self.name = name
        self.line = line
        self.scores: list[tuple[int, float, list[str]]] = []


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ScoreFileParseError(f"{what} must be an integer, got {token!r}", line) from None
    if value < 0:
        raise ScoreFileParseError(f"{what} must be non-negative, got {value}", line)
    return value


class ScoreFileRepositoryImpl:
    """Reads and writes candidate lists in the score file format."""

    def read(self, source: Union[bytes, BinaryIO]) -> CandidateLists:
        """Parse candidate lists from score-file bytes.

        All entries are kept; epsilon is recorded as unknown (None).

        Raises:
            ScoreFileParseError: If the content is malformed
        """
        raw = source if isinstance(source, bytes) else source.read()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ScoreFileParseError(f"score file is not UTF-8 text: {e.reason}") from e
        lines: Iterator[_Line] = (
            (number, line.split())
            for number, line in enumerate(text.splitlines(), start=1)
            if line.strip()
        )
        sections, last_line = self._read_sections(lines)

        index = {}
        for position, section in enumerate(sections):
            if section.name in index:
                raise ScoreFileParseError(
                    f"variable {section.name!r} declared twice", section.line
                )
            index[section.name] = position

        lists = []
        for child, section in enumerate(sections):
            entries = []
            seen: set[tuple[int, ...]] = set()
            for line, external, parent_names in section.scores:
                parents = []
                for name in parent_names:
                    if name not in index:
                        raise UnknownParentError(f"unknown parent {name!r}", line)
                    if index[name] == child:
                        raise UnknownParentError(f"{name!r} cannot be its own parent", line)
                    parents.append(index[name])
                key = tuple(sorted(parents))
                if key in seen or len(set(key)) != len(key):
                    raise DuplicateParentSetError(
                        f"duplicate parent set {sorted(parent_names)} for {section.name!r}", line
                    )
                seen.add(key)
                entries.append(
                    CandidateEntry(
                        parents=key,
                        score=LocalScore(child=child, parents=key, value=-external),
                    )
                )
            lists.append(CandidateList(child=child, entries=entries))
        logger.info(
            "Score file read",
            variables=len(sections),
            entries=sum(len(cl.entries) for cl in lists),
            last_line=last_line,
        )
        return CandidateLists(variables=tuple(s.name for s in sections), lists=tuple(lists))

    def _read_sections(self, lines: Iterator[_Line]) -> tuple[list[_Section], int]:
        first = next(lines, None)
        if first is None:
            raise ScoreFileParseError("missing variable count", 1)
        number, tokens = first
        if len(tokens) != 1:
            raise ScoreFileParseError("first line must hold the variable count", number)
        n = _parse_int(tokens[0], "variable count", number)

        sections: list[_Section] = []
        last = number
        for _ in range(n):
            header = next(lines, None)
            if header is None:
                raise SectionCountMismatchError(
                    f"section count mismatch: {len(sections)} sections, {n} declared", last + 1
                )
            last, tokens = header
            if len(tokens) != 2:
                raise ScoreFileParseError("section header must be 'name count'", last)
            section = _Section(tokens[0], last)
            m = _parse_int(tokens[1], "parent set count", last)
            for _ in range(m):
                entry = next(lines, None)
                if entry is None:
                    raise ScoreFileParseError(
                        f"section {section.name!r} ends before its {m} score lines", last + 1
                    )
                last, tokens = entry
                if len(tokens) < 2:
                    raise ScoreFileParseError("score line must be 'score k parents...'", last)
                try:
                    external = float(tokens[0])
                except ValueError:
                    raise ScoreFileParseError(f"invalid score {tokens[0]!r}", last) from None
                if not math.isfinite(external):
                    raise ScoreFileParseError(f"score must be finite, got {tokens[0]!r}", last)
                k = _parse_int(tokens[1], "parent count", last)
                if len(tokens) - 2 != k:
                    raise ParentCountMismatchError(
                        f"{k} parents declared, {len(tokens) - 2} listed", last
                    )
                section.scores.append((last, external, tokens[2:]))
            sections.append(section)

        extra = next(lines, None)
        if extra is not None:
            raise SectionCountMismatchError(
                f"section count mismatch: more than {n} sections", extra[0]
            )
        return sections, last

    def write(self, lists: CandidateLists) -> bytes:
        """Serialise kept entries, best first, scores negated and printed round-trip exact."""
        names = lists.variables
        out = [f"{lists.n_variables}\n"]
        for child, name in enumerate(names):
            rows = []
            for entry in lists.kept(child):
                parent_names = sorted(names[p] for p in entry.parents)
                rows.append((entry.score.value, parent_names))
            rows.sort(key=lambda row: (row[0], row[1]))
            out.append(f"{name} {len(rows)}\n")
            for value, parent_names in rows:
                fields = [repr(-float(value)), str(len(parent_names)), *parent_names]
                out.append(" ".join(fields) + "\n")
        return "".join(out).encode("utf-8")

    def load(self, path: Union[str, Path]) -> CandidateLists:
        """Read a score file from disk.

        Raises:
            InputNotFoundError: If the file cannot be opened
            ScoreFileParseError: If the content is malformed
        """
        try:
            raw = Path(path).read_bytes()
        except OSError as e:
            raise InputNotFoundError(str(path)) from e
        return self.read(raw)

    def save(self, lists: CandidateLists, path: Union[str, Path]) -> None:
        """Write a score file to disk."""
        Path(path).write_bytes(self.write(lists))
        logger.info("Score file written", path=str(path), variables=lists.n_variables)
