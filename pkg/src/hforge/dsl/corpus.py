"""Identity corpus files: one identity per line as "NAME : LHS == RHS".

Full-line "#" comments and blank lines are ignored.  Parse problems are
reported per line with spans relative to that line, so column numbers
in downstream output line up with the file text.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple, Union

from .nodes import Diagnostic, Identity, shift_spans
from .parser import parse


@dataclass
class CorpusEntry:
    name: str
    identity: Identity
    line_no: int  # 1-based
    text: str  # the full source line


@dataclass
class CorpusIssue:
    line_no: int  # 1-based
    diagnostic: Diagnostic


def parse_corpus(text: str) -> Tuple[List[CorpusEntry], List[CorpusIssue]]:
    entries: List[CorpusEntry] = []
    issues: List[CorpusIssue] = []
    for line_no, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        colon = line.find(":")
        if colon < 0:
            issues.append(
                CorpusIssue(
                    line_no,
                    Diagnostic(
                        "error",
                        "expected 'NAME : LHS == RHS'",
                        (0, len(line)),
                    ),
                )
            )
            continue
        name = line[:colon].strip()
        if not name or any(c.isspace() for c in name):
            issues.append(
                CorpusIssue(
                    line_no,
                    Diagnostic(
                        "error",
                        "identity name must be a single non-empty token",
                        (0, colon),
                    ),
                )
            )
            continue
        rest = line[colon + 1 :]
        base = colon + 1
        result = parse(rest)
        if isinstance(result, list):
            for diag in result:
                shifted = Diagnostic(
                    diag.severity,
                    diag.message,
                    (diag.span[0] + base, diag.span[1] + base),
                    diag.hint,
                )
                issues.append(CorpusIssue(line_no, shifted))
            continue
        shift_spans(result, base)
        entries.append(CorpusEntry(name, result, line_no, line))
    return entries, issues


def load_corpus(
    path: Union[str, Path]
) -> Tuple[List[CorpusEntry], List[CorpusIssue]]:
    return parse_corpus(Path(path).read_text(encoding="utf-8"))
