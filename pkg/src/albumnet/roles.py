"""Canonical collaborator-role labels.

Raw credit strings arrive in many spellings ("Mastered By", "mastered-by",
"Mastered By [Remastered]"). Four cleaning rules, applied in a fixed order,
reduce them to one canonical lowercase label: lowercase everything, turn
hyphens into spaces, drop the standalone word "by", and drop bracketed
qualifiers. No splitting on commas, ampersands or slashes happens here, so
a raw role like "guitar, bass" stays a single label.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from albumnet.records import Dataset

#: Label substituted when cleaning removes every character of the raw string.
UNSPECIFIED = "unspecified"

_BY_WORD = re.compile(r"\bby\b")


class RoleLabel(str):
    """A canonical role label: a plain ``str`` plus an ``emptied`` marker.

    ``emptied`` is True when the raw string cleaned down to nothing and the
    ``"unspecified"`` sentinel was substituted.
    """

    __slots__ = ("emptied",)

    emptied: bool

    def __new__(cls, canonical: str, emptied: bool = False):
        label = super().__new__(cls, canonical)
        label.emptied = emptied
        return label

    @property
    def canonical(self) -> str:
        return str(self)


def _drop_bracketed(text: str) -> str:
    # Bracketed qualifiers are replaced by a single space so the words on
    # either side never fuse; an unclosed "[" swallows the rest of the
    # string and a stray "]" is dropped outright.
    out: list[str] = []
    depth = 0
    for ch in text:
        if ch == "[":
            if depth == 0:
                out.append(" ")
            depth += 1
        elif ch == "]":
            if depth:
                depth -= 1
        elif depth == 0:
            out.append(ch)
    return "".join(out)


def normalize_role(raw: str) -> RoleLabel:
    """Clean one raw role string into its canonical label.

    Rules run in order: (1) lowercase, (2) hyphens become spaces, (3) the
    standalone word "by" is removed ("lobby" is untouched), (4) bracketed
    segments are removed. Whitespace is collapsed and trimmed afterwards.
    Idempotent on its own output; an input that cleans down to nothing
    yields the sentinel label with ``emptied`` set.
    """
    if not raw:
        raise ValueError("raw role string must be non-empty")
    text = raw.lower()
    text = text.replace("-", " ")
    text = _BY_WORD.sub(" ", text)
    text = _drop_bracketed(text)
    canonical = " ".join(text.split())
    if not canonical:
        return RoleLabel(UNSPECIFIED, emptied=True)
    return RoleLabel(canonical)


def role_inventory(dataset: "Dataset") -> list[tuple[RoleLabel, int]]:
    """Count normalized role instances over a dataset.

    Returns (label, count) pairs sorted by count descending, ties broken
    alphabetically; counts sum to the dataset's role_instance_count.
    """
    counts = Counter(normalize_role(record.role_raw) for record in dataset.records)
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))
