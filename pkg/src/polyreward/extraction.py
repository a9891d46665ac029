"""Completion structure parsing and final-answer extraction.

Splits reasoning-tagged completions into a reasoning segment and an output
segment, and recovers candidate final answers through per-benchmark fallback
chains (boxed expression, ``####`` delimiter, last number, letter tokens,
boolean keywords). Everything here is a pure function of its input: malformed
structure is reported through flags or a NotFound answer, never an exception.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

THINK_OPEN = "<think>"
THINK_CLOSE = "</think>"
BOXED_COMMAND = "\\boxed"

# Maximal numeric token: optional sign, digit groups joined by ./, separators.
# Disambiguation of grouping vs decimal happens in the numeric module.
NUMBER_RE = re.compile(r"[-+]?\d+(?:[.,]\d+)*")

_BOOL_RE = re.compile(r"\b(true|false)\b", re.IGNORECASE)


class Stage(str, Enum):
    """Which step of a fallback chain produced an extracted answer."""

    BOXED_LAST = "boxed_last"
    HASH_DELIMITER = "hash_delimiter"
    LAST_NUMBER = "last_number"
    BOXED_LETTER = "boxed_letter"
    STANDALONE_LETTER = "standalone_letter"
    BOOL_KEYWORD = "bool_keyword"
    NOT_FOUND = "not_found"


@dataclass(frozen=True, slots=True)
class ExtractedAnswer:
    """Raw extracted answer plus the stage that produced it.

    ``value`` is un-normalized (separators, casing and LaTeX left intact
    except for surrounding whitespace); ``value`` is empty iff ``stage`` is
    NOT_FOUND.
    """

    value: str
    stage: Stage


NOT_FOUND = ExtractedAnswer("", Stage.NOT_FOUND)


@dataclass(frozen=True, slots=True)
class BoxedSpan:
    """One balanced boxed expression.

    ``content`` is the text inside the outermost brace pair; ``start``/``end``
    are str indices into the source covering the whole expression (command,
    braces and content), with ``end`` exclusive.
    """

    content: str
    start: int
    end: int


@dataclass(frozen=True, slots=True)
class ThinkSplit:
    """A completion decomposed into reasoning and output segments.

    ``think_text`` concatenates the contents of all closed reasoning blocks
    (joined by a single newline); ``output_text`` is everything else in
    original order, including any unclosed trailing open tag verbatim. The
    structural flags describe the first block only.
    """

    think_text: str
    output_text: str
    has_open_tag: bool
    has_closed_block: bool
    think_ends_before_answer: bool


EMPTY_SPLIT = ThinkSplit("", "", False, False, False)


def extract_boxed_all(text: str) -> list[BoxedSpan]:
    """Return every balanced boxed expression in document order.

    Nested braces are kept intact inside ``content``. An expression whose
    opening brace is never closed is skipped entirely (scanning resumes just
    inside it, so a balanced inner expression is still found). Returned spans
    are non-overlapping and sorted by start offset.
    """
    spans: list[BoxedSpan] = []
    n = len(text)
    i = text.find(BOXED_COMMAND)
    while i >= 0:
        j = i + 6
        while j < n and text[j].isspace():
            j += 1
        if j >= n or text[j] != "{":
            i = text.find(BOXED_COMMAND, i + 6)
            continue
        depth = 1
        k = j + 1
        while k < n:
            ch = text[k]
            if ch == "{":
                depth += 1
            elif ch == "}":
                depth -= 1
                if depth == 0:
                    break
            k += 1
        if depth == 0:
            spans.append(BoxedSpan(text[j + 1 : k], i, k + 1))
            i = text.find(BOXED_COMMAND, k + 1)
        else:
            i = text.find(BOXED_COMMAND, j + 1)
    return spans


def strip_boxed(text: str) -> str:
    """Remove every balanced boxed expression (command, braces, content)."""
    spans = extract_boxed_all(text)
    if not spans:
        return text
    parts = []
    prev = 0
    for span in spans:
        parts.append(text[prev : span.start])
        prev = span.end
    parts.append(text[prev:])
    return "".join(parts)


def split_think(text: str) -> ThinkSplit:
    """Decompose ``text`` into reasoning and output segments.

    Tags are exact literals, case-sensitive, non-nesting: each open tag pairs
    with the next close tag after it. When several closed blocks exist their
    contents are concatenated (newline-joined) into ``think_text``; the flags
    refer to the first block.
    """
    first_open = text.find(THINK_OPEN)
    if first_open < 0:
        return ThinkSplit("", text, False, False, False)

    blocks: list[tuple[int, int, str]] = []  # (start, end_exclusive, content)
    pos = first_open
    while True:
        o = text.find(THINK_OPEN, pos)
        if o < 0:
            break
        c = text.find(THINK_CLOSE, o + len(THINK_OPEN))
        if c < 0:
            break
        blocks.append((o, c + len(THINK_CLOSE), text[o + len(THINK_OPEN) : c]))
        pos = c + len(THINK_CLOSE)

    out_parts = []
    prev = 0
    for start, end, _ in blocks:
        out_parts.append(text[prev:start])
        prev = end
    out_parts.append(text[prev:])

    think_text = "\n".join(content for _, _, content in blocks)
    has_closed = bool(blocks)
    ends_before = False
    if has_closed:
        spans = extract_boxed_all(text)
        ends_before = bool(spans) and blocks[0][1] <= spans[0].start
    return ThinkSplit(think_text, "".join(out_parts), True, has_closed, ends_before)


def extract_mgsm(text: str) -> ExtractedAnswer:
    """Grade-school math fallback chain: boxed, ``####`` delimiter, last number.

    Stage 1 takes the content of the last boxed expression; stage 2 the first
    number after a ``####`` delimiter; stage 3 the last number anywhere in the
    text. A boxed expression with empty content carries no answer and falls
    through to the next stage.
    """
    spans = extract_boxed_all(text)
    if spans:
        content = spans[-1].content.strip()
        if content:
            return ExtractedAnswer(content, Stage.BOXED_LAST)
    h = text.find("####")
    if h >= 0:
        m = NUMBER_RE.search(text, h + 4)
        if m:
            return ExtractedAnswer(m.group(), Stage.HASH_DELIMITER)
    last = None
    for m in NUMBER_RE.finditer(text):
        last = m
    if last is not None:
        return ExtractedAnswer(last.group(), Stage.LAST_NUMBER)
    return NOT_FOUND


def extract_math_boxed(text: str) -> ExtractedAnswer:
    """Last boxed expression only, nested braces preserved. No fallback."""
    spans = extract_boxed_all(text)
    if spans:
        content = spans[-1].content.strip()
        if content:
            return ExtractedAnswer(content, Stage.BOXED_LAST)
    return NOT_FOUND


def extract_mc_letter(text: str, option_count: int) -> ExtractedAnswer:
    """Multiple-choice letter: boxed single letter, else last standalone letter.

    ``option_count`` selects the valid range (2 -> A-B, 4 -> A-D). The boxed
    attempt scans spans last-to-first for a single in-range letter (any case,
    canonicalized to uppercase). The fallback finds the last uppercase
    in-range letter bounded by non-alphanumeric characters, string edges
    included.
    """
    if option_count not in (2, 4):
        raise ValueError(f"option_count must be 2 or 4, got {option_count!r}")
    letters = "ABCD"[:option_count]
    for span in reversed(extract_boxed_all(text)):
        content = span.content.strip()
        if len(content) == 1 and content.upper() in letters:
            return ExtractedAnswer(content.upper(), Stage.BOXED_LETTER)
    best = ""
    last_index = len(text) - 1
    for i, ch in enumerate(text):
        if ch in letters:
            if (i == 0 or not text[i - 1].isalnum()) and (
                i == last_index or not text[i + 1].isalnum()
            ):
                best = ch
    if best:
        return ExtractedAnswer(best, Stage.STANDALONE_LETTER)
    return NOT_FOUND


def extract_bool(text: str) -> ExtractedAnswer:
    """True/False answer: boxed keyword first, else last standalone keyword.

    Matching is case-insensitive; the returned value is canonicalized to
    "True"/"False".
    """
    for span in reversed(extract_boxed_all(text)):
        content = span.content.strip().lower()
        if content in ("true", "false"):
            return ExtractedAnswer(content.capitalize(), Stage.BOOL_KEYWORD)
    last = None
    for m in _BOOL_RE.finditer(text):
        last = m
    if last is not None:
        return ExtractedAnswer(last.group().capitalize(), Stage.BOOL_KEYWORD)
    return NOT_FOUND
