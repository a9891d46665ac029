"""Numeric normalization and answer equivalence.

Normalizes surface numeric strings (grouping separators, European decimal
commas, trailing zeros) into exact rationals and decides answer equivalence
for the accuracy reward: exact rational equality when both sides parse as
numbers, exact string match of the formatting-normalized text otherwise.

Grouped-digits rule
-------------------
A separator is read as a thousands grouping separator iff every digit group
after the first has exactly 3 digits, the first group is 1-3 digits without a
leading zero, and either both separator characters appear (the later one is
the decimal mark) or the string ends in a 3-digit group following at least
one separator. A single separator with a non-3-digit tail is a decimal mark.
The irreducibly ambiguous single-separator-3-digit-tail case ("1,234")
resolves as grouping, which maximizes agreement with integer gold answers.
Strings with no self-consistent reading ("1.23.45") are rejected.

Because "1.234" is read as grouped 1234, canonical renderings that would
collide with that pattern (exactly three fractional digits under a groupable
integer part) are emitted with a grouping-proof leading zero ("01.234"), so
every canonical form re-parses to its own value. Values with no finite
decimal expansion (possible via fraction commands) render as "p/q".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .extraction import NUMBER_RE

RATIONAL = "rational"
OPAQUE = "opaque"


class NumberFormatError(ValueError):
    """Raised when a string has no consistent numeric reading."""


@dataclass(frozen=True, slots=True)
class NormalizedNumber:
    """Canonical decimal string plus its exact rational value.

    ``canonical`` has no grouping separators, uses "." as the decimal point,
    carries no trailing fractional zeros and no leading "+", and re-parses to
    ``value``.
    """

    canonical: str
    value: Fraction


@dataclass(frozen=True, slots=True)
class MathValue:
    """A parsed candidate answer: exact rational or opaque string.

    ``raw`` is the whitespace/formatting-normalized original and is the
    comparison key whenever either side is opaque.
    """

    kind: str
    raw: str
    rational: NormalizedNumber | None = None


_FRAC_RE = re.compile(r"([-+]?)\\[dt]?frac\s*\{([^{}]*)\}\s*\{([^{}]*)\}")
_SIZING_RE = re.compile(r"\\(?:left|right|bigg?|Bigg?|displaystyle)\b|\\[,;!:]|~")
_CURRENCY = "$€£¥"
_FIRST_GROUP_RE = re.compile(r"[1-9]\d{0,2}")


def _valid_first_group(group: str) -> bool:
    return _FIRST_GROUP_RE.fullmatch(group) is not None


def _check_group_tail(groups: list[str]) -> bool:
    return all(len(g) == 3 and g.isdigit() for g in groups[1:])


def _resolve_separators(body: str) -> tuple[str, str]:
    """Split unsigned digits+separators into (integer digits, fraction digits)."""
    last_dot = body.rfind(".")
    last_comma = body.rfind(",")
    if last_dot < 0 and last_comma < 0:
        return body, ""

    if last_dot >= 0 and last_comma >= 0:
        # Both present: the later one is the decimal mark.
        if last_dot > last_comma:
            decimal, grouping = ".", ","
        else:
            decimal, grouping = ",", "."
        if body.count(decimal) != 1:
            raise NumberFormatError(f"multiple decimal marks in {body!r}")
        int_part, frac = body.split(decimal)
        groups = int_part.split(grouping)
        if not frac or not _check_group_tail(groups) or not _valid_first_group(groups[0]):
            raise NumberFormatError(f"inconsistent separators in {body!r}")
        return "".join(groups), frac

    sep = "." if last_dot >= 0 else ","
    groups = body.split(sep)
    if len(groups) == 2:
        head, tail = groups
        if len(tail) == 3 and _valid_first_group(head):
            return head + tail, ""  # ambiguous -> grouping
        return head, tail  # decimal mark
    if _check_group_tail(groups) and _valid_first_group(groups[0]):
        return "".join(groups), ""
    raise NumberFormatError(f"inconsistent separators in {body!r}")


def normalize_number(raw: str) -> NormalizedNumber:
    """Normalize a surface numeric string per the grouped-digits rule.

    Grouping separators are removed, a European decimal comma becomes a
    point, trailing fractional zeros are truncated and the sign is preserved
    (a signed zero collapses to "0"). Raises NumberFormatError for strings
    with no consistent reading.
    """
    s = raw.strip()
    if not NUMBER_RE.fullmatch(s):
        raise NumberFormatError(f"not a numeric token: {raw!r}")
    negative = s.startswith("-")
    body = s.lstrip("+-")
    int_digits, frac_digits = _resolve_separators(body)
    value = Fraction(int(int_digits + frac_digits), 10 ** len(frac_digits))
    if negative:
        value = -value
    return NormalizedNumber(canonical_of_fraction(value), value)


def canonical_of_fraction(value: Fraction) -> str:
    """Exact decimal string when the denominator is 10-smooth, else "p/q"."""
    den = value.denominator
    twos = fives = 0
    d = den
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{value.numerator}/{value.denominator}"
    shift = max(twos, fives)
    scaled = abs(value.numerator) * 10**shift // den
    digits = str(scaled).rjust(shift + 1, "0")
    int_part, frac_part = digits[: len(digits) - shift], digits[len(digits) - shift :]
    frac_part = frac_part.rstrip("0")
    if len(frac_part) == 3 and _valid_first_group(int_part):
        # "1.234" would re-parse as grouped 1234; a leading zero defeats the
        # grouping reading while preserving the value.
        int_part = "0" + int_part
    out = int_part + ("." + frac_part if frac_part else "")
    return "-" + out if value < 0 else out


def _rational(value: Fraction, raw: str) -> MathValue:
    return MathValue(RATIONAL, raw, NormalizedNumber(canonical_of_fraction(value), value))


def _normalize_formatting(s: str) -> str:
    t = s.strip()
    changed = True
    while changed:
        changed = False
        for open_d, close_d in (("$$", "$$"), ("\\(", "\\)"), ("\\[", "\\]"), ("$", "$")):
            if (
                t.startswith(open_d)
                and t.endswith(close_d)
                and len(t) >= len(open_d) + len(close_d)
            ):
                t = t[len(open_d) : len(t) - len(close_d)].strip()
                changed = True
    t = _SIZING_RE.sub("", t)
    t = t.replace("\\$", "$")
    t = t.lstrip(_CURRENCY + " ")
    return " ".join(t.split())


def parse_math_answer(s: str) -> MathValue:
    """Parse a candidate answer into a MathValue.

    Strips currency symbols, math-mode delimiters, sizing commands and
    whitespace. Plain numbers, percent-suffixed numbers (divided by 100) and
    two-argument fraction commands with numeric arguments become rationals;
    everything else is opaque.
    """
    t = _normalize_formatting(s)

    if t.endswith("\\%") or t.endswith("%"):
        base = t[:-2] if t.endswith("\\%") else t[:-1]
        try:
            nn = normalize_number(base.strip())
        except NumberFormatError:
            pass
        else:
            return _rational(nn.value / 100, t)

    m = _FRAC_RE.fullmatch(t)
    if m:
        sign, num_s, den_s = m.groups()
        try:
            num = normalize_number(num_s.strip())
            den = normalize_number(den_s.strip())
        except NumberFormatError:
            pass
        else:
            if den.value != 0:
                value = num.value / den.value
                if sign == "-":
                    value = -value
                return _rational(value, t)

    try:
        nn = normalize_number(t)
    except NumberFormatError:
        return MathValue(OPAQUE, t)
    return MathValue(RATIONAL, t, nn)


def answers_equivalent(pred: MathValue, gold: MathValue) -> bool:
    """Exact rational equality when both parsed; exact raw match otherwise."""
    if pred.kind == RATIONAL and gold.kind == RATIONAL:
        assert pred.rational is not None and gold.rational is not None
        return pred.rational.value == gold.rational.value
    return pred.raw == gold.raw
