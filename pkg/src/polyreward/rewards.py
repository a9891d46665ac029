"""Composite verifiable-reward components and their weighted combination.

Five reward components over one completion:

* accuracy: binary equivalence of the last boxed answer against the gold
  answer (exact rational comparison with a string-match fallback).
* language: identifier score for the target language, computed separately
  over the reasoning trace and the boxed-stripped output, combined 60/40.
* format: incremental structure score (+0.1 open tag, +0.3 closed block,
  +0.1 boxed answer present, +0.5 reasoning block ends before the answer).
* repetition: penalty in [-1, 0] for consecutive n-gram loops, token
  flooding, and character runs, normalized by sqrt(token count).
* naturalness (Spanish): penalty in [-1, 0] for inverted-question-mark abuse
  in the reasoning trace (density, stacking, fake questions, hesitation
  loops), neutral below 30 words.

Two weight presets ship: "table8" (accuracy 1.0, language 0.2, format 0.1,
repetition 0.3, naturalness 0.5 for Spanish) and the alternate "maintext"
(language 0.1, format 0.2, rest equal). Every constant is overridable
through RewardConfig; unknown config keys are rejected.

Scoring is pure given (completion, config, model): identical inputs produce
bit-identical breakdowns at any level of data parallelism.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, fields, replace
from functools import lru_cache
from typing import Mapping

from .extraction import (
    Stage,
    ThinkSplit,
    extract_boxed_all,
    split_think,
    strip_boxed,
)
from .numeric import answers_equivalent, parse_math_answer

COMPONENT_ORDER = ("accuracy", "language", "format", "repetition", "naturalness")

FORMAT_OPEN_TAG = 0.1
FORMAT_CLOSED_BLOCK = 0.3
FORMAT_BOXED = 0.1
FORMAT_THINK_BEFORE_ANSWER = 0.5


class ConfigError(ValueError):
    """Bad reward configuration: unknown keys, bad weights, missing gold."""


@dataclass(frozen=True, slots=True)
class RepetitionSettings:
    flood_threshold: float = 0.15
    ngram_max: int = 5
    char_run_min: int = 4


@dataclass(frozen=True, slots=True)
class NaturalnessSettings:
    word_floor: int = 30
    qmark_density_threshold: float = 0.05
    qmark_scale: float = 10.0
    qmark_cap: float = 0.4
    stacked_unit: float = 0.02
    stacked_cap: float = 0.2
    fakeq_threshold: float = 0.03
    fakeq_scale: float = 12.0
    fakeq_cap: float = 0.3
    hesitation_min: int = 3
    hesitation_unit: float = 0.03
    hesitation_cap: float = 0.3
    total_cap: float = 1.0
    # "all" charges every detected hesitation loop once the minimum is
    # exceeded; "excess" charges only the loops beyond the minimum.
    hesitation_mode: str = "all"
    connectives: tuple[str, ...] = ("espera", "pero", "entonces", "y", "bueno")


@dataclass(frozen=True, slots=True)
class LanguageSplit:
    think_weight: float = 0.6
    output_weight: float = 0.4


@dataclass(frozen=True)
class RewardConfig:
    language: str
    weights: Mapping[str, float]
    repetition: RepetitionSettings = RepetitionSettings()
    naturalness: NaturalnessSettings = NaturalnessSettings()
    language_split: LanguageSplit = LanguageSplit()

    def __post_init__(self) -> None:
        unknown = set(self.weights) - set(COMPONENT_ORDER)
        if unknown:
            raise ConfigError(f"unknown reward components: {sorted(unknown)}")
        for name, w in self.weights.items():
            if w < 0:
                raise ConfigError(f"negative weight for {name}: {w}")
        split = self.language_split
        if abs(split.think_weight + split.output_weight - 1.0) > 1e-12:
            raise ConfigError("language split weights must sum to 1")
        if self.naturalness.hesitation_mode not in ("all", "excess"):
            raise ConfigError(
                f"hesitation_mode must be 'all' or 'excess', "
                f"got {self.naturalness.hesitation_mode!r}"
            )
        object.__setattr__(self, "weights", dict(self.weights))


@dataclass(frozen=True, slots=True)
class Completion:
    """One model generation plus the identity metadata needed to score it."""

    id: str
    target_language: str
    text: str
    gold_answer: str | None = None
    benchmark: str | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("completion id must be non-empty")


@dataclass(frozen=True, slots=True)
class ComponentScore:
    raw: float
    weight: float
    weighted: float


@dataclass(frozen=True, slots=True)
class RewardBreakdown:
    """Per-component raw/weight/weighted scores plus the exact total.

    ``components`` holds only the components configured with nonzero weight;
    ``total`` is their weighted sum with no re-rounding.
    ``target_language_hit`` records whether the identifier's top language
    equals the target (the per-record input to the %TL report metric);
    ``extraction_stage`` records how the accuracy answer was extracted, or
    None when accuracy was not scored.
    """

    components: dict[str, ComponentScore]
    total: float
    target_language_hit: bool
    extraction_stage: str | None


def table8_config(language: str) -> RewardConfig:
    """Default per-language weights (appendix table): language 0.2, format 0.1."""
    weights = {"accuracy": 1.0, "language": 0.2, "format": 0.1, "repetition": 0.3}
    if language == "es":
        weights["naturalness"] = 0.5
    return RewardConfig(language=language, weights=weights)


def maintext_config(language: str) -> RewardConfig:
    """Alternate preset with language 0.1 / format 0.2 swapped."""
    weights = {"accuracy": 1.0, "language": 0.1, "format": 0.2, "repetition": 0.3}
    if language == "es":
        weights["naturalness"] = 0.5
    return RewardConfig(language=language, weights=weights)


PRESETS = {"table8": table8_config, "maintext": maintext_config}


def accuracy_reward(text: str, gold: str) -> float:
    """1.0 iff the last boxed answer is equivalent to ``gold``, else 0.0."""
    if not gold:
        raise ConfigError("accuracy reward needs a non-empty gold answer")
    spans = extract_boxed_all(text)
    if not spans:
        return 0.0
    pred = spans[-1].content.strip()
    if not pred:
        return 0.0
    return 1.0 if answers_equivalent(parse_math_answer(pred), parse_math_answer(gold)) else 0.0


def language_reward(
    split: ThinkSplit,
    target: str,
    model,
    weights: LanguageSplit = LanguageSplit(),
) -> float:
    """Identifier score for ``target``: 0.6 * think + 0.4 * stripped output.

    An empty or below-floor segment contributes 0 rather than re-normalizing
    onto the other segment.
    """
    think_score = model.score_language(split.think_text, target)
    output_score = model.score_language(strip_boxed(split.output_text), target)
    return weights.think_weight * think_score + weights.output_weight * output_score


def format_reward(split: ThinkSplit, text: str) -> float:
    """Incremental structure score in [0, 1] from the four format flags."""
    score = 0.0
    if split.has_open_tag:
        score += FORMAT_OPEN_TAG
    if split.has_closed_block:
        score += FORMAT_CLOSED_BLOCK
    if extract_boxed_all(text):
        score += FORMAT_BOXED
    if split.think_ends_before_answer:
        score += FORMAT_THINK_BEFORE_ANSWER
    return score


def _is_primitive(unit: tuple) -> bool:
    n = len(unit)
    for d in range(1, n):
        if n % d == 0 and unit == unit[:d] * (n // d):
            return False
    return True


def loop_redundancy(tokens: list[str] | tuple[str, ...], ngram_max: int = 5) -> int:
    """Count redundant tokens covered by consecutive n-gram loops.

    Loops are detected greedily from the largest n down to 1; a loop of an
    n-gram repeated k times contributes n*(k-1) redundant tokens. A repeat
    unit must be primitive (not itself a repetition of a shorter unit), so a
    run of one token counts at n=1 rather than as a composite n-gram. Tokens
    attributed to a larger-n loop are never re-counted.
    """
    seq = tuple(tokens)
    m = len(seq)
    if m < 2:
        return 0
    covered = bytearray(m)
    total = 0
    for n in range(min(ngram_max, m // 2), 0, -1):
        i = 0
        limit = m - 2 * n
        while i <= limit:
            # Cheap first-token probe before any slicing; almost every
            # position in normal text fails here.
            if seq[i] != seq[i + n]:
                i += 1
                continue
            unit = seq[i : i + n]
            if (
                seq[i + n : i + 2 * n] != unit
                or not _is_primitive(unit)
                or any(covered[i : i + 2 * n])
            ):
                i += 1
                continue
            k = 2
            while (
                i + (k + 1) * n <= m
                and seq[i + k * n : i + (k + 1) * n] == unit
                and not any(covered[i + k * n : i + (k + 1) * n])
            ):
                k += 1
            end = i + k * n
            covered[i:end] = b"\x01" * (k * n)
            total += (k - 1) * n
            i = end
    return total


def repetition_penalty(
    text: str, settings: RepetitionSettings = RepetitionSettings()
) -> float:
    """Degeneration penalty in [-1, 0].

    raw = loop redundancy + token flooding + character-run excess, where
    flooding charges T*(f - threshold)^2 for every token type occurring at
    least twice with frequency f above the threshold, and every run of
    ``char_run_min`` or more identical non-space characters adds
    run_length - (char_run_min - 1). The result is -min(raw / sqrt(T), 1).
    """
    tokens = text.split()
    t_count = len(tokens)
    if t_count == 0:
        return 0.0
    raw = float(loop_redundancy(tokens, settings.ngram_max))
    threshold = settings.flood_threshold
    for c in Counter(tokens).values():
        if c >= 2:
            f = c / t_count
            if f > threshold:
                raw += t_count * (f - threshold) ** 2
    min_run = settings.char_run_min
    for m in _run_pattern(min_run).finditer(text):
        raw += (m.end() - m.start()) - (min_run - 1)
    penalty = min(raw / math.sqrt(t_count), 1.0)
    return -penalty if penalty else 0.0


@lru_cache(maxsize=8)
def _run_pattern(min_run: int) -> re.Pattern:
    return re.compile(r"(\S)\1{%d,}" % (min_run - 1))


_QMARK_SET = "¿?"


def _connective_openings(trace: str, connectives: frozenset[str]) -> list[tuple[int, int]]:
    """(qmark_index, word_end_index) for every '¿' + connective opening."""
    openings = []
    i = trace.find("¿")
    while i >= 0:
        j = i + 1
        while j < len(trace) and trace[j] == " ":
            j += 1
        k = j
        while k < len(trace) and trace[k].isalpha():
            k += 1
        if k > j and trace[j:k].lower() in connectives:
            openings.append((i, k))
        i = trace.find("¿", i + 1)
    return openings


def _clause_terminator(trace: str, start: int) -> str:
    """First of '?', '.', ',' after ``start``, stopping at the next '¿'."""
    for i in range(start, len(trace)):
        ch = trace[i]
        if ch in "?.,":
            return ch
        if ch == "¿":
            return ""
    return ""


def spanish_naturalness(
    split: ThinkSplit, settings: NaturalnessSettings = NaturalnessSettings()
) -> float:
    """Inverted-question-mark abuse penalty in [-1, 0] over the reasoning trace.

    Four signals: '¿' density beyond one per 20 words (10x the excess, cap
    0.4); stacked marks '¿¿'/'¿?' at 0.02 each (cap 0.2); fake questions
    (a '¿' + connective clause ending in ',' or '.' with no '?') beyond
    density 0.03 per word (12x the excess, cap 0.3); hesitation loops (a
    comma-terminated fake question immediately chained into another '¿' +
    connective opening) at 0.03 each once more than ``hesitation_min`` are
    detected (cap 0.3). Traces shorter than 30 words are neutral.
    """
    trace = split.think_text
    words = trace.split()
    w_count = len(words)
    if w_count < settings.word_floor:
        return 0.0

    density = trace.count("¿") / w_count
    p_density = min(
        settings.qmark_scale * max(0.0, density - settings.qmark_density_threshold),
        settings.qmark_cap,
    )

    stacked = sum(
        1
        for i in range(len(trace) - 1)
        if trace[i] == "¿" and trace[i + 1] in _QMARK_SET
    )
    p_stacked = min(settings.stacked_unit * stacked, settings.stacked_cap)

    connectives = frozenset(c.lower() for c in settings.connectives)
    openings = _connective_openings(trace, connectives)
    terminators = [_clause_terminator(trace, end) for _, end in openings]
    fake_count = sum(1 for t in terminators if t in (",", "."))
    fake_density = fake_count / w_count
    p_fakeq = min(
        settings.fakeq_scale * max(0.0, fake_density - settings.fakeq_threshold),
        settings.fakeq_cap,
    )

    hesitations = 0
    for idx in range(len(openings) - 1):
        if terminators[idx] != ",":
            continue
        comma_at = trace.index(",", openings[idx][1])
        between = trace[comma_at + 1 : openings[idx + 1][0]]
        if between.strip() == "":
            hesitations += 1
    if hesitations > settings.hesitation_min:
        charged = (
            hesitations
            if settings.hesitation_mode == "all"
            else hesitations - settings.hesitation_min
        )
        p_hesitation = min(settings.hesitation_unit * charged, settings.hesitation_cap)
    else:
        p_hesitation = 0.0

    penalty = min(p_density + p_stacked + p_fakeq + p_hesitation, settings.total_cap)
    return -penalty if penalty else 0.0


def composite_reward(completion: Completion, cfg: RewardConfig, model) -> RewardBreakdown:
    """Weighted combination of all configured components for one completion.

    Components with weight 0 (or absent from the config) are skipped
    entirely; the total is the exact sum of the weighted contributions in a
    fixed component order. The target-language hit flag is always computed
    for %TL reporting.
    """
    if completion.target_language != cfg.language:
        raise ConfigError(
            f"config language {cfg.language!r} does not match completion "
            f"target language {completion.target_language!r}"
        )
    if cfg.language not in model.languages:
        raise ConfigError(f"language {cfg.language!r} unknown to the identifier model")
    weights = cfg.weights
    if weights.get("accuracy", 0.0) > 0 and not completion.gold_answer:
        raise ConfigError(
            f"completion {completion.id!r} has no gold answer but accuracy "
            "weight is positive"
        )

    text = completion.text
    split = split_think(text)
    components: dict[str, ComponentScore] = {}
    extraction_stage: str | None = None

    w = weights.get("accuracy", 0.0)
    if w > 0:
        assert completion.gold_answer is not None
        raw = accuracy_reward(text, completion.gold_answer)
        spans = extract_boxed_all(text)
        extraction_stage = (
            Stage.BOXED_LAST.value
            if spans and spans[-1].content.strip()
            else Stage.NOT_FOUND.value
        )
        components["accuracy"] = ComponentScore(raw, w, w * raw)

    w = weights.get("language", 0.0)
    if w > 0:
        raw = language_reward(split, cfg.language, model, cfg.language_split)
        components["language"] = ComponentScore(raw, w, w * raw)

    w = weights.get("format", 0.0)
    if w > 0:
        raw = format_reward(split, text)
        components["format"] = ComponentScore(raw, w, w * raw)

    w = weights.get("repetition", 0.0)
    if w > 0:
        raw = repetition_penalty(text, cfg.repetition)
        components["repetition"] = ComponentScore(raw, w, w * raw)

    w = weights.get("naturalness", 0.0)
    if w > 0:
        raw = spanish_naturalness(split, cfg.naturalness)
        components["naturalness"] = ComponentScore(raw, w, w * raw)

    total = 0.0
    for name in COMPONENT_ORDER:
        if name in components:
            total += components[name].weighted

    hit = model.identify(text).language == cfg.language
    return RewardBreakdown(components, total, hit, extraction_stage)


def _settings_from_dict(cls, data: dict, where: str):
    known = {f.name for f in fields(cls)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown keys in {where}: {sorted(unknown)}")
    if "connectives" in data:
        data = dict(data, connectives=tuple(data["connectives"]))
    return cls(**data)


def config_from_dict(data: dict) -> RewardConfig:
    """Build a RewardConfig from a parsed config document (fail-closed).

    Recognized keys: language (required), preset, weights, repetition,
    naturalness, language_split. Weights and constants override the preset
    (default "table8"); any unknown key at any level is an error.
    """
    if not isinstance(data, dict):
        raise ConfigError("config root must be an object")
    allowed = {"language", "preset", "weights", "repetition", "naturalness", "language_split"}
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    language = data.get("language")
    if not language or not isinstance(language, str):
        raise ConfigError("config needs a 'language' code")
    preset_name = data.get("preset", "table8")
    if preset_name not in PRESETS:
        raise ConfigError(f"unknown preset {preset_name!r} (have: {sorted(PRESETS)})")
    cfg = PRESETS[preset_name](language)
    if "weights" in data:
        merged = dict(cfg.weights)
        merged.update(data["weights"])
        cfg = replace(cfg, weights=merged)
    if "repetition" in data:
        cfg = replace(
            cfg,
            repetition=_settings_from_dict(
                RepetitionSettings, data["repetition"], "repetition"
            ),
        )
    if "naturalness" in data:
        cfg = replace(
            cfg,
            naturalness=_settings_from_dict(
                NaturalnessSettings, data["naturalness"], "naturalness"
            ),
        )
    if "language_split" in data:
        cfg = replace(
            cfg,
            language_split=_settings_from_dict(
                LanguageSplit, data["language_split"], "language_split"
            ),
        )
    return cfg
