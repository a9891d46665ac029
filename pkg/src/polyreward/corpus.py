"""Corpus filtering and class-balanced sampling over annotated records.

Three stages, always in order: mandatory integrity/safety filters,
domain-dependent quality filters (stricter for math/code-heavy content),
then per-class downsampling at fixed ratios with a seeded shuffle. Filters
are per-record pure functions that fail closed on missing labels; sampling
keeps exactly round(ratio * N) records per listed class and leaves unlisted
classes untouched.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

PASS_RULE = "pass"
MISSING_LABEL_RULE = "missing_label"
SAMPLED_OUT_RULE = "sampled_out"

EXCLUDED_DOCUMENT_TYPES = frozenset(
    {"press_release", "boilerplate", "news_report", "transactional", "legal_document"}
)
EXCLUDED_SECTORS = frozenset({"other", "mining_resources", "wholesale_distribution"})
ALLOWED_CONTENT_LENGTHS = frozenset({"brief", "moderate", "substantial"})
STRICT_TECHNICAL_CLASSES = frozenset({"math_heavy", "code_heavy"})
STRICT_EDUCATIONAL_VALUES = frozenset({"high", "moderate"})
RELAXED_QUALITY_VALUES = frozenset({"excellent", "good", "adequate"})

# Table of default per-class sampling ratios.
DEFAULT_SAMPLING_RATIOS = {
    "code_heavy_math_heavy": 0.60,
    "math_heavy": 0.30,
    "non_technical": 0.50,
    "basic_technical": 0.80,
}

ANNOTATION_FIELDS = (
    "content_safety",
    "pii",
    "content_integrity",
    "content_ratio",
    "reasoning_indicators",
    "commercial_bias",
    "document_type",
    "business_sector",
    "content_length",
    "technical_content",
    "time_sensitivity",
    "information_density",
    "educational_value",
    "content_quality",
)


class PlanError(ValueError):
    """Raised for malformed sampling plans."""


@dataclass(frozen=True, slots=True)
class AnnotationRecord:
    """A document's property labels. A missing consulted label means drop."""

    id: str
    content_safety: str | None = None
    pii: str | None = None
    content_integrity: str | None = None
    content_ratio: str | None = None
    reasoning_indicators: str | None = None
    commercial_bias: str | None = None
    document_type: str | None = None
    business_sector: str | None = None
    content_length: str | None = None
    technical_content: str | None = None
    time_sensitivity: str | None = None
    information_density: str | None = None
    educational_value: str | None = None
    content_quality: str | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("record id must be non-empty")

    @classmethod
    def from_dict(cls, data: Mapping) -> "AnnotationRecord":
        rec_id = data.get("id")
        if not rec_id:
            raise ValueError("record has no id")
        labels = {k: data[k] for k in ANNOTATION_FIELDS if data.get(k) is not None}
        return cls(id=str(rec_id), **{k: str(v) for k, v in labels.items()})


@dataclass(frozen=True, slots=True)
class FilterDecision:
    keep: bool
    rule: str


_PASS = FilterDecision(True, PASS_RULE)


@dataclass(frozen=True, slots=True)
class SamplingPlan:
    ratios: Mapping[str, float]
    seed: int = 0

    def __post_init__(self) -> None:
        for cls_name, ratio in self.ratios.items():
            if not 0.0 < ratio <= 1.0:
                raise PlanError(f"ratio for {cls_name!r} must be in (0, 1], got {ratio}")
        object.__setattr__(self, "ratios", dict(self.ratios))

    @classmethod
    def from_dict(cls, data: Mapping) -> "SamplingPlan":
        unknown = set(data) - {"ratios", "seed"}
        if unknown:
            raise PlanError(f"unknown plan keys: {sorted(unknown)}")
        ratios = data.get("ratios", DEFAULT_SAMPLING_RATIOS)
        try:
            ratios = {str(k): float(v) for k, v in ratios.items()}
        except (TypeError, ValueError, AttributeError) as exc:
            raise PlanError(f"malformed ratios: {exc}") from exc
        return cls(ratios=ratios, seed=int(data.get("seed", 0)))


def apply_mandatory_filters(rec: AnnotationRecord) -> FilterDecision:
    """Integrity and safety constraints, checked in a fixed order.

    The reported rule is the first failing check; a consulted-but-missing
    label fails closed with rule "missing_label".
    """
    checks = (
        ("content_safety", rec.content_safety, lambda v: v == "safe"),
        ("pii", rec.pii, lambda v: v == "no_pii"),
        ("content_integrity", rec.content_integrity, lambda v: v == "complete"),
        ("content_ratio", rec.content_ratio, lambda v: v == "complete_content"),
        ("reasoning_indicators", rec.reasoning_indicators, lambda v: v != "none"),
        ("commercial_bias", rec.commercial_bias, lambda v: v == "none"),
        ("document_type", rec.document_type, lambda v: v not in EXCLUDED_DOCUMENT_TYPES),
        ("business_sector", rec.business_sector, lambda v: v not in EXCLUDED_SECTORS),
        ("content_length", rec.content_length, lambda v: v in ALLOWED_CONTENT_LENGTHS),
    )
    for rule, value, ok in checks:
        if value is None:
            return FilterDecision(False, MISSING_LABEL_RULE)
        if not ok(value):
            return FilterDecision(False, rule)
    return _PASS


def apply_quality_filters(rec: AnnotationRecord) -> FilterDecision:
    """Domain-dependent quality thresholds for records past the mandatory stage.

    Math/code-heavy content must be evergreen, dense, of moderate-to-high
    educational value and excellent quality; everything else needs quality in
    {excellent, good, adequate}.
    """
    if rec.technical_content is None:
        return FilterDecision(False, MISSING_LABEL_RULE)
    if rec.technical_content in STRICT_TECHNICAL_CLASSES:
        checks = (
            ("time_sensitivity", rec.time_sensitivity, lambda v: v == "evergreen"),
            ("information_density", rec.information_density, lambda v: v == "dense"),
            (
                "educational_value",
                rec.educational_value,
                lambda v: v in STRICT_EDUCATIONAL_VALUES,
            ),
            ("content_quality", rec.content_quality, lambda v: v == "excellent"),
        )
    else:
        checks = (
            ("content_quality", rec.content_quality, lambda v: v in RELAXED_QUALITY_VALUES),
        )
    for rule, value, ok in checks:
        if value is None:
            return FilterDecision(False, MISSING_LABEL_RULE)
        if not ok(value):
            return FilterDecision(False, rule)
    return _PASS


def sample_balanced(records: Sequence[AnnotationRecord], plan: SamplingPlan) -> list[str]:
    """Keep exactly round(ratio * N) ids per listed class, original order.

    Selection is a seeded per-class shuffle (round = half up), so identical
    inputs and seed give identical id lists. Classes absent from the plan are
    retained without downsampling.
    """
    by_class: dict[str, list[str]] = {}
    for rec in records:
        cls_name = rec.technical_content or ""
        if cls_name in plan.ratios:
            by_class.setdefault(cls_name, []).append(rec.id)
    selected: set[str] = set()
    for cls_name, ids in by_class.items():
        quota = int(math.floor(plan.ratios[cls_name] * len(ids) + 0.5))
        shuffled = list(ids)
        random.Random(f"{plan.seed}:{cls_name}").shuffle(shuffled)
        selected.update(shuffled[:quota])
    kept = []
    for rec in records:
        cls_name = rec.technical_content or ""
        if cls_name not in plan.ratios or rec.id in selected:
            kept.append(rec.id)
    return kept


def run_pipeline(
    records: Sequence[AnnotationRecord], plan: SamplingPlan
) -> tuple[list[AnnotationRecord], list[tuple[AnnotationRecord, FilterDecision]]]:
    """Mandatory -> quality -> sampling; returns kept records and all decisions."""
    decisions: dict[str, FilterDecision] = {}
    survivors: list[AnnotationRecord] = []
    for rec in records:
        decision = apply_mandatory_filters(rec)
        if decision.keep:
            decision = apply_quality_filters(rec)
        if decision.keep:
            survivors.append(rec)
        else:
            decisions[rec.id] = decision
    kept_ids = set(sample_balanced(survivors, plan))
    kept_records = []
    for rec in survivors:
        if rec.id in kept_ids:
            decisions[rec.id] = _PASS
            kept_records.append(rec)
        else:
            decisions[rec.id] = FilterDecision(False, SAMPLED_OUT_RULE)
    results = [(rec, decisions[rec.id]) for rec in records]
    return kept_records, results


def filter_stats(
    results: Iterable[tuple[AnnotationRecord, FilterDecision]]
) -> dict:
    """Counts per rule, per class kept/dropped, and the final class distribution."""
    rules: dict[str, int] = {}
    by_class: dict[str, dict[str, int]] = {}
    kept_class_counts: dict[str, int] = {}
    total = kept_total = 0
    for rec, decision in results:
        total += 1
        cls_name = rec.technical_content or "unlabeled"
        slot = by_class.setdefault(cls_name, {"kept": 0, "dropped": 0})
        if decision.keep:
            kept_total += 1
            slot["kept"] += 1
            kept_class_counts[cls_name] = kept_class_counts.get(cls_name, 0) + 1
        else:
            slot["dropped"] += 1
            rules[decision.rule] = rules.get(decision.rule, 0) + 1
    distribution = (
        {cls: count / kept_total for cls, count in sorted(kept_class_counts.items())}
        if kept_total
        else {}
    )
    return {
        "records": total,
        "kept": kept_total,
        "dropped": total - kept_total,
        "drop_rules": dict(sorted(rules.items())),
        "by_class": dict(sorted(by_class.items())),
        "kept_class_distribution": distribution,
    }
