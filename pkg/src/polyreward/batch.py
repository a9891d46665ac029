"""Deterministic batch scoring: reader, parallel scoring pool, ordered writer.

Input is newline-delimited JSON, one completion per line with fields
``id``, ``target_language``, ``text`` and optional ``gold``/``benchmark``.
Every input line yields exactly one output line, either a breakdown record
or a per-record error record; a bad record never aborts the batch. Workers
hold only the immutable config and model, results are reassembled in input
order, and output bytes are identical for any worker count.
"""

from __future__ import annotations

import json
import multiprocessing
import os
from dataclasses import dataclass, field

from .langid import LangProfileModel
from .rewards import (
    Completion,
    ConfigError,
    PRESETS,
    RewardBreakdown,
    RewardConfig,
    composite_reward,
)


@dataclass
class ConfigSource:
    """Per-record reward config resolution.

    Either a fixed single-language config (records must match its language)
    or a preset applied per record language, cached per language.
    """

    preset: str | None = None
    fixed: RewardConfig | None = None
    _cache: dict[str, RewardConfig] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if (self.preset is None) == (self.fixed is None):
            raise ConfigError("config source needs exactly one of preset or fixed config")
        if self.preset is not None and self.preset not in PRESETS:
            raise ConfigError(f"unknown preset {self.preset!r} (have: {sorted(PRESETS)})")

    def for_language(self, language: str) -> RewardConfig:
        if self.fixed is not None:
            if language != self.fixed.language:
                raise ConfigError(
                    f"config is for language {self.fixed.language!r}, "
                    f"record targets {language!r}"
                )
            return self.fixed
        cfg = self._cache.get(language)
        if cfg is None:
            cfg = PRESETS[self.preset](language)
            self._cache[language] = cfg
        return cfg


def breakdown_to_dict(rec_id: str, breakdown: RewardBreakdown) -> dict:
    return {
        "id": rec_id,
        "total": breakdown.total,
        "components": {
            name: {"raw": c.raw, "weight": c.weight, "weighted": c.weighted}
            for name, c in breakdown.components.items()
        },
        "flags": {
            "target_language_hit": breakdown.target_language_hit,
            "extraction_stage": breakdown.extraction_stage,
        },
    }


def score_record(record: dict, source: ConfigSource, model: LangProfileModel) -> dict:
    """Score one parsed record; unknown languages and missing fields come back
    as error records rather than exceptions."""
    rec_id = record.get("id")
    try:
        if not isinstance(record, dict):
            raise ValueError("record must be a JSON object")
        missing = [k for k in ("id", "target_language", "text") if not record.get(k)]
        if missing:
            raise ValueError(f"record missing fields: {missing}")
        completion = Completion(
            id=str(record["id"]),
            target_language=str(record["target_language"]),
            text=str(record["text"]),
            gold_answer=(str(record["gold"]) if record.get("gold") is not None else None),
            benchmark=(
                str(record["benchmark"]) if record.get("benchmark") is not None else None
            ),
        )
        cfg = source.for_language(completion.target_language)
        breakdown = composite_reward(completion, cfg, model)
    except (ValueError, KeyError, TypeError) as exc:
        return {"id": rec_id if isinstance(rec_id, str) else None, "error": str(exc)}
    return breakdown_to_dict(completion.id, breakdown)


def _dump_line(row: dict) -> str:
    return json.dumps(row, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def score_line(line: str, source: ConfigSource, model: LangProfileModel) -> str:
    line = line.strip()
    if not line:
        return _dump_line({"id": None, "error": "empty line"})
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        return _dump_line({"id": None, "error": f"invalid JSON: {exc}"})
    if not isinstance(record, dict):
        return _dump_line({"id": None, "error": "record must be a JSON object"})
    return _dump_line(score_record(record, source, model))


_WORKER_SOURCE: ConfigSource | None = None
_WORKER_MODEL: LangProfileModel | None = None


def _init_worker(source: ConfigSource, model: LangProfileModel) -> None:
    global _WORKER_SOURCE, _WORKER_MODEL
    _WORKER_SOURCE = source
    _WORKER_MODEL = model


def _score_in_worker(line: str) -> str:
    assert _WORKER_SOURCE is not None and _WORKER_MODEL is not None
    return score_line(line, _WORKER_SOURCE, _WORKER_MODEL)


def score_lines(
    lines: list[str],
    source: ConfigSource,
    model: LangProfileModel,
    workers: int | None = None,
) -> list[str]:
    """Score input lines in order; output is identical for any worker count."""
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(lines) < 2:
        return [score_line(line, source, model) for line in lines]
    chunksize = max(1, -(-len(lines) // (workers * 8)))
    with multiprocessing.Pool(
        processes=workers, initializer=_init_worker, initargs=(source, model)
    ) as pool:
        return list(pool.imap(_score_in_worker, lines, chunksize=chunksize))


def _quantile(sorted_values: list[float], pct: int) -> float:
    # Nearest-rank: deterministic and exact on emitted values.
    n = len(sorted_values)
    rank = max(1, min(n, (pct * n + 99) // 100))
    return sorted_values[rank - 1]


def aggregate_report(output_lines: list[str]) -> dict:
    """Build the batch score report from emitted breakdown lines.

    Aggregates are computed from the serialized per-record values, so the
    means are exactly the arithmetic means of what readers of the file see.
    %TL is the percentage of scored records whose identified language matched
    the target; the format-compliance rate counts records with a full format
    score of 1.0.
    """
    rows = [json.loads(line) for line in output_lines if line.strip()]
    scored = [r for r in rows if "error" not in r]
    errors = len(rows) - len(scored)

    component_values: dict[str, list[float]] = {}
    totals: list[float] = []
    hits = 0
    accuracy_values: list[float] = []
    format_values: list[float] = []
    for row in scored:
        totals.append(row["total"])
        if row["flags"]["target_language_hit"]:
            hits += 1
        for name, comp in row["components"].items():
            component_values.setdefault(name, []).append(comp["raw"])
            if name == "accuracy":
                accuracy_values.append(comp["raw"])
            elif name == "format":
                format_values.append(comp["raw"])

    components = {
        name: {
            "mean": sum(vals) / len(vals),
            "min": min(vals),
            "max": max(vals),
        }
        for name, vals in sorted(component_values.items())
    }
    report: dict = {
        "records": len(rows),
        "scored": len(scored),
        "errors": errors,
        "components": components,
    }
    if totals:
        ordered = sorted(totals)
        report["total"] = {
            "mean": sum(totals) / len(totals),
            "min": ordered[0],
            "max": ordered[-1],
            "quantiles": {
                f"p{p}": _quantile(ordered, p) for p in (10, 25, 50, 75, 90)
            },
        }
        report["pct_target_language"] = 100.0 * hits / len(scored)
    else:
        report["total"] = None
        report["pct_target_language"] = None
    report["accuracy_rate"] = (
        sum(accuracy_values) / len(accuracy_values) if accuracy_values else None
    )
    report["format_compliance_rate"] = (
        sum(1 for v in format_values if v == 1.0) / len(format_values)
        if format_values
        else None
    )
    return report


def write_scored_batch(
    input_path: str,
    output_path: str,
    source: ConfigSource,
    model: LangProfileModel,
    workers: int | None = None,
) -> dict:
    """Score a JSONL file to ``output_path`` plus a sidecar report.

    Output is written atomically (temp file + rename) so a fatal error never
    leaves a partial result behind. Returns the report.
    """
    with open(input_path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    out_lines = score_lines(lines, source, model, workers)
    tmp_path = output_path + ".tmp"
    try:
        with open(tmp_path, "w", encoding="utf-8", newline="\n") as fh:
            for line in out_lines:
                fh.write(line)
                fh.write("\n")
        os.replace(tmp_path, output_path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
    report = aggregate_report(out_lines)
    report_path = output_path + ".report.json"
    with open(report_path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(report, fh, ensure_ascii=False, sort_keys=True, indent=2)
        fh.write("\n")
    return report
