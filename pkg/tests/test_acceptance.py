"""Acceptance suite: one test per shipping criterion.

Each criterion prints a single machine-greppable PASS line when it holds
(run with ``pytest tests/test_acceptance.py -v -s``); a failed assertion
fails the corresponding test, so the pytest status line doubles as the
FAIL marker.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

from polyreward.batch import ConfigSource, aggregate_report, write_scored_batch
from polyreward.bench import build_records, run_bench
from polyreward.extraction import (
    Stage,
    extract_bool,
    extract_boxed_all,
    extract_mc_letter,
    extract_mgsm,
    split_think,
)
from polyreward.numeric import (
    answers_equivalent,
    canonical_of_fraction,
    normalize_number,
    parse_math_answer,
)
from polyreward.corpus import (
    AnnotationRecord,
    SamplingPlan,
    run_pipeline,
    sample_balanced,
)
from polyreward.langid import identify
from polyreward.rewards import (
    Completion,
    composite_reward,
    format_reward,
    loop_redundancy,
    maintext_config,
    repetition_penalty,
    spanish_naturalness,
    table8_config,
)

from conftest import PerfectIdentifier
from reward_oracles import oracle_loop_redundancy
from test_numeric import random_safe_rational, render_six_forms


def _ok(num: int, message: str) -> None:
    print(f"ACCEPTANCE {num:02d} PASS - {message}", flush=True)


# ---------------------------------------------------------------------------
# 1. Format-reward golden table
# ---------------------------------------------------------------------------

def test_criterion_01_format_reward_golden_table():
    start = time.perf_counter()
    golden = [
        ("", 0.0),
        ("plain text without structure", 0.0),
        ("<think>open only", 0.1),
        ("\\boxed{5}", 0.1),
        ("<think>open with \\boxed{5}", 0.2),
        ("<think>closed</think>", 0.4),
        ("\\boxed{5} then <think>closed</think>", 0.5),
        ("<think>closed</think> then \\boxed{5}", 1.0),
    ]
    for text, expected in golden:
        got = format_reward(split_think(text), text)
        assert abs(got - expected) <= 1e-12, (text, got, expected)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _ok(1, f"8 flag combinations exact at 1e-12 in {elapsed * 1000:.1f} ms")


# ---------------------------------------------------------------------------
# 2. Spanish-naturalness constants
# ---------------------------------------------------------------------------

def test_criterion_02_spanish_naturalness_constants():
    def nat(trace: str) -> float:
        return spanish_naturalness(split_think(f"<think>{trace}</think> fin"))

    short = " ".join(["palabra"] * 29)
    assert nat(short) == 0.0

    density_cap = " ".join(["palabra"] * 90 + ["¿bien?"] * 10)
    assert abs(nat(density_cap) - (-0.4)) <= 1e-12

    stacked_cap = " ".join(["palabra"] * 400 + ["¿¿vale?"] * 10)
    assert abs(nat(stacked_cap) - (-0.2)) <= 1e-12

    hesitation_cap = " ".join(
        ["palabra"] * 390 + ["¿Espera,"] * 10 + ["¿pero bueno sigue."]
    )
    assert abs(nat(hesitation_cap) - (-0.3)) <= 1e-12

    _ok(2, "word floor, density cap -0.4, stacked cap -0.2 @10, hesitation cap -0.3 @10")


# ---------------------------------------------------------------------------
# 3. Composite weights under both presets
# ---------------------------------------------------------------------------

def test_criterion_03_composite_weights_both_presets():
    completion = Completion(
        id="clean-de",
        target_language="de",
        text="<think>Der Gedanke bleibt klar und kurz.</think> "
        "Die Antwort lautet \\boxed{42}.",
        gold_answer="42",
    )
    identifier = PerfectIdentifier("de")

    table8 = composite_reward(completion, table8_config("de"), identifier)
    assert table8.total == 1.3
    assert table8.components["language"].weighted == 0.2 * 1.0
    assert table8.components["format"].weighted == 0.1 * 1.0

    maintext = composite_reward(completion, maintext_config("de"), identifier)
    assert maintext.total == 1.3
    assert maintext.components["language"].weighted == 0.1 * 1.0
    assert maintext.components["format"].weighted == 0.2 * 1.0

    _ok(3, "total exactly 1.3 under table8 and maintext with swapped contributions")


# ---------------------------------------------------------------------------
# 4. Repetition-penalty properties
# ---------------------------------------------------------------------------

def test_criterion_04_repetition_properties():
    start = time.perf_counter()
    rng = random.Random(20250404)

    # range over 1e5 fuzz strings
    alphabet = [chr(c) for c in range(32, 256)]
    words = ["ja", "nein", "aaaa", "b", "cc cc", " ", "x" * 12]
    for i in range(100_000):
        if i % 2:
            text = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 60)))
        else:
            text = " ".join(rng.choice(words) for _ in range(rng.randrange(0, 24)))
        got = repetition_penalty(text)
        assert -1.0 <= got <= 0.0

    # monotone non-increase under appended repetition blocks
    vocab = ["uno", "dos", "tres", "cuatro", "cinco"]
    for _ in range(2000):
        base = " ".join(rng.choice(vocab) for _ in range(rng.randrange(0, 24)))
        block = " ".join([rng.choice(vocab)] * rng.randrange(2, 7))
        appended = (base + " " + block).strip()
        assert repetition_penalty(appended) <= repetition_penalty(base) + 1e-12

    # loop detection vs exhaustive window scanner, <=30 tokens, 5 symbols
    for _ in range(10_000):
        tokens = [rng.choice(vocab) for _ in range(rng.randrange(0, 31))]
        assert loop_redundancy(tokens) == oracle_loop_redundancy(tokens)

    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _ok(4, f"range, monotonicity, 1e4 oracle equivalences in {elapsed:.1f} s")


# ---------------------------------------------------------------------------
# 5. Extraction golden suite
# ---------------------------------------------------------------------------

def test_criterion_05_extraction_golden_suite():
    checks = 0

    def boxed_last(text, value):
        nonlocal checks
        got = extract_mgsm(text)
        assert (got.value, got.stage) == (value, Stage.BOXED_LAST), text
        checks += 1

    # nested braces
    boxed_last("\\boxed{\\frac{1}{2}}", "\\frac{1}{2}")
    boxed_last("\\boxed{\\frac{\\sqrt{2}}{2}}", "\\frac{\\sqrt{2}}{2}")
    boxed_last("x \\boxed{{a}{b}} y", "{a}{b}")
    # multiple boxed: last wins
    boxed_last("\\boxed{1} junk \\boxed{72}", "72")
    boxed_last("\\boxed{a} \\boxed{b} \\boxed{c}", "c")
    # #### fallback
    for text, value in (
        ("The answer is #### 42", "42"),
        ("#### -17 end", "-17"),
        ("#### 1.234,56", "1.234,56"),
    ):
        got = extract_mgsm(text)
        assert (got.value, got.stage) == (value, Stage.HASH_DELIMITER), text
        checks += 1
    # last-number fallback
    for text, value in (
        ("costs 3 then 7 total", "7"),
        ("prices 1,5 and 2,5 here", "2,5"),
        ("only -4 appears", "-4"),
    ):
        got = extract_mgsm(text)
        assert (got.value, got.stage) == (value, Stage.LAST_NUMBER), text
        checks += 1
    # unbalanced boxed is skipped
    got = extract_mgsm("\\boxed{unclosed and then 9")
    assert (got.value, got.stage) == ("9", Stage.LAST_NUMBER)
    checks += 1
    # numeric normalization goldens
    for raw, canonical in (
        ("1.234,56", "1234.56"),
        ("1,234.56", "1234.56"),
        ("3.50", "3.5"),
        ("1,234", "1234"),
        ("-0", "0"),
        ("0,5", "0.5"),
        ("12.345.678", "12345678"),
    ):
        assert normalize_number(raw).canonical == canonical, raw
        checks += 1
    assert normalize_number("1.234,56").value == Fraction(123456, 100)
    checks += 1
    # 2- vs 4-option letter range
    assert extract_mc_letter("\\boxed{C}", 4).value == "C"
    assert extract_mc_letter("maybe B, no — D.", 4).value == "D"
    assert extract_mc_letter("the answer is C", 2).stage is Stage.NOT_FOUND
    assert extract_mc_letter("pick A or B: B.", 2).value == "B"
    assert extract_mc_letter("\\boxed{d}", 4).value == "D"
    checks += 5
    # boolean keywords
    assert extract_bool("\\boxed{True}").value == "True"
    assert extract_bool("\\boxed{false}").value == "False"
    assert extract_bool("i think false.").value == "False"
    assert extract_bool("True then FALSE").value == "False"
    assert extract_bool("no verdict").stage is Stage.NOT_FOUND
    checks += 5

    assert checks >= 25
    _ok(5, f"{checks} exact golden extraction/normalization cases")


# ---------------------------------------------------------------------------
# 6. Numeric equivalence over surface forms
# ---------------------------------------------------------------------------

def test_criterion_06_numeric_equivalence():
    rng = random.Random(20250606)
    for _ in range(1000):
        value = random_safe_rational(rng)
        parsed = [parse_math_answer(form) for form in render_six_forms(value)]
        for a in parsed:
            assert a.kind == "rational"
            for b in parsed:
                assert answers_equivalent(a, b)

    # idempotent normalization
    for _ in range(2000):
        value = random_safe_rational(rng)
        canonical = canonical_of_fraction(value)
        first = normalize_number(canonical)
        assert first.canonical == canonical
        assert normalize_number(first.canonical) == first

    # equivalence relation on the rational subset
    values = [random_safe_rational(rng) for _ in range(40)]
    parsed = [parse_math_answer(canonical_of_fraction(v)) for v in values]
    for i, a in enumerate(parsed):
        assert answers_equivalent(a, a)
        for j, b in enumerate(parsed):
            assert answers_equivalent(a, b) == answers_equivalent(b, a)
            assert answers_equivalent(a, b) == (values[i] == values[j])
            if answers_equivalent(a, b):
                for c in parsed:
                    if answers_equivalent(b, c):
                        assert answers_equivalent(a, c)

    _ok(6, "1000 rationals x 6 surface forms pairwise equivalent; idempotent; relation holds")


# ---------------------------------------------------------------------------
# 7. Corpus pipeline
# ---------------------------------------------------------------------------

GOOD_LABELS = dict(
    content_safety="safe",
    pii="no_pii",
    content_integrity="complete",
    content_ratio="complete_content",
    reasoning_indicators="present",
    commercial_bias="none",
    document_type="article",
    business_sector="education",
    content_length="moderate",
    technical_content="non_technical",
    time_sensitivity="evergreen",
    information_density="dense",
    educational_value="high",
    content_quality="excellent",
)


def _rec(rec_id: str, **overrides) -> AnnotationRecord:
    labels = dict(GOOD_LABELS)
    for key, value in overrides.items():
        if value is None:
            labels.pop(key, None)
        else:
            labels[key] = value
    return AnnotationRecord(id=rec_id, **labels)


def test_criterion_07_corpus_pipeline():
    fixture = [
        (_rec("keep_plain", content_quality="adequate"), True, "pass"),
        (_rec("keep_math", technical_content="math_heavy"), True, "pass"),
        (_rec("drop_safety", content_safety="unsafe"), False, "content_safety"),
        (_rec("drop_pii", pii="has_pii"), False, "pii"),
        (_rec("drop_integrity", content_integrity="truncated"), False, "content_integrity"),
        (_rec("drop_ratio", content_ratio="partial_content"), False, "content_ratio"),
        (_rec("drop_reasoning", reasoning_indicators="none"), False, "reasoning_indicators"),
        (_rec("drop_bias", commercial_bias="moderate"), False, "commercial_bias"),
        (_rec("drop_doctype", document_type="press_release"), False, "document_type"),
        (_rec("drop_boiler", document_type="boilerplate"), False, "document_type"),
        (_rec("drop_sector", business_sector="mining_resources"), False, "business_sector"),
        (_rec("drop_length", content_length="excessive"), False, "content_length"),
        (_rec("drop_missing", pii=None), False, "missing_label"),
        (_rec("drop_math_quality", technical_content="math_heavy", content_quality="good"),
         False, "content_quality"),
        (_rec("drop_math_time", technical_content="math_heavy", time_sensitivity="dated"),
         False, "time_sensitivity"),
        (_rec("drop_math_density", technical_content="math_heavy",
              information_density="adequate"), False, "information_density"),
        (_rec("drop_math_edu", technical_content="math_heavy", educational_value="basic"),
         False, "educational_value"),
        (_rec("keep_code", technical_content="code_heavy"), True, "pass"),
        (_rec("drop_relaxed", technical_content="scientific", content_quality="poor"),
         False, "content_quality"),
        (_rec("keep_sci", technical_content="scientific", content_quality="good"),
         True, "pass"),
    ]
    assert len(fixture) == 20
    records = [rec for rec, _, _ in fixture]
    kept, results = run_pipeline(records, SamplingPlan(ratios={}, seed=0))
    expected_keep = [rec.id for rec, keep, _ in fixture if keep]
    assert [rec.id for rec in kept] == expected_keep
    for (rec, keep, rule), (res_rec, decision) in zip(fixture, results):
        assert res_rec.id == rec.id
        assert decision.keep == keep, rec.id
        assert decision.rule == rule, rec.id

    # exact-count sampling with seed determinism
    math_records = [_rec(f"m{i}", technical_content="math_heavy") for i in range(1000)]
    plan = SamplingPlan(ratios={"math_heavy": 0.30}, seed=123)
    first = sample_balanced(math_records, plan)
    assert len(first) == 300
    assert sample_balanced(math_records, plan) == first

    _ok(7, "20-record keep/drop set exact; 1000 @0.30 keeps exactly 300; seed-stable")


# ---------------------------------------------------------------------------
# 8. LangId desk benchmark
# ---------------------------------------------------------------------------

def test_criterion_08_langid_heldout_accuracy(trained_model, heldout):
    total = correct = 0
    for code, sentences in heldout.items():
        for sentence in sentences:
            total += 1
            if identify(trained_model, sentence).language == code:
                correct += 1
    assert total == 500
    accuracy = correct / total
    assert accuracy >= 0.95
    _ok(8, f"top-1 accuracy {100 * accuracy:.1f}% on 500 held-out sentences (target 95%)")


# ---------------------------------------------------------------------------
# 9. %TL report on a constructed 50/50 batch
# ---------------------------------------------------------------------------

def test_criterion_09_pct_target_language(tmp_path, trained_model, heldout):
    rng = random.Random(20250909)
    lines = []
    for i in range(50):
        sentences = rng.sample(heldout["de"], 3)
        text = (
            f"<think>{sentences[0]} {sentences[1]}</think> "
            f"{sentences[2]} \\boxed{{42}}"
        )
        lines.append(json.dumps(
            {"id": f"de{i}", "target_language": "de", "text": text, "gold": "42"},
            ensure_ascii=False,
        ))
    for i in range(50):
        sentences = rng.sample(heldout["en"], 3)
        text = (
            f"<think>{sentences[0]} {sentences[1]}</think> "
            f"{sentences[2]} \\boxed{{42}}"
        )
        lines.append(json.dumps(
            {"id": f"en{i}", "target_language": "de", "text": text, "gold": "42"},
            ensure_ascii=False,
        ))
    input_path = tmp_path / "mix.jsonl"
    input_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    output_path = str(tmp_path / "scored.jsonl")
    source = ConfigSource(preset="table8")
    report = write_scored_batch(str(input_path), output_path, source, trained_model)
    assert report["errors"] == 0
    pct = report["pct_target_language"]
    assert 48.0 <= pct <= 52.0
    _ok(9, f"%TL = {pct:.1f} on a 50/50 target/English batch (window [48, 52])")


# ---------------------------------------------------------------------------
# 10. Determinism under parallelism
# ---------------------------------------------------------------------------

def test_criterion_10_worker_count_determinism(tmp_path, trained_model):
    lines = build_records(10_000, language="de", size=420)
    input_path = tmp_path / "fixture.jsonl"
    input_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    digests = []
    for workers in (1, 4, 8):
        output_path = str(tmp_path / f"out-{workers}.jsonl")
        write_scored_batch(
            str(input_path), output_path, ConfigSource(preset="table8"),
            trained_model, workers=workers,
        )
        digests.append(Path(output_path).read_bytes())
    assert digests[0] == digests[1] == digests[2]
    assert len(digests[0].splitlines()) == 10_000
    _ok(10, "10k-record batch byte-identical across 1, 4, 8 workers")


# ---------------------------------------------------------------------------
# 11. Throughput engineering target
# ---------------------------------------------------------------------------

def test_criterion_11_throughput(trained_model):
    cores = os.cpu_count() or 1
    result = run_bench(trained_model, records=3000, workers=min(cores, 8))
    rate = result["records_per_second"]
    # 5000/s is stated for an 8-core machine; prorate on smaller boxes and
    # hold the absolute bar whenever 8 cores are actually present.
    target = 5000.0 * min(cores, 8) / 8.0
    assert rate >= target, (rate, target, cores)
    if cores >= 8:
        assert rate >= 5000.0
    per_worker = result["records_per_second_per_worker"]
    _ok(
        11,
        f"{rate:.0f} rec/s on {result['workers']} workers ({cores} cores; "
        f"target {target:.0f}; {per_worker:.0f}/worker, 8-core estimate "
        f"{8 * per_worker:.0f}/s)",
    )
