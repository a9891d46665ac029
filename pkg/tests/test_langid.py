from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyreward.langid import (
    LangIdError,
    LangProfileModel,
    LanguageScore,
    identify,
    preprocess,
    score_language,
    train_profiles,
)

from conftest import LANGUAGES, load_seed_pairs

_MODEL_BOX: dict = {}


def _shared_model():
    # hypothesis properties need a model without depending on a fixture
    if "model" not in _MODEL_BOX:
        _MODEL_BOX["model"] = train_profiles(load_seed_pairs())
    return _MODEL_BOX["model"]


def test_train_shape(trained_model):
    assert trained_model.languages == tuple(sorted(LANGUAGES))


def test_train_rejects_below_char_floor():
    pairs = [p for p in load_seed_pairs() if p[0] != "de"] + [("de", "zu kurz")]
    with pytest.raises(LangIdError, match="de"):
        train_profiles(pairs)


def test_train_rejects_nonpositive_smoothing():
    with pytest.raises(LangIdError):
        train_profiles(load_seed_pairs(), smoothing=0.0)
    with pytest.raises(LangIdError):
        train_profiles(load_seed_pairs(), smoothing=-1.0)


def test_train_deterministic_byte_identical():
    a = train_profiles(load_seed_pairs())
    b = train_profiles(load_seed_pairs())
    assert a.dumps() == b.dumps()


def test_identify_german_example(trained_model):
    got = identify(trained_model, "Der Hund läuft schnell über die Straße und bellt laut.")
    assert got.language == "de"
    assert got.confidence > 0.8


def test_identify_empty_is_unknown(trained_model):
    assert identify(trained_model, "") == LanguageScore("und", 0.0)


def test_identify_digits_only_below_floor(trained_model):
    assert identify(trained_model, "12345 67890 12345 67890") == LanguageScore("und", 0.0)


def test_score_language_german_paragraph(trained_model, heldout):
    paragraph = " ".join(heldout["de"][:10])
    assert score_language(trained_model, paragraph, "de") >= 0.8
    assert score_language(trained_model, paragraph, "fr") <= 0.2


def test_score_language_unknown_target(trained_model):
    with pytest.raises(LangIdError):
        score_language(trained_model, "some text that is long enough", "xx")


def test_below_floor_scores_zero_for_any_target(trained_model):
    for target in LANGUAGES:
        assert score_language(trained_model, "kurz", target) == 0.0


def test_softmax_scores_sum_to_one(trained_model, heldout):
    for code in LANGUAGES:
        text = heldout[code][0]
        total = sum(score_language(trained_model, text, t) for t in LANGUAGES)
        assert abs(total - 1.0) <= 1e-9


@given(st.text(alphabet="abcdefghij ëüñçà", min_size=0, max_size=120))
@settings(max_examples=200, deadline=None)
def test_softmax_sum_property_arbitrary_text(text):
    model = _shared_model()
    scores = [score_language(model, text, t) for t in LANGUAGES]
    total = sum(scores)
    assert total == 0.0 or abs(total - 1.0) <= 1e-9
    assert all(0.0 <= s <= 1.0 for s in scores)


def test_identify_confidence_is_max_of_scores(trained_model, heldout):
    for code in LANGUAGES:
        text = heldout[code][3]
        got = identify(trained_model, text)
        best = max(
            ((t, score_language(trained_model, text, t)) for t in LANGUAGES),
            key=lambda kv: kv[1],
        )
        assert got.language == best[0]
        assert math.isclose(got.confidence, best[1], rel_tol=0, abs_tol=1e-12)


def test_score_invariant_to_surrounding_whitespace(trained_model, heldout):
    text = heldout["fr"][0]
    base = score_language(trained_model, text, "fr")
    assert score_language(trained_model, f"  \n\t{text}   \n", "fr") == base


def test_score_invariant_under_text_repetition(trained_model, heldout):
    for code in ("de", "es"):
        text = heldout[code][1]
        base = score_language(trained_model, text, code)
        doubled = score_language(trained_model, text + " " + text, code)
        assert abs(doubled - base) < 1e-6


def test_preprocess_strips_boxed_digits_punctuation():
    got = preprocess("La réponse: 42 est \\boxed{17}!  Vraiment.")
    assert got == "la réponse est vraiment"


def test_serialization_roundtrip_byte_identical(trained_model, tmp_path):
    path = tmp_path / "model.txt"
    trained_model.save(str(path))
    loaded = LangProfileModel.load(str(path))
    assert loaded.dumps() == trained_model.dumps()
    assert loaded.languages == trained_model.languages
    assert loaded.smoothing == trained_model.smoothing


def test_serialization_rejects_corruption(trained_model, tmp_path):
    path = tmp_path / "model.txt"
    trained_model.save(str(path))
    blob = path.read_text(encoding="utf-8")
    corrupted = blob.replace("lang de", "lang xx", 1)
    with pytest.raises(LangIdError):
        LangProfileModel.loads(corrupted)
    with pytest.raises(LangIdError):
        LangProfileModel.loads("not a model at all")


def test_heldout_top1_accuracy(trained_model, heldout):
    total = correct = 0
    for code, sentences in heldout.items():
        for sentence in sentences:
            total += 1
            if identify(trained_model, sentence).language == code:
                correct += 1
    assert total == 500
    assert correct / total >= 0.95
