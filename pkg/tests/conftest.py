from __future__ import annotations

from pathlib import Path

import pytest

from polyreward.langid import LangProfileModel, LanguageScore, train_profiles

ROOT = Path(__file__).resolve().parent.parent
SEED_DIR = ROOT / "data" / "langid_seed"
HELDOUT_DIR = ROOT / "data" / "langid_heldout"
LANGUAGES = ("de", "en", "es", "fr", "it")


def load_seed_pairs() -> list[tuple[str, str]]:
    return [
        (code, (SEED_DIR / f"{code}.txt").read_text(encoding="utf-8"))
        for code in LANGUAGES
    ]


def load_heldout() -> dict[str, list[str]]:
    out = {}
    for code in LANGUAGES:
        lines = (HELDOUT_DIR / f"{code}.txt").read_text(encoding="utf-8").splitlines()
        out[code] = [line.strip() for line in lines if line.strip()]
    return out


@pytest.fixture(scope="session")
def trained_model() -> LangProfileModel:
    return train_profiles(load_seed_pairs())


@pytest.fixture(scope="session")
def heldout() -> dict[str, list[str]]:
    return load_heldout()


class PerfectIdentifier:
    """Drop-in identifier stub: the configured language always scores 1.0.

    Stands in for the trained trigram model through the same duck-typed
    surface (languages / identify / score_language); useful wherever a test
    needs exact component values rather than classifier estimates.
    """

    def __init__(self, language: str, languages: tuple[str, ...] = LANGUAGES):
        if language not in languages:
            raise ValueError(language)
        self.language = language
        self.languages = languages

    def score_language(self, text: str, target: str) -> float:
        if target not in self.languages:
            raise ValueError(f"unknown target language {target!r}")
        if not text.strip():
            return 0.0
        return 1.0 if target == self.language else 0.0

    def identify(self, text: str) -> LanguageScore:
        return LanguageScore(self.language, 1.0)


@pytest.fixture
def perfect_de() -> PerfectIdentifier:
    return PerfectIdentifier("de")


@pytest.fixture
def perfect_es() -> PerfectIdentifier:
    return PerfectIdentifier("es")
