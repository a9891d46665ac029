"""Character-trigram language identification.

A self-contained, deterministic replacement for an external pretrained
identifier: additive-smoothed per-language trigram distributions scored by
length-normalized average log-likelihood, with per-language confidence taken
from a softmax over languages. Any object exposing ``languages``,
``identify(text)`` and ``score_language(text, target)`` can stand in for the
trained model wherever the reward engine takes one.

Text is preprocessed before trigram extraction: boxed expressions are
removed, the rest is lowercased and reduced to letter runs (digits and
punctuation carry no language evidence). Trigrams are taken per word with a
boundary space on each side, so repeating a text exactly doubles its trigram
counts and leaves the length-normalized score unchanged. Texts shorter than
20 characters after preprocessing score 0 with language "und".
"""

from __future__ import annotations

import hashlib
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .extraction import strip_boxed

MIN_TRAIN_CHARS = 1000
MIN_TEXT_CHARS = 20
UNKNOWN_LANGUAGE = "und"
DEFAULT_SMOOTHING = 0.01

FORMAT_VERSION = "1"
_MAGIC = f"polyreward-langprofile v{FORMAT_VERSION}"

_LETTER_RUN_RE = re.compile(r"[^\W\d_]+")
_SPACE_CODE = np.uint64(ord(" "))


class LangIdError(ValueError):
    """Raised for bad training input, unknown targets or corrupt model files."""


@dataclass(frozen=True, slots=True)
class LanguageScore:
    language: str
    confidence: float


def preprocess(text: str) -> str:
    """Lowercased letter runs joined by single spaces, boxed content removed."""
    return " ".join(_LETTER_RUN_RE.findall(strip_boxed(text).lower()))


def _window_codes(clean: str) -> tuple[np.ndarray, np.ndarray]:
    """Unique packed trigram codes and their counts for preprocessed text.

    A trigram code packs three code points into a uint64 (21 bits each), so
    numeric order equals lexicographic order on the trigram strings. Windows
    whose middle character is a space are junction windows between words and
    are dropped; what remains is exactly the per-word boundary-padded
    trigram multiset.
    """
    padded = f" {clean} "
    chars = np.frombuffer(padded.encode("utf-32-le"), dtype=np.uint32).astype(np.uint64)
    codes = (chars[:-2] << np.uint64(42)) | (chars[1:-1] << np.uint64(21)) | chars[2:]
    return np.unique(codes[chars[1:-1] != _SPACE_CODE], return_counts=True)


def _encode_trigram(tri: str) -> int:
    return (ord(tri[0]) << 42) | (ord(tri[1]) << 21) | ord(tri[2])


def _word_trigrams(clean: str) -> Counter:
    """Trigram counts keyed by string; the training-side twin of _window_codes."""
    counts: Counter = Counter()
    for word in clean.split():
        padded = f" {word} "
        counts.update(padded[i : i + 3] for i in range(len(padded) - 2))
    return counts


class LangProfileModel:
    """Immutable trigram profiles for a fixed language set.

    Stores exact integer trigram counts (so serialization round-trips
    byte-identically) and derives a dense log-probability matrix for scoring:
    one row per trigram in the shared vocabulary plus an unseen-trigram
    bucket, one column per language. With additive smoothing ``a`` and
    vocabulary size V, p(t | lang) = (count + a) / (total + a * (V + 1)),
    which sums to 1 over the vocabulary plus the unseen bucket.
    """

    def __init__(self, counts: dict[str, Counter], smoothing: float):
        if smoothing <= 0:
            raise LangIdError(f"smoothing must be positive, got {smoothing}")
        self.languages: tuple[str, ...] = tuple(sorted(counts))
        self.smoothing = float(smoothing)
        self._counts = {lang: Counter(counts[lang]) for lang in self.languages}
        vocab = sorted(set().union(*self._counts.values())) if self._counts else []
        if not vocab:
            raise LangIdError("model has an empty trigram vocabulary")
        index = {tri: i for i, tri in enumerate(vocab)}
        # Lexicographic string order equals packed-code order, so the sorted
        # code array lines up with the matrix rows.
        self._vocab_codes = np.array([_encode_trigram(t) for t in vocab], dtype=np.uint64)
        self._unk_row = len(vocab)
        matrix = np.empty((len(vocab) + 1, len(self.languages)), dtype=np.float64)
        for col, lang in enumerate(self.languages):
            table = self._counts[lang]
            denom = sum(table.values()) + self.smoothing * (len(vocab) + 1)
            row = np.full(len(vocab) + 1, self.smoothing, dtype=np.float64)
            for tri, n in table.items():
                row[index[tri]] += n
            matrix[:, col] = np.log(row / denom)
        self._logprob = matrix

    def _average_loglik(self, text: str) -> np.ndarray | None:
        clean = preprocess(text)
        if len(clean) < MIN_TEXT_CHARS:
            return None
        uniq, counts = _window_codes(clean)
        pos = np.minimum(np.searchsorted(self._vocab_codes, uniq), self._unk_row - 1)
        rows = np.where(self._vocab_codes[pos] == uniq, pos, self._unk_row)
        weights = counts.astype(np.float64)
        return weights @ self._logprob[rows] / weights.sum()

    def _softmax_scores(self, text: str) -> np.ndarray | None:
        avg = self._average_loglik(text)
        if avg is None:
            return None
        shifted = np.exp(avg - avg.max())
        return shifted / shifted.sum()

    def identify(self, text: str) -> LanguageScore:
        scores = self._softmax_scores(text)
        if scores is None:
            return LanguageScore(UNKNOWN_LANGUAGE, 0.0)
        best = int(scores.argmax())
        return LanguageScore(self.languages[best], float(scores[best]))

    def score_language(self, text: str, target: str) -> float:
        if target not in self.languages:
            raise LangIdError(f"unknown target language {target!r}")
        scores = self._softmax_scores(text)
        if scores is None:
            return 0.0
        return float(scores[self.languages.index(target)])

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.dumps())

    def dumps(self) -> str:
        lines = [
            _MAGIC,
            f"smoothing {self.smoothing.hex()}",
            "languages " + " ".join(self.languages),
        ]
        for lang in self.languages:
            entries = sorted(self._counts[lang].items())
            lines.append(f"lang {lang} {len(entries)}")
            for tri, n in entries:
                lines.append(f"{n}\t{tri}")
        body = "\n".join(lines) + "\n"
        digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
        return body + f"checksum {digest}\n"

    @classmethod
    def load(cls, path: str) -> "LangProfileModel":
        with open(path, "r", encoding="utf-8", newline="\n") as fh:
            return cls.loads(fh.read())

    @classmethod
    def loads(cls, serialized: str) -> "LangProfileModel":
        body, _, tail = serialized.rpartition("checksum ")
        if not body:
            raise LangIdError("missing checksum line")
        if hashlib.sha256(body.encode("utf-8")).hexdigest() != tail.strip():
            raise LangIdError("model file checksum mismatch")
        lines = body.splitlines()
        if not lines or lines[0] != _MAGIC:
            raise LangIdError("unrecognized model file header")
        try:
            smoothing = float.fromhex(lines[1].split(" ", 1)[1])
            languages = lines[2].split()[1:]
            counts: dict[str, Counter] = {}
            i = 3
            for _ in languages:
                _, lang, n_entries = lines[i].split(" ")
                i += 1
                table: Counter = Counter()
                for _ in range(int(n_entries)):
                    n, _, tri = lines[i].partition("\t")
                    table[tri] = int(n)
                    i += 1
                counts[lang] = table
        except (IndexError, ValueError) as exc:
            raise LangIdError(f"malformed model file: {exc}") from exc
        return cls(counts, smoothing)


def train_profiles(
    corpus: list[tuple[str, str]], smoothing: float = DEFAULT_SMOOTHING
) -> LangProfileModel:
    """Train trigram profiles from (language, text) pairs.

    Each language needs at least 1000 characters of raw training text;
    shorter corpora and non-positive smoothing are rejected. Training is
    deterministic given its inputs.
    """
    if smoothing <= 0:
        raise LangIdError(f"smoothing must be positive, got {smoothing}")
    raw_chars: Counter = Counter()
    counts: dict[str, Counter] = {}
    for lang, text in corpus:
        raw_chars[lang] += len(text)
        counts.setdefault(lang, Counter()).update(_word_trigrams(preprocess(text)))
    if not counts:
        raise LangIdError("empty training corpus")
    for lang in sorted(counts):
        if raw_chars[lang] < MIN_TRAIN_CHARS:
            raise LangIdError(
                f"language {lang!r} has {raw_chars[lang]} training characters, "
                f"needs at least {MIN_TRAIN_CHARS}"
            )
        if not counts[lang]:
            raise LangIdError(f"language {lang!r} produced no trigrams")
    return LangProfileModel(counts, smoothing)


def identify(model: LangProfileModel, text: str) -> LanguageScore:
    """Argmax language with softmax confidence; ("und", 0.0) below the floor."""
    return model.identify(text)


def score_language(model: LangProfileModel, text: str, target: str) -> float:
    """Softmax-normalized likelihood of ``target`` (not the argmax winner)."""
    return model.score_language(text, target)
