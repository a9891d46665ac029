"""Bundled throughput benchmark for full composite scoring.

Builds synthetic ~1 kB completions (reasoning block, prose output, boxed
answer), scores them through the same parallel pipeline the CLI uses, and
reports records/second plus the per-core rate so results can be compared
across machines.

Run as ``python -m polyreward.bench --corpus-dir data/langid_seed``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .batch import ConfigSource, score_lines
from .langid import LangProfileModel, train_profiles

_THINK_SENTENCES = {
    "de": (
        "Zuerst betrachte ich die gegebenen Zahlen und überlege, welche Rechenschritte nötig sind.",
        "Der Preis einer Kiste beträgt sieben Euro, also multipliziere ich die Anzahl mit dem Einzelpreis.",
        "Danach ziehe ich den Rabatt ab und prüfe, ob das Zwischenergebnis plausibel erscheint.",
        "Am Ende runde ich nicht, weil die Aufgabe ein ganzzahliges Ergebnis verlangt.",
    ),
    "en": (
        "First I look at the given numbers and decide which operations are required.",
        "Each crate costs seven dollars, so I multiply the count by the unit price.",
        "Then I subtract the discount and check whether the intermediate result looks plausible.",
        "Finally I avoid rounding because the task requires an integer answer.",
    ),
    "es": (
        "Primero observo los números dados y decido qué operaciones hacen falta.",
        "Cada caja cuesta siete euros, así que multiplico la cantidad por el precio unitario.",
        "Después resto el descuento y compruebo si el resultado intermedio parece razonable.",
        "Al final no redondeo porque el problema exige una respuesta entera.",
    ),
    "fr": (
        "Je regarde d'abord les nombres donnés et je choisis les opérations nécessaires.",
        "Chaque caisse coûte sept euros, donc je multiplie la quantité par le prix unitaire.",
        "Ensuite je soustrais la remise et je vérifie que le résultat intermédiaire reste plausible.",
        "Enfin je ne fais aucun arrondi puisque le problème demande un résultat entier.",
    ),
    "it": (
        "Prima osservo i numeri dati e decido quali operazioni servono davvero.",
        "Ogni cassa costa sette euro, quindi moltiplico la quantità per il prezzo unitario.",
        "Poi sottraggo lo sconto e controllo che il risultato intermedio sia ragionevole.",
        "Alla fine non arrotondo perché il problema richiede una risposta intera.",
    ),
}

_OUTPUT_SENTENCES = {
    "de": "Die Rechnung ergibt einen eindeutigen Wert, den ich unten angebe.",
    "en": "The calculation yields a single value, which I give below.",
    "es": "El cálculo produce un único valor, que indico a continuación.",
    "fr": "Le calcul produit une seule valeur, que je donne ci-dessous.",
    "it": "Il calcolo produce un unico valore, che riporto qui sotto.",
}


def build_records(
    count: int, language: str = "de", size: int = 1024
) -> list[str]:
    """Deterministic JSONL lines with ~``size``-character completion texts."""
    sentences = _THINK_SENTENCES[language]
    closing = _OUTPUT_SENTENCES[language]
    lines = []
    for i in range(count):
        think_parts = []
        j = i
        while sum(len(p) for p in think_parts) < size - 300:
            think_parts.append(sentences[j % len(sentences)])
            j += 1
        think = " ".join(think_parts)
        text = f"<think>{think}</think> {closing} \\boxed{{{40 + i % 5}}}"
        record = {
            "id": f"bench-{i:06d}",
            "target_language": language,
            "text": text,
            "gold": str(40 + i % 5),
        }
        lines.append(json.dumps(record, ensure_ascii=False, sort_keys=True))
    return lines


def run_bench(
    model: LangProfileModel,
    records: int = 2000,
    workers: int | None = None,
    language: str = "de",
    size: int = 1024,
) -> dict:
    if workers is None:
        workers = os.cpu_count() or 1
    lines = build_records(records, language=language, size=size)
    source = ConfigSource(preset="table8")
    # Warm pool costs and caches outside the timed window.
    score_lines(lines[: min(64, len(lines))], source, model, workers=1)
    start = time.perf_counter()
    out = score_lines(lines, source, model, workers=workers)
    elapsed = time.perf_counter() - start
    assert len(out) == records
    rate = records / elapsed if elapsed > 0 else float("inf")
    return {
        "records": records,
        "workers": workers,
        "cpu_count": os.cpu_count() or 1,
        "completion_bytes": size,
        "seconds": elapsed,
        "records_per_second": rate,
        "records_per_second_per_worker": rate / workers,
    }


def _model_from_args(args) -> LangProfileModel:
    if args.model:
        return LangProfileModel.load(args.model)
    pairs = []
    for name in sorted(os.listdir(args.corpus_dir)):
        if name.endswith(".txt"):
            with open(os.path.join(args.corpus_dir, name), "r", encoding="utf-8") as fh:
                pairs.append((name[:-4], fh.read()))
    return train_profiles(pairs)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--records", type=int, default=2000)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--language", default="de", choices=sorted(_THINK_SENTENCES))
    parser.add_argument("--size", type=int, default=1024)
    parser.add_argument("--model", default=None, help="trained model file")
    parser.add_argument(
        "--corpus-dir",
        default="data/langid_seed",
        help="train a model from this dir when --model is not given",
    )
    args = parser.parse_args(argv)
    model = _model_from_args(args)
    result = run_bench(
        model,
        records=args.records,
        workers=args.workers,
        language=args.language,
        size=args.size,
    )
    json.dump(result, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
