"""Batch command-line front end.

Subcommands: score, extract, filter, langid-train, report. Exit codes:
0 success, 1 configuration error, 2 I/O error. Per-record problems become
error lines in the output and never abort a batch; configuration problems
always do. POLYREWARD_CONFIG sets the default config path for ``score``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import batch, corpus
from .extraction import extract_bool, extract_math_boxed, extract_mc_letter, extract_mgsm
from .langid import DEFAULT_SMOOTHING, LangIdError, LangProfileModel, train_profiles
from .numeric import RATIONAL, parse_math_answer
from .rewards import ConfigError, config_from_dict

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2

CONFIG_ENV_VAR = "POLYREWARD_CONFIG"

DEFAULT_LANGUAGES = ("en", "de", "fr", "es", "it")

BENCHMARK_EXTRACTORS = {
    "mgsm": extract_mgsm,
    "math100": extract_math_boxed,
    "mc4": lambda text: extract_mc_letter(text, 4),
    "mc2": lambda text: extract_mc_letter(text, 2),
    "bool": extract_bool,
}


class CliConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # bad flags are configuration errors
        raise CliConfigError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="polyreward", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="score completions with the composite reward")
    p.add_argument("--input", "-i", required=True, help="JSONL of completion records")
    p.add_argument("--output", "-o", required=True, help="JSONL of breakdowns")
    p.add_argument("--model", "-m", required=True, help="trained language-profile model")
    p.add_argument(
        "--config",
        "-c",
        default=None,
        help=f"reward config JSON (default: ${CONFIG_ENV_VAR} if set)",
    )
    p.add_argument(
        "--preset",
        choices=("table8", "maintext"),
        default="table8",
        help="weight preset used when no config file is given",
    )
    p.add_argument(
        "--workers",
        "-j",
        type=int,
        default=None,
        help="scoring processes (default: available cores)",
    )

    p = sub.add_parser("extract", help="run per-benchmark answer extraction")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--output", "-o", required=True)
    p.add_argument("--benchmark", "-b", required=True, choices=sorted(BENCHMARK_EXTRACTORS))

    p = sub.add_parser("filter", help="apply corpus filters and class-balanced sampling")
    p.add_argument("--input", "-i", required=True, help="JSONL of annotated records")
    p.add_argument("--plan", "-p", required=True, help="sampling plan JSON")
    p.add_argument("--output", "-o", required=True, help="JSONL of kept records")

    p = sub.add_parser("langid-train", help="train the trigram language identifier")
    p.add_argument("--corpus-dir", "-d", required=True, help="dir with <code>.txt files")
    p.add_argument("--output", "-o", required=True, help="model file to write")
    p.add_argument(
        "--languages",
        default=",".join(DEFAULT_LANGUAGES),
        help="comma-separated language codes (default: %(default)s)",
    )
    p.add_argument("--smoothing", type=float, default=DEFAULT_SMOOTHING)

    p = sub.add_parser("report", help="aggregate a breakdown file into a score report")
    p.add_argument("--input", "-i", required=True, help="JSONL of breakdowns")
    p.add_argument("--output", "-o", default="-", help="report path ('-' for stdout)")

    return parser


def _load_json(path: str, what: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise CliConfigError(f"malformed {what} {path}: {exc}") from exc


def _cmd_score(args) -> int:
    config_path = args.config or os.environ.get(CONFIG_ENV_VAR) or None
    if config_path:
        cfg = config_from_dict(_load_json(config_path, "config"))
        source = batch.ConfigSource(fixed=cfg)
    else:
        source = batch.ConfigSource(preset=args.preset)
    if args.workers is not None and args.workers < 1:
        raise CliConfigError(f"--workers must be >= 1, got {args.workers}")
    model = LangProfileModel.load(args.model)
    report = batch.write_scored_batch(
        args.input, args.output, source, model, args.workers
    )
    print(
        f"scored {report['scored']}/{report['records']} records "
        f"({report['errors']} errors) -> {args.output}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_extract(args) -> int:
    extractor = BENCHMARK_EXTRACTORS[args.benchmark]
    out_lines = []
    with open(args.input, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    for line in lines:
        stripped = line.strip()
        rec_id = None
        text = ""
        if stripped:
            try:
                record = json.loads(stripped)
            except json.JSONDecodeError:
                record = {"text": stripped}  # plain-text lines are allowed
            if isinstance(record, dict):
                rec_id = record.get("id")
                text = str(record.get("text", ""))
            else:
                text = stripped
        answer = extractor(text)
        row: dict = {"id": rec_id, "value": answer.value, "stage": answer.stage.value}
        if answer.value:
            parsed = parse_math_answer(answer.value)
            row["normalized"] = (
                parsed.rational.canonical if parsed.kind == RATIONAL else None
            )
        else:
            row["normalized"] = None
        out_lines.append(
            json.dumps(row, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
        )
    _write_lines(args.output, out_lines)
    return EXIT_OK


def _cmd_filter(args) -> int:
    try:
        plan = corpus.SamplingPlan.from_dict(_load_json(args.plan, "plan"))
    except corpus.PlanError as exc:
        raise CliConfigError(str(exc)) from exc
    with open(args.input, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    records = []
    raw_by_id: dict[str, str] = {}
    malformed = 0
    for line in lines:
        stripped = line.strip()
        if not stripped:
            continue
        try:
            data = json.loads(stripped)
            rec = corpus.AnnotationRecord.from_dict(data)
        except (json.JSONDecodeError, ValueError, TypeError):
            malformed += 1
            continue
        records.append(rec)
        raw_by_id[rec.id] = stripped
    kept, results = corpus.run_pipeline(records, plan)
    _write_lines(args.output, [raw_by_id[rec.id] for rec in kept])
    stats = corpus.filter_stats(results)
    stats["malformed"] = malformed
    stats_path = args.output + ".stats.json"
    with open(stats_path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(stats, fh, ensure_ascii=False, sort_keys=True, indent=2)
        fh.write("\n")
    print(
        f"kept {len(kept)}/{stats['records']} records "
        f"({malformed} malformed skipped) -> {args.output}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_langid_train(args) -> int:
    languages = [code.strip() for code in args.languages.split(",") if code.strip()]
    if not languages:
        raise CliConfigError("no languages requested")
    pairs = []
    for code in languages:
        path = os.path.join(args.corpus_dir, f"{code}.txt")
        if not os.path.exists(path):
            raise CliConfigError(f"corpus file for language {code!r} missing: {path}")
        with open(path, "r", encoding="utf-8") as fh:
            pairs.append((code, fh.read()))
    try:
        model = train_profiles(pairs, smoothing=args.smoothing)
    except LangIdError as exc:
        raise CliConfigError(str(exc)) from exc
    model.save(args.output)
    print(f"trained {len(languages)} languages -> {args.output}", file=sys.stderr)
    return EXIT_OK


def _cmd_report(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    report = batch.aggregate_report(lines)
    payload = json.dumps(report, ensure_ascii=False, sort_keys=True, indent=2) + "\n"
    if args.output == "-":
        sys.stdout.write(payload)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
    return EXIT_OK


def _write_lines(path: str, lines: list[str]) -> None:
    tmp = path + ".tmp"
    try:
        with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
            for line in lines:
                fh.write(line)
                fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


_COMMANDS = {
    "score": _cmd_score,
    "extract": _cmd_extract,
    "filter": _cmd_filter,
    "langid-train": _cmd_langid_train,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except CliConfigError as exc:
        print(f"polyreward: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConfigError, corpus.PlanError, LangIdError) as exc:
        print(f"polyreward: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"polyreward: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
