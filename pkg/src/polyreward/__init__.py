"""Composite verifiable-reward scoring for multilingual reasoning RL.

The library side of the engine: answer extraction, numeric equivalence,
trigram language identification, the five reward components with per-language
weight presets, corpus filtering/sampling, and the deterministic batch
scorer behind the ``polyreward`` CLI.
"""

from .extraction import (
    BoxedSpan,
    ExtractedAnswer,
    Stage,
    ThinkSplit,
    extract_bool,
    extract_boxed_all,
    extract_math_boxed,
    extract_mc_letter,
    extract_mgsm,
    split_think,
    strip_boxed,
)
from .numeric import (
    MathValue,
    NormalizedNumber,
    NumberFormatError,
    answers_equivalent,
    normalize_number,
    parse_math_answer,
)
from .langid import (
    LangIdError,
    LangProfileModel,
    LanguageScore,
    identify,
    score_language,
    train_profiles,
)
from .rewards import (
    Completion,
    ComponentScore,
    ConfigError,
    LanguageSplit,
    NaturalnessSettings,
    PRESETS,
    RepetitionSettings,
    RewardBreakdown,
    RewardConfig,
    accuracy_reward,
    composite_reward,
    config_from_dict,
    format_reward,
    language_reward,
    maintext_config,
    repetition_penalty,
    spanish_naturalness,
    table8_config,
)
from .corpus import (
    AnnotationRecord,
    FilterDecision,
    PlanError,
    SamplingPlan,
    apply_mandatory_filters,
    apply_quality_filters,
    filter_stats,
    run_pipeline,
    sample_balanced,
)

__version__ = "0.1.0"

__all__ = [
    "AnnotationRecord",
    "BoxedSpan",
    "Completion",
    "ComponentScore",
    "ConfigError",
    "ExtractedAnswer",
    "FilterDecision",
    "LangIdError",
    "LangProfileModel",
    "LanguageScore",
    "LanguageSplit",
    "MathValue",
    "NaturalnessSettings",
    "NormalizedNumber",
    "NumberFormatError",
    "PRESETS",
    "PlanError",
    "RepetitionSettings",
    "RewardBreakdown",
    "RewardConfig",
    "SamplingPlan",
    "Stage",
    "ThinkSplit",
    "accuracy_reward",
    "answers_equivalent",
    "apply_mandatory_filters",
    "apply_quality_filters",
    "composite_reward",
    "config_from_dict",
    "extract_bool",
    "extract_boxed_all",
    "extract_math_boxed",
    "extract_mc_letter",
    "extract_mgsm",
    "filter_stats",
    "format_reward",
    "identify",
    "language_reward",
    "maintext_config",
    "normalize_number",
    "parse_math_answer",
    "repetition_penalty",
    "run_pipeline",
    "sample_balanced",
    "score_language",
    "spanish_naturalness",
    "split_think",
    "strip_boxed",
    "table8_config",
    "train_profiles",
]
