"""Stylochronometry toolkit: stylometric descriptors from plain text and
correlation-weighted nearest-neighbour dating of documents."""

__version__ = "0.1.0"

from .corpus import CleaningRules, CleanDocument, Genre, Manifest, PlayRecord, clean_text, load_corpus, load_manifest
from .features import DescriptorCatalog, FeatureConfig, FeatureVector, build_catalog, catalog_for, extract_all
from .model import (
    FeatureMatrix,
    fit_normalizer,
    loo_predict_years,
    regression_weights,
    repeated_holdout_classify,
    wnn_predict,
)
from .stats import group_summary, pearson, pearson_pvalue, sigma_difference, welch_ttest
from .textproc import Lexicons, default_lexicons, load_lexicons

__all__ = [
    "CleanDocument",
    "CleaningRules",
    "DescriptorCatalog",
    "FeatureConfig",
    "FeatureMatrix",
    "FeatureVector",
    "Genre",
    "Lexicons",
    "Manifest",
    "PlayRecord",
    "build_catalog",
    "catalog_for",
    "clean_text",
    "default_lexicons",
    "extract_all",
    "fit_normalizer",
    "group_summary",
    "load_corpus",
    "load_lexicons",
    "load_manifest",
    "loo_predict_years",
    "pearson",
    "pearson_pvalue",
    "regression_weights",
    "repeated_holdout_classify",
    "sigma_difference",
    "welch_ttest",
    "wnn_predict",
]
