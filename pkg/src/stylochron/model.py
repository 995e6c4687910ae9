"""Correlation-weighted nearest-neighbour year regression and
t-weighted nearest-neighbour two-class classification."""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Hashable, Sequence

import numpy as np

from .errors import DegenerateInput, InsufficientData, ShapeError
from .stats import CorrelationResult, correlate, pearson, welch_ttest

EPSILON = 1e-9
MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class FeatureMatrix:
    ids: tuple[str, ...]
    columns: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2:
            values = values.reshape(len(self.ids), len(self.columns))
        if values.shape != (len(self.ids), len(self.columns)):
            raise ShapeError(f"values shape {values.shape} != ({len(self.ids)}, {len(self.columns)})")
        if not np.all(np.isfinite(values)):
            raise ValueError("feature matrix contains non-finite values")
        if len(set(self.ids)) != len(self.ids):
            raise ShapeError("duplicate row ids")
        values.setflags(write=False)
        object.__setattr__(self, "ids", tuple(self.ids))
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "values", values)

    @classmethod
    def from_vectors(cls, vectors) -> "FeatureMatrix":
        vectors = list(vectors)
        if not vectors:
            return cls((), (), np.zeros((0, 0)))
        columns = vectors[0].names
        for v in vectors:
            if v.names != columns:
                raise ShapeError(f"{v.doc_id}: descriptor set differs from the first vector")
        return cls(tuple(v.doc_id for v in vectors), columns, np.vstack([v.as_array() for v in vectors]))

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def column(self, name: str) -> np.ndarray:
        return self.values[:, self.columns.index(name)]

    def row(self, doc_id: str) -> np.ndarray:
        return self.values[self.ids.index(doc_id)]

    def subset(self, rows: Sequence[int]) -> "FeatureMatrix":
        rows = list(rows)
        return FeatureMatrix(tuple(self.ids[i] for i in rows), self.columns, self.values[rows])


@dataclass(frozen=True)
class Normalizer:
    mean: np.ndarray
    std: np.ndarray

    @property
    def constant(self) -> np.ndarray:
        return self.std == 0

    def apply(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        safe = np.where(self.constant, 1.0, self.std)
        return np.where(self.constant, 0.0, (x - self.mean) / safe)

    def invert(self, z: np.ndarray) -> np.ndarray:
        return np.asarray(z, dtype=float) * self.std + self.mean


def fit_normalizer(train: FeatureMatrix | np.ndarray) -> Normalizer:
    """Column z-scores with the sample (n-1) std; constant columns map to 0."""
    values = train.values if isinstance(train, FeatureMatrix) else np.asarray(train, dtype=float)
    if values.shape[0] == 0:
        raise InsufficientData("cannot fit a normalizer on zero rows")
    mean = values.mean(axis=0)
    if values.shape[0] == 1:
        std = np.zeros(values.shape[1])
    else:
        std = values.std(axis=0, ddof=1)
        # identical floats can still leave a few ulps of spread; that is constant
        std[std <= 1e-12 * np.abs(mean)] = 0.0
    return Normalizer(mean=mean, std=std)


def apply(norm: Normalizer, vector: np.ndarray) -> np.ndarray:
    return norm.apply(vector)


def _values(m: FeatureMatrix | np.ndarray) -> np.ndarray:
    return m.values if isinstance(m, FeatureMatrix) else np.asarray(m, dtype=float)


def regression_weights(train: FeatureMatrix | np.ndarray, years: Sequence[float], power: int = 1) -> np.ndarray:
    """|pearson(column, years)| ** power per column; degenerate columns weigh 0."""
    values = _values(train)
    if values.shape[0] < 3:
        raise InsufficientData("regression weights need at least 3 training rows")
    y = np.asarray(years, dtype=float)
    w = np.zeros(values.shape[1])
    for j in range(values.shape[1]):
        try:
            w[j] = abs(pearson(values[:, j], y)) ** power
        except DegenerateInput:
            w[j] = 0.0
    return w


def classification_weights(train: FeatureMatrix | np.ndarray, labels: Sequence[Hashable]) -> np.ndarray:
    """|Welch t| of each column between the two label classes."""
    values = _values(train)
    labels = list(labels)
    classes = sorted(set(labels), key=str)
    if len(classes) != 2:
        raise ValueError(f"need exactly two classes, got {classes}")
    mask = np.array([lab == classes[0] for lab in labels])
    if mask.sum() < 2 or (~mask).sum() < 2:
        raise InsufficientData("each class needs at least 2 training rows")
    w = np.zeros(values.shape[1])
    for j in range(values.shape[1]):
        try:
            w[j] = abs(welch_ttest(values[mask, j], values[~mask, j]).t)
        except DegenerateInput:
            w[j] = 0.0
    return w


def weighted_distances(train: np.ndarray, w: np.ndarray, query: np.ndarray) -> np.ndarray:
    diff = np.asarray(train, dtype=float) - np.asarray(query, dtype=float)
    return np.sqrt((diff * diff) @ np.asarray(w, dtype=float))


def _nearest(d: np.ndarray, k: int) -> np.ndarray:
    if not 1 <= k <= d.size:
        raise ValueError(f"k={k} out of range for {d.size} training rows")
    # stable sort: ties go to the earlier (manifest-order) row
    return np.argsort(d, kind="stable")[:k]


def wnn_predict(
    train: FeatureMatrix | np.ndarray,
    years: Sequence[float],
    w: np.ndarray,
    query: np.ndarray,
    k: int = 3,
) -> float:
    """Inverse-distance weighted mean target of the k nearest training rows.

    If any of the k nearest rows sits at distance 0 the mean of the
    zero-distance targets is returned exactly.
    """
    values = _values(train)
    y = np.asarray(years, dtype=float)
    d = weighted_distances(values, w, query)
    idx = _nearest(d, k)
    dk = d[idx]
    exact = dk == 0.0
    if exact.any():
        return float(y[idx][exact].mean())
    vote = 1.0 / (dk + EPSILON)
    return float(math.fsum(vote * y[idx]) / math.fsum(vote))


@dataclass(frozen=True)
class RegressionResult:
    ids: tuple[str, ...]
    actual: tuple[float, ...]
    predicted: tuple[float, ...]
    summary: CorrelationResult | None
    k: int

    def rows(self):
        return list(zip(self.ids, self.actual, self.predicted))


def _fit_fold(values: np.ndarray, years: np.ndarray, power: int):
    norm = fit_normalizer(values)
    z = norm.apply(values)
    return norm, z, regression_weights(z, years, power)


def loo_predict_years(matrix: FeatureMatrix, years: Sequence[float], k: int = 3, power: int = 1) -> RegressionResult:
    """Leave-one-out: each row is predicted from a model fitted on the others."""
    n = matrix.shape[0]
    if n < 4:
        raise InsufficientData("leave-one-out needs at least 4 documents")
    y = np.asarray(years, dtype=float)
    if y.shape != (n,):
        raise ShapeError("one year per matrix row required")
    preds = []
    for i in range(n):
        keep = np.arange(n) != i
        norm, z, w = _fit_fold(matrix.values[keep], y[keep], power)
        preds.append(wnn_predict(z, y[keep], w, norm.apply(matrix.values[i]), k))
    try:
        summary = correlate(y, preds)
    except DegenerateInput:
        summary = None
    return RegressionResult(matrix.ids, tuple(float(v) for v in y), tuple(preds), summary, k)


# ---------------------------------------------------------------------------
# repeated holdout classification

class SplitMix64:
    """64-bit SplitMix generator; identical streams on every platform."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def sample(self, items: Sequence, m: int) -> list:
        """First ``m`` slots of a partial Fisher-Yates shuffle of ``items``."""
        pool = list(items)
        for i in range(m):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:m]


def run_stream(seed: int, run: int) -> SplitMix64:
    """Independent generator for holdout run ``run`` of ``seed``."""
    mixer = SplitMix64((seed & MASK64) ^ ((run + 1) * 0xD1B54A32D192ED03 & MASK64))
    return SplitMix64(mixer.next_u64())


def knn_classify(train: np.ndarray, labels: Sequence, w: np.ndarray, query: np.ndarray, k: int = 1):
    """Majority label of the k nearest rows; ties go to the class of the nearest row."""
    d = weighted_distances(train, w, query)
    idx = _nearest(d, k)
    votes = Counter(labels[i] for i in idx)
    best = max(votes.values())
    for i in idx:
        if votes[labels[i]] == best:
            return labels[i]


@dataclass(frozen=True)
class RunRecord:
    run: int
    train_ids: tuple[str, ...]
    test_ids: tuple[str, ...]
    truth: tuple[str, ...]
    predicted: tuple[str, ...]


@dataclass(frozen=True)
class ClassificationResult:
    runs: int
    accuracy: float
    seed: int
    k: int
    train_per_class: int
    test_per_class: bool
    classes: tuple[str, ...]
    records: tuple[RunRecord, ...] = field(repr=False)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def repeated_holdout_classify(
    matrix: FeatureMatrix,
    labels: Sequence[str],
    train_per_class: int = 9,
    runs: int = 100,
    k: int = 1,
    seed: int = 0,
    test_per_class: bool = True,
) -> ClassificationResult:
    """Repeated random train/test splits with t-weighted k-NN.

    Each run draws ``train_per_class`` training rows per class, then either
    one test row per class (default) or a single test row from the pooled
    remainder, fits normalizer and weights on the training rows only, and
    classifies the test rows. Run ``r`` uses its own generator derived from
    (seed, r), so runs are independent of execution order.
    """
    labels = [str(lab) for lab in labels]
    if len(labels) != matrix.shape[0]:
        raise ShapeError("one label per matrix row required")
    classes = tuple(sorted(set(labels)))
    if len(classes) != 2:
        raise ValueError(f"need exactly two classes, got {classes}")
    members = {c: [i for i, lab in enumerate(labels) if lab == c] for c in classes}
    for c, rows in members.items():
        if len(rows) < train_per_class + 1:
            raise InsufficientData(f"class {c!r} has {len(rows)} rows, needs {train_per_class + 1}")
    if train_per_class < 2:
        raise InsufficientData("train_per_class must be at least 2")

    records = []
    correct = total = 0
    for r in range(runs):
        rng = run_stream(seed, r)
        train_idx: list[int] = []
        test_idx: list[int] = []
        rest: list[int] = []
        for c in classes:
            picked = rng.sample(members[c], len(members[c]))
            train_idx += picked[:train_per_class]
            if test_per_class:
                test_idx.append(picked[train_per_class])
            else:
                rest += picked[train_per_class:]
        if not test_per_class:
            test_idx = rng.sample(sorted(rest), 1)

        train_vals = matrix.values[train_idx]
        train_labels = [labels[i] for i in train_idx]
        norm = fit_normalizer(train_vals)
        z = norm.apply(train_vals)
        w = classification_weights(z, train_labels)
        preds = tuple(knn_classify(z, train_labels, w, norm.apply(matrix.values[i]), k) for i in test_idx)
        truth = tuple(labels[i] for i in test_idx)
        correct += sum(p == t for p, t in zip(preds, truth))
        total += len(test_idx)
        records.append(
            RunRecord(
                run=r,
                train_ids=tuple(matrix.ids[i] for i in train_idx),
                test_ids=tuple(matrix.ids[i] for i in test_idx),
                truth=truth,
                predicted=preds,
            )
        )
    return ClassificationResult(
        runs=runs,
        accuracy=correct / total,
        seed=seed,
        k=k,
        train_per_class=train_per_class,
        test_per_class=test_per_class,
        classes=classes,
        records=tuple(records),
    )
