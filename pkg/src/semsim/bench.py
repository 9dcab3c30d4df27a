"""Benchmark loading, Pearson correlation and evaluation grids.

Machine scores come from :func:`semsim.similarity.word_similarity`; pairs
whose words have no noun sense are marked skipped and excluded from the
correlation (they are never zero-filled).  Reported correlations are
rounded to two decimals, with the raw value kept alongside.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import (AllPairsSkipped, EmptyDataset, LengthMismatch, MalformedRow,
                     UnknownWord, ZeroVariance)
from .ic import ICConfig, ICModelId, ICTable, ic_table
from .similarity import SimMeasureId, word_similarity
from .taxonomy import Taxonomy

JSON_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class BenchmarkDataset:
    """Ordered word pairs with human similarity ratings."""

    name: str
    pairs: tuple[tuple[str, str, float], ...]
    scale: tuple[float, float]


@dataclass(frozen=True)
class PairScore:
    word1: str
    word2: str
    human: float
    machine: float | None
    status: str  # "ok" | "skipped_unknown_word"


@dataclass(frozen=True)
class EvalResult:
    dataset: str
    ic_model: ICModelId
    measure: SimMeasureId
    per_pair: tuple[PairScore, ...]
    pearson: float
    pearson_raw: float
    n_used: int

    def to_json_obj(self) -> dict:
        return {
            "schema": JSON_SCHEMA_VERSION,
            "dataset": self.dataset,
            "ic_model": str(self.ic_model),
            "measure": str(self.measure),
            "pearson": self.pearson,
            "pearson_raw": self.pearson_raw,
            "n_used": self.n_used,
            "pairs": [
                {
                    "word1": p.word1,
                    "word2": p.word2,
                    "human": p.human,
                    "machine": p.machine,
                    "status": p.status,
                }
                for p in self.per_pair
            ],
        }


def load_dataset(path) -> BenchmarkDataset:
    """Read a word1/word2/score table from a TSV or CSV file.

    An optional single header row is tolerated; ``#`` lines are comments.
    """
    path = Path(path)
    pairs: list[tuple[str, str, float]] = []
    seen: set[frozenset[str]] = set()
    first_data_row = True
    with open(path, "r", encoding="utf-8") as fh:
        for row_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cells = line.split("\t") if "\t" in line else line.split(",")
            if len(cells) != 3:
                raise MalformedRow(path, row_no,
                                   f"expected 3 columns, got {len(cells)}")
            w1, w2, score_text = (c.strip() for c in cells)
            try:
                score = float(score_text)
            except ValueError:
                if first_data_row:
                    first_data_row = False
                    continue  # header row
                raise MalformedRow(path, row_no,
                                   f"score is not a number: {score_text!r}") from None
            if not w1 or not w2:
                raise MalformedRow(path, row_no, "empty word cell")
            key = frozenset((w1.lower(), w2.lower()))
            if key in seen:
                raise MalformedRow(path, row_no, f"duplicate pair {w1}-{w2}")
            seen.add(key)
            pairs.append((w1, w2, score))
            first_data_row = False
    if not pairs:
        raise EmptyDataset(f"no pairs in {path}")
    scores = [s for _, _, s in pairs]
    return BenchmarkDataset(name=path.stem, pairs=tuple(pairs),
                            scale=(min(scores), max(scores)))


def pearson(xs, ys) -> float:
    """Sample linear correlation of two equal-length sequences."""
    xs = list(xs)
    ys = list(ys)
    if len(xs) != len(ys):
        raise LengthMismatch(f"length {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 2:
        raise LengthMismatch(f"need at least 2 points, got {n}")
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    dx = [x - mean_x for x in xs]
    dy = [y - mean_y for y in ys]
    var_x = sum(d * d for d in dx)
    var_y = sum(d * d for d in dy)
    denom = math.sqrt(var_x) * math.sqrt(var_y)  # the product alone can underflow
    if denom == 0.0:
        raise ZeroVariance("one of the score vectors is constant")
    r = sum(a * b for a, b in zip(dx, dy)) / denom
    return max(-1.0, min(1.0, r))


def evaluate(t: Taxonomy, dataset: BenchmarkDataset, ic_model: ICModelId,
             measure: SimMeasureId, cfg: ICConfig = ICConfig(),
             lcs_mode: str = "max_depth", table: ICTable | None = None) -> EvalResult:
    """Score every dataset pair and correlate against the human ratings."""
    ic_model = ICModelId(ic_model)
    measure = SimMeasureId(measure)
    if table is None:
        table = ic_table(t, ic_model, cfg)
    per_pair: list[PairScore] = []
    machine: list[float] = []
    human: list[float] = []
    for w1, w2, h in dataset.pairs:
        try:
            score = word_similarity(t, table, measure, w1, w2, lcs_mode)
        except UnknownWord:
            per_pair.append(PairScore(w1, w2, h, None, "skipped_unknown_word"))
            continue
        per_pair.append(PairScore(w1, w2, h, score, "ok"))
        machine.append(score)
        human.append(h)
    if not machine:
        raise AllPairsSkipped(f"no scorable pairs in {dataset.name}")
    raw = pearson(machine, human)
    return EvalResult(dataset=dataset.name, ic_model=ic_model, measure=measure,
                      per_pair=tuple(per_pair), pearson=round(raw, 2),
                      pearson_raw=raw, n_used=len(machine))


# Correlations quoted from the literature for report context.  These are
# carried as constants (reported, not computed): corpus-frequency IC and
# the non-IC families are outside what this package computes.
LITERATURE_BASELINES = (
    {"approach": "resnik (corpus IC)", "family": "IC corpus", "pairs": 28, "correlation": 0.72},
    {"approach": "lin (corpus IC)", "family": "IC corpus", "pairs": 28, "correlation": 0.70},
    {"approach": "jiang-conrath (corpus IC)", "family": "IC corpus", "pairs": 28, "correlation": 0.73},
    {"approach": "rada", "family": "edge counting", "pairs": 28, "correlation": 0.59},
    {"approach": "wu-palmer", "family": "edge counting", "pairs": 28, "correlation": 0.74},
    {"approach": "leacock-chodorow", "family": "edge counting", "pairs": 28, "correlation": 0.74},
    {"approach": "li", "family": "edge counting", "pairs": 28, "correlation": 0.82},
    {"approach": "rodriguez-egenhofer", "family": "feature based", "pairs": 28, "correlation": 0.71},
    {"approach": "tversky", "family": "feature based", "pairs": 28, "correlation": 0.73},
    {"approach": "petrakis", "family": "feature based", "pairs": 30, "correlation": 0.73},
    {"approach": "valls", "family": "feature based", "pairs": 30, "correlation": 0.83},
    {"approach": "bollegala", "family": "distributional", "pairs": 30, "correlation": 0.83},
    {"approach": "chen", "family": "distributional", "pairs": 30, "correlation": 0.69},
    {"approach": "sahami-heilman", "family": "distributional", "pairs": 30, "correlation": 0.58},
    {"approach": "gledson", "family": "distributional", "pairs": 30, "correlation": 0.55},
    {"approach": "bollegala (snippets + page counts)", "family": "web based", "pairs": 28,
     "correlation": 0.87},
)

# The grid a full benchmark run covers: every IC model under the three
# classic measures, plus the measure/model pairings with published scores.
FULL_GRID: tuple[tuple[ICModelId, SimMeasureId], ...] = tuple(
    [(m, s) for m in ICModelId
     for s in (SimMeasureId.RESNIK, SimMeasureId.LIN, SimMeasureId.JIANG_CONRATH)]
    + [
        (ICModelId.SANCHEZ2011, SimMeasureId.BATET),
        (ICModelId.SECO, SimMeasureId.FAITH),
        (ICModelId.PROPOSED, SimMeasureId.FAITH),
        (ICModelId.PROPOSED, SimMeasureId.PROPOSED),
        (ICModelId.MENG, SimMeasureId.PROPOSED),
    ]
)


@dataclass(frozen=True)
class GridReport:
    dataset: str
    results: tuple[EvalResult, ...]
    include_pairs: bool = False
    literature: tuple = ()

    def to_json_obj(self) -> dict:
        rows = []
        for r in self.results:
            row = {
                "ic_model": str(r.ic_model),
                "measure": str(r.measure),
                "pearson": r.pearson,
                "pearson_raw": r.pearson_raw,
                "n_used": r.n_used,
            }
            if self.include_pairs:
                row["pairs"] = r.to_json_obj()["pairs"]
            rows.append(row)
        obj = {
            "schema": JSON_SCHEMA_VERSION,
            "dataset": self.dataset,
            "rows": rows,
        }
        if self.literature:
            obj["literature"] = [dict(e, note="reported, not computed")
                                 for e in self.literature]
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True) + "\n"

    def to_tsv(self) -> str:
        lines = ["ic_model\tmeasure\tpearson\tn_used"]
        for r in self.results:
            lines.append(f"{r.ic_model}\t{r.measure}\t{r.pearson:.2f}\t{r.n_used}")
        for e in self.literature:
            lines.append(f"{e['approach']}\t{e['family']}\t{e['correlation']:.2f}"
                         f"\t{e['pairs']} (reported, not computed)")
        return "\n".join(lines) + "\n"


def grid_report(t: Taxonomy, dataset: BenchmarkDataset, combos,
                cfg: ICConfig = ICConfig(), lcs_mode: str = "max_depth",
                include_pairs: bool = False, with_literature: bool = False) -> GridReport:
    """Run a list of (ic_model, measure) combos over one dataset."""
    combos = [(ICModelId(m), SimMeasureId(s)) for m, s in combos]
    if not combos:
        raise ValueError("combo list is empty")
    tables: dict[ICModelId, ICTable] = {}
    results = []
    for model, measure in combos:
        if model not in tables:
            tables[model] = ic_table(t, model, cfg)
        results.append(evaluate(t, dataset, model, measure, cfg, lcs_mode,
                                table=tables[model]))
    return GridReport(dataset=dataset.name, results=tuple(results),
                      include_pairs=include_pairs,
                      literature=LITERATURE_BASELINES if with_literature else ())
