import os
import random
from pathlib import Path

import pytest

from semsim.taxonomy import RawGraph, Taxonomy, freeze
from semsim.wordnet import parse_wordnet

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"
DATA = REPO / "data"

WORDNET_CANDIDATES = (
    "/root/wordnet",
    os.path.expanduser("~/wordnet"),
    os.path.expanduser("~/nltk_data/corpora/wordnet"),
    "/usr/share/wordnet",
    "/usr/local/share/wordnet",
)


def find_wordnet_dir():
    env = os.environ.get("SEMSIM_WORDNET_DIR", "").strip()
    candidates = ([env] if env else []) + list(WORDNET_CANDIDATES)
    for d in candidates:
        if d and os.path.isfile(os.path.join(d, "data.noun")) \
                and os.path.isfile(os.path.join(d, "index.noun")):
            return d
    return None


def require_wordnet():
    d = find_wordnet_dir()
    if d is None:
        pytest.skip("WordNet 3.0 noun database not found; set SEMSIM_WORDNET_DIR")
    return d


@pytest.fixture(scope="session")
def wordnet_dir():
    return require_wordnet()


@pytest.fixture(scope="session")
def wn(wordnet_dir) -> Taxonomy:
    raw, word_index = parse_wordnet(wordnet_dir)
    return freeze(raw, word_index=word_index)


def build(parents, **kwargs) -> Taxonomy:
    """Freeze a small taxonomy from a {node: [parents]} mapping."""
    return freeze(RawGraph(parents={n: list(ps) for n, ps in parents.items()}), **kwargs)


@pytest.fixture
def chain() -> Taxonomy:
    # r -> a -> b
    return build({"r": [], "a": ["r"], "b": ["a"]})


@pytest.fixture
def diamond() -> Taxonomy:
    # r -> {p1, p2}, both over l
    return build({"r": [], "p1": ["r"], "p2": ["r"], "l": ["p1", "p2"]})


def random_raw_graph(rng: random.Random, max_nodes: int = 50,
                     max_parents: int = 3) -> RawGraph:
    """Random DAG: node i may only point at earlier nodes, so acyclic by
    construction; parentless nodes beyond the first exercise the synthetic
    root path in freeze."""
    n = rng.randint(1, max_nodes)
    parents = {"n00": []}
    for i in range(1, n):
        node = f"n{i:02d}"
        k = rng.randint(0, min(max_parents, i))
        parents[node] = rng.sample([f"n{j:02d}" for j in range(i)], k)
    return RawGraph(parents=parents)


def random_taxonomy(rng: random.Random, max_nodes: int = 50,
                    max_parents: int = 3) -> Taxonomy:
    return freeze(random_raw_graph(rng, max_nodes, max_parents))
