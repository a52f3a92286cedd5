import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cutspec.graph import parse_graph

CORPUS_DIR = Path(__file__).parent.parent / "corpus"


@pytest.fixture(scope="session")
def corpus():
    """Name -> Graph for every shipped corpus file."""
    return {
        p.name: parse_graph(p.read_text())
        for p in sorted(CORPUS_DIR.glob("*.txt"))
    }


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Corpus graphs small enough for exhaustive ternary scans."""
    return {name: g for name, g in corpus.items() if g.n <= 8}
