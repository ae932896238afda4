"""Shared corpora and crafted graphs.

The two gadgets below are built by hand around known certificates:

* p3_gadget: pentagon 0-1-2-3-4 plus pendants 5 (on 1) and 6 (on 3).
  Removing the induced path (0, 1, 2) leaves {3, 4, 6} and {5}, so it is
  the lexicographically first cut path.

* star_gadget: center 0 with leaves {1, 2}; removing {0, 1, 2} leaves
  components {3, 4, 5, 9} and {6, 7, 8}. The leaf pair (1, 2) is joined by
  the even induced path 1-3-4-5-2 inside the first component, and 0 has
  the neighbor 9 there, so {0; 1, 2} is a strong parity star-cutset. Both
  odd cycles through 9 have length five, so the graph stays in the class.
"""

import random

import pytest

from pentagraph import (
    CorpusSpec,
    PENTAGRAPH,
    SearchBudget,
    generate_corpus,
    make_graph,
    recognize,
)
from pentagraph.generate import enumerate_girth5


def make_rng(tag: str) -> random.Random:
    return random.Random(f"pentagraph-tests:{tag}")


def p3_gadget():
    return make_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5), (3, 6)])


def star_gadget():
    return make_graph(
        10,
        [
            (0, 1), (0, 2),
            (1, 3), (3, 4), (4, 5), (5, 2),
            (1, 6), (6, 7), (7, 8), (8, 2),
            (0, 9), (9, 4),
        ],
    )


@pytest.fixture(scope="session")
def small_pentagraphs():
    """Every labeled pentagraph on at most 7 vertices."""
    out = []
    for n in range(0, 8):
        for G in enumerate_girth5(n):
            if recognize(G).verdict == PENTAGRAPH:
                out.append(G)
    return out


@pytest.fixture(scope="session")
def random_pentagraphs_40():
    """1000 seeded random members with up to 40 vertices."""
    spec = CorpusSpec(
        mode="random", n_min=1, n_max=40, seed=20260822, target_count=1000
    )
    # The legality probes on 40-vertex graphs need far more than the
    # default step allowance.
    stream = generate_corpus(spec, budget=SearchBudget(10**9))
    graphs = list(stream)
    assert not stream.truncated
    return graphs


@pytest.fixture(scope="session")
def random_pentagraphs_20():
    """200 seeded random members with up to 20 vertices."""
    spec = CorpusSpec(mode="random", n_min=5, n_max=20, seed=77, target_count=200)
    stream = generate_corpus(spec)
    graphs = list(stream)
    assert not stream.truncated
    return graphs
