"""Where a lemma suite takes its graphs from."""

import random
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, Literal, Optional

from pydantic import BaseModel, Field

from ..generators import enumerate_free, enumerate_small, random_free_graph
from ..graph import Graph

SourceKind = Literal["enumerate", "free", "random", "planted"]


class SourceSpec(BaseModel):
    """Graph source of a suite run.

    ``enumerate`` streams every graph (one per isomorphism class when
    ``unlabeled``) for n in [n_min, n_max]; ``free`` streams one graph per
    isomorphism class of (P3 u kP1)-free graphs and reaches one order
    further; ``random`` draws ``samples`` (P3 u kP1)-free graphs per order;
    ``planted`` hands the parameters to the lemma's own instance builder.
    """

    kind: SourceKind = "enumerate"
    n_min: int = Field(3, ge=0)
    n_max: int = Field(7, ge=0)
    unlabeled: bool = True
    samples: int = Field(100, ge=0)
    p: Optional[float] = Field(None, ge=0, le=1)
    k: int = Field(3, ge=0)
    seed: int = 0

    def rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass(frozen=True)
class Instance:
    """One graph handed to a check, with the extra data the check needs."""

    graph: Graph
    params: Dict[str, Any] = field(default_factory=dict)


def enumerated_instances(source: SourceSpec) -> Iterator[Instance]:
    for n in range(source.n_min, source.n_max + 1):
        for g in enumerate_small(n, unlabeled=source.unlabeled):
            yield Instance(g)


def random_instances(source: SourceSpec) -> Iterator[Instance]:
    """Seeded free graphs; the edge probability is drawn per sample unless fixed."""
    rng = source.rng()
    for n in range(source.n_min, source.n_max + 1):
        for _ in range(source.samples):
            p = source.p if source.p is not None else rng.uniform(0.2, 0.9)
            yield Instance(random_free_graph(n, p, source.k, rng.randrange(2**32)))


def free_instances(source: SourceSpec) -> Iterator[Instance]:
    for n in range(source.n_min, source.n_max + 1):
        for g in enumerate_free(n, source.k):
            yield Instance(g)
