"""Per-claim verification records and their JSON form."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

from ..ideals import IdealHandle
from ..poly import Polynomial


def ideal_gens(K: IdealHandle) -> List[str]:
    """Printable, deterministic generator list of an ideal of R."""
    if K.is_unit():
        return ["1"]
    return [str(g) for g in K.minimal_generators]


def jsonable(x: Any) -> Any:
    if isinstance(x, IdealHandle):
        return ideal_gens(x)
    if isinstance(x, Polynomial):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


@dataclass
class ClaimReport:
    claim: str
    passed: bool
    witness: Dict[str, Any] = field(default_factory=dict)
    ms: float = 0.0
    n: Optional[int] = None
    l: Optional[int] = None
    ring: Optional[str] = None

    @property
    def key(self):
        return (self.claim, self.ring or "", self.n or 0, self.l or 0, str(self.witness.get("parameter", "")))

    def to_dict(self, timings: bool = True) -> dict:
        out = {"claim": self.claim, "ring": self.ring, "n": self.n, "l": self.l,
               "pass": bool(self.passed), "witness": jsonable(self.witness)}
        if timings:
            out["ms"] = round(self.ms, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        where = self.ring or (f"({self.n},{self.l})" if self.n is not None else "")
        return f"{tag} {self.claim} {where}".rstrip()


class Stopwatch:
    def __init__(self):
        self.ms = 0.0


@contextmanager
def timed():
    sw = Stopwatch()
    t0 = time.perf_counter()
    try:
        yield sw
    finally:
        sw.ms = (time.perf_counter() - t0) * 1000.0


def all_passed(reports: Iterable[ClaimReport]) -> bool:
    return all(r.passed for r in reports)
