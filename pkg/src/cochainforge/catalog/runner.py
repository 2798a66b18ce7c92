"""Verification driver: run catalog entries, collect reports.

Every report records the exact outcome: ``verified`` means the
difference of the two sides reduced to the literally empty normal form,
``failed`` carries the nonzero residue, ``budget-exceeded`` signals the
step budget ran out before a normal form was reached.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from ..symcalc.parser import print_expr
from ..symcalc.rules import BudgetExceeded, normalize
from .identities import REGISTRY, CatalogEntry, manifest

VERIFIED = "verified"
FAILED = "failed"
BUDGET = "budget-exceeded"

BUDGET_ENV = "COCHAINFORGE_BUDGET"


class UnknownIdentity(KeyError):
    def __init__(self, id_: str):
        super().__init__(f"unknown catalog identity {id_!r}")
        self.id = id_


@dataclass
class VerificationReport:
    id: str
    status: str
    steps: int = 0
    seconds: float = 0.0
    lint: str = "clean"
    residue_terms: int = 0
    residue: str = ""
    statement: str = ""
    anchor: str = ""
    note: str = ""

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "status": self.status,
            "steps": self.steps,
            "seconds": round(self.seconds, 3),
            "lint": self.lint,
            "statement": self.statement,
            "anchor": self.anchor,
        }
        if self.note:
            out["note"] = self.note
        if self.status == FAILED:
            out["residue_terms"] = self.residue_terms
            out["residue"] = self.residue
        return out

    def line(self) -> str:
        head = f"{self.id:<22} {self.status:<16} " \
               f"steps={self.steps:<9} {self.seconds:7.2f}s  " \
               f"[{self.lint}]  {self.anchor}"
        if self.status == FAILED:
            head += f"  residue: {self.residue_terms} terms"
        return head


def default_budget(entry_budget: int) -> int:
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return entry_budget


def verify_catalog_identity(id_: str,
                            budget: Optional[int] = None) -> VerificationReport:
    entry = REGISTRY.get(id_)
    if entry is None:
        raise UnknownIdentity(id_)
    limit = budget if budget is not None else default_budget(entry.budget)
    t0 = time.perf_counter()
    stats: Dict = {}
    try:
        expr, rels = entry.build()
        nf, lint = normalize(expr, rels, limit, stats=stats)
    except BudgetExceeded:
        return VerificationReport(
            id=id_, status=BUDGET, steps=limit,
            seconds=time.perf_counter() - t0,
            statement=entry.statement, anchor=entry.anchor, note=entry.note)
    steps = stats["counter"].steps if "counter" in stats else 0
    dt = time.perf_counter() - t0
    if nf.is_zero():
        return VerificationReport(
            id=id_, status=VERIFIED, steps=steps, seconds=dt,
            lint=lint.summary(), statement=entry.statement,
            anchor=entry.anchor, note=entry.note)
    return VerificationReport(
        id=id_, status=FAILED, steps=steps, seconds=dt,
        lint=lint.summary(), residue_terms=len(nf),
        residue=print_expr(nf), statement=entry.statement,
        anchor=entry.anchor, note=entry.note)


def all_ids() -> List[str]:
    return sorted(REGISTRY)


def _verify_one(args) -> VerificationReport:
    id_, budget = args
    return verify_catalog_identity(id_, budget)


def run_catalog(ids: Optional[Iterable[str]] = None,
                budget: Optional[int] = None,
                jobs: int = 1) -> List[VerificationReport]:
    """Verify the given identities (all by default); reports come back
    sorted by id regardless of evaluation order."""
    todo = sorted(ids) if ids is not None else all_ids()
    for id_ in todo:
        if id_ not in REGISTRY:
            raise UnknownIdentity(id_)
    if jobs > 1:
        import multiprocessing as mp
        try:
            with mp.get_context("fork").Pool(jobs) as pool:
                reports = pool.map(_verify_one, [(i, budget) for i in todo])
        except (OSError, ValueError):
            reports = [verify_catalog_identity(i, budget) for i in todo]
    else:
        reports = [verify_catalog_identity(i, budget) for i in todo]
    return sorted(reports, key=lambda r: r.id)


__all__ = ["VerificationReport", "verify_catalog_identity", "run_catalog",
           "all_ids", "manifest", "UnknownIdentity",
           "VERIFIED", "FAILED", "BUDGET", "BUDGET_ENV"]
