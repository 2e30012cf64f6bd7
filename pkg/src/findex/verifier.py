"""Check closed forms and published formulas against constructed graphs.

Every oracle value comes from materializing the derived graph and applying
the definition-level functions in :mod:`findex.indices`. Verdicts are exact
integer equality.

Source identifiers used in records:

``F-closed``, ``M1-closed``, ``Fbar-closed``
    closed forms from :mod:`findex.closed_forms`, one per derived kind.
``Fbar-identity``
    ``(n-1)*M1 - F`` evaluated on a graph's own invariants, checked on the
    base graph (kind ``G``) and on every derived graph.
``published:<family>:<invariant>``
    printed family formulas (cycle/star, F/Fbar).
``published:M1-listing``
    the printed M1 table for derived graphs, T1/T2 lines as published.
"""

from __future__ import annotations

import csv
import io
import json
import random
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import closed_forms as cf
from .derived import KINDS, DerivedKind, construct, degree_fact_violations
from .errors import SizeTooSmall
from .generators import complete, cycle, path, random_graph, star
from .graph import Graph
from .indices import IndexReport, report

MATCH = "MATCH"
MISMATCH = "MISMATCH"
BASE_KIND = "G"
INVARIANTS = ("F", "M1", "Fbar")
CSV_HEADER = ("graph", "kind", "invariant", "source", "closed", "oracle", "verdict")
PROPOSITION_SOURCES = ("F-closed", "M1-closed", "Fbar-closed", "Fbar-identity")
EXAMPLE_FAMILIES = ("cycle", "star")
ERRATA_RANGE = (3, 20)


@dataclass(frozen=True)
class VerificationRecord:
    graph: str
    kind: str
    invariant: str
    closed_value: int
    oracle_value: int
    verdict: str
    source: str

    @classmethod
    def compare(cls, graph, kind, invariant, closed_value, oracle_value, source):
        verdict = MATCH if closed_value == oracle_value else MISMATCH
        return cls(graph, str(kind), invariant, closed_value, oracle_value, verdict, source)

    @property
    def ok(self) -> bool:
        return self.verdict == MATCH


@dataclass(frozen=True)
class FormulaVerdict:
    """Overall classification of one published formula across a size range."""

    source: str
    kind: str
    invariant: str
    families: Tuple[str, ...]
    printed: str
    verdict: str
    matched_n: Tuple[int, ...]
    mismatched_n: Tuple[int, ...]
    replacement: Optional[str] = None
    note: Optional[str] = None


@dataclass
class SweepReport:
    records: List[VerificationRecord]
    parameters: dict = field(default_factory=dict)
    formulas: List[FormulaVerdict] = field(default_factory=list)

    @property
    def summary(self) -> Dict[str, Dict[str, int]]:
        counts: Dict[str, Dict[str, int]] = {}
        for r in self.records:
            counts.setdefault(r.source, {MATCH: 0, MISMATCH: 0})[r.verdict] += 1
        return {k: counts[k] for k in sorted(counts)}

    def proposition_mismatches(self) -> List[VerificationRecord]:
        return [r for r in self.records if r.source in PROPOSITION_SOURCES and not r.ok]

    @property
    def ok(self) -> bool:
        return not self.proposition_mismatches()

    def to_dict(self) -> dict:
        out = {
            "parameters": self.parameters,
            "summary": self.summary,
            "records": [asdict(r) for r in self.records],
        }
        if self.formulas:
            out["formulas"] = [asdict(f) for f in self.formulas]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        return records_to_csv(self.records)


def records_to_json(records: Sequence[VerificationRecord]) -> str:
    return json.dumps([asdict(r) for r in records], indent=2) + "\n"


def records_to_csv(records: Sequence[VerificationRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow((r.graph, r.kind, r.invariant, r.source, r.closed_value, r.oracle_value, r.verdict))
    return buf.getvalue()


def _identity_record(desc: str, kind, rep: IndexReport) -> VerificationRecord:
    return VerificationRecord.compare(
        desc, kind, "Fbar", cf.fbar_identity(rep.n, rep.M1, rep.F), rep.Fbar, "Fbar-identity"
    )


def verify_propositions(g: Graph, descriptor: str = "G") -> List[VerificationRecord]:
    """All closed-form and identity checks for one base graph.

    Yields ``1 + 6 * 4`` records: the identity on ``g`` itself, then per kind
    the F, M1 and Fbar closed forms and the identity on the derived graph.
    """
    base = report(g)
    records = [_identity_record(descriptor, BASE_KIND, base)]
    for kind in KINDS:
        oracle = report(construct(kind, g).graph)
        observed = {"F": oracle.F, "M1": oracle.M1, "Fbar": oracle.Fbar}
        for inv in INVARIANTS:
            records.append(
                VerificationRecord.compare(
                    descriptor, kind, inv, cf.CLOSED[inv](kind, base), observed[inv], f"{inv}-closed"
                )
            )
        records.append(_identity_record(descriptor, kind, oracle))
    return records


def audit_degree_facts(g: Graph) -> List[str]:
    """Per-vertex degree-fact violations over all six derived graphs of ``g``."""
    out = []
    for kind in KINDS:
        out.extend(degree_fact_violations(construct(kind, g)))
    return out


def family_corpus(n_max: int = 12) -> List[Tuple[str, Graph]]:
    """Cycles, stars, paths and complete graphs up to ``n_max`` vertices."""
    out = []
    for name, build, lo in (("cycle", cycle, 3), ("star", star, 2), ("path", path, 1), ("complete", complete, 1)):
        out.extend((f"{name}:n={n}", build(n)) for n in range(lo, n_max + 1))
    return out


def random_corpus(count: int, n_max: int, p_list: Sequence[float], seed: int) -> List[Tuple[str, Graph]]:
    """``count`` graphs on ``n_max`` vertices, cycling through ``p_list``.

    Per-graph seeds are successive 64-bit draws from ``random.Random(seed)``.
    """
    if count < 1 or n_max < 1 or not p_list:
        raise SizeTooSmall("random corpus needs count >= 1, n_max >= 1 and at least one probability")
    master = random.Random(seed)
    out = []
    for i in range(count):
        p = p_list[i % len(p_list)]
        s = master.getrandbits(64)
        out.append((f"random:{i}:n={n_max}:p={p}:seed={s}", random_graph(n_max, p, s)))
    return out


def sweep(corpus: Iterable[Tuple[str, Graph]], parameters: Optional[dict] = None) -> SweepReport:
    records: List[VerificationRecord] = []
    for desc, g in corpus:
        records.extend(verify_propositions(g, desc))
    return SweepReport(records, dict(parameters or {}))


def sweep_random(
    count: int,
    n_max: int = 12,
    p_list: Sequence[float] = (0.2, 0.5, 0.8),
    seed: int = 1,
    include_families: bool = False,
) -> SweepReport:
    corpus = random_corpus(count, n_max, p_list, seed)
    if include_families:
        corpus += family_corpus(n_max)
    params = {
        "count": count,
        "n_max": n_max,
        "p_list": list(p_list),
        "seed": seed,
        "families": ["cycle", "star", "path", "complete"] if include_families else [],
    }
    return sweep(corpus, params)


_FAMILY_BUILDERS = {"cycle": cycle, "star": star}


def _family_graphs(start: int, stop: int):
    if start < min(cf.FAMILY_MIN_SIZE.values()) or stop < start:
        raise SizeTooSmall(f"published families need 3 <= start <= stop, got {start}..{stop}")
    for n in range(start, stop + 1):
        for fam in EXAMPLE_FAMILIES:
            yield fam, n, _FAMILY_BUILDERS[fam](n)


def verify_examples(start: int, stop: int) -> List[VerificationRecord]:
    """Compare every printed cycle/star formula with the oracle for each n."""
    records = []
    for fam, n, g in _family_graphs(start, stop):
        for kind in KINDS:
            oracle = report(construct(kind, g).graph)
            for inv, value in (("F", oracle.F), ("Fbar", oracle.Fbar)):
                printed = cf.example_formulas(fam, inv, kind, n)
                records.append(
                    VerificationRecord.compare(f"{fam}:n={n}", kind, inv, printed, value, f"published:{fam}:{inv}")
                )
    return records


def verify_m1_listing(start: int, stop: int) -> List[VerificationRecord]:
    """Compare the printed M1 table with the oracle on cycles and stars."""
    records = []
    for fam, n, g in _family_graphs(start, stop):
        base = report(g)
        for kind in KINDS:
            printed = cf.PUBLISHED_M1_LISTING[kind][1](base)
            oracle = report(construct(kind, g).graph).M1
            records.append(
                VerificationRecord.compare(f"{fam}:n={n}", kind, "M1", printed, oracle, "published:M1-listing")
            )
    return records


def _size_of(desc: str) -> int:
    return int(desc.rsplit("n=", 1)[1])


def classify(records: Sequence[VerificationRecord]) -> List[FormulaVerdict]:
    """Roll per-n records up into one verdict per published formula.

    A formula is MATCH only if it matches at every size; the per-size split
    is kept so isolated coincidences stay visible.
    """
    groups: Dict[Tuple[str, str], List[VerificationRecord]] = defaultdict(list)
    for r in records:
        groups[(r.source, r.kind)].append(r)
    kind_order = {str(k): i for i, k in enumerate(KINDS)}
    out = []
    for (source, kind), rs in sorted(groups.items(), key=lambda item: (item[0][0], kind_order[item[0][1]])):
        inv = rs[0].invariant
        families = tuple(sorted({r.graph.split(":")[0] for r in rs}))
        if source == "published:M1-listing":
            printed = cf.PUBLISHED_M1_LISTING[DerivedKind(kind)][0]
        else:
            _, fam, _ = source.split(":")
            printed = cf.PUBLISHED_EXAMPLES[(fam, inv)][DerivedKind(kind)][0]
        matched = tuple(sorted({_size_of(r.graph) for r in rs if r.ok}))
        missed = tuple(sorted({_size_of(r.graph) for r in rs if not r.ok}))
        verdict = MISMATCH if missed else MATCH
        replacement = cf.EXPRESSIONS[inv][DerivedKind(kind)] if missed else None
        note = None
        if inv != "M1" and any(r.closed_value < 0 for r in rs):
            note = "negative value"
        out.append(FormulaVerdict(source, kind, inv, families, printed, verdict, matched, missed, replacement, note))
    return out


def errata_report() -> SweepReport:
    """Fixed-scope classification of every printed formula for n = 3..20."""
    start, stop = ERRATA_RANGE
    records = verify_examples(start, stop) + verify_m1_listing(start, stop)
    params = {"families": list(EXAMPLE_FAMILIES), "n_range": [start, stop]}
    return SweepReport(records, params, classify(records))
