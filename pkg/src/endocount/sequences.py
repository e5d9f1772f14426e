"""Integer sequences cut from the count tables, b-file I/O and table audits."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import List, Optional, Tuple

from .burnside import Variant, as_variant, count_classes
from .errors import DomainError
from .published import PRINTED, SUSPECTED_ERRATA

CONFIRMED = "confirmed"
SUSPECTED_ERRATUM = "suspected-erratum"

# (variant, fixed axis, fixed value) -> (A-number, free-axis range with published terms)
OEIS_LABELS = {
    (Variant.SEMIGROUP, "n", 2): ("A134057", range(1, 6)),
    (Variant.SEMIGROUP, "m", 1): ("A001372", range(1, 7)),
    (Variant.UNIFORM, "n", 2): ("A007582", range(1, 5)),
    (Variant.MONOID, "n", 2): ("A006516", range(1, 7)),
}


@dataclass(frozen=True)
class SequenceSpec:
    """A row or column of the count table: one of n, m fixed, the other running."""

    variant: Variant
    fixed_axis: str
    fixed_value: int
    start: int
    stop: int  # inclusive

    def __post_init__(self):
        object.__setattr__(self, "variant", as_variant(self.variant))
        if self.fixed_axis not in ("n", "m"):
            raise DomainError(f"fixed axis must be 'n' or 'm', got {self.fixed_axis!r}")
        if self.fixed_value < 1:
            raise DomainError("fixed value must be >= 1")
        if self.start < 1 or self.stop < self.start:
            raise DomainError(f"empty or nonpositive range {self.start}..{self.stop}")

    def points(self) -> List[Tuple[int, int]]:
        if self.fixed_axis == "n":
            return [(self.fixed_value, m) for m in range(self.start, self.stop + 1)]
        return [(n, self.fixed_value) for n in range(self.start, self.stop + 1)]

    @property
    def oeis(self) -> Optional[str]:
        """A-number, when this is a known sequence restricted to its published terms."""
        hit = OEIS_LABELS.get((self.variant, self.fixed_axis, self.fixed_value))
        if hit and self.start in hit[1] and self.stop in hit[1]:
            return hit[0]
        return None


def generate_sequence(spec: SequenceSpec) -> List[int]:
    return [count_classes(n, m, spec.variant) for n, m in spec.points()]


def emit_bfile(seq, offset: int = 1) -> str:
    """OEIS b-file text: one ``index value`` line per term."""
    if offset < 0:
        raise DomainError("b-file offset must be nonnegative")
    return "".join(f"{offset + i} {int(v)}\n" for i, v in enumerate(seq))


def parse_bfile(text: str) -> Tuple[int, List[int]]:
    """Inverse of :func:`emit_bfile`; returns ``(offset, values)``."""
    indices, values = [], []
    for line in text.splitlines():
        idx, val = line.split(" ")
        indices.append(int(idx))
        values.append(int(val))
    if not indices:
        return 0, []
    if indices != list(range(indices[0], indices[0] + len(indices))):
        raise DomainError("b-file indices are not consecutive")
    return indices[0], values


@dataclass(frozen=True)
class PublishedEntry:
    variant: Variant
    n: int
    m: int
    printed: str
    status: str

    @property
    def value(self) -> int:
        return int(self.printed.replace(",", ""))


def published_tables() -> List[PublishedEntry]:
    """All 108 printed table cells, ordered by variant, then n, then m."""
    out = []
    for variant in Variant:
        for (n, m), printed in sorted(PRINTED[variant.value].items()):
            status = SUSPECTED_ERRATUM if (variant.value, n, m) in SUSPECTED_ERRATA else CONFIRMED
            out.append(PublishedEntry(variant, n, m, printed, status))
    return out


@dataclass(frozen=True)
class AuditRecord:
    variant: str
    n: int
    m: int
    printed: str
    computed: str
    status: str

    @property
    def matches(self) -> bool:
        return self.printed.replace(",", "") == self.computed

    @property
    def ok(self) -> bool:
        # errata must disagree, everything else must agree
        return self.matches == (self.status == CONFIRMED)


@dataclass
class AuditReport:
    records: List[AuditRecord]

    @property
    def matched(self) -> int:
        return sum(r.matches for r in self.records)

    @property
    def mismatches(self) -> List[AuditRecord]:
        return [r for r in self.records if not r.matches]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            tag = "match" if r.matches else "MISMATCH"
            line = f"{r.variant} n={r.n} m={r.m}: {tag} printed={r.printed}"
            if not r.matches:
                line += f" computed={r.computed} [{r.status}]"
            lines.append(line)
        lines.append(f"{self.matched}/{len(self.records)} cells match; "
                     f"{len(self.mismatches)} mismatch; audit {'ok' if self.ok else 'FAILED'}")
        return "\n".join(lines) + "\n"

    def to_records(self) -> List[dict]:
        return [dict(asdict(r), match=r.matches) for r in self.records]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), indent=2) + "\n"


def compare_with_published(variant=None) -> AuditReport:
    """Recompute every printed cell (of one variant, or all) and compare."""
    variant = None if variant is None else as_variant(variant)
    records = [
        AuditRecord(e.variant.value, e.n, e.m, e.printed,
                    str(count_classes(e.n, e.m, e.variant)), e.status)
        for e in published_tables()
        if variant is None or e.variant is variant
    ]
    return AuditReport(records)
