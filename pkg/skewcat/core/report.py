"""
Check reports.

A Report is an ordered list of named checks. Each check records how many
instances were evaluated and, on failure, the first witness. Reports render
as JSON (round-trippable) or as text with a pandas summary table.
"""

import hashlib
import json
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

import pandas as pd

from ..utils.errors import SkewcatError, StructuralError, PreconditionError

PASS = "pass"
FAIL = "fail"
FALSIFICATION = "falsification"
STRUCTURAL = "structural"
PRECONDITION = "precondition"
SKIPPED = "skipped"

STATUS_EXIT = {
    PASS: 0,
    SKIPPED: 0,
    FAIL: 1,
    STRUCTURAL: 2,
    PRECONDITION: 3,
    FALSIFICATION: 4,
}

# worst first
_SEVERITY = (STRUCTURAL, PRECONDITION, FALSIFICATION, FAIL, SKIPPED, PASS)

TAG_INVENTORY: Dict[str, Tuple[str, ...]] = {
    "mw-monad": (
        "mw-extension-composition",
        "mw-extension-unit",
        "mw-unit-extension",
    ),
    "mw-algebra": (
        "mw-algebra-unit",
        "mw-algebra-extension",
    ),
    "skew-axioms": (
        "skew-pentagon",
        "skew-unit-middle",
        "skew-left-unit",
        "skew-right-unit",
        "skew-unit-unit",
    ),
    "warping-axioms": (
        "warping-pentagon",
        "warping-right-unit",
        "warping-left-unit",
        "warping-unit-associator",
        "warping-unit-unit",
    ),
    "algebra-axioms": (
        "algebra-pentagon",
        "algebra-unit",
        "algebra-unit-associator",
    ),
    "hom-monoid": (
        "monoid-associativity",
        "monoid-left-unit",
        "monoid-right-unit",
    ),
    "normalization": (
        "unit-monad-laws",
        "tensor-module-action",
        "wedge-associator-lift",
        "wedge-pentagon",
        "unit-module",
        "wedge-left-unit-factorization",
        "split-coequalizer",
        "wedge-associator-right-unit",
        "wedge-associator-left-unit",
        "wedge-triple-unit",
        "wedge-unit-unit",
    ),
}


def label(x: Any) -> str:
    """Render an identifier (string, number or nested tuple) as a string."""
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return "<" + ",".join(label(y) for y in x) + ">"
    if isinstance(x, frozenset):
        return "{" + ",".join(sorted(label(y) for y in x)) + "}"
    return str(x)


@dataclass
class CheckEntry:
    """One named check.

    [ATTRIBUTES]
    name : str
        Check name, unique within a report
    tag : str
        Diagram tag from TAG_INVENTORY, or "" for plumbing checks
    status : str
        pass | fail | falsification | structural | precondition | skipped
    checked : int
        Number of instances evaluated
    witness : Optional[Dict[str, str]]
        First failing instance, identifiers rendered with label()
    uses : List[str]
        Names of the checks this one depends on
    detail : str
        Free-form note
    """
    name: str
    tag: str = ""
    status: str = PASS
    checked: int = 0
    witness: Optional[Dict[str, str]] = None
    uses: List[str] = field(default_factory=list)
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status in (PASS, SKIPPED)


class Report:
    """Ordered collection of CheckEntry records for one subject."""

    def __init__(self, subject: str, kind: str = ""):
        self.subject = subject
        self.kind = kind
        self.entries: List[CheckEntry] = []
        self.meta: Dict[str, Any] = {}

    def add(self, entry: CheckEntry) -> CheckEntry:
        self.entries.append(entry)
        return entry

    def record(self, name: str, status: str, tag: str = "", checked: int = 1,
               witness: Optional[Dict[str, Any]] = None, detail: str = "",
               uses: Iterable[str] = ()) -> CheckEntry:
        rendered = None if witness is None else {k: label(v) for k, v in witness.items()}
        return self.add(CheckEntry(name, tag, status, checked, rendered, list(uses), detail))

    def law(self,
            name: str,
            cases: Iterable[Tuple[Dict[str, Any], Any, Any]],
            tag: str = "",
            uses: Iterable[str] = (),
            falsification: bool = False) -> CheckEntry:
        """Evaluate an equation over all its instances.

        [PARAMETERS]
        name : str
            Check name
        cases : Iterable[Tuple[Dict[str, Any], Any, Any]]
            Lazily produced (witness, lhs, rhs) triples
        tag : str
            Diagram tag
        uses : Iterable[str]
            Checks this one depends on
        falsification : bool
            Report a mismatch as falsification instead of fail

        [OUTPUT]
        CheckEntry
            The recorded entry; stops at the first mismatch
        """
        checked = 0
        try:
            for witness, lhs, rhs in cases:
                checked += 1
                if lhs != rhs:
                    bad = dict(witness)
                    bad.update(lhs=lhs, rhs=rhs)
                    return self.record(name, FALSIFICATION if falsification else FAIL,
                                       tag, checked, bad, uses=uses)
        except StructuralError as e:
            return self.record(name, STRUCTURAL, tag, checked, detail=str(e), uses=uses)
        return self.record(name, PASS, tag, checked, uses=uses)

    def predicate(self,
                  name: str,
                  cases: Iterable[Tuple[Dict[str, Any], bool]],
                  tag: str = "",
                  falsification: bool = False) -> CheckEntry:
        """Like law(), for cases that yield (witness, holds)."""
        return self.law(name, ((w, bool(holds), True) for w, holds in cases),
                        tag=tag, falsification=falsification)

    def guard(self, name: str, func: Callable[[], Any], tag: str = "") -> Any:
        """Run func; record structural/precondition errors instead of raising."""
        try:
            return func()
        except PreconditionError as e:
            self.record(name, PRECONDITION, tag, detail=str(e))
        except SkewcatError as e:
            self.record(name, STRUCTURAL, tag, detail=str(e))
        return None

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for entry in other.entries:
            copy = CheckEntry(**asdict(entry))
            copy.name = f"{prefix}{entry.name}"
            self.add(copy)
        return self

    def entry(self, name: str) -> CheckEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def passed(self, name: str) -> bool:
        return self.entry(name).ok

    def tags(self) -> List[str]:
        return [e.tag for e in self.entries if e.tag]

    @property
    def failures(self) -> List[CheckEntry]:
        return [e for e in self.entries if not e.ok]

    @property
    def status(self) -> str:
        present = {e.status for e in self.entries}
        for status in _SEVERITY:
            if status in present:
                return status
        return PASS

    @property
    def ok(self) -> bool:
        return self.status in (PASS, SKIPPED)

    @property
    def structural(self) -> bool:
        return any(e.status == STRUCTURAL for e in self.entries)

    @property
    def exit_code(self) -> int:
        return STATUS_EXIT[self.status]

    def add_digest(self, path: Union[str, Path]) -> None:
        digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
        self.meta.setdefault("inputs", {})[str(path)] = digest

    def to_dict(self) -> Dict[str, Any]:
        from .. import __version__
        return {
            "subject": self.subject,
            "kind": self.kind,
            "status": self.status,
            "version": __version__,
            "meta": self.meta,
            "summary": self.summary(),
            "entries": [asdict(e) for e in self.entries],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        report = cls(data["subject"], data.get("kind", ""))
        report.meta = dict(data.get("meta", {}))
        for e in data.get("entries", []):
            report.add(CheckEntry(**e))
        return report

    def summary(self) -> Dict[str, int]:
        counts = {status: 0 for status in STATUS_EXIT}
        for e in self.entries:
            counts[e.status] += 1
        return counts

    def summary_frame(self) -> pd.DataFrame:
        """One row per check: name, tag, status, checked."""
        return pd.DataFrame(
            [(e.name, e.tag, e.status, e.checked) for e in self.entries],
            columns=["check", "tag", "status", "checked"],
        )

    def to_text(self) -> str:
        lines = [f"=== {self.subject} ({self.kind}) ===", ""]
        if self.entries:
            lines.append(self.summary_frame().to_string(index=False))
            lines.append("")
        for e in self.failures:
            lines.append(f"--- {e.name}: {e.status} ---")
            if e.detail:
                lines.append(f"- detail: {e.detail}")
            for key, value in (e.witness or {}).items():
                lines.append(f"- {key}: {value}")
            lines.append("")
        lines.append(f"status: {self.status}")
        return "\n".join(lines)
