"""Verification reports shared by the check_* functions."""
from __future__ import annotations

from dataclasses import dataclass, field

from .trees import PlanarTree, render_tree


@dataclass(frozen=True)
class Violation:
    law: str
    inputs: str
    lhs: str
    rhs: str

    def line(self) -> str:
        """Tab separated: law, inputs, lhs, rhs."""
        return "\t".join((self.law, self.inputs, self.lhs, self.rhs))


def _format_item(x) -> str:
    if isinstance(x, PlanarTree):
        return render_tree(x)
    if isinstance(x, tuple):
        return "⊗".join(_format_item(t) for t in x)
    return str(x)


def format_inputs(inputs) -> str:
    """A tree, or a tuple of inputs each being a tree or a tuple of trees."""
    if isinstance(inputs, tuple) and not isinstance(inputs, PlanarTree):
        return " ".join(_format_item(x) for x in inputs)
    return _format_item(inputs)


@dataclass
class Report:
    """Outcome of an exhaustive check: cases examined and failed identities."""

    name: str
    cases: int = 0
    comparisons: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def compare(self, law: str, inputs, lhs, rhs) -> bool:
        self.comparisons += 1
        if lhs == rhs:
            return True
        self.violations.append(Violation(law, format_inputs(inputs), str(lhs), str(rhs)))
        return False

    def fail(self, law: str, inputs, lhs, rhs) -> None:
        self.comparisons += 1
        self.violations.append(Violation(law, format_inputs(inputs), str(lhs), str(rhs)))

    def extend(self, other: Report) -> Report:
        self.cases += other.cases
        self.comparisons += other.comparisons
        self.violations.extend(other.violations)
        return self

    def laws(self) -> set[str]:
        return {v.law for v in self.violations}

    def summary(self) -> str:
        return (f"{self.name}: {self.cases} cases, {self.comparisons} identities checked, "
                f"{len(self.violations)} violations")
