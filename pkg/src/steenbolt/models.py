#!/usr/bin/env python3
# coding=utf-8

"""
models and datatypes related to check runs and their reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TypedDict

from vt.utils.commons.commons.core_py import Unset

from steenbolt.surjection import SurjChain, print_chain


class CheckGridOpts(TypedDict, total=False):
    """
    Options of a check suite run. CLI flags, environment and defaults are merged into one of these.
    """

    max_k: int | None | Unset
    """
    Largest superscript ``k`` of ``E^k_{m,n}`` in a grid.
    """

    max_arity: int | None | Unset
    """
    Largest ``m`` and ``n`` in a grid. For ``hga-assoc`` grids this bounds ``m+n``.
    """

    workers: int | None | Unset
    """
    Worker processes. Results never depend on it.
    """

    unsafe_large: bool | None | Unset
    """
    Lift the size guards.
    """

    timings: bool | None | Unset
    """
    Append ``millis=`` to certificate lines; output is then no longer byte-identical across runs.
    """


@dataclass(frozen=True)
class CheckReport:
    """
    Verdict of one identity check.

    For identities inside the operad, ``lhs``, ``rhs`` and ``difference`` hold the assembled chains; the check passes
    iff ``difference`` is zero. Checks on cochains or bar words report a textual ``counterexample`` instead.

    >>> r = CheckReport("EHGA", (("k", 1), ("m", 2), ("n", 2)), True, counts=(("lhs_terms", 12),))
    >>> r.certificate()
    'EHGA k=1 m=2 n=2 PASS (lhs_terms=12)'
    """

    name: str
    params: tuple[tuple[str, int | str], ...]
    passed: bool
    lhs: SurjChain | None = None
    rhs: SurjChain | None = None
    difference: SurjChain | None = None
    counterexample: str | None = None
    counts: tuple[tuple[str, int], ...] = field(default_factory=tuple)
    elapsed_ms: float = 0.0

    @classmethod
    def from_sides(
        cls,
        name: str,
        params: tuple[tuple[str, int | str], ...],
        lhs: SurjChain,
        rhs: SurjChain,
        elapsed_ms: float = 0.0,
    ) -> CheckReport:
        difference = lhs + rhs
        return cls(
            name,
            params,
            difference.is_zero(),
            lhs=lhs,
            rhs=rhs,
            difference=difference,
            counts=(("lhs_terms", len(lhs)), ("rhs_terms", len(rhs))),
            elapsed_ms=elapsed_ms,
        )

    def certificate(self, timings: bool = False) -> str:
        """
        One line ``NAME key=value ... PASS|FAIL (count=..., ...)``.
        """
        head = " ".join([self.name, *(f"{k}={v}" for k, v in self.params)])
        verdict = "PASS" if self.passed else "FAIL"
        extras = [f"{k}={v}" for k, v in self.counts]
        if timings:
            extras.append(f"millis={round(self.elapsed_ms)}")
        return f"{head} {verdict} ({', '.join(extras)})" if extras else f"{head} {verdict}"

    def dump(self) -> list[str]:
        """
        Counterexample lines of a failing report, in chain grammar where applicable.
        """
        if self.passed:
            return []
        lines = []
        if self.lhs is not None and self.rhs is not None and self.difference is not None:
            lines.append(f"  lhs: {print_chain(self.lhs)}")
            lines.append(f"  rhs: {print_chain(self.rhs)}")
            lines.append(f"  difference: {print_chain(self.difference)}")
        if self.counterexample is not None:
            lines.append(f"  counterexample: {self.counterexample}")
        return lines
