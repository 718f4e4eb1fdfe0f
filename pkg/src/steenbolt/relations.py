#!/usr/bin/env python3
# coding=utf-8

"""
Assemble both sides of the identities satisfied by the ``E^k_{p,q}`` inside the surjection operad and compare them
exactly over F2.

Every identity is turned into a pair of chains in ``χ(r)``. The identity holds for all algebras over ``χ`` iff the
chains agree, because the action of ``χ`` on cochains is a chain map.

The product term of the ``E^k_{m,n}`` relation is

    Σ_{splits} Σ_{j=0}^{k} E^j(first inputs) · T^j E^{k-j}(second inputs)

where a split divides ``a_1..a_m`` into ``a_1..a_p | a_{p+1}..a_m`` and ``b_1..b_n`` likewise at ``q``, for all
``(p, q)`` other than ``(0, 0)`` and ``(m, n)``. ``T`` swaps the ``a`` and ``b`` blocks. The factors with an empty
side use ``E^0_{1,0} = E^0_{0,1} = id`` and vanish otherwise, so the bare products ``a_1·E(...)``,
``E(...)·b_n`` etc. are the splits with a single input on one side.
"""

from __future__ import annotations

import functools
import itertools
import logging
import time
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from typing import Literal

from vt.utils.errors.error_specs import ERR_INVALID_USAGE

from steenbolt.exceptions import SteenboltExitingException
from steenbolt.generators import generator, generator_chain, g_elements
from steenbolt.models import CheckReport
from steenbolt.surjection import (
    SurjChain,
    Surjection,
    ValuePermutation,
    chain_complexity,
    complexity,
    compose,
    compose_chains,
    differential,
    relabel,
)
from steenbolt.validators import UtilCheckArgsValidator

logger = logging.getLogger(__name__)

type TwistPlacement = Literal["second", "first"]

_CUP = SurjChain.of(2, [(1, 2)])


# region slot bookkeeping
@dataclass(frozen=True)
class SlotConvention:
    """
    Inputs ``a_1..a_m`` sit in slots ``1..m`` and ``b_1..b_n`` in slots ``m+1..m+n``.

    >>> SlotConvention(2, 1).blockswap().images
    (2, 3, 1)
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            errmsg = f"slot convention needs m, n >= 0 and m+n >= 1, got m={self.m}, n={self.n}."
            raise SteenboltExitingException(
                errmsg, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)

    @property
    def arity(self) -> int:
        return self.m + self.n

    def blockswap(self) -> ValuePermutation:
        """
        Route an operation with ``m`` leading and ``n`` trailing inputs so that the trailing block comes first:
        ``j -> n+j`` for ``j <= m`` and ``m+j -> j``.
        """
        return blockswap(self.m, self.n)

    def split_routing(self, p: int, q: int) -> ValuePermutation:
        """
        Route the product ``F(a_1..a_p; b_1..b_q) · G(a_{p+1}..a_m; b_{q+1}..b_n)``, whose inputs arrive in the order
        ``a_1..a_p, b_1..b_q, a_{p+1}..a_m, b_{q+1}..b_n``, to the slot convention.

        >>> SlotConvention(2, 2).split_routing(1, 1).images
        (1, 3, 2, 4)
        """
        m, n = self.m, self.n
        images = [
            *range(1, p + 1),
            *(m + j for j in range(1, q + 1)),
            *(p + j for j in range(1, m - p + 1)),
            *(m + q + j for j in range(1, n - q + 1)),
        ]
        return ValuePermutation(tuple(images))


def blockswap(first: int, second: int) -> ValuePermutation:
    """
    ``j -> second+j`` for ``j <= first`` and ``first+j -> j``.

    >>> blockswap(1, 2).images
    (3, 1, 2)
    """
    return ValuePermutation(
        tuple(second + j for j in range(1, first + 1))
        + tuple(range(1, second + 1))
    )


# endregion


# region assembly helpers
def product(x: SurjChain, y: SurjChain) -> SurjChain:
    """
    ``((1,2) ∘_1 x) ∘_{arity(x)+1} y``: the cup product of the two operations, inputs of ``x`` first.

    >>> str(product(SurjChain.of(2, [(1, 2, 1)]), SurjChain.unit()))
    '(1,2,1,3)'
    """
    if x.is_zero() or y.is_zero():
        return SurjChain.zero(x.arity + y.arity)
    return compose_chains(compose_chains(_CUP, 1, x), x.arity + 1, y)


def twisted(k: int, p: int, q: int, power: int) -> SurjChain:
    """
    ``T^power E^k_{p,q}``: for odd powers, ``E^k_{q,p}`` fed with the ``b`` inputs first.

    >>> str(twisted(0, 1, 1, 1))
    '(2,1,2)'
    """
    if power % 2 == 0:
        return generator_chain(k, p, q)
    swapped = generator_chain(k, q, p)
    if swapped.is_zero():
        return SurjChain.zero(p + q)
    return relabel(swapped, blockswap(q, p))


def _splits(m: int, n: int) -> Iterator[tuple[int, int]]:
    for p in range(m + 1):
        for q in range(n + 1):
            if (p, q) not in ((0, 0), (m, n)):
                yield p, q


def _sum(chains: Sequence[SurjChain], arity: int) -> SurjChain:
    return functools.reduce(SurjChain.__add__, chains, SurjChain.zero(arity))


def _params(**kwargs: int | str) -> tuple[tuple[str, int | str], ...]:
    return tuple(kwargs.items())


# endregion


def assemble_ehga_sides(
    k: int, m: int, n: int, *, twist_on: TwistPlacement = "second"
) -> tuple[SurjChain, SurjChain]:
    """
    Both sides of the relation of ``E^k_{m,n}``.

    LHS: ``d E^k_{m,n}``, the inner products ``E^k_{m-1,n} ∘_i (1,2)`` and ``E^k_{m,n-1} ∘_{m+i} (1,2)``, and the
    routed split products. RHS: ``E^{k-1}_{m,n} + T E^{k-1}_{n,m}``.

    >>> lhs, rhs = assemble_ehga_sides(1, 1, 1)
    >>> str(lhs), str(rhs)
    ('(1,2,1) + (2,1,2)', '(1,2,1) + (2,1,2)')
    >>> lhs, rhs = assemble_ehga_sides(0, 1, 1)
    >>> lhs.is_zero(), rhs.is_zero()
    (True, True)

    :param twist_on: ``"second"`` puts ``T^j`` on the second factor of each split product, its power being the
        superscript of the first factor. ``"first"`` puts ``T^i`` on the first factor ``E^{k-i}`` instead; that
        placement does not give an identity in general and is kept for comparison.
    """
    slots = SlotConvention(m, n)
    arity = slots.arity
    terms: list[SurjChain] = [differential(generator_chain(k, m, n))]

    inner_a = generator_chain(k, m - 1, n)
    for i in range(1, m):
        terms.append(compose_chains(inner_a, i, _CUP))
    inner_b = generator_chain(k, m, n - 1)
    for i in range(1, n):
        terms.append(compose_chains(inner_b, m + i, _CUP))

    for p, q in _splits(m, n):
        routing = slots.split_routing(p, q)
        for j in range(k + 1):
            if twist_on == "second":
                first = generator_chain(j, p, q)
                second = twisted(k - j, m - p, n - q, j)
            else:
                first = twisted(k - j, p, q, j)
                second = generator_chain(j, m - p, n - q)
            prod = product(first, second)
            if not prod.is_zero():
                terms.append(relabel(prod, routing))

    lhs = _sum(terms, arity)
    rhs = generator_chain(k - 1, m, n) + twisted(k - 1, m, n, 1)
    logger.debug("EHGA k=%d m=%d n=%d: %d lhs terms, %d rhs terms", k, m, n, len(lhs), len(rhs))
    return lhs, rhs


def check_ehga(
    k: int,
    m: int,
    n: int,
    *,
    twist_on: TwistPlacement = "second",
    unsafe_large: bool = True,
) -> CheckReport:
    """
    Check the relation of ``E^k_{m,n}`` exactly in the operad.

    >>> check_ehga(0, 1, 2).passed
    True
    >>> check_ehga(1, 2, 2).certificate()
    'EHGA k=1 m=2 n=2 PASS (lhs_terms=0, rhs_terms=0)'
    >>> check_ehga(1, 2, 2, twist_on="first").passed
    False
    """
    UtilCheckArgsValidator().validate_instance(k, m, n, unsafe_large=unsafe_large)
    start = time.perf_counter()
    lhs, rhs = assemble_ehga_sides(k, m, n, twist_on=twist_on)
    return CheckReport.from_sides(
        "EHGA",
        _params(k=k, m=m, n=n),
        lhs,
        rhs,
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


# region associativity of the brace operations
def _placements(
    m: int, n: int
) -> Iterator[tuple[tuple[tuple[str, int, int], ...], ...]]:
    """
    Interleavings of ``c_1..c_n`` with ``b_1..b_m``, each ``b_i`` swallowing a consecutive block of ``l_i >= 0``
    of the ``c``'s. Items are ``("c", j, 0)`` or ``("b", i, l)`` with the block starting at the next unused ``c``.
    """

    def walk(ci: int, bi: int, items: tuple[tuple[str, int, int], ...]):
        if ci > n and bi > m:
            yield items
            return
        if ci <= n:
            yield from walk(ci + 1, bi, items + (("c", ci, 0),))
        if bi <= m:
            for length in range(n - ci + 2):
                yield from walk(ci + length, bi + 1, items + (("b", bi, length),))

    yield from walk(1, 1, ())


def assemble_hga_assoc_sides(m: int, n: int) -> tuple[SurjChain, SurjChain]:
    """
    ``E_{1,n}(E_{1,m}(a; b_1..b_m); c_1..c_n)`` and the sum over placements of the ``b``'s among the ``c``'s, with
    inputs ordered ``a, b_1..b_m, c_1..c_n``.

    >>> lhs, rhs = assemble_hga_assoc_sides(1, 1)
    >>> str(lhs)
    '(1,2,1,3,1) + (1,2,3,2,1) + (1,3,1,2,1)'
    >>> lhs == rhs
    True
    """
    arity = m + n + 1
    lhs = compose_chains(generator_chain(0, 1, n), 1, generator_chain(0, 1, m))
    terms = []
    for items in _placements(m, n):
        composite = generator_chain(0, 1, len(items))
        for position in range(len(items), 0, -1):
            kind, _, length = items[position - 1]
            if kind == "b" and length > 0:
                composite = compose_chains(
                    composite, position + 1, generator_chain(0, 1, length)
                )
        order: list[int] = [1]
        next_c = 1
        for kind, index, length in items:
            if kind == "c":
                order.append(1 + m + index)
                next_c = index + 1
            else:
                order.append(1 + index)
                order.extend(1 + m + c for c in range(next_c, next_c + length))
                next_c += length
        terms.append(relabel(composite, ValuePermutation(tuple(order))))
    return lhs, _sum(terms, arity)


def check_hga_assoc(m: int, n: int) -> CheckReport:
    """
    Check the associativity relation of the brace operations ``E_{1,k}`` in the operad.

    >>> check_hga_assoc(1, 2).passed
    True
    """
    guard = UtilCheckArgsValidator()
    guard.validate_instance(0, m, n, unsafe_large=True)
    start = time.perf_counter()
    lhs, rhs = assemble_hga_assoc_sides(m, n)
    return CheckReport.from_sides(
        "HGA-ASSOC",
        _params(m=m, n=n),
        lhs,
        rhs,
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


# endregion


# region named low-dimensional identities
def _s(*entries: int) -> Surjection:
    return Surjection(entries)


def _c(*entries: int) -> SurjChain:
    return SurjChain.of(max(entries), [entries])


def _swap(n: int, i: int, j: int) -> ValuePermutation:
    return ValuePermutation.transposition(n, i, j)


def hirsch_sides() -> tuple[SurjChain, SurjChain]:
    """
    ``(a⌣b)⌣_1c + a⌣(b⌣_1c) + (a⌣_1c)⌣b = 0``:
    ``(1,2,1)∘_1(1,2) + (1,2)∘_2(1,2,1) + (id×T)((1,2)∘_1(1,2,1))``.
    """
    lhs = (
        compose(_s(1, 2, 1), 1, _s(1, 2))
        + compose(_s(1, 2), 2, _s(1, 2, 1))
        + relabel(compose(_s(1, 2), 1, _s(1, 2, 1)), _swap(3, 2, 3))
    )
    return lhs, SurjChain.zero(3)


def left_hirsch_sides() -> tuple[SurjChain, SurjChain]:
    """
    ``a⌣_1(b⌣c) + b⌣(a⌣_1c) + (a⌣_1b)⌣c = d E_{1,2}(a;b,c)``:
    ``(1,2,1)∘_2(1,2) + (T×id)((1,2)∘_2(1,2,1)) + (1,2)∘_1(1,2,1) = d(1,2,1,3,1)``.
    """
    lhs = (
        compose(_s(1, 2, 1), 2, _s(1, 2))
        + relabel(compose(_s(1, 2), 2, _s(1, 2, 1)), _swap(3, 1, 2))
        + compose(_s(1, 2), 1, _s(1, 2, 1))
    )
    return lhs, differential(_c(1, 2, 1, 3, 1))


def cup1_coboundary_sides() -> tuple[SurjChain, SurjChain]:
    """
    ``d(a⌣_1b) = a⌣b + b⌣a``.
    """
    return differential(_c(1, 2, 1)), SurjChain.of(2, [(1, 2), (2, 1)])


def cup1_associator_sides() -> tuple[SurjChain, SurjChain]:
    """
    ``(a⌣_1b)⌣_1c + a⌣_1(b⌣_1c) = E_{1,2}(a;b,c) + E_{1,2}(a;c,b)``.
    """
    lhs = compose(_s(1, 2, 1), 1, _s(1, 2, 1)) + compose(_s(1, 2, 1), 2, _s(1, 2, 1))
    e12 = generator_chain(0, 1, 2)
    return lhs, e12 + relabel(e12, _swap(3, 2, 3))


def g21_sides() -> tuple[SurjChain, SurjChain]:
    """
    ``d G_{2,1} = (a⌣_1b)⌣_2c + a⌣_1(b⌣_2c) + (a⌣_2c)⌣_1b + E^1_{2,1}(a,b;c) + E^1_{2,1}(b,a;c)``.
    """
    _, g21 = g_elements()
    cup1, cup2 = _s(1, 2, 1), _s(1, 2, 1, 2)
    e1 = generator(1, 2, 1).chain
    rhs = (
        compose(cup2, 1, cup1)
        + compose(cup1, 2, cup2)
        + relabel(compose(cup1, 1, cup2), _swap(3, 2, 3))
        + e1
        + relabel(e1, _swap(3, 1, 2))
    )
    return differential(SurjChain.of(3, [g21])), rhs


def g12_sides() -> tuple[SurjChain, SurjChain]:
    """
    ``d G_{1,2} = a⌣_2(b⌣_1c) + b⌣_1(a⌣_2c) + (a⌣_2b)⌣_1c + E^1_{1,2}(a;b,c) + E^1_{1,2}(a;c,b)``.
    """
    g12, _ = g_elements()
    cup1, cup2 = _s(1, 2, 1), _s(1, 2, 1, 2)
    e1 = generator(1, 1, 2).chain
    rhs = (
        compose(cup2, 2, cup1)
        + relabel(compose(cup1, 2, cup2), _swap(3, 1, 2))
        + compose(cup1, 1, cup2)
        + e1
        + relabel(e1, _swap(3, 2, 3))
    )
    return differential(SurjChain.of(3, [g12])), rhs


def _combine(
    name: str,
    named_sides: Sequence[tuple[str, Callable[[], tuple[SurjChain, SurjChain]]]],
    extra_failures: Sequence[str] = (),
) -> CheckReport:
    start = time.perf_counter()
    failures = list(extra_failures)
    for label, sides in named_sides:
        lhs, rhs = sides()
        difference = lhs + rhs
        if not difference.is_zero():
            failures.append(f"{label}: lhs {lhs} rhs {rhs} difference {difference}")
    return CheckReport(
        name,
        (),
        not failures,
        counterexample="; ".join(failures) if failures else None,
        counts=(("identities", len(named_sides)),),
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


def check_remark1_identities() -> CheckReport:
    """
    The Hirsch identity, which holds on the nose, and the left Hirsch identity, which holds up to ``d(1,2,1,3,1)``.

    >>> check_remark1_identities().certificate()
    'REMARK1 PASS (identities=2)'
    """
    return _combine(
        "REMARK1", [("hirsch", hirsch_sides), ("left-hirsch", left_hirsch_sides)]
    )


def check_hga_consequences() -> CheckReport:
    """
    The low-degree consequences of the brace relations: ``d⌣_1``, both Hirsch formulas, and the ``⌣_1`` associator.

    >>> check_hga_consequences().passed
    True
    """
    return _combine(
        "HGA",
        [
            ("cup1-coboundary", cup1_coboundary_sides),
            ("hirsch", hirsch_sides),
            ("left-hirsch", left_hirsch_sides),
            ("cup1-associator", cup1_associator_sides),
        ],
    )


def check_g_relations() -> CheckReport:
    """
    Coboundaries of ``G_{2,1}`` and ``G_{1,2}``, and their place in ``F_3χ(3)_4``.

    >>> check_g_relations().certificate()
    'G PASS (identities=2)'
    """
    failures = []
    for g in g_elements():
        if g.arity != 3 or g.degree != 4 or chain_complexity(SurjChain.of(3, [g])) > 3:
            failures.append(f"{g} is not in F_3 of arity 3 and degree 4")
    return _combine("G", [("G21", g21_sides), ("G12", g12_sides)], failures)


def check_filtration(k: int, p: int, q: int) -> CheckReport:
    """
    Every term of ``E^k_{p,q}`` has complexity at most ``k+2``.

    >>> check_filtration(1, 1, 1).certificate()
    'FILTRATION k=1 p=1 q=1 PASS (max_complexity=3, terms=1)'
    """
    start = time.perf_counter()
    chain = generator(k, p, q).chain
    worst = chain_complexity(chain)
    passed = worst <= k + 2
    offenders = [str(u) for u in chain if complexity(u) > k + 2]
    return CheckReport(
        "FILTRATION",
        _params(k=k, p=p, q=q),
        passed,
        counterexample=None if passed else " + ".join(offenders),
        counts=(("max_complexity", worst), ("terms", len(chain))),
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


# region suites
type Check = Callable[[], CheckReport]

SUITES = ("ehga", "hga-assoc", "hga", "remark1", "g", "filtration", "all")


def ehga_grid(max_k: int, max_arity: int) -> list[tuple[int, int, int]]:
    """
    ``(k, m, n)`` with ``k <= max_k`` and ``1 <= m, n <= max_arity``, in lexicographic order.

    >>> ehga_grid(0, 2)
    [(0, 1, 1), (0, 1, 2), (0, 2, 1), (0, 2, 2)]
    """
    return list(
        itertools.product(
            range(max_k + 1), range(1, max_arity + 1), range(1, max_arity + 1)
        )
    )


def suite_checks(
    suite: str,
    *,
    k: int | None = None,
    m: int | None = None,
    n: int | None = None,
    max_k: int = 2,
    max_arity: int = 3,
    unsafe_large: bool = False,
) -> list[Check]:
    """
    The checks of a named suite, in deterministic order, as picklable callables.

    A single instance is selected by ``k``, ``m`` and ``n`` (missing ones default to 1, or 0 for ``k``); otherwise
    the grid bounded by ``max_k`` and ``max_arity`` is used. For ``hga-assoc`` the grid is ``m+n <= max_arity+2``.

    >>> len(suite_checks("ehga", max_k=1, max_arity=2))
    8
    >>> len(suite_checks("remark1"))
    1
    """
    if suite not in SUITES:
        errmsg = f"unknown suite {suite!r}, choose from {', '.join(SUITES)}."
        raise SteenboltExitingException(
            errmsg, exit_code=ERR_INVALID_USAGE
        ) from ValueError(errmsg)
    single = any(v is not None for v in (k, m, n))
    validator = UtilCheckArgsValidator()
    checks: list[Check] = []
    if suite in ("ehga", "all"):
        if single:
            instances = [(k or 0, m or 1, n or 1)]
        else:
            instances = ehga_grid(max_k, max_arity)
        for kk, mm, nn in instances:
            validator.validate_instance(kk, mm, nn, unsafe_large=unsafe_large)
            checks.append(functools.partial(check_ehga, kk, mm, nn))
    if suite in ("hga-assoc", "all"):
        if single:
            pairs = [(m or 1, n or 1)]
        else:
            bound = max_arity + 2
            pairs = [(a, b) for a in range(1, bound) for b in range(1, bound) if a + b <= bound]
        for mm, nn in pairs:
            validator.validate_instance(0, mm, nn, unsafe_large=unsafe_large)
            checks.append(functools.partial(check_hga_assoc, mm, nn))
    if suite in ("hga", "all"):
        checks.append(check_hga_consequences)
    if suite in ("remark1", "all"):
        checks.append(check_remark1_identities)
    if suite in ("g", "all"):
        checks.append(check_g_relations)
    if suite in ("filtration", "all"):
        if single:
            triples = [(k or 0, m or 1, n or 1)]
        else:
            triples = ehga_grid(max_k, max_arity)
        for kk, pp, qq in triples:
            validator.validate_instance(kk, pp, qq, unsafe_large=unsafe_large)
            checks.append(functools.partial(check_filtration, kk, pp, qq))
    return checks


# endregion
