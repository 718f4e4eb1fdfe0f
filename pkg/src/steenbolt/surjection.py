#!/usr/bin/env python3
# coding=utf-8

"""
The surjection operad over F2.

A basis element of arity ``n`` and degree ``d`` is a sequence of ``n+d`` positive integers hitting every value
``1..n``, with no two equal neighbours. ``SurjChain`` is a mod-2 sum of such sequences of one arity.

Conventions used throughout the package:

* differential: delete one entry, drop results that lose a value or get equal neighbours;
* ``u ∘_k v``: relabel ``v`` onto ``k..k+arity(v)-1``, shift the values of ``u`` above ``k``, then substitute the
  overlapping block splittings of ``v`` for the occurrences of ``k`` in order;
* ``relabel(c, σ)`` replaces every entry ``e`` by ``σ(e)``, i.e. input ``v`` moves to slot ``σ(v)``.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from vt.utils.errors.error_specs import ERR_DATA_FORMAT_ERR, ERR_INVALID_USAGE

from steenbolt.constants import TERM_SEP, ZERO_CHAIN
from steenbolt.exceptions import ChainParseException, SurjectionException
from steenbolt.f2 import FormalSum, mod2


# region types
@dataclass(frozen=True, order=True)
class Surjection:
    """
    A nondegenerate surjection written as its string of values.

    Build validated instances with ``make_surjection``. Operations in this module only construct valid strings.

    >>> u = make_surjection((1, 2, 1))
    >>> u.arity, u.degree
    (2, 1)
    >>> str(u)
    '(1,2,1)'
    """

    entries: tuple[int, ...]

    @property
    def arity(self) -> int:
        return max(self.entries)

    @property
    def degree(self) -> int:
        return len(self.entries) - self.arity

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class SurjChain:
    """
    An F2 sum of surjections sharing one arity.

    The zero chain may carry arity 0 when nothing pins its arity (for example, when parsed from ``"0"``).
    Adding such a zero to any chain is allowed.

    >>> c = SurjChain.of(2, [(1, 2), (2, 1)])
    >>> str(c)
    '(1,2) + (2,1)'
    >>> (c + c).is_zero()
    True
    """

    arity: int
    terms: FormalSum[Surjection] = field(default_factory=FormalSum)

    @classmethod
    def of(cls, arity: int, strings: Iterable[Sequence[int] | Surjection]) -> SurjChain:
        """
        Build a chain from strings, validating each one and applying the mod-2 collapse.

        :raises SurjectionException: when a string is invalid or has a different arity.
        """
        surjections = [
            s if isinstance(s, Surjection) else make_surjection(s) for s in strings
        ]
        for s in surjections:
            if s.arity != arity:
                errmsg = f"{s} has arity {s.arity}, expected {arity}."
                raise SurjectionException(
                    errmsg, exit_code=ERR_INVALID_USAGE
                ) from ValueError(errmsg)
        return cls(arity, FormalSum.of(surjections))

    @classmethod
    def zero(cls, arity: int = 0) -> SurjChain:
        return cls(arity)

    @classmethod
    def unit(cls) -> SurjChain:
        """
        The operadic identity ``(1)``.
        """
        return cls(1, FormalSum.of([Surjection((1,))]))

    @property
    def degree(self) -> int | None:
        """
        Common degree of the terms, ``None`` for the zero chain.

        :raises SurjectionException: for a chain of mixed degree.
        """
        degrees = {s.degree for s in self.terms.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            errmsg = f"chain has mixed degrees {sorted(degrees)}."
            raise SurjectionException(
                errmsg, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)
        return degrees.pop()

    def is_zero(self) -> bool:
        return self.terms.is_zero()

    def __add__(self, other: SurjChain) -> SurjChain:
        if self.arity != other.arity and not (self.is_zero() or other.is_zero()):
            errmsg = f"cannot add chains of arity {self.arity} and {other.arity}."
            raise SurjectionException(
                errmsg, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)
        arity = self.arity if not self.is_zero() else other.arity
        return SurjChain(arity, self.terms + other.terms)

    def __iter__(self) -> Iterator[Surjection]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SurjChain):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        return print_chain(self)


@dataclass(frozen=True)
class ValuePermutation:
    """
    A bijection of ``{1..n}``; ``images[v-1]`` is the image of ``v``.

    >>> swap = ValuePermutation.transposition(3, 2, 3)
    >>> swap(2), swap(3), swap(1)
    (3, 2, 1)
    >>> ValuePermutation((1, 1))
    Traceback (most recent call last):
    steenbolt.exceptions.SurjectionException: ValueError: (1, 1) is not a permutation of 1..2.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            errmsg = f"{self.images} is not a permutation of 1..{len(self.images)}."
            raise SurjectionException(
                errmsg, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)

    @classmethod
    def identity(cls, n: int) -> ValuePermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> ValuePermutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> ValuePermutation:
        """
        Permutation acting as ``mapping`` on its keys and as the identity elsewhere.
        """
        return cls(tuple(mapping.get(v, v) for v in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def inverse(self) -> ValuePermutation:
        inv = [0] * self.n
        for v, image in enumerate(self.images, start=1):
            inv[image - 1] = v
        return ValuePermutation(tuple(inv))

    def __call__(self, v: int) -> int:
        return self.images[v - 1]


# endregion


# region construction and text
def _violation(entries: Sequence[int]) -> str | None:
    if not entries:
        return "a surjection string cannot be empty"
    if any(e < 1 for e in entries):
        return f"{tuple(entries)} has non-positive entries"
    n = max(entries)
    missing = set(range(1, n + 1)).difference(entries)
    if missing:
        return f"{tuple(entries)} is not surjective, missing {sorted(missing)}"
    for i in range(len(entries) - 1):
        if entries[i] == entries[i + 1]:
            return f"{tuple(entries)} is degenerate, equal neighbours at positions {i + 1} and {i + 2}"
    return None


def make_surjection(entries: Sequence[int]) -> Surjection:
    """
    Validate a string of values and wrap it as a ``Surjection``.

    >>> make_surjection([1, 2, 1])
    Surjection(entries=(1, 2, 1))
    >>> make_surjection((1, 1, 2))
    Traceback (most recent call last):
    steenbolt.exceptions.SurjectionException: ValueError: (1, 1, 2) is degenerate, equal neighbours at positions 1 and 2
    >>> make_surjection((1, 3))
    Traceback (most recent call last):
    steenbolt.exceptions.SurjectionException: ValueError: (1, 3) is not surjective, missing [2]

    :raises SurjectionException: naming the violated rule.
    """
    if not all(isinstance(e, int) for e in entries):
        errmsg = f"surjection entries must be integers, got {tuple(entries)}."
        raise SurjectionException(
            errmsg, exit_code=ERR_DATA_FORMAT_ERR
        ) from TypeError(errmsg)
    errmsg = _violation(entries)
    if errmsg is not None:
        raise SurjectionException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(
            errmsg
        )
    return Surjection(tuple(entries))


_TERM_RE = re.compile(r"\s*\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)\s*")


def parse_chain(text: str, arity: int | None = None) -> SurjChain:
    """
    Parse chain text: ``"0"`` or terms like ``(1,2,1)`` joined by ``+``.

    >>> c = parse_chain("(2,1) +(1,2)")
    >>> c.arity, str(c)
    (2, '(1,2) + (2,1)')
    >>> parse_chain("0").is_zero()
    True
    >>> parse_chain("(1,2) (2,1)")
    Traceback (most recent call last):
    steenbolt.exceptions.ChainParseException: ValueError: expected '+' at position 6.

    :param text: chain text.
    :param arity: expected arity; inferred from the first term when ``None``.
    :raises ChainParseException: on grammar errors, carrying the position.
    :raises SurjectionException: on invalid terms or mixed arities.
    """
    if text.strip() == ZERO_CHAIN:
        return SurjChain.zero(arity or 0)
    pos = 0
    strings: list[tuple[int, ...]] = []
    while True:
        match = _TERM_RE.match(text, pos)
        if match is None:
            errmsg = f"expected a term like (1,2) at position {pos}."
            raise ChainParseException(
                errmsg, position=pos, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)
        strings.append(tuple(int(x) for x in match.group(1).split(",")))
        pos = match.end()
        if pos == len(text):
            break
        if text[pos] != "+":
            errmsg = f"expected '+' at position {pos}."
            raise ChainParseException(
                errmsg, position=pos, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)
        pos += 1
    surjections = [make_surjection(s) for s in strings]
    return SurjChain.of(arity or surjections[0].arity, surjections)


def parse_surjection(text: str) -> Surjection:
    """
    Parse a single term.

    >>> parse_surjection(" (1,2,1) ")
    Surjection(entries=(1, 2, 1))
    """
    chain = parse_chain(text)
    if len(chain) != 1:
        errmsg = f"expected exactly one surjection, got {len(chain)} terms."
        raise ChainParseException(
            errmsg, position=0, exit_code=ERR_INVALID_USAGE
        ) from ValueError(errmsg)
    return next(iter(chain))


def print_chain(c: SurjChain) -> str:
    """
    Canonical text: terms in lexicographic order joined by ``" + "``; the zero chain prints ``"0"``.

    >>> print_chain(SurjChain.of(2, [(2, 1), (1, 2)]))
    '(1,2) + (2,1)'
    >>> print_chain(SurjChain.zero())
    '0'
    """
    if c.is_zero():
        return ZERO_CHAIN
    return TERM_SEP.join(str(s) for s in c)


# endregion


# region operad structure
@lru_cache(maxsize=None)
def _deletions(entries: tuple[int, ...]) -> frozenset[Surjection]:
    out = []
    last = len(entries) - 1
    for i, e in enumerate(entries):
        if entries.count(e) == 1:
            continue
        if 0 < i < last and entries[i - 1] == entries[i + 1]:
            continue
        out.append(Surjection(entries[:i] + entries[i + 1 :]))
    return mod2(out)


def differential(c: SurjChain) -> SurjChain:
    """
    The differential of the surjection operad over F2.

    >>> str(differential(parse_chain("(1,2,1)")))
    '(1,2) + (2,1)'
    >>> str(differential(parse_chain("(1,2)")))
    '0'
    >>> str(differential(parse_chain("(1,2,1,2)")))
    '(1,2,1) + (2,1,2)'
    """
    return SurjChain(
        c.arity, FormalSum.of(s for u in c for s in _deletions(u.entries))
    )


def _is_nondegenerate(entries: Sequence[int]) -> bool:
    return all(entries[i] != entries[i + 1] for i in range(len(entries) - 1))


@lru_cache(maxsize=None)
def _compose_terms(
    u: tuple[int, ...], k: int, v: tuple[int, ...]
) -> frozenset[Surjection]:
    shift = max(v) - 1
    v_relabelled = tuple(x + k - 1 for x in v)
    occurrences = u.count(k)
    length = len(v)
    out = []
    for cuts in itertools.combinations_with_replacement(
        range(1, length + 1), occurrences - 1
    ):
        bounds = (1, *cuts, length)
        blocks = iter(
            v_relabelled[bounds[j] - 1 : bounds[j + 1]] for j in range(occurrences)
        )
        result: list[int] = []
        for x in u:
            if x == k:
                result.extend(next(blocks))
            else:
                result.append(x + shift if x > k else x)
        if _is_nondegenerate(result):
            out.append(Surjection(tuple(result)))
    return mod2(out)


def compose(u: Surjection, slot: int, v: Surjection) -> SurjChain:
    """
    Partial composition ``u ∘_slot v``.

    >>> str(compose(make_surjection((1, 2)), 1, make_surjection((1, 2))))
    '(1,2,3)'
    >>> str(compose(make_surjection((1, 2, 1)), 1, make_surjection((1, 2))))
    '(1,2,3,2) + (1,3,1,2)'
    >>> str(compose(make_surjection((1, 2)), 2, make_surjection((1, 2, 1))))
    '(1,2,3,2)'
    >>> compose(make_surjection((1, 2)), 3, make_surjection((1, 2)))
    Traceback (most recent call last):
    steenbolt.exceptions.SurjectionException: ValueError: slot 3 is out of range 1..2.

    :raises SurjectionException: when ``slot`` is not an input of ``u``.
    """
    if not 1 <= slot <= u.arity:
        errmsg = f"slot {slot} is out of range 1..{u.arity}."
        raise SurjectionException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(
            errmsg
        )
    return SurjChain(
        u.arity + v.arity - 1, FormalSum(_compose_terms(u.entries, slot, v.entries))
    )


def compose_chains(c: SurjChain, slot: int, d: SurjChain) -> SurjChain:
    """
    Bilinear extension of ``compose``.

    Composing with a zero chain gives zero of the expected arity when both arities are known.
    """
    arity = c.arity + d.arity - 1 if c.arity and d.arity else 0
    if c.is_zero() or d.is_zero():
        return SurjChain.zero(max(arity, 0))
    if not 1 <= slot <= c.arity:
        errmsg = f"slot {slot} is out of range 1..{c.arity}."
        raise SurjectionException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(
            errmsg
        )
    return SurjChain(
        arity,
        FormalSum.of(
            s for u in c for v in d for s in _compose_terms(u.entries, slot, v.entries)
        ),
    )


def relabel(c: SurjChain, sigma: ValuePermutation) -> SurjChain:
    """
    Replace every entry ``e`` by ``sigma(e)``.

    >>> str(relabel(parse_chain("(1,2,1)"), ValuePermutation.transposition(2, 1, 2)))
    '(2,1,2)'
    >>> str(relabel(parse_chain("(1,2,1,3,1)"), ValuePermutation.transposition(3, 2, 3)))
    '(1,3,1,2,1)'

    :raises SurjectionException: when ``sigma`` acts on a different number of values.
    """
    if c.is_zero():
        return c
    if sigma.n != c.arity:
        errmsg = f"permutation of {sigma.n} values cannot relabel a chain of arity {c.arity}."
        raise SurjectionException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(
            errmsg
        )
    return SurjChain(
        c.arity,
        FormalSum.of(Surjection(tuple(sigma(e) for e in u.entries)) for u in c),
    )


def complexity(u: Surjection) -> int:
    """
    Largest number of alternations between two values: for each pair of values, count the constant blocks of the
    string restricted to that pair, subtract one, and take the maximum.

    >>> complexity(make_surjection((1, 2)))
    1
    >>> complexity(make_surjection((1, 2, 1, 2)))
    3
    >>> complexity(make_surjection((1, 2, 1, 3, 1, 3, 2)))
    3
    """
    best = 0
    for i, j in itertools.combinations(range(1, u.arity + 1), 2):
        restricted = [e for e in u.entries if e == i or e == j]
        changes = sum(1 for a, b in itertools.pairwise(restricted) if a != b)
        best = max(best, changes)
    return best


def chain_complexity(c: SurjChain) -> int:
    return max((complexity(u) for u in c), default=0)


# endregion


def random_surjection(rng: np.random.Generator, max_arity: int, max_length: int) -> Surjection:
    """
    A random non-degenerate surjection of arity at most ``max_arity`` and length at most ``max_length``.

    >>> u = random_surjection(np.random.default_rng(3), 3, 6)
    >>> 1 <= u.arity <= 3 and len(u.entries) <= 6
    True
    """
    while True:
        n = int(rng.integers(1, max_arity + 1))
        if n == 1:
            return Surjection((1,))
        length = int(rng.integers(n, max(n, max_length) + 1))
        entries = [int(rng.integers(1, n + 1))]
        while len(entries) < length:
            value = int(rng.integers(1, n))
            entries.append(value if value < entries[-1] else value + 1)
        if len(set(entries)) == n:
            return Surjection(tuple(entries))
