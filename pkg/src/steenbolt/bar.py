#!/usr/bin/env python3
# coding=utf-8

"""
Truncated bar construction of the cochain algebra of a complex, with the multiplication and the ``⌣_i`` products
induced by the operations ``E^k_{p,q}``.

Letters are basis cochains, i.e. simplices; a word ``[a_1|...|a_m]`` is a ``BarWord`` and a bar element is a
``FormalSum`` of words. Cochain-valued results are expanded over the simplex basis, so every element stays a sum of
basis words.

``α ⌣_i β`` is the cofree extension of the ``E`` family: its length-``r`` component sums, over deconcatenations
``α = α⁽¹⁾...α⁽ʳ⁾``, ``β = β⁽¹⁾...β⁽ʳ⁾`` and ``i = i_1 + ... + i_r``, the words ``[c_1|...|c_r]`` with
``c_j = E^{i_j}(α⁽ʲ⁾; β⁽ʲ⁾)``, the two pieces swapped whenever ``i_1 + ... + i_{j-1}`` is odd.
"""

from __future__ import annotations

import itertools
import logging
import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache

from vt.utils.errors.error_specs import ERR_INVALID_USAGE

from steenbolt.exceptions import TruncationException
from steenbolt.f2 import FormalSum
from steenbolt.generators import generator_chain
from steenbolt.models import CheckReport
from steenbolt.simplicial import Cochain, Simplex, SimplicialComplex, evaluate
from steenbolt.validators import UtilGeneratorArgsValidator, validate_bar_length

logger = logging.getLogger(__name__)


# region words
@dataclass(frozen=True, order=True)
class BarWord:
    """
    A word of basis cochains.

    ``degree`` uses the desuspension grading, a letter of dimension ``j`` counting ``j-1``; the bar differential
    raises it by one and ``⌣_i`` lowers the sum of the degrees by ``i``. ``weight`` counts ``j+1`` per letter and
    bounds enumeration.

    >>> w = BarWord(((0, 1), (1,)))
    >>> str(w), len(w), w.degree, w.weight
    ('[0,1|1]', 2, -1, 3)
    >>> str(BarWord.empty())
    '[]'
    """

    letters: tuple[Simplex, ...] = ()

    @classmethod
    def empty(cls) -> BarWord:
        return cls()

    @property
    def degree(self) -> int:
        return sum(len(s) - 2 for s in self.letters)

    @property
    def weight(self) -> int:
        return sum(len(s) for s in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, item: slice) -> BarWord:
        return BarWord(self.letters[item])

    def __add__(self, other: BarWord) -> BarWord:
        return BarWord(self.letters + other.letters)

    def __str__(self) -> str:
        return "[" + "|".join(",".join(map(str, s)) for s in self.letters) + "]"


type BarElement = FormalSum[BarWord]
type BarTensor = FormalSum[tuple[BarWord, BarWord]]


def element_str(x: BarElement) -> str:
    """
    >>> element_str(FormalSum.of([BarWord(((0,),)), BarWord.empty()]))
    '[] + [0]'
    """
    return " + ".join(map(str, x)) if x else "0"


def bar_coproduct(w: BarWord) -> BarTensor:
    """
    Deconcatenation ``Σ_s w[:s] ⊗ w[s:]``.

    >>> [(str(a), str(b)) for a, b in bar_coproduct(BarWord(((0,),)))]
    [('[0]', '[]'), ('[]', '[0]')]
    """
    return FormalSum.of((w[:s], w[s:]) for s in range(len(w) + 1))


# endregion


# region operations
@dataclass(frozen=True, eq=False)
class EStructure:
    """
    The operations ``E^k`` on basis words of one complex, with the bar differential and ``⌣_i`` built from them.

    Values are memoised per instance; ``structure()`` hands out one instance per complex.

    ``E^0([a];[]) = E^0([];[a]) = a``; every other ``E^k`` with an empty side is zero.
    """

    complex: SimplicialComplex
    _e_cache: dict[tuple[int, BarWord, BarWord], FormalSum[Simplex]] = field(
        default_factory=dict, init=False, repr=False
    )
    _cup_cache: dict[tuple[int, BarWord, BarWord], BarElement] = field(default_factory=dict, init=False, repr=False)
    _cofaces: dict[Simplex, tuple[Simplex, ...]] = field(default_factory=dict, init=False, repr=False)

    # region letters
    def cofaces(self, s: Simplex) -> tuple[Simplex, ...]:
        """
        The coboundary of the basis cochain ``s``.
        """
        hit = self._cofaces.get(s)
        if hit is None:
            vertices = set(s)
            hit = tuple(t for t in self.complex.simplices_of(len(s)) if vertices.issubset(t))
            self._cofaces[s] = hit
        return hit

    def letter_product(self, s: Simplex, t: Simplex) -> Simplex | None:
        """
        Cup product of two basis cochains: front face ``s`` and back face ``t`` of one simplex, or nothing.
        """
        if s[-1] != t[0]:
            return None
        joined = s + t[1:]
        return joined if joined in self.complex else None

    def cochain_product(self, x: FormalSum[Simplex], y: FormalSum[Simplex]) -> FormalSum[Simplex]:
        hits = (self.letter_product(s, t) for s in x for t in y)
        return FormalSum.of(h for h in hits if h is not None)

    def cochain_coboundary(self, x: FormalSum[Simplex]) -> FormalSum[Simplex]:
        return x.flat_map(self.cofaces)

    # endregion

    def e(self, k: int, alpha: BarWord, beta: BarWord) -> FormalSum[Simplex]:
        """
        Support of the cochain ``E^k(α; β)``.
        """
        key = (k, alpha, beta)
        hit = self._e_cache.get(key)
        if hit is None:
            hit = self._compute_e(k, alpha, beta)
            self._e_cache[key] = hit
        return hit

    def _compute_e(self, k: int, alpha: BarWord, beta: BarWord) -> FormalSum[Simplex]:
        m, n = len(alpha), len(beta)
        if k < 0 or m + n == 0:
            return FormalSum()
        if m == 0 or n == 0:
            if k == 0 and m + n == 1:
                return FormalSum.of((alpha + beta).letters)
            return FormalSum()
        chain = generator_chain(k, m, n)
        if chain.is_zero():
            return FormalSum()
        xs = [Cochain(self.complex, len(s) - 1, FormalSum.of([s])) for s in (alpha + beta).letters]
        return evaluate(chain, xs).support

    def diff(self, w: BarWord) -> BarElement:
        """
        ``Σ_j [..|δa_j|..] + Σ_j [..|a_j·a_{j+1}|..]``.
        """
        letters = w.letters
        words = []
        for j, s in enumerate(letters):
            for t in self.cofaces(s):
                words.append(BarWord(letters[:j] + (t,) + letters[j + 1 :]))
        for j in range(len(letters) - 1):
            joined = self.letter_product(letters[j], letters[j + 1])
            if joined is not None:
                words.append(BarWord(letters[:j] + (joined,) + letters[j + 2 :]))
        return FormalSum.of(words)

    def diff_element(self, x: BarElement) -> BarElement:
        return x.flat_map(self.diff)

    def cup(self, i: int, alpha: BarWord, beta: BarWord) -> BarElement:
        """
        ``α ⌣_i β``; ``⌣_0`` is the multiplication, with the empty word as unit.
        """
        key = (i, alpha, beta)
        hit = self._cup_cache.get(key)
        if hit is None:
            hit = self._compute_cup(i, alpha, beta)
            self._cup_cache[key] = hit
        return hit

    def _compute_cup(self, i: int, alpha: BarWord, beta: BarWord) -> BarElement:
        if i < 0:
            return FormalSum()
        if not alpha and not beta:
            return FormalSum.of([BarWord.empty()]) if i == 0 else FormalSum()
        a, b = alpha.letters, beta.letters
        words: list[BarWord] = []

        def walk(pa: int, pb: int, used: int, factors: list[FormalSum[Simplex]]) -> None:
            if pa == len(a) and pb == len(b):
                if used == i:
                    words.extend(BarWord(combo) for combo in itertools.product(*factors))
                return
            for ea in range(pa, len(a) + 1):
                for eb in range(pb, len(b) + 1):
                    if ea == pa and eb == pb:
                        continue
                    first, second = BarWord(a[pa:ea]), BarWord(b[pb:eb])
                    if used % 2:
                        first, second = second, first
                    for k in range(i - used + 1):
                        c = self.e(k, first, second)
                        if c:
                            walk(ea, eb, used + k, [*factors, c])

        walk(0, 0, 0, [])
        return FormalSum.of(words)

    def cup_elements(self, i: int, x: BarElement, y: BarElement) -> BarElement:
        out: BarElement = FormalSum()
        for alpha in x:
            for beta in y:
                out = out + self.cup(i, alpha, beta)
        return out


@lru_cache(maxsize=None)
def structure(complex_: SimplicialComplex) -> EStructure:
    return EStructure(complex_)


def bar_diff(complex_: SimplicialComplex, w: BarWord) -> BarElement:
    """
    The bar differential over F2.

    >>> from steenbolt.simplicial import load_complex
    >>> delta1 = load_complex("delta1")
    >>> element_str(bar_diff(delta1, BarWord(((0,), (1,)))))
    '[0|0,1] + [0,1|1]'
    >>> element_str(bar_diff(delta1, BarWord.empty()))
    '0'
    """
    return structure(complex_).diff(w)


def e_map(complex_: SimplicialComplex, k: int, alpha: BarWord, beta: BarWord) -> Cochain:
    """
    The cochain ``E^k(α; β)``.

    >>> from steenbolt.simplicial import load_complex
    >>> delta1 = load_complex("delta1")
    >>> str(e_map(delta1, 0, BarWord(((0, 1),)), BarWord(((0, 1),))))
    '[0,1]'
    >>> str(e_map(delta1, 0, BarWord(((0,),)), BarWord.empty()))
    '[0]'
    >>> str(e_map(delta1, 1, BarWord(((0,),)), BarWord.empty()))
    '0'
    """
    support = structure(complex_).e(k, alpha, beta)
    dim = sum(len(s) - 1 for s in (alpha + beta).letters) - (len(alpha) + len(beta) + k - 1)
    return Cochain(complex_, dim, support)


@dataclass(frozen=True)
class CupBarResult:
    """
    A ``⌣_i`` product on a truncation. ``exact`` is false when components longer than the truncation were dropped.
    """

    terms: BarElement
    exact: bool

    def __str__(self) -> str:
        return element_str(self.terms)


def cup_bar(
    complex_: SimplicialComplex,
    i: int,
    alpha: BarWord,
    beta: BarWord,
    max_len: int | None = None,
    *,
    require_exact: bool = False,
) -> CupBarResult:
    """
    ``α ⌣_i β``, cut at word length ``max_len`` when given.

    >>> from steenbolt.simplicial import load_complex
    >>> delta1 = load_complex("delta1")
    >>> x, y = BarWord(((0,),)), BarWord(((1,),))
    >>> str(cup_bar(delta1, 0, BarWord.empty(), y))
    '[1]'
    >>> str(cup_bar(delta1, 0, x, y))
    '[0|1] + [1|0]'
    >>> cup_bar(delta1, 1, x, y, max_len=1).exact
    False
    >>> cup_bar(delta1, 1, x, y, max_len=1, require_exact=True)
    Traceback (most recent call last):
    steenbolt.exceptions.TruncationException: ValueError: [0] ⌣_1 [1] has length up to 2, above the truncation 1.

    :raises TruncationException: with ``require_exact`` when components could exceed ``max_len``.
    """
    full = structure(complex_).cup(i, alpha, beta)
    if max_len is None or len(alpha) + len(beta) <= max_len:
        return CupBarResult(full, True)
    if require_exact:
        errmsg = f"{alpha} ⌣_{i} {beta} has length up to {len(alpha) + len(beta)}, above the truncation {max_len}."
        raise TruncationException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
    return CupBarResult(FormalSum.of(w for w in full if len(w) <= max_len), False)


# endregion


# region truncations
@dataclass(frozen=True)
class BarTruncation:
    """
    Words of length at most ``max_len`` and weight at most ``max_weight`` (no weight bound when ``None``).
    """

    complex: SimplicialComplex
    max_len: int
    max_weight: int | None
    words: tuple[BarWord, ...]

    @property
    def structure(self) -> EStructure:
        return structure(self.complex)

    def pairs(self) -> Iterator[tuple[BarWord, BarWord]]:
        """
        Pairs of basis words whose products are exact on this truncation.
        """
        for alpha in self.words:
            for beta in self.words:
                if len(alpha) + len(beta) <= self.max_len:
                    yield alpha, beta

    def triples(self) -> Iterator[tuple[BarWord, BarWord, BarWord]]:
        for alpha, beta in self.pairs():
            for gamma in self.words:
                if len(alpha) + len(beta) + len(gamma) <= self.max_len:
                    yield alpha, beta, gamma


def bar_basis(
    complex_: SimplicialComplex, max_len: int, max_weight: int | None = None, *, unsafe_large: bool = False
) -> BarTruncation:
    """
    Enumerate the basis words of a truncation, shorter words first.

    >>> from steenbolt.simplicial import load_complex
    >>> len(bar_basis(load_complex("delta1"), 1).words)
    4
    >>> [str(w) for w in bar_basis(load_complex("delta1"), 0).words]
    ['[]']
    >>> len(bar_basis(load_complex("circle"), 2, 3).words)
    34
    """
    validate_bar_length(max_len, unsafe_large=unsafe_large)
    letters = [s for level in complex_.simplices for s in level]
    words = []
    for length in range(max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            w = BarWord(combo)
            if max_weight is None or w.weight <= max_weight:
                words.append(w)
    logger.debug("bar truncation of %s: L=%d D=%s, %d words", complex_, max_len, max_weight, len(words))
    return BarTruncation(complex_, max_len, max_weight, tuple(words))


# endregion


# region checks
class _Verdict:
    def __init__(self) -> None:
        self.cases = 0
        self.failure: str | None = None

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = describe()


def _report(
    name: str, trunc: BarTruncation, verdict: _Verdict, start: float, extra: tuple[tuple[str, int | str], ...] = ()
) -> CheckReport:
    return CheckReport(
        name,
        (("complex", str(trunc.complex)), *extra, ("L", trunc.max_len)),
        verdict.failure is None,
        counterexample=verdict.failure,
        counts=(("cases", verdict.cases),),
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


def _tensor_products(
    es: EStructure, i: int, alpha: BarWord, beta: BarWord
) -> BarTensor:
    terms: list[tuple[BarWord, BarWord]] = []
    for a1, a2 in bar_coproduct(alpha):
        for b1, b2 in bar_coproduct(beta):
            for k in range(i + 1):
                left = es.cup(k, a1, b1)
                if not left:
                    continue
                right = es.cup(i - k, b2, a2) if k % 2 else es.cup(i - k, a2, b2)
                terms.extend((u, v) for u in left for v in right)
    return FormalSum.of(terms)


def _deconcatenate(x: BarElement) -> BarTensor:
    return FormalSum.of(pair for w in x for pair in bar_coproduct(w))


def check_bar_differential(trunc: BarTruncation) -> CheckReport:
    """
    ``d_B ∘ d_B = 0`` on every basis word.

    >>> from steenbolt.simplicial import load_complex
    >>> check_bar_differential(bar_basis(load_complex("delta2"), 2)).passed
    True
    """
    start = time.perf_counter()
    es = trunc.structure
    verdict = _Verdict()
    for w in trunc.words:
        twice = es.diff_element(es.diff(w))
        verdict.record(twice.is_zero(), lambda: f"d_B d_B {w} = {element_str(twice)}")
    return _report("BAR-DIFF", trunc, verdict, start)


def check_hopf(trunc: BarTruncation) -> CheckReport:
    """
    The multiplication is a chain map, unital, associative and a coalgebra map, on every pair and triple within the
    truncation.

    >>> from steenbolt.simplicial import load_complex
    >>> check_hopf(bar_basis(load_complex("delta1"), 2)).passed
    True
    """
    start = time.perf_counter()
    es = trunc.structure
    verdict = _Verdict()
    unit = BarWord.empty()
    for w in trunc.words:
        single = FormalSum.of([w])
        verdict.record(
            es.cup(0, unit, w) == single and es.cup(0, w, unit) == single, lambda: f"unit law fails on {w}"
        )
    for alpha, beta in trunc.pairs():
        product = es.cup(0, alpha, beta)
        lhs = es.diff_element(product)
        rhs = es.cup_elements(0, es.diff(alpha), FormalSum.of([beta])) + es.cup_elements(
            0, FormalSum.of([alpha]), es.diff(beta)
        )
        verdict.record(lhs == rhs, lambda: f"d_B(μ({alpha}, {beta})) = {element_str(lhs)}, expected {element_str(rhs)}")
        split = _deconcatenate(product)
        expected = _tensor_products(es, 0, alpha, beta)
        verdict.record(split == expected, lambda: f"μ({alpha}, {beta}) is not a coalgebra map image")
    for alpha, beta, gamma in trunc.triples():
        left = es.cup_elements(0, es.cup(0, alpha, beta), FormalSum.of([gamma]))
        right = es.cup_elements(0, FormalSum.of([alpha]), es.cup(0, beta, gamma))
        verdict.record(
            left == right,
            lambda: f"μ(μ({alpha}, {beta}), {gamma}) = {element_str(left)} but μ({alpha}, μ({beta}, {gamma})) = "
            f"{element_str(right)}",
        )
    return _report("HOPF", trunc, verdict, start)


def _twisting_sides(
    es: EStructure, i: int, alpha: BarWord, beta: BarWord
) -> tuple[FormalSum[Simplex], FormalSum[Simplex]]:
    lhs = es.cochain_coboundary(es.e(i, alpha, beta))
    for t in es.diff(alpha):
        lhs = lhs + es.e(i, t, beta)
    for t in es.diff(beta):
        lhs = lhs + es.e(i, alpha, t)
    for s in range(len(alpha) + 1):
        for r in range(len(beta) + 1):
            for j in range(i + 1):
                first = es.e(j, alpha[:s], beta[:r])
                if not first:
                    continue
                if j % 2:
                    second = es.e(i - j, beta[r:], alpha[s:])
                else:
                    second = es.e(i - j, alpha[s:], beta[r:])
                lhs = lhs + es.cochain_product(first, second)
    rhs = es.e(i - 1, alpha, beta) + es.e(i - 1, beta, alpha)
    return lhs, rhs


def check_steenrod_bar(i: int, trunc: BarTruncation) -> CheckReport:
    """
    For ``i >= 1``, on every pair within the truncation:

    * ``δE^i + E^i d_B + Σ_j E^j · T^j E^{i-j} = E^{i-1} + E^{i-1} T`` on cochains;
    * ``d_B(α⌣_iβ) + d_Bα⌣_iβ + α⌣_id_Bβ = α⌣_{i-1}β + β⌣_{i-1}α`` on words.

    >>> from steenbolt.simplicial import load_complex
    >>> check_steenrod_bar(1, bar_basis(load_complex("delta1"), 2)).passed
    True
    >>> check_steenrod_bar(0, bar_basis(load_complex("delta1"), 1))
    Traceback (most recent call last):
    steenbolt.exceptions.SteenboltExitingException: ValueError: i must be at least 1, got 0.
    """
    UtilGeneratorArgsValidator().validate_positive(i, "i")
    start = time.perf_counter()
    es = trunc.structure
    verdict = _Verdict()
    for alpha, beta in trunc.pairs():
        e_lhs, e_rhs = _twisting_sides(es, i, alpha, beta)
        verdict.record(
            e_lhs == e_rhs,
            lambda: f"twisting form of E^{i} fails on ({alpha}; {beta}): difference {sorted(e_lhs + e_rhs)}",
        )
        single_a, single_b = FormalSum.of([alpha]), FormalSum.of([beta])
        lhs = (
            es.diff_element(es.cup(i, alpha, beta))
            + es.cup_elements(i, es.diff(alpha), single_b)
            + es.cup_elements(i, single_a, es.diff(beta))
        )
        rhs = es.cup(i - 1, alpha, beta) + es.cup(i - 1, beta, alpha)
        verdict.record(
            lhs == rhs,
            lambda: f"coboundary law of ⌣_{i} fails on ({alpha}, {beta}): difference {element_str(lhs + rhs)}",
        )
    return _report("STEENROD-BAR", trunc, verdict, start, (("i", i),))


def check_decomposition(i: int, trunc: BarTruncation) -> CheckReport:
    """
    ``Δ(α⌣_iβ) = Σ_k (⌣_k ⊗ ⌣_{i-k} T^k)(Δα, Δβ)`` on every pair within the truncation.

    >>> from steenbolt.simplicial import load_complex
    >>> check_decomposition(1, bar_basis(load_complex("delta1"), 2)).passed
    True
    """
    start = time.perf_counter()
    es = trunc.structure
    verdict = _Verdict()
    for alpha, beta in trunc.pairs():
        split = _deconcatenate(es.cup(i, alpha, beta))
        expected = _tensor_products(es, i, alpha, beta)
        verdict.record(split == expected, lambda: f"Δ({alpha} ⌣_{i} {beta}) differs from the split products")
    return _report("DECOMPOSITION", trunc, verdict, start, (("i", i),))


# endregion
