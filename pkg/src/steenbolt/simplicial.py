#!/usr/bin/env python3
# coding=utf-8

"""
Cochains of ordered simplicial complexes over F2 and the action of surjection chains on them.

A surjection string ``u`` of length ``L`` acts on cochains ``x_1..x_n`` through interval cuts: the vertex positions
``0..m`` of an ``m``-simplex are cut at ``0 <= a_1 <= ... <= a_{L-1} <= m`` into overlapping intervals
``[a_{j-1}, a_j]``, interval ``j`` goes to the value ``u(j)``, and the term contributes the product of ``x_v`` on the
faces spanned by the positions collected by each value ``v``. Cuts where one value collects the same position twice
contribute nothing.
"""

from __future__ import annotations

import itertools
import logging
import time
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from importlib import resources
from pathlib import Path

import numpy as np
from vt.utils.errors.error_specs import ERR_DATA_FORMAT_ERR, ERR_INVALID_USAGE

from steenbolt.constants import FIXTURE_NAMES
from steenbolt.exceptions import ComplexException, SteenboltExitingException
from steenbolt.f2 import BitMatrix, FormalSum, rank_and_kernel, solve_membership
from steenbolt.generators import cup_string
from steenbolt.models import CheckReport
from steenbolt.surjection import SurjChain, differential, random_surjection

logger = logging.getLogger(__name__)

type Simplex = tuple[int, ...]


# region complexes
@dataclass(frozen=True)
class SimplicialComplex:
    """
    A finite ordered simplicial complex; ``simplices[d]`` lists the ``d``-simplices as increasing vertex tuples in
    lexicographic order.

    >>> delta2 = SimplicialComplex.from_facets([(0, 1, 2)])
    >>> delta2.f_vector
    (3, 3, 1)
    >>> delta2.simplices_of(1)
    ((0, 1), (0, 2), (1, 2))
    """

    simplices: tuple[tuple[Simplex, ...], ...]
    name: str = field(default="", compare=False)

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[int]], name: str = "") -> SimplicialComplex:
        """
        Downward closure of ``facets``.

        :raises ComplexException: for a facet with a repeated or negative vertex.
        """
        faces: set[Simplex] = set()
        for facet in facets:
            vertices = tuple(sorted(facet))
            if len(set(vertices)) != len(vertices):
                errmsg = f"facet {tuple(facet)} repeats a vertex."
                raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
            if vertices and vertices[0] < 0:
                errmsg = f"facet {tuple(facet)} has a negative vertex."
                raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
            for size in range(1, len(vertices) + 1):
                faces.update(_subsets(vertices, size))
        top = max((len(f) for f in faces), default=0)
        by_dim = tuple(
            tuple(sorted(f for f in faces if len(f) == d + 1)) for d in range(top)
        )
        return cls(by_dim, name)

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.simplices)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** d * count for d, count in enumerate(self.f_vector))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for (v,) in self.simplices_of(0))

    def simplices_of(self, dim: int) -> tuple[Simplex, ...]:
        if 0 <= dim < len(self.simplices):
            return self.simplices[dim]
        return ()

    @cached_property
    def _index(self) -> dict[Simplex, int]:
        return {s: i for level in self.simplices for i, s in enumerate(level)}

    def index(self, simplex: Simplex) -> int:
        return self._index[simplex]

    def __contains__(self, simplex: object) -> bool:
        return simplex in self._index

    def __str__(self) -> str:
        return self.name or f"complex{self.f_vector}"


def _subsets(vertices: Simplex, size: int) -> Iterable[Simplex]:
    return itertools.combinations(vertices, size)


def parse_complex(text: str, name: str = "") -> SimplicialComplex:
    """
    Parse complex text: one facet per line as whitespace-separated distinct non-negative integers; ``#`` starts a
    comment.

    >>> parse_complex("0 1 2").f_vector
    (3, 3, 1)
    >>> parse_complex("0 1\\n1 2\\n# closing edge\\n0 2").f_vector
    (3, 3)
    >>> parse_complex("0 1 x")
    Traceback (most recent call last):
    steenbolt.exceptions.ComplexException: ValueError: line 1: 'x' is not a non-negative integer.

    :raises ComplexException: for malformed lines and repeated vertices.
    """
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        facet = []
        for token in line.split():
            if not token.isdigit():
                errmsg = f"line {lineno}: {token!r} is not a non-negative integer."
                raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
            facet.append(int(token))
        if len(set(facet)) != len(facet):
            errmsg = f"line {lineno}: facet {tuple(facet)} repeats a vertex."
            raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
        facets.append(facet)
    return SimplicialComplex.from_facets(facets, name)


def load_complex(name_or_path: str | Path) -> SimplicialComplex:
    """
    Load a bundled fixture by name, or a complex file by path.

    >>> load_complex("rp2").f_vector
    (6, 15, 10)
    >>> load_complex("circle").euler_characteristic
    0

    :raises ComplexException: when the file cannot be read.
    """
    if isinstance(name_or_path, str) and name_or_path in FIXTURE_NAMES:
        text = (resources.files("steenbolt") / "fixtures" / f"{name_or_path}.txt").read_text(
            encoding="utf-8"
        )
        return parse_complex(text, name_or_path)
    path = Path(name_or_path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        errmsg = f"cannot read complex file {path}: {e.strerror}."
        raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from e
    return parse_complex(text, path.stem)


# endregion


# region cochains
@dataclass(frozen=True)
class Cochain:
    """
    A homogeneous F2 cochain: the ``dim``-simplices in ``support`` have value 1.

    Zero cochains compare equal whatever their dimension.
    """

    complex: SimplicialComplex
    dim: int
    support: FormalSum[Simplex] = field(default_factory=FormalSum)

    @classmethod
    def of(cls, complex_: SimplicialComplex, dim: int, simplices: Iterable[Sequence[int]]) -> Cochain:
        """
        :raises ComplexException: for a simplex that is not a ``dim``-simplex of the complex.
        """
        support = FormalSum.of(tuple(s) for s in simplices)
        for s in support:
            if len(s) != dim + 1 or s not in complex_:
                errmsg = f"{s} is not a {dim}-simplex of {complex_}."
                raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
        return cls(complex_, dim, support)

    @classmethod
    def zero(cls, complex_: SimplicialComplex, dim: int) -> Cochain:
        return cls(complex_, dim)

    @classmethod
    def from_vector(cls, complex_: SimplicialComplex, dim: int, vector: Sequence[int] | np.ndarray) -> Cochain:
        simplices = complex_.simplices_of(dim)
        return cls(complex_, dim, FormalSum.of(s for s, bit in zip(simplices, vector) if int(bit) & 1))

    @classmethod
    def random(cls, complex_: SimplicialComplex, dim: int, rng: np.random.Generator) -> Cochain:
        simplices = complex_.simplices_of(dim)
        bits = rng.integers(0, 2, size=len(simplices))
        return cls.from_vector(complex_, dim, bits)

    def to_vector(self) -> np.ndarray:
        simplices = self.complex.simplices_of(self.dim)
        return np.array([1 if s in self.support else 0 for s in simplices], dtype=np.uint8)

    def value(self, simplex: Simplex) -> int:
        return 1 if simplex in self.support else 0

    def is_zero(self) -> bool:
        return self.support.is_zero()

    def __add__(self, other: Cochain) -> Cochain:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.dim != other.dim:
            errmsg = f"cannot add cochains of dimensions {self.dim} and {other.dim}."
            raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
        return Cochain(self.complex, self.dim, self.support + other.support)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.dim == other.dim and self.support == other.support

    def __hash__(self) -> int:
        return hash(self.support)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join("[" + ",".join(map(str, s)) + "]" for s in self.support)


def coboundary(x: Cochain) -> Cochain:
    """
    The simplicial coboundary over F2.

    >>> delta1 = SimplicialComplex.from_facets([(0, 1)])
    >>> str(coboundary(Cochain.of(delta1, 0, [(0,)])))
    '[0,1]'
    """
    target = x.complex.simplices_of(x.dim + 1)
    if x.is_zero() or not target:
        return Cochain.zero(x.complex, x.dim + 1)
    support = x.support.terms
    hits = []
    for tau in target:
        faces = sum(1 for i in range(len(tau)) if tau[:i] + tau[i + 1 :] in support)
        if faces & 1:
            hits.append(tau)
    return Cochain(x.complex, x.dim + 1, FormalSum.of(hits))


def coboundary_matrix(complex_: SimplicialComplex, dim: int) -> BitMatrix:
    """
    Matrix of the coboundary from ``dim``-cochains to ``(dim+1)``-cochains in the simplex bases.
    """
    rows = complex_.simplices_of(dim + 1)
    cols = complex_.simplices_of(dim)
    matrix = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    if rows and cols:
        for r, tau in enumerate(rows):
            for i in range(len(tau)):
                matrix[r, complex_.index(tau[:i] + tau[i + 1 :])] = 1
    return BitMatrix(matrix)


def _same_complex(xs: Sequence[Cochain]) -> SimplicialComplex:
    complex_ = xs[0].complex
    for x in xs[1:]:
        if x.complex is not complex_ and x.complex != complex_:
            errmsg = "cochains live on different complexes."
            raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
    return complex_


def _coefficient(
    entries: tuple[int, ...],
    sigma: Simplex,
    supports: dict[int, frozenset[Simplex]],
    needs: dict[int, int],
    last_seen: dict[int, int],
) -> int:
    m = len(sigma) - 1
    length = len(entries)
    faces: dict[int, list[int]] = {v: [] for v in needs}
    total = 0

    def place(j: int, start: int) -> None:
        nonlocal total
        v = entries[j]
        positions = faces[v]
        if positions and positions[-1] == start:
            return
        ends = range(start, m + 1) if j < length - 1 else range(m, m + 1)
        for end in ends:
            added = end - start + 1
            if len(positions) + added > needs[v]:
                break
            positions.extend(range(start, end + 1))
            alive = True
            if j == last_seen[v]:
                alive = len(positions) == needs[v] and tuple(sigma[i] for i in positions) in supports[v]
            if alive:
                if j == length - 1:
                    total += 1
                else:
                    place(j + 1, end)
            del positions[-added:]

    place(0, 0)
    return total & 1


def evaluate(u: SurjChain, xs: Sequence[Cochain], target_dim: int | None = None) -> Cochain:
    """
    Evaluate a surjection chain of arity ``n`` on ``n`` cochains by interval cuts.

    >>> delta1 = SimplicialComplex.from_facets([(0, 1)])
    >>> x = Cochain.of(delta1, 0, [(0,)])
    >>> y = Cochain.of(delta1, 0, [(1,)])
    >>> str(evaluate(SurjChain.of(2, [(1, 2)]), [x, y], 0))
    '0'
    >>> str(evaluate(SurjChain.of(2, [(1, 2)]), [x, y]))
    '0'
    >>> e = Cochain.of(delta1, 1, [(0, 1)])
    >>> str(evaluate(SurjChain.of(2, [(1, 2, 1)]), [e, e]))
    '[0,1]'

    :param target_dim: expected dimension ``Σ dim x_i - degree(u)``, checked when given.
    :raises ComplexException: on arity or dimension mismatch and for cochains on different complexes.
    """
    if u.arity and len(xs) != u.arity:
        errmsg = f"chain of arity {u.arity} cannot act on {len(xs)} cochains."
        raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
    if not xs:
        errmsg = "at least one cochain is required."
        raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
    complex_ = _same_complex(xs)
    total_dim = sum(x.dim for x in xs)
    degree = u.degree
    if degree is None:
        return Cochain.zero(complex_, total_dim if target_dim is None else target_dim)
    m = total_dim - degree
    if target_dim is not None and target_dim != m:
        errmsg = f"target dimension {target_dim} differs from {m} = Σ dim x_i - degree(u)."
        raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
    simplices = complex_.simplices_of(m)
    if not simplices or any(x.is_zero() for x in xs):
        return Cochain.zero(complex_, m)
    supports = {v: xs[v - 1].support.terms for v in range(1, len(xs) + 1)}
    needs = {v: xs[v - 1].dim + 1 for v in range(1, len(xs) + 1)}
    hits = []
    for term in u:
        entries = term.entries
        last_seen = {v: j for j, v in enumerate(entries)}
        for sigma in simplices:
            if _coefficient(entries, sigma, supports, needs, last_seen):
                hits.append(sigma)
    return Cochain(complex_, m, FormalSum.of(hits))


@lru_cache(maxsize=None)
def _cup_chain(i: int) -> SurjChain:
    return SurjChain.of(2, [cup_string(i)])


def cup_i(x: Cochain, y: Cochain, i: int) -> Cochain:
    """
    Steenrod's ``x ⌣_i y``, of dimension ``dim x + dim y - i``.

    >>> delta2 = SimplicialComplex.from_facets([(0, 1, 2)])
    >>> a = Cochain.of(delta2, 1, [(0, 1)])
    >>> b = Cochain.of(delta2, 1, [(1, 2)])
    >>> str(cup_i(a, b, 0)), str(cup_i(b, a, 0))
    ('[0,1,2]', '0')
    >>> cup_i(a, b, -1)
    Traceback (most recent call last):
    steenbolt.exceptions.SteenboltExitingException: ValueError: i must be at least 0, got -1.
    """
    if i < 0:
        errmsg = f"i must be at least 0, got {i}."
        raise SteenboltExitingException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
    return evaluate(_cup_chain(i), [x, y])


def _cup_or_zero(x: Cochain, y: Cochain, i: int) -> Cochain:
    if i < 0:
        return Cochain.zero(x.complex, x.dim + y.dim - i)
    return cup_i(x, y, i)


# endregion


# region cohomology
@dataclass(frozen=True)
class CohomologyClass:
    """
    A class in ``H^dim``, with a cocycle representative and coordinates in the computed basis.
    """

    dim: int
    representative: Cochain
    coordinates: tuple[int, ...]

    @property
    def basis_id(self) -> int | None:
        """
        Index of the basis class this is, or ``None`` for zero and for sums of several basis classes.
        """
        if sum(self.coordinates) != 1:
            return None
        return self.coordinates.index(1)

    def is_zero(self) -> bool:
        return not any(self.coordinates)


@dataclass(frozen=True, eq=False)
class CohomologyGroup:
    """
    ``H^dim`` over F2 with a chosen basis of cocycle representatives.
    """

    complex: SimplicialComplex
    dim: int
    basis: tuple[CohomologyClass, ...]
    span: BitMatrix
    """
    Columns: the coboundaries of the ``(dim-1)``-simplices followed by the basis representatives.
    """

    @property
    def rank(self) -> int:
        return len(self.basis)

    def classify(self, cocycle: Cochain) -> tuple[int, ...]:
        """
        Coordinates of the class of ``cocycle`` in the basis.

        :raises ComplexException: when ``cocycle`` is not a cocycle of this dimension.
        """
        if cocycle.is_zero():
            return (0,) * self.rank
        if cocycle.dim != self.dim or not coboundary(cocycle).is_zero():
            errmsg = f"{cocycle} is not a {self.dim}-cocycle."
            raise ComplexException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
        if self.rank == 0:
            return ()
        solution = solve_membership(self.span, cocycle.to_vector())
        if solution is None:
            raise SteenboltExitingException(
                f"cocycle {cocycle} escaped the span of coboundaries and basis.", exit_code=ERR_DATA_FORMAT_ERR
            )
        return tuple(int(c) for c in solution[self.span.cols - self.rank :])

    def class_of(self, cocycle: Cochain) -> CohomologyClass:
        return CohomologyClass(self.dim, cocycle, self.classify(cocycle))


@lru_cache(maxsize=None)
def cohomology_group(complex_: SimplicialComplex, dim: int) -> CohomologyGroup:
    """
    Kernel modulo image over F2, with representatives picked in the order of the kernel basis.

    >>> [cohomology_group(load_complex("circle"), d).rank for d in (0, 1)]
    [1, 1]
    """
    simplices = complex_.simplices_of(dim)
    if not simplices:
        return CohomologyGroup(complex_, dim, (), BitMatrix.zeros(0, 0))
    _, kernel = rank_and_kernel(coboundary_matrix(complex_, dim))
    rows = len(simplices)
    columns: list[np.ndarray] = []
    if dim > 0:
        image = coboundary_matrix(complex_, dim - 1)
        columns.extend(image.entries[:, j] for j in range(image.cols))
    representatives = []
    for z in kernel:
        if solve_membership(BitMatrix.from_columns(columns, rows), z) is None:
            representatives.append(z)
            columns.append(z)
    rank = len(representatives)
    basis = tuple(
        CohomologyClass(
            dim,
            Cochain.from_vector(complex_, dim, z),
            tuple(1 if j == i else 0 for j in range(rank)),
        )
        for i, z in enumerate(representatives)
    )
    logger.debug("H^%d(%s) has rank %d", dim, complex_, rank)
    return CohomologyGroup(complex_, dim, basis, BitMatrix.from_columns(columns, rows))


def cohomology(complex_: SimplicialComplex, dim: int) -> list[CohomologyClass]:
    """
    A basis of ``H^dim`` over F2.

    >>> [len(cohomology(load_complex("rp2"), d)) for d in (0, 1, 2)]
    [1, 1, 1]
    >>> [len(cohomology(load_complex("delta2"), d)) for d in (0, 1, 2)]
    [1, 0, 0]
    """
    return list(cohomology_group(complex_, dim).basis)


def steenrod_square(c: CohomologyClass, k: int) -> CohomologyClass:
    """
    ``Sq^k`` of an ``n``-class: the class of ``x ⌣_{n-k} x``.

    >>> rp2 = load_complex("rp2")
    >>> a = cohomology(rp2, 1)[0]
    >>> steenrod_square(a, 1).coordinates
    (1,)
    >>> steenrod_square(a, 0).coordinates
    (1,)
    >>> steenrod_square(a, 2)
    Traceback (most recent call last):
    steenbolt.exceptions.SteenboltExitingException: ValueError: Sq^2 needs 0 <= 2 <= 1.

    :raises SteenboltExitingException: unless ``0 <= k <= n``.
    """
    n = c.dim
    if not 0 <= k <= n:
        errmsg = f"Sq^{k} needs 0 <= {k} <= {n}."
        raise SteenboltExitingException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
    x = c.representative
    square = cup_i(x, x, n - k)
    return cohomology_group(x.complex, n + k).class_of(square)


def steenrod_matrix(complex_: SimplicialComplex, n: int, k: int) -> BitMatrix:
    """
    Matrix of ``Sq^k: H^n -> H^{n+k}`` in the computed bases; column ``j`` holds the coordinates of the image of basis
    class ``j``.

    >>> steenrod_matrix(load_complex("circle"), 1, 0).entries.tolist()
    [[1]]
    """
    source = cohomology(complex_, n)
    target_rank = cohomology_group(complex_, n + k).rank
    columns = [steenrod_square(c, k).coordinates for c in source]
    return BitMatrix.from_columns(columns, target_rank)


# endregion


# region checks
def check_steenrod_coboundary(
    complex_: SimplicialComplex, i: int, trials: int, rng: np.random.Generator | None = None
) -> CheckReport:
    """
    ``d(x⌣_iy) = dx⌣_iy + x⌣_idy + x⌣_{i-1}y + y⌣_{i-1}x`` on random cochains, with ``⌣_{-1} = 0``.

    >>> check_steenrod_coboundary(load_complex("delta3"), 1, 5, np.random.default_rng(0)).passed
    True
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    start = time.perf_counter()
    failure = None
    top = complex_.dimension
    for trial in range(trials):
        p = int(rng.integers(0, top + 1))
        q = int(rng.integers(0, top + 1))
        x = Cochain.random(complex_, p, rng)
        y = Cochain.random(complex_, q, rng)
        lhs = coboundary(_cup_or_zero(x, y, i))
        rhs = (
            _cup_or_zero(coboundary(x), y, i)
            + _cup_or_zero(x, coboundary(y), i)
            + _cup_or_zero(x, y, i - 1)
            + _cup_or_zero(y, x, i - 1)
        )
        if lhs != rhs:
            failure = f"trial {trial}: x={x} y={y} d(x⌣_{i}y)={lhs} expected {rhs}"
            break
    return CheckReport(
        "STEENROD-COBOUNDARY",
        (("complex", str(complex_)), ("i", i)),
        failure is None,
        counterexample=failure,
        counts=(("trials", trials),),
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


def check_steenrod_well_defined(
    complex_: SimplicialComplex, perturbations: int, rng: np.random.Generator | None = None
) -> CheckReport:
    """
    ``Sq^k`` of every basis class, for every admissible ``k``, is unchanged when the representative is moved by a
    random coboundary.

    >>> check_steenrod_well_defined(load_complex("rp2"), 2, np.random.default_rng(0)).certificate()
    'STEENROD-WELL-DEFINED complex=rp2 PASS (classes=3, trials=12)'
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    start = time.perf_counter()
    failure = None
    classes = trials = 0
    for n in range(complex_.dimension + 1):
        for c in cohomology(complex_, n):
            classes += 1
            for k in range(n + 1):
                expected = steenrod_square(c, k).coordinates
                target = cohomology_group(complex_, n + k)
                for _ in range(perturbations):
                    trials += 1
                    shift = coboundary(Cochain.random(complex_, n - 1, rng)) if n > 0 else Cochain.zero(complex_, n)
                    moved = c.representative + shift
                    got = target.classify(cup_i(moved, moved, n - k))
                    if got != expected and failure is None:
                        failure = f"Sq^{k} of {moved} gives {got}, but {c.representative} gives {expected}"
    logger.debug("checked %d representative perturbations on %s", trials, complex_)
    return CheckReport(
        "STEENROD-WELL-DEFINED",
        (("complex", str(complex_)),),
        failure is None,
        counterexample=failure,
        counts=(("classes", classes), ("trials", trials)),
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


def check_cochain_chain_map(
    complex_: SimplicialComplex,
    trials: int,
    rng: np.random.Generator | None = None,
    max_arity: int = 3,
    max_length: int = 6,
) -> CheckReport:
    """
    ``evaluate(d u, xs) = d evaluate(u, xs) + Σ_i evaluate(u, xs with d x_i)`` for random ``u`` and ``xs``.

    >>> check_cochain_chain_map(load_complex("delta3"), 5, np.random.default_rng(1)).passed
    True
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    start = time.perf_counter()
    failure = None
    top = complex_.dimension
    for trial in range(trials):
        u = random_surjection(rng, max_arity, max_length)
        chain = SurjChain.of(u.arity, [u])
        xs = [Cochain.random(complex_, int(rng.integers(0, top + 1)), rng) for _ in range(u.arity)]
        target = sum(x.dim for x in xs) - u.degree
        lhs = evaluate(differential(chain), xs, target + 1)
        rhs = coboundary(evaluate(chain, xs, target))
        for v in range(len(xs)):
            shifted = [coboundary(x) if w == v else x for w, x in enumerate(xs)]
            rhs = rhs + evaluate(chain, shifted, target + 1)
        if lhs != rhs:
            failure = f"trial {trial}: u={u} dims={[x.dim for x in xs]} lhs={lhs} rhs={rhs}"
            break
    return CheckReport(
        "CHAIN-MAP",
        (("complex", str(complex_)),),
        failure is None,
        counterexample=failure,
        counts=(("trials", trials),),
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


# endregion
