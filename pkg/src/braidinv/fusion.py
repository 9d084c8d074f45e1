"""Finite fusion rings: labels, fusion multiplicities, duals and dimensions.

A :class:`FusionRing` stores the combinatorial skeleton of an anyon model:
a finite label set with a distinguished vacuum (always index 0), a dual
involution and the nonnegative-integer fusion tensor ``N[a, b, c]`` giving
the multiplicity of ``c`` inside ``a x b``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import InputError, NumericalError

MAX_RANK = 64

DIM_TOL = 1e-12
DIM_MAX_ITER = 100_000


@dataclass(frozen=True)
class Label:
    """A simple-object label: an index into a ring plus a display name."""

    index: int
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural validation pass.

    ``violations`` lists hard failures; ``warnings`` lists findings that a
    caller chose to downgrade. An empty ``violations`` tuple means valid.
    """

    violations: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


class FusionRing:
    """A finite fusion ring with vacuum at index 0.

    Parameters
    ----------
    names : sequence of str
        Unique display names, vacuum first.
    dual : sequence of int
        Involution on label indices, ``dual[0] == 0``.
    fusion : (rank, rank, rank) array of nonnegative int
        ``fusion[a, b, c]`` is the multiplicity of ``c`` in ``a x b``.

    Structural requirements (shapes, value ranges) are enforced here;
    the ring axioms themselves are checked by :func:`validate_ring`.
    """

    def __init__(self, names, dual, fusion):
        names = tuple(str(n) for n in names)
        rank = len(names)
        if rank == 0:
            raise InputError("a fusion ring needs at least the vacuum label")
        if rank > MAX_RANK:
            raise InputError(f"rank {rank} exceeds the supported maximum {MAX_RANK}")
        if len(set(names)) != rank:
            raise InputError("label names must be unique")
        dual = np.asarray(dual, dtype=np.int64)
        if dual.shape != (rank,):
            raise InputError(f"dual permutation has shape {dual.shape}, expected ({rank},)")
        if sorted(dual.tolist()) != list(range(rank)):
            raise InputError("dual map is not a permutation of the label indices")
        fusion = np.asarray(fusion)
        if fusion.shape != (rank, rank, rank):
            raise InputError(
                f"fusion tensor has shape {fusion.shape}, expected {(rank, rank, rank)}"
            )
        if not np.issubdtype(fusion.dtype, np.integer):
            rounded = np.rint(fusion)
            if not np.array_equal(rounded, fusion):
                raise InputError("fusion multiplicities must be integers")
            fusion = rounded
        fusion = fusion.astype(np.int64)
        if (fusion < 0).any():
            raise InputError("fusion multiplicities must be nonnegative")

        self._labels = tuple(Label(i, n) for i, n in enumerate(names))
        self._dual = dual
        self._dual.setflags(write=False)
        self._fusion = fusion
        self._fusion.setflags(write=False)

    @property
    def rank(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[Label, ...]:
        return self._labels

    @property
    def vacuum(self) -> Label:
        return self._labels[0]

    @property
    def fusion_tensor(self) -> np.ndarray:
        return self._fusion

    @property
    def dual_map(self) -> np.ndarray:
        return self._dual

    def label(self, key) -> Label:
        """Resolve an index, name or Label to this ring's Label."""
        if isinstance(key, Label):
            key = key.index
        if isinstance(key, (int, np.integer)):
            if not 0 <= key < self.rank:
                raise InputError(f"label index {key} out of range for rank {self.rank}")
            return self._labels[int(key)]
        if isinstance(key, str):
            for lab in self._labels:
                if lab.name == key:
                    return lab
            raise InputError(f"unknown label name {key!r}")
        raise InputError(f"cannot interpret {key!r} as a label")

    def dual(self, key) -> Label:
        return self._labels[int(self._dual[self.label(key).index])]

    def mult(self, a, b, c) -> int:
        """Multiplicity of ``c`` inside ``a x b``."""
        return int(self._fusion[self.label(a).index, self.label(b).index, self.label(c).index])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (
            tuple(l.name for l in self._labels) == tuple(l.name for l in other._labels)
            and np.array_equal(self._dual, other._dual)
            and np.array_equal(self._fusion, other._fusion)
        )

    def same_structure(self, other: "FusionRing") -> bool:
        """True if the rings agree up to label names (dual and fusion match)."""
        return (
            self.rank == other.rank
            and np.array_equal(self._dual, other._dual)
            and np.array_equal(self._fusion, other._fusion)
        )

    def __hash__(self):
        return hash((tuple(l.name for l in self._labels), self._fusion.tobytes()))

    def __repr__(self) -> str:
        return f"FusionRing({[l.name for l in self._labels]})"


def validate_ring(ring: FusionRing) -> ValidationReport:
    """Check the fusion-ring axioms, returning one message per violation.

    The checks run in a fixed order (unit, associativity, duals, vacuum
    channel symmetry) and index their messages, so the report is
    deterministic for a given ring.
    """
    n = ring.fusion_tensor
    dual = ring.dual_map
    rank = ring.rank
    eye = np.eye(rank, dtype=np.int64)
    bad: list[str] = []

    for b in range(rank):
        for c in range(rank):
            if n[0, b, c] != eye[b, c]:
                bad.append(f"unit axiom: N[0,{b},{c}] = {n[0, b, c]}, expected {eye[b, c]}")
            if n[b, 0, c] != eye[b, c]:
                bad.append(f"unit axiom: N[{b},0,{c}] = {n[b, 0, c]}, expected {eye[b, c]}")

    left = np.einsum("abe,ecf->abcf", n, n)
    right = np.einsum("bce,aef->abcf", n, n)
    for a, b, c, f in zip(*np.nonzero(left != right)):
        bad.append(
            f"associativity: sum_e N[{a},{b},e]N[e,{c},{f}] = {left[a, b, c, f]} "
            f"!= {right[a, b, c, f]} = sum_e N[{b},{c},e]N[{a},e,{f}]"
        )

    if dual[0] != 0:
        bad.append(f"dual axiom: dual(0) = {dual[0]}, expected 0")
    for a in range(rank):
        if dual[dual[a]] != a:
            bad.append(f"dual axiom: dual(dual({a})) = {dual[dual[a]]}, expected {a}")
        for b in range(rank):
            want = 1 if b == dual[a] else 0
            if n[a, b, 0] != want:
                bad.append(f"dual axiom: N[{a},{b},0] = {n[a, b, 0]}, expected {want}")

    conj = n[np.ix_(dual, dual, dual)]
    # N[a,b,c] == N[dual b, dual a, dual c]: compare against the transposed view
    flipped = np.transpose(conj, (1, 0, 2))
    for a, b, c in zip(*np.nonzero(n != flipped)):
        bad.append(
            f"vacuum channel symmetry: N[{a},{b},{c}] = {n[a, b, c]} "
            f"!= N[dual({b}),dual({a}),dual({c})] = {flipped[a, b, c]}"
        )

    return ValidationReport(tuple(bad))


def fuse(ring: FusionRing, a, b) -> Counter:
    """Decompose ``a x b`` into a multiset of labels with multiplicities."""
    ai = ring.label(a).index
    bi = ring.label(b).index
    out: Counter = Counter()
    row = ring.fusion_tensor[ai, bi]
    for c in np.nonzero(row)[0]:
        out[ring.labels[int(c)]] = int(row[c])
    return out


def quantum_dims(ring: FusionRing, tol: float = DIM_TOL, max_iter: int = DIM_MAX_ITER) -> np.ndarray:
    """Quantum dimensions of a valid ring.

    Returns the unique strictly positive vector ``d`` with ``d[0] = 1`` and
    ``d[a] d[b] = sum_c N[a,b,c] d[c]``, obtained by power iteration on the
    summed fusion matrix ``M[b, c] = sum_a N[a, b, c]`` (entrywise positive
    for a valid ring, so the iteration has a unique attracting direction).
    Raises :class:`NumericalError` if the iteration does not settle within
    ``max_iter`` steps at tolerance ``tol``.
    """
    n = ring.fusion_tensor
    m = n.sum(axis=0).astype(np.float64)
    v = np.ones(ring.rank)
    for _ in range(max_iter):
        w = m @ v
        norm = np.max(np.abs(w))
        if norm == 0.0:
            raise NumericalError("summed fusion matrix annihilated the iterate")
        w = w / norm
        if np.max(np.abs(w - v)) <= tol:
            v = w
            break
        v = w
    else:
        raise NumericalError(
            f"power iteration did not converge within {max_iter} iterations at tol {tol}"
        )
    if v[0] <= 0:
        raise NumericalError("vacuum component of the dimension vector is not positive")
    d = v / v[0]
    if (d <= 0).any():
        raise NumericalError("dimension vector has non-positive entries; ring is likely invalid")
    return d
