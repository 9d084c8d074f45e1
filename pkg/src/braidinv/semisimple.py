"""Semisimple objects, block morphisms and deformed-solution traces.

An object is a multiplicity vector over a ring's simples. A morphism
between two such objects is a family of complex blocks, one per label,
acting between the multiplicity spaces. Every quantity the trace calculus
needs factors through the positive blocks ``T* T`` of an invertible
endomorphism ``T``, so a deformed conjugate-pair solution is stored via
``T`` alone and never materialized as a vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, NumericalError, ZeroObjectError
from .fusion import FusionRing
from .modular import ModularData

CONDITION_CAP = 1e8


@dataclass(frozen=True)
class SemisimpleObject:
    """A direct sum of simples, recorded as a multiplicity vector."""

    ring: FusionRing
    mult: np.ndarray

    def __post_init__(self):
        mult = np.asarray(self.mult)
        if mult.shape != (self.ring.rank,):
            raise InputError(
                f"multiplicity vector has shape {mult.shape}, expected ({self.ring.rank},)"
            )
        if not np.issubdtype(mult.dtype, np.integer):
            rounded = np.rint(mult)
            if not np.array_equal(rounded, mult):
                raise InputError("multiplicities must be integers")
            mult = rounded
        mult = mult.astype(np.int64)
        if (mult < 0).any():
            raise InputError("multiplicities must be nonnegative")
        mult.setflags(write=False)
        object.__setattr__(self, "mult", mult)

    @property
    def is_zero(self) -> bool:
        return not self.mult.any()

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(int(a) for a in np.nonzero(self.mult)[0])

    def total_dim(self, dims: np.ndarray) -> float:
        return float(self.mult @ dims)

    def __eq__(self, other):
        if not isinstance(other, SemisimpleObject):
            return NotImplemented
        return self.ring.same_structure(other.ring) and np.array_equal(self.mult, other.mult)

    def __hash__(self):
        return hash((self.ring.rank, self.mult.tobytes()))


class BlockMorphism:
    """A morphism between semisimple objects: one complex block per label.

    ``blocks[a]`` has shape ``(target.mult[a], source.mult[a])``; labels
    outside the common support carry empty blocks.
    """

    def __init__(self, source: SemisimpleObject, target: SemisimpleObject, blocks):
        if not source.ring.same_structure(target.ring):
            raise InputError("source and target live over different rings")
        blocks = [np.asarray(b, dtype=np.complex128) for b in blocks]
        if len(blocks) != source.ring.rank:
            raise InputError(f"expected {source.ring.rank} blocks, got {len(blocks)}")
        for a, b in enumerate(blocks):
            want = (int(target.mult[a]), int(source.mult[a]))
            if b.shape != want:
                raise InputError(f"block {a} has shape {b.shape}, expected {want}")
            b.setflags(write=False)
        self.source = source
        self.target = target
        self.blocks = tuple(blocks)

    @classmethod
    def identity(cls, obj: SemisimpleObject) -> "BlockMorphism":
        return cls(obj, obj, [np.eye(int(m), dtype=np.complex128) for m in obj.mult])

    @classmethod
    def diagonal(cls, obj: SemisimpleObject, entries) -> "BlockMorphism":
        """Endomorphism with given diagonal entries, listed label by label."""
        entries = list(entries)
        blocks = []
        for m in obj.mult:
            vals = [entries.pop(0) for _ in range(int(m))]
            blocks.append(np.diag(np.asarray(vals, dtype=np.complex128)))
        if entries:
            raise InputError("more diagonal entries than total multiplicity")
        return cls(obj, obj, blocks)

    @property
    def is_endo(self) -> bool:
        return self.source == self.target

    def block(self, a) -> np.ndarray:
        return self.blocks[self.source.ring.label(a).index]

    def adjoint(self) -> "BlockMorphism":
        return BlockMorphism(self.target, self.source, [b.conj().T for b in self.blocks])

    def __matmul__(self, other: "BlockMorphism") -> "BlockMorphism":
        if other.target != self.source:
            raise InputError("composition mismatch: inner objects differ")
        return BlockMorphism(
            other.source, self.target, [x @ y for x, y in zip(self.blocks, other.blocks)]
        )

    def __add__(self, other: "BlockMorphism") -> "BlockMorphism":
        if other.source != self.source or other.target != self.target:
            raise InputError("sum mismatch: objects differ")
        return BlockMorphism(
            self.source, self.target, [x + y for x, y in zip(self.blocks, other.blocks)]
        )

    def __repr__(self):
        shapes = [b.shape for b in self.blocks]
        return f"BlockMorphism({shapes})"


class ConjugateDeformation:
    """A conjugate-pair solution encoded by an invertible ``T`` in End(obj).

    Identity ``T`` is the standard solution. Blocks with condition number
    above ``CONDITION_CAP`` are rejected as numerically singular, since the
    inverse of ``T* T`` enters the right-hand weights.
    """

    def __init__(self, obj: SemisimpleObject, t: BlockMorphism | None = None):
        if t is None:
            t = BlockMorphism.identity(obj)
        if t.source != obj or t.target != obj:
            raise InputError("deformation must be an endomorphism of its object")
        for a in obj.support:
            blk = t.blocks[a]
            if blk.size == 0:
                continue
            cond = np.linalg.cond(blk)
            if not np.isfinite(cond) or cond > CONDITION_CAP:
                raise NumericalError(
                    f"deformation block {a} is numerically singular (cond = {cond:.3g})"
                )
        self.obj = obj
        self.t = t

    @classmethod
    def standard(cls, obj: SemisimpleObject) -> "ConjugateDeformation":
        return cls(obj)

    def gram_blocks(self) -> list[np.ndarray]:
        """The positive blocks of ``T* T``, label by label."""
        return [b.conj().T @ b for b in self.t.blocks]


def conjugate_object(obj: SemisimpleObject) -> SemisimpleObject:
    """The conjugate object: multiplicities transported along the dual map."""
    mult = np.zeros_like(obj.mult)
    dual = obj.ring.dual_map
    for a in range(obj.ring.rank):
        mult[dual[a]] = obj.mult[a]
    return SemisimpleObject(obj.ring, mult)


def _require_nonzero(obj: SemisimpleObject, what: str):
    if obj.is_zero:
        raise ZeroObjectError(f"{what} is undefined on the zero object")


def categorical_trace(obj: SemisimpleObject, x: BlockMorphism, dims: np.ndarray) -> complex:
    """Dimension-weighted trace ``sum_a d(a) tr(x_a)`` of an endomorphism."""
    _require_nonzero(obj, "the trace")
    if x.source != obj or x.target != obj:
        raise InputError("trace requires an endomorphism of the given object")
    return complex(sum(dims[a] * np.trace(x.blocks[a]) for a in obj.support))


def central_projection(obj: SemisimpleObject, a) -> BlockMorphism:
    """Projection onto the isotypic component of label ``a``."""
    idx = obj.ring.label(a).index
    blocks = []
    for b, m in enumerate(obj.mult):
        m = int(m)
        blocks.append(np.eye(m, dtype=np.complex128) if b == idx else np.zeros((m, m)))
    return BlockMorphism(obj, obj, blocks)


def solution_norms(dfm: ConjugateDeformation, dims: np.ndarray) -> tuple[float, float]:
    """Squared norms of the deformed pair: ``(Tr T*T, Tr (T*T)^-1)``.

    Both traces are dimension-weighted. For the standard solution they
    coincide with the total dimension of the object.
    """
    _require_nonzero(dfm.obj, "the solution norm")
    grams = dfm.gram_blocks()
    left = 0.0
    right = 0.0
    for a in dfm.obj.support:
        left += dims[a] * np.trace(grams[a]).real
        right += dims[a] * np.trace(np.linalg.inv(grams[a])).real
    return float(left), float(right)


def solution_weights(dfm: ConjugateDeformation, side: str, dims: np.ndarray) -> np.ndarray:
    """Per-label weights of a deformed solution in the monodromy trace.

    ``side='left'`` gives ``t[a] = d(a)^-1 Tr(p_a T*T)``; ``side='right'``
    gives ``s[a] = d(a)^-1 Tr(p_a (T*T)^-1)``. Entries are strictly
    positive on the object's support and zero elsewhere, and satisfy
    ``sum_a d(a) t[a] = |R|^2`` (respectively ``|Rbar|^2``).
    """
    if side not in ("left", "right"):
        raise InputError(f"side must be 'left' or 'right', got {side!r}")
    _require_nonzero(dfm.obj, "the weight vector")
    out = np.zeros(dfm.obj.ring.rank)
    grams = dfm.gram_blocks()
    for a in dfm.obj.support:
        g = grams[a] if side == "left" else np.linalg.inv(grams[a])
        out[a] = np.trace(g).real
    return out


def _check_same_ring(md: ModularData, *objs: SemisimpleObject):
    for obj in objs:
        if not obj.ring.same_structure(md.ring):
            raise InputError("object ring does not match the modular data's ring")


def double_braiding_trace(
    rho: ConjugateDeformation, sigma: ConjugateDeformation, md: ModularData
) -> complex:
    """Deformed monodromy trace ``sum_{a,b} t_a s_b S[a,b]``.

    This is the closed contraction of the double braiding between the two
    objects, sandwiched by the deformed solution of ``rho`` and the
    conjugate half of ``sigma``'s.
    """
    _check_same_ring(md, rho.obj, sigma.obj)
    t = solution_weights(rho, "left", md.dims)
    s = solution_weights(sigma, "right", md.dims)
    return complex(t @ md.s @ s)


def twist_trace(rho: ConjugateDeformation, md: ModularData) -> complex:
    """Deformed self-braiding trace: ``sum_a n_a theta_a``.

    The deformation cancels exactly, so the value depends only on the
    object's multiplicities. The invertibility requirement on ``T`` is
    still enforced by :class:`ConjugateDeformation`.
    """
    _check_same_ring(md, rho.obj)
    _require_nonzero(rho.obj, "the twist trace")
    return complex(rho.obj.mult @ md.theta)


def random_object(ring: FusionRing, rng, max_labels: int = 3, max_mult: int = 2) -> SemisimpleObject:
    """Random nonzero object with small support, for randomized suites."""
    rank = ring.rank
    count = int(rng.integers(1, min(max_labels, rank) + 1))
    support = rng.choice(rank, size=count, replace=False)
    mult = np.zeros(rank, dtype=np.int64)
    for a in support:
        mult[a] = int(rng.integers(1, max_mult + 1))
    return SemisimpleObject(ring, mult)


def random_deformation(
    obj: SemisimpleObject, rng, unitary: bool = False
) -> ConjugateDeformation:
    """Random invertible deformation with moderate condition number.

    With ``unitary=True`` the blocks are Haar-like unitaries, which leave
    all norms standard; otherwise singular values are spread over
    ``[1/2, 2]``.
    """
    blocks = []
    for m in obj.mult:
        m = int(m)
        if m == 0:
            blocks.append(np.zeros((0, 0), dtype=np.complex128))
            continue
        z = rng.normal(size=(m, m)) + 1j * rng.normal(size=(m, m))
        q, r = np.linalg.qr(z)
        q = q * (np.diag(r) / np.abs(np.diag(r)))
        if unitary:
            blocks.append(q)
        else:
            z2 = rng.normal(size=(m, m)) + 1j * rng.normal(size=(m, m))
            q2, r2 = np.linalg.qr(z2)
            q2 = q2 * (np.diag(r2) / np.abs(np.diag(r2)))
            sv = np.exp(rng.uniform(np.log(0.5), np.log(2.0), size=m))
            blocks.append(q @ np.diag(sv) @ q2)
    t = BlockMorphism(obj, obj, blocks)
    return ConjugateDeformation(obj, t)
