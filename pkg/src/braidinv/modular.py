"""Modular data: the unnormalized S-matrix, twists and dimensions of a ring.

The S-matrix is stored unnormalized, with ``S[0, 0] = 1`` and first row and
column equal to the quantum dimensions. Degenerate (non-modular) data is a
first-class citizen; the modularity and Verlinde checks only run in strict
mode.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, NumericalError
from .fusion import FusionRing, ValidationReport

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ModularData:
    """S-matrix, twist vector and dimension vector over a fusion ring.

    ``tol`` is the comparison tolerance used by the validators; catalog
    data is exact to machine precision, file data may want a looser knob.
    """

    ring: FusionRing
    s: np.ndarray
    theta: np.ndarray
    dims: np.ndarray
    tol: float = DEFAULT_TOL
    name: str = field(default="", compare=False)

    def __post_init__(self):
        rank = self.ring.rank
        s = np.array(self.s, dtype=np.complex128)
        theta = np.array(self.theta, dtype=np.complex128)
        dims = np.array(self.dims, dtype=np.float64)
        if s.shape != (rank, rank):
            raise InputError(f"S has shape {s.shape}, expected {(rank, rank)}")
        if theta.shape != (rank,):
            raise InputError(f"theta has shape {theta.shape}, expected ({rank},)")
        if dims.shape != (rank,):
            raise InputError(f"dims has shape {dims.shape}, expected ({rank},)")
        if self.tol <= 0:
            raise InputError("tolerance must be positive")
        for arr, key in ((s, "s"), (theta, "theta"), (dims, "dims")):
            arr.setflags(write=False)
            object.__setattr__(self, key, arr)

    @property
    def rank(self) -> int:
        return self.ring.rank

    @property
    def total_dim_sq(self) -> float:
        """Global dimension squared, ``D^2 = sum_a d(a)^2``."""
        return float(np.sum(self.dims**2))

    def with_tol(self, tol: float) -> "ModularData":
        return ModularData(self.ring, self.s, self.theta, self.dims, tol, self.name)


def _modularity_defect(md: ModularData) -> float:
    """Max-abs entry of ``S S* - D^2 I``, the unitarity defect of S/D."""
    d2 = md.total_dim_sq
    gram = md.s @ md.s.conj().T
    return float(np.max(np.abs(gram - d2 * np.eye(md.rank))))


def _verlinde_complex(md: ModularData) -> np.ndarray:
    s = md.s
    s0 = s[0]
    if np.min(np.abs(s0)) == 0.0:
        raise NumericalError("S has a zero entry in its vacuum row; Verlinde sum undefined")
    d2 = md.total_dim_sq
    return np.einsum("ax,bx,cx,x->abc", s, s, s.conj(), 1.0 / (d2 * s0))


def validate_modular_data(md: ModularData, strict: bool = False) -> ValidationReport:
    """Check the structural identities of modular data.

    Non-strict checks: first row/column of S equal to dims, symmetry of S,
    unit-modulus twists with trivial vacuum twist, and twist invariance
    under duals. Strict mode additionally requires modularity
    (``S S* = D^2 I``) and Verlinde integrality: the fusion coefficients
    reconstructed from S must be nonnegative integers.
    """
    tol = md.tol
    bad: list[str] = []
    s, theta, dims = md.s, md.theta, md.dims
    dual = md.ring.dual_map
    rank = md.rank

    if (dims <= 0).any():
        bad.append(f"dims must be strictly positive, got min {dims.min()}")
    if abs(s[0, 0] - 1.0) > tol:
        bad.append(f"vacuum entry: S[0,0] = {s[0, 0]}, expected 1")
    for a in range(rank):
        if abs(s[0, a] - dims[a]) > tol:
            bad.append(f"vacuum row: S[0,{a}] = {s[0, a]} differs from d({a}) = {dims[a]}")
        if abs(s[a, 0] - dims[a]) > tol:
            bad.append(f"vacuum column: S[{a},0] = {s[a, 0]} differs from d({a}) = {dims[a]}")
    asym = np.max(np.abs(s - s.T))
    if asym > tol:
        bad.append(f"S not symmetric: max |S - S^T| = {asym}")
    if abs(theta[0] - 1.0) > tol:
        bad.append(f"vacuum twist: theta[0] = {theta[0]}, expected 1")
    for a in range(rank):
        if abs(abs(theta[a]) - 1.0) > tol:
            bad.append(f"twist modulus: |theta[{a}]| = {abs(theta[a])}, expected 1")
        if abs(theta[dual[a]] - theta[a]) > tol:
            bad.append(
                f"dual twist: theta[dual({a})] = {theta[dual[a]]} differs from theta[{a}] = {theta[a]}"
            )

    if strict and not bad:
        d2 = md.total_dim_sq
        defect = _modularity_defect(md)
        if defect > tol * d2:
            bad.append(f"modularity: max |S S* - D^2 I| = {defect} exceeds {tol * d2}")
        else:
            nprime = _verlinde_complex(md)
            rounded = np.rint(nprime.real)
            err = float(np.max(np.abs(nprime - rounded)))
            if err > tol:
                bad.append(f"Verlinde integrality: max deviation from integers = {err}")
            elif rounded.min() < 0:
                bad.append("Verlinde integrality: reconstructed fusion has negative entries")

    return ValidationReport(tuple(bad))


def verlinde_fusion(md: ModularData) -> np.ndarray:
    """Fusion coefficients reconstructed from a modular S-matrix.

    Returns ``N'[a,b,c] = sum_x S[a,x] S[b,x] conj(S[c,x]) / (D^2 S[0,x])``
    as a real tensor. Rejects non-modular input; callers compare the result
    against the declared ring fusion.
    """
    d2 = md.total_dim_sq
    defect = _modularity_defect(md)
    if defect > md.tol * d2:
        raise InputError(
            f"S is not modular (max |S S* - D^2 I| = {defect}); Verlinde reconstruction needs "
            "an invertible S"
        )
    return _verlinde_complex(md).real
