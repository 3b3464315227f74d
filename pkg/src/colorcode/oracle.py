"""Dense-matrix ground truth for small lattices (qubit cap 14).

Pauli monomials act on computational basis states as signed permutations, so
every dense object here is a pair (perm, coef) with ``A|s> = coef[s]
|perm[s]>`` built from the literal 2x2 matrices.  Group closure, projector
traces and ground-state expectations are then exact integer arithmetic,
fully independent of the GF(2) echelon path they certify.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import TooLarge
from .pauli import PauliOperator
from .stabilizer import StabilizerGroup

QUBIT_CAP = 14


@dataclass(frozen=True)
class DenseOperator:
    n: int
    perm: np.ndarray   # int64, basis-state image
    coef: np.ndarray   # complex128, entries in {+-1, +-i}

    def compose(self, other: "DenseOperator") -> "DenseOperator":
        """Matrix product self @ other."""
        if self.n != other.n:
            raise ValueError("qubit mismatch")
        return DenseOperator(self.n, self.perm[other.perm],
                             other.coef * self.coef[other.perm])

    __matmul__ = compose

    def trace(self) -> complex:
        fixed = self.perm == np.arange(self.perm.size)
        return complex(self.coef[fixed].sum())

    def key(self) -> bytes:
        # integer-cast the coefficients: IEEE signed zeros must not split keys
        re = self.coef.real.astype(np.int8)
        im = self.coef.imag.astype(np.int8)
        return self.perm.tobytes() + re.tobytes() + im.tobytes()

    def to_matrix(self) -> np.ndarray:
        if self.n > 10:
            raise TooLarge("matrix form capped at 10 qubits")
        dim = 1 << self.n
        m = np.zeros((dim, dim), dtype=complex)
        m[self.perm, np.arange(dim)] = self.coef
        return m

    def apply(self, vec: np.ndarray) -> np.ndarray:
        out = np.zeros_like(vec)
        out[self.perm] = self.coef * vec
        return out


def dense_identity(n: int) -> DenseOperator:
    _check_cap(n)
    dim = 1 << n
    return DenseOperator(n, np.arange(dim, dtype=np.int64),
                         np.ones(dim, dtype=complex))


def dense_single(v: int, kind: str, n: int) -> DenseOperator:
    """Single-qubit Pauli from its literal matrix entries."""
    _check_cap(n)
    dim = 1 << n
    states = np.arange(dim, dtype=np.int64)
    bit = (states >> v) & 1
    if kind == "X":
        return DenseOperator(n, states ^ (1 << v), np.ones(dim, dtype=complex))
    if kind == "Z":
        return DenseOperator(n, states, np.where(bit, -1.0 + 0j, 1.0 + 0j))
    if kind == "Y":
        return DenseOperator(n, states ^ (1 << v), np.where(bit, -1j, 1j))
    raise ValueError(f"bad Pauli kind {kind!r}")


def dense_operator(p: PauliOperator) -> DenseOperator:
    """Densify i^phase * prod X * prod Z, exactly as represented."""
    _check_cap(p.n)
    op = dense_identity(p.n)
    op = DenseOperator(p.n, op.perm, op.coef * (1j ** p.phase))
    for v in range(p.n):
        if (p.x >> v) & 1:
            op = op @ dense_single(v, "X", p.n)
    for v in range(p.n):
        if (p.z >> v) & 1:
            op = op @ dense_single(v, "Z", p.n)
    return op


def _check_cap(n: int) -> None:
    if n > QUBIT_CAP:
        raise TooLarge(f"{n} qubits exceeds the dense cap of {QUBIT_CAP}")


class DenseOracle:
    """Dense ground-space data for a stabilizer group on <= 14 qubits."""

    def __init__(self, group: StabilizerGroup):
        _check_cap(group.n)
        self.group = group
        self.n = group.n
        gens = [dense_operator(g) for g in group.generators]
        self.members = _closure(dense_identity(self.n), gens)

    # -- ground projector -------------------------------------------------

    def dimension(self) -> int:
        """tr of the ground projector prod (1+K)/2 (1+J)/2, exactly."""
        total = sum(m.trace() for m in self.members)
        if total.imag or total.real != int(total.real):
            raise ArithmeticError("projector trace is not an integer")
        value = Fraction(int(total.real), len(self.members))
        if value.denominator != 1:
            raise ArithmeticError("projector trace is not an integer")
        return int(value)

    def omega0(self, p: PauliOperator) -> complex:
        """Ground-space average tr(P_gs p)/tr(P_gs); the unique symmetric value."""
        dense_p = dense_operator(p)
        total = sum((m @ dense_p).trace() for m in self.members)
        if total.real != int(total.real) or total.imag != int(total.imag):
            raise ArithmeticError("non-integer trace sum")
        denom = len(self.members) * self.dimension()
        re = Fraction(int(total.real), denom)
        im = Fraction(int(total.imag), denom)
        return complex(re) if im == 0 else complex(re) + 1j * complex(im)

    # -- fixed pure ground state ------------------------------------------

    def ground_vector(self) -> np.ndarray:
        """Unnormalized projection of a fixed basis state (|0...0>)."""
        dim = 1 << self.n
        vec = np.zeros(dim, dtype=complex)
        for m in self.members:
            vec[m.perm[0]] += m.coef[0]
        if not vec.any():
            raise ArithmeticError("|0...0> projects to zero; pick another seed")
        return vec

    def omega0_pure(self, p: PauliOperator) -> complex:
        """<Omega| p |Omega> for the fixed pure ground state."""
        vec = self.ground_vector()
        num = np.vdot(vec, dense_operator(p).apply(vec))
        den = np.vdot(vec, vec).real
        re = Fraction(int(round(num.real)), int(round(den)))
        im = Fraction(int(round(num.imag)), int(round(den)))
        return complex(re) + 1j * complex(im) if im else complex(re)

    def is_logical(self, p: PauliOperator) -> bool:
        """Empty syndrome but outside the group: pure-state values may differ."""
        return (self.group.membership(p) is None
                and self.group.syndrome(p).is_empty())


def _closure(ident: DenseOperator, gens: list[DenseOperator]) -> list[DenseOperator]:
    seen = {ident.key(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = m @ g
                k = prod.key()
                if k not in seen:
                    seen[k] = prod
                    nxt.append(prod)
        frontier = nxt
    return list(seen.values())
