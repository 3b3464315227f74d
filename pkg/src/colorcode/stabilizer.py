"""Stabilizer group of a colored lattice: K_f (X-type) and J_f (Z-type).

The group is stored as a row-reduced GF(2) echelon over the 2n symplectic
coordinates, with a generator-combination bitmask per row so membership
queries can reconstruct the exact signed generator product.  ``omega0`` is
the ground-state functional: zero on monomials outside the group, otherwise
the sign relating the monomial to the reconstructed product (i is allowed,
since omega0 is linear and total on the monomial basis).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DimensionMismatch, InvalidLattice
from .lattice import ColoredLattice, validate
from .pauli import PauliOperator, from_support, identity


@dataclass(frozen=True, slots=True)
class Member:
    """Witness that an operator lies in the stabilizer group.

    ``sign`` relates the operator to the product of ``generators`` taken in
    ascending index order: ``op == sign * product``.
    """
    sign: complex
    generators: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Syndrome:
    """Faces whose stabilizers anticommute with a probed operator."""
    violated: dict[int, tuple[bool, bool]]  # face -> (violates_K, violates_J)

    def faces(self) -> frozenset[int]:
        return frozenset(self.violated)

    def is_empty(self) -> bool:
        return not self.violated


class StabilizerGroup:
    def __init__(self, lattice: ColoredLattice, generators: list[PauliOperator],
                 names: list[tuple[str, int]]):
        self.lattice = lattice
        self.n = lattice.n_qubits
        self.generators = tuple(generators)
        self.generator_names = tuple(names)
        # echelon rows keyed by pivot (leading bit) over 2n symplectic
        # coordinates; each row carries its generator-combination bitmask
        self._pivot_rows: dict[int, tuple[int, int]] = {}
        self.relation_combos: list[int] = []
        for idx, g in enumerate(self.generators):
            vec, combo = self._reduce(_sympvec(g), 1 << idx)
            if vec:
                self._pivot_rows[vec.bit_length() - 1] = (vec, combo)
            else:
                self.relation_combos.append(combo)
        self.rank = len(self._pivot_rows)

    def _reduce(self, vec: int, combo: int) -> tuple[int, int]:
        while vec:
            row = self._pivot_rows.get(vec.bit_length() - 1)
            if row is None:
                break
            vec ^= row[0]
            combo ^= row[1]
        return vec, combo

    def combination_product(self, combo: int) -> PauliOperator:
        """Product of generators selected by ``combo``, ascending index order."""
        op = identity(self.n)
        idx = 0
        while combo:
            if combo & 1:
                op = op * self.generators[idx]
            combo >>= 1
            idx += 1
        return op

    def membership(self, p: PauliOperator) -> Optional[Member]:
        """None if p is outside the group; otherwise the signed witness."""
        if p.n != self.n:
            raise DimensionMismatch(f"{p.n} != {self.n} qubits")
        vec, combo = self._reduce(_sympvec(p), 0)
        if vec:
            return None
        prod = self.combination_product(combo)
        sign = 1j ** ((p.phase - prod.phase) % 4)
        return Member(sign, tuple(_combo_indices(combo)))

    def omega0(self, p: PauliOperator) -> complex:
        """Ground-state expectation of a Pauli monomial: 0, +-1 or +-i."""
        m = self.membership(p)
        return 0 if m is None else m.sign

    def syndrome(self, p: PauliOperator) -> Syndrome:
        if p.n != self.n:
            raise DimensionMismatch(f"{p.n} != {self.n} qubits")
        violated = {}
        half = len(self.generators) // 2
        for fid in range(half):
            k_bad = not self.generators[fid].commutes(p)
            j_bad = not self.generators[half + fid].commutes(p)
            if k_bad or j_bad:
                violated[fid] = (k_bad, j_bad)
        return Syndrome(violated)

    def ground_space_dim(self) -> int:
        return 2 ** (self.n - self.rank)

    def minimize_combo(self, combo: int) -> int:
        """Smallest equivalent generator combination modulo group relations.

        Relations (color-class products of all K or all J being equal) make
        membership combinations non-unique; choose the lexicographically
        canonical minimal-weight representative.
        """
        best = combo
        for sub in range(1 << len(self.relation_combos)):
            c = combo
            for i, rel in enumerate(self.relation_combos):
                if (sub >> i) & 1:
                    c ^= rel
            if (c.bit_count(), c) < (best.bit_count(), best):
                best = c
        return best


def face_stabilizers(lattice: ColoredLattice) -> StabilizerGroup:
    """One K (X-tensor) and one J (Z-tensor) per 6-vertex face.

    Generator order: all K_f in face order, then all J_f in face order.
    """
    report = validate(lattice)
    if not report.ok():
        raise InvalidLattice(str(report))
    n = lattice.n_qubits
    gens: list[PauliOperator] = []
    names: list[tuple[str, int]] = []
    for f in lattice.faces:
        gens.append(from_support(n, sorted(set(f.vertices)), "X"))
        names.append(("K", f.id))
    for f in lattice.faces:
        gens.append(from_support(n, sorted(set(f.vertices)), "Z"))
        names.append(("J", f.id))
    return StabilizerGroup(lattice, gens, names)


def _sympvec(p: PauliOperator) -> int:
    return p.x | (p.z << p.n)


def _combo_indices(combo: int):
    idx = 0
    while combo:
        if combo & 1:
            yield idx
        combo >>= 1
        idx += 1
