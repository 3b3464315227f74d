"""Phase-tracked Pauli monomials in the GF(2) symplectic representation.

An operator on ``n`` qubits is stored as two length-``n`` bit-vectors (packed
into Python integers) plus a power of ``i``:

    P = i^phase * (prod_v X_v^{x[v]}) * (prod_v Z_v^{z[v]})

with every X factor to the left of every Z factor.  In this normal order the
single-qubit Y is ``i * X * Z``, i.e. ``x=1, z=1, phase=1``.  Multiplication
XORs the bit-vectors and pays ``(-1)`` for every Z that moves past an X:

    phase(a*b) = a.phase + b.phase + 2 * |a.z & b.x|   (mod 4)

Two monomials commute iff the symplectic form <a.x,b.z> + <a.z,b.x> vanishes
mod 2.  All operations are pure; instances are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch

PHASE_SYMBOLS = ("+", "i", "-", "-i")
PHASE_VALUES = (1, 1j, -1, -1j)


@dataclass(frozen=True, slots=True)
class PauliOperator:
    n: int
    x: int
    z: int
    phase: int  # exponent of i, in {0,1,2,3}

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("bit-vector exceeds qubit count")
        if not 0 <= self.phase < 4:
            object.__setattr__(self, "phase", self.phase % 4)

    # -- algebra -----------------------------------------------------------

    def multiply(self, other: "PauliOperator") -> "PauliOperator":
        """Normal-ordered product self * other."""
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} != {other.n} qubits")
        phase = (self.phase + other.phase + 2 * (self.z & other.x).bit_count()) % 4
        return PauliOperator(self.n, self.x ^ other.x, self.z ^ other.z, phase)

    __mul__ = multiply

    def commutes(self, other: "PauliOperator") -> bool:
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} != {other.n} qubits")
        form = (self.x & other.z).bit_count() + (self.z & other.x).bit_count()
        return form % 2 == 0

    def adjoint(self) -> "PauliOperator":
        """Conjugate transpose; equals the inverse since Paulis are unitary."""
        return PauliOperator(self.n, self.x, self.z,
                             (-self.phase + 2 * (self.x & self.z).bit_count()) % 4)

    inverse = adjoint

    def __neg__(self) -> "PauliOperator":
        return PauliOperator(self.n, self.x, self.z, (self.phase + 2) % 4)

    def times_i(self) -> "PauliOperator":
        return PauliOperator(self.n, self.x, self.z, (self.phase + 1) % 4)

    # -- queries -----------------------------------------------------------

    def support(self) -> frozenset[int]:
        return frozenset(_bits(self.x | self.z))

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0 and self.phase == 0

    def is_hermitian(self) -> bool:
        """Self-adjointness of the represented matrix.

        Per-vertex (XZ)^dagger = -XZ, so P^dagger = i^{-phase + 2|x&z|} X^x Z^z
        and hermiticity holds iff phase == |x & z| (mod 2).
        """
        return (self.phase + (self.x & self.z).bit_count()) % 2 == 0

    def phase_value(self) -> complex:
        return PHASE_VALUES[self.phase]

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        """``"<phase> <letters>"`` with W marking a phaseless XZ pair."""
        letters = []
        for v in range(self.n):
            xb, zb = (self.x >> v) & 1, (self.z >> v) & 1
            letters.append("IXZW"[xb + 2 * zb])
        return f"{PHASE_SYMBOLS[self.phase]} {''.join(letters)}"

    @classmethod
    def from_text(cls, text: str) -> "PauliOperator":
        sym, _, letters = text.strip().partition(" ")
        if sym not in PHASE_SYMBOLS:
            raise ValueError(f"bad phase symbol {sym!r}")
        phase = PHASE_SYMBOLS.index(sym)
        x = z = 0
        for v, ch in enumerate(letters.strip()):
            if ch == "I":
                continue
            if ch in ("X", "Y", "W"):
                x |= 1 << v
            if ch in ("Z", "Y", "W"):
                z |= 1 << v
            if ch == "Y":
                phase += 1  # Y = i * XZ
            if ch not in "IXYZW":
                raise ValueError(f"bad Pauli letter {ch!r}")
        return cls(len(letters.strip()), x, z, phase % 4)

    def to_json(self) -> dict:
        return {"n": self.n, "x_hex": format(self.x, "x"),
                "z_hex": format(self.z, "x"), "phase": self.phase}

    @classmethod
    def from_json(cls, data: dict) -> "PauliOperator":
        return cls(int(data["n"]), int(data["x_hex"], 16),
                   int(data["z_hex"], 16), int(data["phase"]))


def identity(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0, 0)


def single(v: int, kind: str, n: int) -> PauliOperator:
    """Weight-1 Pauli of the given kind ('X', 'Y' or 'Z') at vertex v."""
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} out of range for {n} qubits")
    bit = 1 << v
    if kind == "X":
        return PauliOperator(n, bit, 0, 0)
    if kind == "Z":
        return PauliOperator(n, 0, bit, 0)
    if kind == "Y":
        return PauliOperator(n, bit, bit, 1)
    raise ValueError(f"bad Pauli kind {kind!r}")


def from_support(n: int, vertices, kind: str) -> PauliOperator:
    """Ordered product of ``single(v, kind)`` over ``vertices``.

    Repeated vertices square away exactly (phases included).
    """
    op = identity(n)
    for v in vertices:
        op = op * single(v, kind, n)
    return op


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
