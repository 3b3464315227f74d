"""Color code at desk scale.

Colored brick-wall lattices, phase-tracked GF(2) Pauli algebra, face
stabilizers and the ground-state functional, colored string operators,
anyon sector detection with fusion/braiding measurements, and an
independent implementation of the Rep(D(Z2 x Z2)) modular data to check
the lattice against.
"""

from .errors import (ColorCodeError, ColorMismatch, DimensionMismatch,
                     GeometryUnrealizable, InvalidLattice, NoPath,
                     NotEnclosable, SizeConstraintViolation, TooLarge,
                     UnrealizableSignature)
from .lattice import (Color, ColoredLattice, Region, build_planar, build_torus,
                      build_torus_relaxed, disk_region, micro_torus, validate)
from .pauli import PauliOperator, from_support, identity, single
from .stabilizer import Member, StabilizerGroup, Syndrome, face_stabilizers
from .strings import (ColorString, deformation_witness, expand_face_path,
                      find_string, hex_ring, string_operator, vertical_string,
                      winding_loop)
from .sectors import (ALL_LABELS, DetectorSignature, Detectors, SectorLabel,
                      braiding_sign, classify, detector_signature,
                      fermion_equivalence_check, fuse_measure, monodromy_measure)
from .oracle import DenseOracle, dense_operator

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
