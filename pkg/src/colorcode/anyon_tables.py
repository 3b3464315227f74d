"""Published fusion and monodromy tables for the sixteen color-code anyons.

Label order everywhere: 1, rx, ry, rz, gx, gy, gz, bx, by, bz, f1..f6.
These are frozen reference values; the category module re-derives both
tables from the quantum-double data and the lattice measurements must
reproduce them entrywise.
"""

LABEL_ORDER = ("1", "rx", "ry", "rz", "gx", "gy", "gz",
               "bx", "by", "bz", "f1", "f2", "f3", "f4", "f5", "f6")

_FUSION_ROWS = """
1  rx ry rz gx gy gz bx by bz f1 f2 f3 f4 f5 f6
rx 1  rz ry bx f5 f6 gx f4 f1 bz f3 f2 by gy gz
ry rz 1  rx f2 by f1 f3 gy f6 gz gx bx f5 f4 bz
rz ry rx 1  f3 f4 bz f2 f5 gz f6 bx gx gy by f1
gx bx f2 f3 1  gz gy rx f1 f4 by ry rz bz f6 f5
gy f5 by f4 gz 1  gx f6 ry f3 f2 f1 bz rz rx bx
gz f6 f1 bz gy gx 1  f5 f2 rz ry by f4 f3 bx rx
bx gx f3 f2 rx f6 f5 1  bz by f4 rz ry f1 gz gy
by f4 gy f5 f1 ry f2 bz 1  bx gx gz f6 rx rz f3
bz f1 f6 gz f4 f3 rz by bx 1  rx f5 gy gx f2 ry
f1 bz gz f6 by f2 ry f4 gx rx 1  gy f5 bx f3 rz
f2 f3 gx bx ry f1 by rz gz f5 gy 1  rx f6 bz f4
f3 f2 bx gx rz bz f4 ry f6 gy f5 rx 1  gz f1 by
f4 by f5 gy bz rz f3 f1 rx gx bx f6 gz 1  ry f2
f5 gy f4 by f6 rx bx gz rz f2 f3 bz f1 ry 1  gx
f6 gz bz f1 f5 bx rx gy f3 ry rz f4 by f2 gx 1
"""

_MONODROMY_ROWS = """
+1 +1 +1 +1 +1 +1 +1 +1 +1 +1 +1 +1 +1 +1 +1 +1
+1 +1 +1 +1 +1 -1 -1 +1 -1 -1 -1 +1 +1 -1 -1 -1
+1 +1 +1 +1 -1 +1 -1 -1 +1 -1 -1 -1 -1 +1 +1 -1
+1 +1 +1 +1 -1 -1 +1 -1 -1 +1 +1 -1 -1 -1 -1 +1
+1 +1 -1 -1 +1 +1 +1 +1 -1 -1 -1 -1 -1 -1 +1 +1
+1 -1 +1 -1 +1 +1 +1 -1 +1 -1 +1 +1 -1 -1 -1 -1
+1 -1 -1 +1 +1 +1 +1 -1 -1 +1 -1 -1 +1 +1 -1 -1
+1 +1 -1 -1 +1 -1 -1 +1 +1 +1 +1 -1 -1 +1 -1 -1
+1 -1 +1 -1 -1 +1 -1 +1 +1 +1 -1 -1 +1 -1 -1 +1
+1 -1 -1 +1 -1 -1 +1 +1 +1 +1 -1 +1 -1 -1 +1 -1
+1 -1 -1 +1 -1 +1 -1 +1 -1 -1 +1 +1 -1 +1 -1 +1
+1 +1 -1 -1 -1 +1 -1 -1 -1 +1 +1 +1 +1 -1 +1 -1
+1 +1 -1 -1 -1 -1 +1 -1 +1 -1 -1 +1 +1 +1 -1 +1
+1 -1 +1 -1 -1 -1 +1 +1 -1 -1 +1 -1 +1 +1 +1 -1
+1 -1 +1 -1 +1 -1 -1 -1 -1 +1 -1 +1 -1 +1 +1 +1
+1 -1 -1 +1 +1 -1 -1 -1 +1 -1 +1 -1 +1 -1 +1 +1
"""

# spins: +1 for the vacuum and the nine colored bosons, -1 for the fermions
TWISTS = {label: (-1 if label.startswith("f") and label != "1" else 1)
          for label in LABEL_ORDER}

FUSION: dict[tuple[str, str], str] = {}
for _r, _line in enumerate(_FUSION_ROWS.split("\n")[1:-1]):
    for _c, _cell in enumerate(_line.split()):
        FUSION[(LABEL_ORDER[_r], LABEL_ORDER[_c])] = _cell

MONODROMY: dict[tuple[str, str], int] = {}
for _r, _line in enumerate(_MONODROMY_ROWS.split("\n")[1:-1]):
    for _c, _cell in enumerate(_line.split()):
        MONODROMY[(LABEL_ORDER[_r], LABEL_ORDER[_c])] = int(_cell)
