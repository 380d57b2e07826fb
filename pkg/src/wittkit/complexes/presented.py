"""Finitely presented modules in canonical normal form.

Over Euclidean domains the normal form is (free rank, invariant factors as
canonical associates); over Z/m it is the list of cyclic orders (factors
equal to m count as free summands).  Normal forms are literal data, so
isomorphism testing is `==`.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PresentedModule:
    base: tuple                 # ring descriptor
    free_rank: int
    torsion: tuple = field(default_factory=tuple)  # canonical factors, divisibility order

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def describe(self, ring=None) -> str:
        parts = []
        if self.free_rank:
            parts.append(f"free^{self.free_rank}")
        for t in self.torsion:
            if ring is not None and not isinstance(t, int):
                parts.append(f"quot({ring.element_str(t)})")
            else:
                parts.append(f"quot({t})")
        return " + ".join(parts) if parts else "0"

    def to_json(self, ring=None) -> dict:
        tors = []
        for t in self.torsion:
            if isinstance(t, int):
                tors.append(str(t))
            elif ring is not None:
                tors.append(ring.element_str(t))
            else:
                tors.append(repr(t))
        return {"free_rank": self.free_rank, "torsion": tors}
