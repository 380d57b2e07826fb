"""Bounded cochain complexes of finite free modules.

A FreeComplex stores the degree range, ranks and differential matrices (our
convention: d^i is a ranks[i+1] x ranks[i] matrix acting on coordinate
columns).  d o d = 0 is verified at construction.  Tensor products and cones
follow the (-1)^degree Koszul sign convention throughout; every fixture in
the test-suite depends on that choice.
"""

from __future__ import annotations

from ..errors import RingMismatch
from ..rings.base import Ring
from . import matrices as mx


class FreeComplex:
    def __init__(self, base: Ring, lo: int, ranks: list[int], diffs: list, check: bool = True):
        if len(diffs) != max(len(ranks) - 1, 0):
            raise ValueError("need one differential per adjacent degree pair")
        self.base = base
        self.lo = lo
        self.ranks = list(ranks)
        self.diffs = [[row[:] for row in d] for d in diffs]
        for i, d in enumerate(self.diffs):
            rows, cols = len(d), (len(d[0]) if d else 0)
            if cols != self.ranks[i] or (self.ranks[i + 1] and rows != self.ranks[i + 1]):
                if not (self.ranks[i + 1] == 0 and rows == 0):
                    raise ValueError(f"differential {i} has shape {rows}x{cols}")
        if check:
            for i in range(len(self.diffs) - 1):
                comp = mx.mat_mul(base, self.diffs[i + 1], self.diffs[i])
                if not mx.is_zero_matrix(base, comp):
                    raise ValueError(f"d o d != 0 between degrees {lo + i} and {lo + i + 2}")

    # -- shape -----------------------------------------------------------------

    @property
    def hi(self) -> int:
        return self.lo + len(self.ranks) - 1

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def rank(self, n: int) -> int:
        if n < self.lo or n > self.hi:
            return 0
        return self.ranks[n - self.lo]

    def diff(self, n: int):
        """d^n as a matrix rank(n+1) x rank(n)."""
        if n < self.lo or n >= self.hi:
            return mx.zero_matrix(self.base, self.rank(n + 1), self.rank(n))
        return self.diffs[n - self.lo]

    def __repr__(self):
        return f"FreeComplex({self.base!r}, degrees {self.lo}..{self.hi}, ranks {self.ranks})"

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * self.rank(n) for n in self.degrees())

    # -- constructions ------------------------------------------------------------

    @classmethod
    def from_matrix(cls, base: Ring, mat, lo: int = 0):
        """Two-term complex [R^a -> R^b] with the given matrix in degree lo."""
        cols = len(mat[0]) if mat else 0
        return cls(base, lo, [cols, len(mat)], [mat])

    @classmethod
    def zero_diff(cls, base: Ring, lo: int, ranks: list[int]):
        diffs = [
            mx.zero_matrix(base, ranks[i + 1], ranks[i]) for i in range(len(ranks) - 1)
        ]
        return cls(base, lo, ranks, diffs)

    def shift(self, k: int = 1) -> "FreeComplex":
        """C[k]: degree i of the result is degree i+k of C; odd k flips signs."""
        sign = -1 if k % 2 else 1
        diffs = [
            mx.mat_scale(self.base, self.base.from_int(sign), d) for d in self.diffs
        ]
        return FreeComplex(self.base, self.lo - k, self.ranks, diffs, check=False)

    def direct_sum(self, other: "FreeComplex") -> "FreeComplex":
        if other.base != self.base:
            raise RingMismatch("direct sum needs a common base")
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        ranks = [self.rank(n) + other.rank(n) for n in range(lo, hi + 1)]
        diffs = []
        for n in range(lo, hi):
            d = mx.zero_matrix(self.base, ranks[n + 1 - lo], ranks[n - lo])
            da, db = self.diff(n), other.diff(n)
            ra, ca = self.rank(n + 1), self.rank(n)
            for i in range(ra):
                for j in range(ca):
                    d[i][j] = da[i][j]
            for i in range(other.rank(n + 1)):
                for j in range(other.rank(n)):
                    d[ra + i][ca + j] = db[i][j]
            diffs.append(d)
        return FreeComplex(self.base, lo, ranks, diffs, check=False)

    def tensor(self, other: "FreeComplex") -> "FreeComplex":
        """Totalized tensor product with the (-1)^degree sign convention."""
        if other.base != self.base:
            raise RingMismatch("tensor needs a common base")
        base = self.base
        lo = self.lo + other.lo
        hi = self.hi + other.hi
        # block layout in total degree n: (i, j = n - i) for i ascending
        def blocks(n):
            out = []
            for i in self.degrees():
                j = n - i
                if other.lo <= j <= other.hi and self.rank(i) and other.rank(j):
                    out.append((i, j))
            return out

        ranks = []
        for n in range(lo, hi + 1):
            ranks.append(sum(self.rank(i) * other.rank(j) for i, j in blocks(n)))
        diffs = []
        for n in range(lo, hi):
            src = blocks(n)
            tgt = blocks(n + 1)
            tgt_off = {}
            off = 0
            for (i, j) in tgt:
                tgt_off[(i, j)] = off
                off += self.rank(i) * other.rank(j)
            d = mx.zero_matrix(base, ranks[n + 1 - lo], ranks[n - lo])
            src_off = 0
            for (i, j) in src:
                ri, rj = self.rank(i), other.rank(j)
                # d_C x (x) y
                if (i + 1, j) in tgt_off:
                    dm = self.diff(i)
                    ro = tgt_off[(i + 1, j)]
                    for a in range(self.rank(i + 1)):
                        for b in range(ri):
                            c = dm[a][b]
                            if not base.is_zero(c):
                                for t in range(rj):
                                    d[ro + a * rj + t][src_off + b * rj + t] = base.add(
                                        d[ro + a * rj + t][src_off + b * rj + t], c
                                    )
                # (-1)^i x (x) d_D y
                if (i, j + 1) in tgt_off:
                    dm = other.diff(j)
                    sign = base.from_int(-1 if i % 2 else 1)
                    ro = tgt_off[(i, j + 1)]
                    for a in range(other.rank(j + 1)):
                        for b in range(rj):
                            c = dm[a][b]
                            if not base.is_zero(c):
                                sc = base.mul(sign, c)
                                for t in range(ri):
                                    d[ro + t * other.rank(j + 1) + a][
                                        src_off + t * rj + b
                                    ] = base.add(
                                        d[ro + t * other.rank(j + 1) + a][src_off + t * rj + b],
                                        sc,
                                    )
                src_off += ri * rj
            diffs.append(d)
        return FreeComplex(base, lo, ranks, diffs)

    def base_change(self, hom) -> "FreeComplex":
        """Apply a RingHom (or raw payload map + target ring pair) entrywise."""
        if hasattr(hom, "apply"):
            target = hom.target
            fn = hom.apply
        else:
            target, fn = hom
        diffs = [mx.mat_map(fn, d) for d in self.diffs]
        return FreeComplex(target, self.lo, self.ranks, diffs)

    def to_json(self):
        return {
            "base": self.base.handle_json(),
            "lo": self.lo,
            "degrees": [
                {
                    "degree": self.lo + i,
                    "rank": r,
                    "d": [
                        [self.base.element_terms(x) for x in row]
                        for row in (self.diffs[i] if i < len(self.diffs) else [])
                    ],
                }
                for i, r in enumerate(self.ranks)
            ],
        }

    @classmethod
    def from_json(cls, d: dict):
        from ..rings.serialize import handle_from_json

        base = handle_from_json(d["base"])
        ranks = [deg["rank"] for deg in d["degrees"]]
        diffs = []
        for deg in d["degrees"][:-1]:
            diffs.append(
                [[base.element_from_terms(t) for t in row] for row in deg["d"]]
            )
        return cls(base, d["lo"], ranks, diffs)


class ComplexMorphism:
    """Per-degree matrices commuting with the differentials (checked)."""

    def __init__(self, source: FreeComplex, target: FreeComplex, maps: dict, check: bool = True):
        if source.base != target.base:
            raise RingMismatch("morphism needs a common base")
        self.source = source
        self.target = target
        self.maps = {n: [row[:] for row in m] for n, m in maps.items()}
        base = source.base
        if check:
            for n in range(min(source.lo, target.lo), max(source.hi, target.hi)):
                lhs = mx.mat_mul(base, target.diff(n), self.map(n))
                rhs = mx.mat_mul(base, self.map(n + 1), source.diff(n))
                if not mx.mat_eq(base, lhs, rhs):
                    raise ValueError(f"morphism does not commute with d in degree {n}")

    def map(self, n: int):
        got = self.maps.get(n)
        if got is not None:
            return got
        return mx.zero_matrix(self.source.base, self.target.rank(n), self.source.rank(n))

    @classmethod
    def identity(cls, c: FreeComplex):
        return cls(
            c, c, {n: mx.identity_matrix(c.base, c.rank(n)) for n in c.degrees()}, check=False
        )

    @classmethod
    def zero(cls, source: FreeComplex, target: FreeComplex):
        return cls(source, target, {}, check=False)


def cone(f: ComplexMorphism) -> FreeComplex:
    """Mapping cone: cone(f)^i = target^i + source^(i+1),
    d(y, x) = (d y + f x, -d x)."""
    src, tgt = f.source, f.target
    base = src.base
    lo = min(tgt.lo, src.lo - 1)
    hi = max(tgt.hi, src.hi - 1)
    ranks = [tgt.rank(n) + src.rank(n + 1) for n in range(lo, hi + 1)]
    diffs = []
    for n in range(lo, hi):
        rt, rs = tgt.rank(n), src.rank(n + 1)
        rt1, rs1 = tgt.rank(n + 1), src.rank(n + 2)
        d = mx.zero_matrix(base, rt1 + rs1, rt + rs)
        dt = tgt.diff(n)
        fm = f.map(n + 1)
        ds = src.diff(n + 1)
        for i in range(rt1):
            for j in range(rt):
                d[i][j] = dt[i][j]
            for j in range(rs):
                d[i][rt + j] = fm[i][j]
        for i in range(rs1):
            for j in range(rs):
                d[rt1 + i][rt + j] = base.neg(ds[i][j])
        diffs.append(d)
    return FreeComplex(base, lo, ranks, diffs)
