"""Digit-lattice realization of the weight summands mod xi~_r.

For a fixed level r and weight w, the quotient complex lives over W_r of a
cyclotomic target; its differentials become integer matrices on digit
coordinates, and every question the suites ask (is this class zero, are two
classes cohomologous, does the image equal the scaled subgroup, is the
cohomology p-torsion-free at working precision) becomes lattice algebra
mod p^K answered by one cached valuation-pivoted factorization per degree.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import LevelTooLow
from ..koszul import koszul_basis, koszul_sign
from ..linalg.padic import PadicSolver
from ..perfectoid.symbolic import Sym, SymbolicRing
from ..rings.cyclotomic import CyclotomicQuotient
from ..witt.digits import WittDigits
from ..witt.vectors import WittRing
from .model import DGrpModel, ModelClass


def weight_depth(p: int, weight: tuple) -> int:
    """Largest j with p^j in a weight denominator."""
    j = 0
    for w in weight:
        den = Fraction(w).denominator
        t = 0
        while den > 1:
            den //= p
            t += 1
        j = max(j, t)
    return j


def sym_depth(p: int, x: Sym) -> int:
    j = 0
    for k, _ in x:
        den = Fraction(k).denominator
        t = 0
        while den > 1:
            den //= p
            t += 1
        j = max(j, t)
    return j


class Downstairs:
    """The weight-w Koszul complex over W_r(cyclotomic target), in digits."""

    def __init__(self, model: DGrpModel, r: int, weight: tuple, level: int, precision: int):
        self.model = model
        self.r = r
        self.weight = tuple(Fraction(w) for w in weight)
        self.level = level
        self.precision = precision
        self.p = model.p
        self.sring = SymbolicRing(model.p)
        self.cyclo = CyclotomicQuotient(model.p, level, precision)
        self.wring = WittRing(self.cyclo, r, model.p)
        self.dig = WittDigits(self.wring)
        self.nd = self.dig.n_digits
        self.scalars = [
            self.sring.eval_theta_tilde(s, self.wring, r) for s in model.scalars(self.weight)
        ]
        self._diff_cache: dict[int, list[list[int]]] = {}
        self._cob_solver: dict[int, PadicSolver] = {}
        self._ker_cache: dict[int, list[list[int]]] = {}

    # -- evaluation --------------------------------------------------------------

    def eval_sym(self, x: Sym) -> tuple:
        need = self.r + sym_depth(self.p, x)
        if need > self.level:
            raise LevelTooLow(f"symbol needs level {need}, downstairs has {self.level}")
        return self.sring.eval_theta_tilde(x, self.wring, self.r)

    def digits_of(self, cls: ModelClass) -> list[int]:
        assert cls.r == self.r and tuple(Fraction(w) for w in cls.weight) == self.weight
        out: list[int] = []
        for entry in cls.vec:
            out.extend(self.dig.digits(self.eval_sym(entry)))
        return out

    # -- the quotient complex in digit coordinates --------------------------------

    def rank(self, n: int) -> int:
        return self.model.rank(n)

    def diff_matrix(self, n: int) -> list[list[int]]:
        """Digit-block matrix of the degree-n Koszul differential."""
        got = self._diff_cache.get(n)
        if got is not None:
            return got
        src = koszul_basis(self.model.d, n)
        tgt = koszul_basis(self.model.d, n + 1)
        nd = self.nd
        rows = nd * len(tgt)
        cols = nd * len(src)
        mat = [[0] * cols for _ in range(rows)]
        for b, T in enumerate(src):
            for i in range(1, self.model.d + 1):
                if i in T:
                    continue
                T2 = tuple(sorted(T + (i,)))
                a = tgt.index(T2)
                sign = koszul_sign(T, i)
                scal = self.scalars[i - 1]
                if sign < 0:
                    scal = self.wring.neg(scal)
                block = self.dig.mult_matrix(scal)
                for ii in range(nd):
                    row = mat[a * nd + ii]
                    brow = block[ii]
                    for jj in range(nd):
                        if brow[jj]:
                            row[b * nd + jj] += brow[jj]
        self._diff_cache[n] = mat
        return mat

    def relation_cols(self, blocks: int) -> list[list[int]]:
        rels = self.dig.relations()
        out = []
        nd = self.nd
        for b in range(blocks):
            for rel in rels:
                col = [0] * (nd * blocks)
                for i, v in enumerate(rel):
                    col[b * nd + i] = v
                out.append(col)
        return out

    def _solver(self, n: int) -> PadicSolver:
        """Factorization of [d^(n-1) | relations] for coboundary questions."""
        got = self._cob_solver.get(n)
        if got is None:
            nd = self.nd
            rk = self.rank(n)
            cols: list[list[int]] = []
            if n >= 1 and self.rank(n - 1):
                dm = self.diff_matrix(n - 1)
                for j in range(nd * self.rank(n - 1)):
                    cols.append([dm[i][j] for i in range(nd * rk)])
            cols.extend(self.relation_cols(rk))
            mat = [[col[i] for col in cols] for i in range(nd * rk)] if cols else [
                [] for _ in range(nd * rk)
            ]
            got = PadicSolver(mat, self.dig.p, self.dig.K)
            self._cob_solver[n] = got
        return got

    def is_zero_in_ring(self, cls: ModelClass) -> bool:
        """Zero as a cochain downstairs (not merely cohomologous to zero)."""
        return all(x % (self.p ** self.precision) == 0 for x in self.digits_of(cls))

    def is_cocycle(self, cls: ModelClass) -> bool:
        if cls.degree >= self.model.d:
            return True
        dm = self.diff_matrix(cls.degree)
        v = self.digits_of(cls)
        img = [sum(dm[i][j] * v[j] for j in range(len(v))) % self.dig.mod for i in range(len(dm))]
        solver = self._solver_zero(cls.degree + 1)
        return solver.solve(img) is not None

    def _solver_zero(self, n: int) -> PadicSolver:
        """Factorization of the relation lattice alone in degree n."""
        key = -n - 1
        got = self._cob_solver.get(key)
        if got is None:
            nd = self.nd
            rk = self.rank(n)
            cols = self.relation_cols(rk)
            mat = [[col[i] for col in cols] for i in range(nd * rk)]
            got = PadicSolver(mat, self.dig.p, self.dig.K)
            self._cob_solver[key] = got
        return got

    def cohomologous(self, a: ModelClass, b: ModelClass) -> bool:
        diff = a - b
        v = self.digits_of(diff)
        if all(x % self.dig.mod == 0 for x in v):
            return True
        solver = self._solver(a.degree)
        return solver.solve([x % self.dig.mod for x in v]) is not None

    def is_coboundary_digits(self, n: int, v: list[int]) -> bool:
        if all(x % self.dig.mod == 0 for x in v):
            return True
        return self._solver(n).solve([x % self.dig.mod for x in v]) is not None

    def kernel_gens(self, n: int) -> list[list[int]]:
        """Digit generators of the degree-n cocycles (kernel of d mod relations)."""
        got = self._ker_cache.get(n)
        if got is not None:
            return got
        nd = self.nd
        rk = self.rank(n)
        if rk == 0:
            self._ker_cache[n] = []
            return []
        if n >= self.model.d:
            gens = [[1 if i == j else 0 for i in range(nd * rk)] for j in range(nd * rk)]
            self._ker_cache[n] = gens
            return gens
        dm = self.diff_matrix(n)
        rk1 = self.rank(n + 1)
        cols = [[dm[i][j] for i in range(nd * rk1)] for j in range(nd * rk)]
        cols += self.relation_cols(rk1)
        mat = [[col[i] for col in cols] for i in range(nd * rk1)]
        solver = PadicSolver(mat, self.dig.p, self.dig.K)
        gens = []
        for g in solver.kernel_gens():
            head = [x % self.dig.mod for x in g[: nd * rk]]
            if any(head):
                gens.append(head)
        self._ker_cache[n] = gens
        return gens

    def cohomology_invariants(self, n: int) -> tuple[int, list[int]]:
        """(order exponent, cyclic invariants) of H^n = ker/im as a p-group."""
        gens = self.kernel_gens(n)
        if not gens:
            return (0, [])
        nd = self.nd
        rk = self.rank(n)
        kmat = [[g[i] for g in gens] for i in range(nd * rk)]
        ksolver = PadicSolver(kmat, self.dig.p, self.dig.K)
        rel_cols: list[list[int]] = []
        if n >= 1 and self.rank(n - 1):
            dm = self.diff_matrix(n - 1)
            for j in range(nd * self.rank(n - 1)):
                col = [dm[i][j] % self.dig.mod for i in range(nd * rk)]
                coords = ksolver.solve(col)
                if coords is None:
                    raise AssertionError("image not inside the kernel downstairs")
                rel_cols.append(coords[: len(gens)])
        for col in self.relation_cols(rk):
            coords = ksolver.solve([x % self.dig.mod for x in col])
            if coords is None:
                raise AssertionError("relation lattice not inside the kernel")
            rel_cols.append(coords[: len(gens)])
        # coefficient relations of the generating set
        for g in ksolver.kernel_gens():
            rel_cols.append([x % self.dig.mod for x in g[: len(gens)]])
        k = len(gens)
        mat = [[col[i] for col in rel_cols] for i in range(k)]
        solver = PadicSolver(mat, self.dig.p, self.dig.K)
        free, tors = solver.cokernel_invariants()
        invs = sorted([self.dig.mod] * free + tors, reverse=True)
        total = 1
        for t in invs:
            total *= t
        e = 0
        while total > 1:
            total //= self.p
            e += 1
        return (e, invs)


_downstairs_cache: dict[tuple, Downstairs] = {}


def get_downstairs(model: DGrpModel, r: int, weight: tuple, level: int, precision: int) -> Downstairs:
    key = (model, r, tuple(Fraction(w) for w in weight), level, precision)
    got = _downstairs_cache.get(key)
    if got is None:
        got = Downstairs(model, r, weight, level, precision)
        _downstairs_cache[key] = got
    return got
