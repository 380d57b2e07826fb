"""Cohomology of free complexes as presented modules.

Two backends cover the supported coefficient rings:

  * Euclidean domains (Z, Z[1/m], F_p, F_p[t^(1/p^N)], the localized
    fractional domain): kernel bases and Smith invariant factors;
  * Z/m: integer lattice kernels + Howell canonical generators, invariant
    factors of the finite quotient.

Both expose kernel generators, coboundary solving, and subquotient normal
forms; everything downstream (decalage checks, Bockstein, induced maps) is
built from these primitives.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UnsupportedBase
from ..linalg import euclidean as eu
from ..linalg import howell
from ..linalg import integer_lattice as il
from ..rings.base import Ring
from ..rings.cyclotomic import CyclotomicQuotient
from ..rings.fracpoly import FracPolyDomain, LocalizedFracPoly
from ..rings.integers import IntegerRing, LocalizedIntegers
from ..rings.modular import ModularIntegers, PrimeField
from .free_complex import ComplexMorphism, FreeComplex
from .presented import PresentedModule


class EuclideanBackend:
    name = "euclidean"

    def __init__(self, ring: Ring):
        self.ring = ring

    def kernel(self, mat, ncols):
        if not mat or not mat[0]:
            return [[self.ring.one if i == j else self.ring.zero for j in range(ncols)]
                    for i in range(ncols)]
        return eu.kernel_basis_ring(mat, self.ring)

    def solve(self, mat, vec):
        if not mat or not mat[0]:
            if all(self.ring.is_zero(x) for x in vec):
                return []
            return None
        return eu.solve_columns_ring(mat, vec, self.ring)

    def quotient(self, ngens: int, relation_cols) -> PresentedModule:
        if ngens == 0:
            return PresentedModule(self.ring.descriptor(), 0)
        if not relation_cols:
            return PresentedModule(self.ring.descriptor(), ngens)
        mat = [[col[i] for col in relation_cols] for i in range(ngens)]
        facs = eu.smith_ring(mat, self.ring)
        torsion = tuple(f for f in facs if not self.ring.is_unit(f))
        return PresentedModule(self.ring.descriptor(), ngens - len(facs), torsion)


class ModularBackend:
    name = "modular"

    def __init__(self, ring: ModularIntegers):
        self.ring = ring
        self.m = ring.m

    def kernel(self, mat, ncols):
        if not mat or not mat[0]:
            gens = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
            return [[g[i] for g in gens] for i in range(ncols)]  # columns = identity
        n = len(mat)
        aug = [list(mat[i]) + [self.m if k == i else 0 for k in range(n)] for i in range(n)]
        basis = il.kernel_basis(aug)
        width = len(basis[0]) if basis and basis[0] else 0
        rows = []
        for j in range(width):
            g = [basis[i][j] % self.m for i in range(ncols)]
            if any(g):
                rows.append(g)
        canon = howell.howell_form(rows, self.m)
        # return as columns
        return [[row[i] for row in canon] for i in range(ncols)]

    def solve(self, mat, vec):
        if not mat or not mat[0]:
            if all(x % self.m == 0 for x in vec):
                return []
            return None
        n = len(mat)
        ncols = len(mat[0])
        aug = [list(mat[i]) + [self.m if k == i else 0 for k in range(n)] for i in range(n)]
        sol = il.column_lattice_solve(aug, [x % self.m for x in vec])
        if sol is None:
            return None
        return [x % self.m for x in sol[:ncols]]

    def quotient(self, ngens: int, relation_cols) -> PresentedModule:
        if ngens == 0:
            return PresentedModule(self.ring.descriptor(), 0)
        cols = [list(c) for c in relation_cols]
        cols += [[self.m if i == j else 0 for i in range(ngens)] for j in range(ngens)]
        mat = [[col[i] for col in cols] for i in range(ngens)]
        facs = il.smith_normal_form(mat)
        free = sum(1 for d in facs if d % self.m == 0)
        torsion = tuple(d for d in facs if d > 1 and d % self.m)
        return PresentedModule(self.ring.descriptor(), free, torsion)


def backend_for(ring: Ring):
    if isinstance(
        ring, (IntegerRing, LocalizedIntegers, PrimeField, FracPolyDomain, LocalizedFracPoly)
    ):
        return EuclideanBackend(ring)
    if isinstance(ring, CyclotomicQuotient) and ring.precision is None:
        raise UnsupportedBase("integral cyclotomic cohomology is not a backend")
    if isinstance(ring, ModularIntegers):
        return ModularBackend(ring)
    raise UnsupportedBase(f"no normal-form backend for {ring!r}")


def _check_cancel(cancel):
    if cancel is not None and cancel():
        raise InterruptedError("cohomology computation cancelled")


@dataclass
class CohomologyData:
    """Kernel generators plus the relation lattice presenting H^n."""

    complex: FreeComplex
    degree: int
    gens: list            # columns in C^n coordinates
    relations: list       # columns in gen-coordinates
    module: PresentedModule


def cohomology_data(C: FreeComplex, n: int, cancel=None) -> CohomologyData:
    be = backend_for(C.base)
    _check_cancel(cancel)
    dn = C.diff(n)
    rk = C.rank(n)
    ker_cols_mat = be.kernel(dn, rk)
    k = len(ker_cols_mat[0]) if ker_cols_mat and rk else 0
    gens = [[ker_cols_mat[i][j] for i in range(rk)] for j in range(k)]
    _check_cancel(cancel)
    relations = []
    dprev = C.diff(n - 1)
    if rk and dprev and dprev[0]:
        kmat = [[gens[j][i] for j in range(k)] for i in range(rk)]
        for col in range(len(dprev[0])):
            v = [dprev[i][col] for i in range(rk)]
            coords = be.solve(kmat, v)
            if coords is None:
                raise AssertionError("image is not contained in the kernel (d o d != 0?)")
            relations.append(coords)
    if be.name == "modular" and rk:
        # include the coefficient relations of the generating set itself
        kmat_int = [[gens[j][i] for j in range(k)] for i in range(rk)]
        aug = [list(kmat_int[i]) + [be.m if t == i else 0 for t in range(rk)] for i in range(rk)]
        basis = il.kernel_basis(aug)
        width = len(basis[0]) if basis and basis[0] else 0
        for j in range(width):
            g = [basis[i][j] % be.m for i in range(k)]
            if any(g):
                relations.append(g)
    _check_cancel(cancel)
    module = be.quotient(k, relations)
    return CohomologyData(C, n, gens, relations, module)


def cohomology(C: FreeComplex, n: int, cancel=None) -> PresentedModule:
    return cohomology_data(C, n, cancel).module


def cohomology_via_boundary_invariants(C: FreeComplex, n: int) -> PresentedModule:
    """Independent route over Z: free rank by rank counting, torsion from the
    invariant factors of the boundary matrix alone (valid over a PID since
    the torsion of C^n/im d^(n-1) already lies in the kernel)."""
    base = C.base
    if not isinstance(base, IntegerRing):
        raise UnsupportedBase("second route implemented over the integers")

    def _rank(mat):
        if not mat or not mat[0]:
            return 0
        return len(il.smith_normal_form(mat))

    rank_dn = _rank(C.diff(n))
    rank_dprev = _rank(C.diff(n - 1))
    free = C.rank(n) - rank_dn - rank_dprev
    facs = il.smith_normal_form(C.diff(n - 1)) if C.rank(n) else []
    torsion = tuple(d for d in facs if d > 1)
    return PresentedModule(base.descriptor(), free, torsion)


def is_coboundary(C: FreeComplex, n: int, vec, cancel=None):
    """Coordinates y with d^(n-1) y = vec, or None."""
    be = backend_for(C.base)
    _check_cancel(cancel)
    return be.solve(C.diff(n - 1), list(vec))


@dataclass
class InducedMap:
    degree: int
    matrix: list          # gen-coordinate matrix of the induced map
    kernel: PresentedModule
    cokernel: PresentedModule

    @property
    def is_isomorphism(self) -> bool:
        return self.kernel.is_zero() and self.cokernel.is_zero()


def map_on_cohomology(f: ComplexMorphism, n: int, cancel=None) -> InducedMap:
    base = f.source.base
    be = backend_for(base)
    src = cohomology_data(f.source, n, cancel)
    tgt = cohomology_data(f.target, n, cancel)
    k_src = len(src.gens)
    k_tgt = len(tgt.gens)
    fmat = f.map(n)
    tgt_rk = f.target.rank(n)
    tgt_kmat = [[tgt.gens[j][i] for j in range(k_tgt)] for i in range(tgt_rk)]
    cols = []
    for g in src.gens:
        from . import matrices as mx

        img = mx.mat_vec(base, fmat, g) if tgt_rk else []
        coords = be.solve(tgt_kmat, img) if tgt_rk else []
        if coords is None:
            # adjust by a coboundary: f(cocycle) is a cocycle, must be solvable
            raise AssertionError("image of a cocycle failed to land in the kernel")
        cols.append(coords)
    matrix = [[cols[j][i] for j in range(k_src)] for i in range(k_tgt)]
    _check_cancel(cancel)

    # kernel: {t : M t in L_tgt} / L_src
    big = []
    for j in range(k_src):
        big.append([matrix[i][j] for i in range(k_tgt)])
    lat_cols = big + [list(r) for r in tgt.relations]
    if be.name == "modular":
        lat_cols += [[be.m if i == j else 0 for i in range(k_tgt)] for j in range(k_tgt)]
    if k_tgt == 0:
        tparam = [[base.one if i == j else base.zero for j in range(k_src)] for i in range(k_src)] \
            if be.name == "euclidean" else [[1 if i == j else 0 for j in range(k_src)] for i in range(k_src)]
        tcols = [[tparam[i][j] for i in range(k_src)] for j in range(k_src)]
    else:
        mat_aug = [[col[i] for col in lat_cols] for i in range(k_tgt)]
        if be.name == "euclidean":
            kb = eu.kernel_basis_ring(mat_aug, base)
        else:
            kb = il.kernel_basis(mat_aug)
        width = len(kb[0]) if kb and kb[0] else 0
        tcols = [[kb[i][j] for i in range(k_src)] for j in range(width)]
    # kernel module = span(tcols)/span(src.relations): present via coordinates
    kernel = _subquotient(be, k_src, tcols, src.relations)
    coker_rels = [list(c) for c in big] + [list(r) for r in tgt.relations]
    cokernel = be.quotient(k_tgt, coker_rels)
    return InducedMap(n, matrix, kernel, cokernel)


def _subquotient(be, dim: int, big_cols, small_cols) -> PresentedModule:
    """Invariants of span(big)/span(small) inside R^dim (small contained in
    big; big need not be independent, its coefficient relations are added)."""
    if not big_cols or dim == 0:
        return PresentedModule(be.ring.descriptor(), 0)
    mat = [[col[i] for col in big_cols] for i in range(dim)]
    rel = []
    for col in small_cols:
        coords = be.solve(mat, list(col))
        if coords is None:
            raise AssertionError("small lattice not contained in big lattice")
        rel.append(coords)
    k = len(big_cols)
    if be.name == "modular":
        aug = [list(mat[i]) + [be.m if t == i else 0 for t in range(dim)] for i in range(dim)]
        basis = il.kernel_basis(aug)
        width = len(basis[0]) if basis and basis[0] else 0
        for j in range(width):
            g = [basis[i][j] % be.m for i in range(k)]
            if any(g):
                rel.append(g)
    else:
        kb = eu.kernel_basis_ring(mat, be.ring)
        width = len(kb[0]) if kb and kb[0] else 0
        for j in range(width):
            rel.append([kb[i][j] for i in range(k)])
    return be.quotient(len(big_cols), rel)
