"""Linear algebra over Z/p^K via valuation-pivoted elimination.

Z/p^K is local, so Gaussian elimination pivoting on the entry of minimal
p-valuation produces a diagonalization A = U^-1 D V^-1 with U, V invertible
mod p^K and D diagonal with p-power entries.  That single factorization
answers every question we need: solving, kernels, image membership and
cokernel invariants.  It is the workhorse behind cohomology of complexes
whose coefficients are finite Witt rings.
"""

from __future__ import annotations


def _val(x: int, p: int, K: int) -> int:
    if x == 0:
        return K
    v = 0
    while x % p == 0 and v < K:
        x //= p
        v += 1
    return v


class PadicSolver:
    """Factor an integer matrix mod p^K once; answer many linear questions."""

    def __init__(self, a: list[list[int]], p: int, K: int):
        self.p = p
        self.K = K
        self.m = p ** K
        self.nrows = len(a)
        self.ncols = len(a[0]) if self.nrows else 0
        self._factor([row[:] for row in a])

    def _factor(self, w):
        p, K, m = self.p, self.K, self.m
        n, nc = self.nrows, self.ncols
        for i in range(n):
            for j in range(nc):
                w[i][j] %= m
        u_inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # row ops applied to I
        v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]    # col ops applied to I
        diag_vals: list[int] = []
        row_perm: list[int] = []
        col_perm: list[int] = []
        used_r: set[int] = set()
        used_c: set[int] = set()
        for _ in range(min(n, nc)):
            best = None
            best_v = K
            for i in range(n):
                if i in used_r:
                    continue
                wi = w[i]
                for j in range(nc):
                    if j in used_c:
                        continue
                    x = wi[j]
                    if x:
                        vv = _val(x, p, K)
                        if vv < best_v:
                            best_v = vv
                            best = (i, j)
                            if vv == 0:
                                break
                if best_v == 0:
                    break
            if best is None:
                break
            bi, bj = best
            piv = w[bi][bj]
            vv = best_v
            unit = piv // (p ** vv)
            unit_inv = pow(unit, -1, m)
            # scale the pivot row so the pivot becomes exactly p^vv
            w[bi] = [(unit_inv * x) % m for x in w[bi]]
            u_inv[bi] = [(unit_inv * x) % m for x in u_inv[bi]]
            pv = p ** vv
            for i in range(n):
                if i == bi or i in used_r:
                    continue
                x = w[i][bj]
                if x:
                    q = x // pv  # exact: val(x) >= vv
                    wi, wb = w[i], w[bi]
                    ui, ub = u_inv[i], u_inv[bi]
                    for j in range(nc):
                        wi[j] = (wi[j] - q * wb[j]) % m
                    for j in range(n):
                        ui[j] = (ui[j] - q * ub[j]) % m
            for j in range(nc):
                if j == bj or j in used_c:
                    continue
                x = w[bi][j]
                if x:
                    q = x // pv
                    for i in range(n):
                        w[i][j] = (w[i][j] - q * w[i][bj]) % m
                    for i in range(nc):
                        v[i][j] = (v[i][j] - q * v[i][bj]) % m
            used_r.add(bi)
            used_c.add(bj)
            row_perm.append(bi)
            col_perm.append(bj)
            diag_vals.append(vv)
        self.u_inv = u_inv
        self.v = v
        self.row_perm = row_perm
        self.col_perm = col_perm
        self.diag_vals = diag_vals

    def solve(self, b: list[int]):
        """One x with A x ≡ b (mod p^K), or None."""
        p, K, m = self.p, self.K, self.m
        c = [sum(self.u_inv[i][k] * b[k] for k in range(self.nrows)) % m
             for i in range(self.nrows)]
        y = [0] * self.ncols
        pivot_rows = set(self.row_perm)
        for t, (bi, bj) in enumerate(zip(self.row_perm, self.col_perm)):
            vv = self.diag_vals[t]
            x = c[bi]
            if x % (p ** vv):
                return None
            y[bj] = (x // (p ** vv)) % m
        for i in range(self.nrows):
            if i not in pivot_rows and c[i] % m:
                return None
        return [sum(self.v[i][k] * y[k] for k in range(self.ncols)) % m
                for i in range(self.ncols)]

    def kernel_gens(self) -> list[list[int]]:
        """Generators of {x : A x ≡ 0 (mod p^K)} as vectors."""
        p, K, m = self.p, self.K, self.m
        gens = []
        pivot_cols = set(self.col_perm)
        for t, bj in enumerate(self.col_perm):
            vv = self.diag_vals[t]
            if vv > 0:
                scale = p ** (K - vv)
                gens.append([(scale * self.v[i][bj]) % m for i in range(self.ncols)])
        for j in range(self.ncols):
            if j not in pivot_cols:
                gens.append([self.v[i][j] % m for i in range(self.ncols)])
        return [g for g in gens if any(g)]

    def image_contains(self, b: list[int]) -> bool:
        return self.solve(b) is not None

    def cokernel_invariants(self) -> tuple[int, list[int]]:
        """Cokernel (Z/p^K)^nrows / im(A) as (free_count, torsion p-powers).

        free_count counts Z/p^K summands; torsion lists the remaining cyclic
        orders p^e with 0 < e < K, largest first.
        """
        K = self.K
        tors = []
        free = self.nrows - len(self.diag_vals)
        for vv in self.diag_vals:
            e = min(vv, K)
            if e == K:
                free += 1
            elif e > 0:
                tors.append(self.p ** e)
        tors.sort(reverse=True)
        return free, tors
