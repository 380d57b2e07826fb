"""Additive digit coordinates for Witt rings of finite coefficient rings.

For A with additive group (Z/p^M)^phi (a cyclotomic quotient mod p^M, or
Z/p^M itself), W_r(A) is generated as an abelian group by the elements
g_{i,e} = V^i([x^e]); each w has canonical digits in [0, p^M)^(r*phi), and
the assignment u -> sum u_j g_j is a group homomorphism from Z^(r*phi).
Consequently multiplication by any fixed ring element becomes an integer
matrix on digit coordinates, and cohomology questions over W_r(A) reduce to
lattice algebra mod p^K (K chosen beyond the group exponent).

All digit extraction runs on the ghost side of the torsion-free cover, where
it is linear, so building the matrices stays cheap.
"""

from __future__ import annotations

from ..errors import NotDivisible, UnsupportedBase
from ..linalg.padic import PadicSolver
from ..rings.cyclotomic import CyclotomicQuotient
from ..rings.modular import ModularIntegers, PrimeField
from .vectors import WittRing, ghost_solve


class WittDigits:
    def __init__(self, wring: WittRing):
        base = wring.base
        self.wring = wring
        self.p = wring.p
        self.r = wring.s
        if isinstance(base, CyclotomicQuotient) and base.precision is not None:
            self.M = base.precision
            self.phi = base.degree
            self._is_cyclo = True
            self.cover = CyclotomicQuotient(base.p, base.level, None)
            self._lift = base.balanced_lift
            self._red = lambda a: tuple(base._red(c) for c in a)
        elif isinstance(base, ModularIntegers) and not isinstance(base, PrimeField):
            m = base.m
            M = 0
            while m % wring.p == 0:
                m //= wring.p
                M += 1
            if m != 1:
                raise UnsupportedBase("digit coordinates need a p-power modulus")
            self.M = M
            self.phi = 1
            self._is_cyclo = False
            from ..rings.integers import IntegerRing

            self.cover = IntegerRing()
            half = base.m // 2
            self._lift = lambda a: a - base.m if a > half else a
            self._red = lambda a: a % base.m
        else:
            raise UnsupportedBase(f"no digit coordinates for {base!r}")
        self.n_digits = self.r * self.phi
        self.K = self.M * self.r + 1
        self.mod = self.p ** self.K
        # ghost vectors of the generators V^i([x^e]) over the cover:
        # gh_k(V^i[x^e]) = p^i * x^(e*p^(k-i)) for k >= i, else 0
        self._gen_ghosts = []
        for i in range(self.r):
            for e in range(self.phi):
                gh = []
                for k in range(self.r):
                    if k < i:
                        gh.append(self.cover.zero)
                    else:
                        gh.append(
                            self.cover.mul(
                                self.cover.from_int(self.p ** i),
                                self._cover_monomial(e * self.p ** (k - i)),
                            )
                        )
                self._gen_ghosts.append(gh)
        self._relations: list[list[int]] | None = None
        self._mult_cache: dict = {}

    def _cover_monomial(self, e: int):
        if not self._is_cyclo:
            return self.cover.one
        return self.cover._monomial(e)

    # -- digit extraction -------------------------------------------------------

    def ghost_of(self, w) -> list:
        lifted = [self._lift(c) for c in w]
        from .vectors import ghost_over

        return ghost_over(self.cover, self.p, lifted)

    def digits_from_ghost(self, gh: list) -> list[int]:
        cover = self.cover
        p, M = self.p, self.M
        modM = p ** M
        gh = list(gh)
        digits: list[int] = []
        for i in range(self.r):
            comp = cover.div_int(gh[i], p ** i)
            coords = [c % modM for c in self._coords_cover(comp)]
            digits.extend(coords)
            for k in range(i, self.r):
                sub = cover.zero
                for e, c in enumerate(coords):
                    if c:
                        sub = cover.add(
                            sub,
                            cover.mul(
                                cover.from_int(c * p ** i),
                                self._cover_monomial(e * p ** (k - i)),
                            ),
                        )
                gh[k] = cover.sub(gh[k], sub)
        return digits

    def _coords_cover(self, a):
        if not self._is_cyclo:
            return [a]
        return list(a)

    def digits(self, w) -> list[int]:
        return self.digits_from_ghost(self.ghost_of(w))

    def from_digits(self, u: list[int]):
        cover = self.cover
        gh = [cover.zero] * self.r
        for j, c in enumerate(u):
            if c:
                gj = self._gen_ghosts[j]
                for k in range(self.r):
                    gh[k] = cover.add(gh[k], cover.mul(cover.from_int(c), gj[k]))
        comps = ghost_solve(cover, self.p, gh)
        return tuple(self._red_comp(c) for c in comps)

    def _red_comp(self, c):
        return self._red(c)

    # -- relation lattice and multiplication matrices ------------------------------

    def relations(self) -> list[list[int]]:
        """Columns generating ker(Z^n -> W_r(A)) modulo p^K."""
        if self._relations is None:
            rels = []
            modM = self.p ** self.M
            for j in range(self.n_digits):
                gj = self._gen_ghosts[j]
                gh = [self.cover.mul(self.cover.from_int(modM), x) for x in gj]
                d = self.digits_from_ghost(gh)
                col = [-x % self.mod for x in d]
                col[j] = (col[j] + modM) % self.mod
                rels.append(col)
            self._relations = rels
        return self._relations

    def mult_matrix(self, c) -> list[list[int]]:
        """Digit matrix of w -> c*w (columns = digits of c * g_j)."""
        key = tuple(c) if isinstance(c, tuple) else c
        got = self._mult_cache.get(key)
        if got is not None:
            return got
        cover = self.cover
        gh_c = self.ghost_of(c)
        cols = []
        for j in range(self.n_digits):
            gj = self._gen_ghosts[j]
            gh = [cover.mul(x, y) for x, y in zip(gh_c, gj)]
            cols.append(self.digits_from_ghost(gh))
        mat = [[cols[j][i] for j in range(self.n_digits)] for i in range(self.n_digits)]
        self._mult_cache[key] = mat
        return mat


_digits_cache: dict[tuple, WittDigits] = {}


def get_digits(wring: WittRing) -> WittDigits:
    key = wring.descriptor()
    got = _digits_cache.get(key)
    if got is None:
        got = WittDigits(wring)
        _digits_cache[key] = got
    return got


def witt_divide_finite(wring: WittRing, a, b):
    """Division witness in W_r(A) for finite A via the digit lattice."""
    dig = get_digits(wring)
    mat = dig.mult_matrix(b)
    rels = dig.relations()
    cols = [[mat[i][j] for i in range(dig.n_digits)] for j in range(dig.n_digits)]
    aug = [[0] * (dig.n_digits + len(rels)) for _ in range(dig.n_digits)]
    for j, col in enumerate(cols):
        for i in range(dig.n_digits):
            aug[i][j] = col[i]
    for j, col in enumerate(rels):
        for i in range(dig.n_digits):
            aug[i][dig.n_digits + j] = col[i]
    solver = PadicSolver(aug, dig.p, dig.K)
    target = dig.digits(a)
    sol = solver.solve(target)
    if sol is None:
        raise NotDivisible("no Witt quotient over the finite base")
    q = dig.from_digits([x % dig.mod for x in sol[: dig.n_digits]])
    return q
