"""Cyclotomic quotients (Z/p^M)[x]/Phi_{p^n}(x) and their integral form.

Payload: tuple of phi(p^n) coefficients (ints; reduced mod p^M when the
precision M is finite, arbitrary otherwise).  zeta_{p^j} := x^(p^(n-j)).

Precision ledger: the ring itself never divides by p silently; callers that
do (ghost solving, suite code) reduce to a lower-precision handle via
`reduce_precision` so the loss is explicit.
"""

from __future__ import annotations

from ..errors import NotDivisible, PrecisionExhausted
from ..linalg.integer_lattice import column_lattice_solve
from ..linalg.padic import PadicSolver
from .base import Ring


class CyclotomicQuotient(Ring):
    kind = "CyclotomicQuotient"

    def __init__(self, p: int, level: int, precision: int | None):
        if level < 1:
            raise ValueError("level must be >= 1")
        self.p = p
        self.level = level
        self.precision = precision  # None = integral coefficients
        self.e = p ** (level - 1)
        self.degree = self.e * (p - 1)  # phi(p^level)
        self.zero = (0,) * self.degree
        one = [0] * self.degree
        one[0] = 1
        self.one = tuple(one)
        self._solver_cache: dict[tuple, PadicSolver] = {}

    def descriptor(self):
        return ("CyclotomicQuotient", self.p, self.level, self.precision)

    def characteristic(self):
        return None if self.precision is None else self.p ** self.precision

    def _red(self, c: int) -> int:
        return c if self.precision is None else c % (self.p ** self.precision)

    def from_int(self, n):
        out = [0] * self.degree
        out[0] = self._red(int(n))
        return tuple(out)

    def zeta(self, j: int | None = None):
        """zeta_{p^j} as a payload (default: the top-level root)."""
        if j is None:
            j = self.level
        if j < 0 or j > self.level:
            raise ValueError(f"no zeta_{self.p}^{j} at level {self.level}")
        if j == 0:
            return self.one
        return self._monomial(self.p ** (self.level - j))

    def _monomial(self, k: int):
        out = [0] * (k + 1)
        out[k] = 1
        return self._reduce(out)

    def _reduce(self, coeffs: list[int]):
        # x^degree = -(1 + x^e + x^{2e} + ... + x^{(p-2)e})
        d = self.degree
        work = list(coeffs)
        for k in range(len(work) - 1, d - 1, -1):
            c = work[k]
            if c:
                work[k] = 0
                base = k - d
                for i in range(self.p - 1):
                    work[base + i * self.e] -= c
        work = work[:d] + [0] * (d - len(work))
        return tuple(self._red(c) for c in work[:d])

    def add(self, a, b):
        return tuple(self._red(x + y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self._red(-x) for x in a)

    def mul(self, a, b):
        out = [0] * (2 * self.degree)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self._reduce(out)

    def _mult_matrix(self, b):
        cols = []
        for i in range(self.degree):
            basis = [0] * self.degree
            basis[i] = 1
            cols.append(self.mul(tuple(basis), b))
        return [[cols[j][i] for j in range(self.degree)] for i in range(self.degree)]

    def balanced_lift(self, a) -> tuple:
        """Coefficients lifted to the symmetric range (-p^M/2, p^M/2]."""
        if self.precision is None:
            return a
        mod = self.p ** self.precision
        half = mod // 2
        return tuple(c - mod if c > half else c for c in a)

    def divide_exact(self, a, b):
        """Canonical witness: the exact integral quotient of the balanced
        lifts when it exists, else the deterministic local solve mod p^M."""
        if self.is_zero(b):
            raise NotDivisible("division by zero")
        if self.precision is None:
            mat = self._mult_matrix(b)
            sol = column_lattice_solve(mat, list(a))
            if sol is None:
                raise NotDivisible("no integral quotient")
            return tuple(sol)
        lift_ring = CyclotomicQuotient(self.p, self.level, None)
        la, lb = self.balanced_lift(a), self.balanced_lift(b)
        sol = column_lattice_solve(lift_ring._mult_matrix(lb), list(la))
        if sol is not None:
            return tuple(self._red(c) for c in sol)
        mat = self._mult_matrix(b)
        key = ("div", b)
        solver = self._solver_cache.get(key)
        if solver is None:
            solver = PadicSolver(mat, self.p, self.precision)
            self._solver_cache[key] = solver
        sol = solver.solve(list(a))
        if sol is None:
            raise NotDivisible("no quotient at this precision")
        return tuple(sol)

    def div_int(self, a, k):
        if self.precision is not None:
            raise NotDivisible("integer division needs the integral model")
        out = []
        for c in a:
            q, r = divmod(c, k)
            if r:
                raise NotDivisible(f"{k} does not divide coefficient {c}")
            out.append(q)
        return tuple(out)

    def is_unit(self, a):
        try:
            self.inv(a)
            return True
        except NotDivisible:
            return False

    def inv(self, a):
        return self.divide_exact(self.one, a)

    def frobenius(self, a):
        # only an endomorphism modulo p; exposed for residue computations
        if self.precision != 1:
            raise PrecisionExhausted("cyclotomic Frobenius is only defined mod p")
        out = [0] * (self.degree * self.p)
        for i, c in enumerate(a):
            out[i * self.p] = c
        return self._reduce(out)

    def reduce_precision(self, target: "CyclotomicQuotient", a):
        if self.precision is not None and (
            target.precision is None or target.precision > self.precision
        ):
            raise PrecisionExhausted("cannot gain precision")
        if target.level != self.level or target.p != self.p:
            raise ValueError("level mismatch")
        return tuple(target._red(c) for c in a)

    def handle_json(self):
        return {
            "kind": "CyclotomicQuotient",
            "p": self.p,
            "level": self.level,
            "precision": self.precision,
        }

    def element_terms(self, a):
        return [
            {"exp": str(i), "coeff": str(c)} for i, c in enumerate(a) if c
        ] or [{"exp": "0", "coeff": "0"}]

    def element_from_terms(self, terms):
        out = [0] * self.degree
        for t in terms:
            out[int(t["exp"])] = self._red(int(t["coeff"]))
        return self._reduce(out)

    def random_element(self, rng, size: int = 4):
        if self.precision is None:
            return tuple(rng.randint(-(2 ** size), 2 ** size) for _ in range(self.degree))
        mod = self.p ** self.precision
        return tuple(rng.randrange(mod) for _ in range(self.degree))
