"""Symmetry classes of (a,b)_e, cyclotomic matrices and their exact invariants."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import mpmath
import sympy

from .sums import CyclotomyContext


class NonConvergence(ArithmeticError):
    pass


# -- orbit tables --------------------------------------------------------------

def _moves(e: int, k_odd: bool, a: int, b: int):
    yield (-a) % e, (b - a) % e
    if k_odd:
        h = e // 2
        yield (b + h) % e, (a + h) % e
    else:
        yield b, a


def orbit(e: int, parity: str, a: int, b: int) -> set[tuple[int, int]]:
    k_odd = _parse_parity(parity)
    start = (a % e, b % e)
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for nxt in _moves(e, k_odd, x, y):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def _parse_parity(parity) -> bool:
    if parity in ("odd", "k_odd", 1):
        return True
    if parity in ("even", "k_even", 0):
        return False
    raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")


def canonical_pair(e: int, parity: str, a: int, b: int) -> tuple[int, int]:
    """Lexicographically least member of the symmetry orbit of (a, b)."""
    return min(orbit(e, parity, a, b))


@dataclass(frozen=True)
class OrbitTable:
    e: int
    parity: str
    rep: dict
    class_count: int

    def layout(self) -> list[list[tuple[int, int]]]:
        return [[self.rep[a, b] for b in range(self.e)] for a in range(self.e)]

    def render(self) -> str:
        """Rows a, columns b, each cell the representative pair."""
        width = 7
        head = "a\\b".ljust(5) + "".join(str(b).ljust(width) for b in range(self.e))
        lines = [head]
        for a, row in enumerate(self.layout()):
            lines.append(str(a).ljust(5) + "".join(f"({x},{y})".ljust(width) for x, y in row))
        return "\n".join(lines)


def build_orbit_table(e: int, parity: str) -> OrbitTable:
    rep = {}
    for a in range(e):
        for b in range(e):
            if (a, b) in rep:
                continue
            orb = orbit(e, parity, a, b)
            r = min(orb)
            for cell in orb:
                rep[cell] = r
    return OrbitTable(e, "odd" if _parse_parity(parity) else "even", rep, len(set(rep.values())))


# -- matrices ------------------------------------------------------------------

@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]
    provenance: dict = dc_field(default_factory=dict, compare=False)

    @classmethod
    def from_array(cls, arr, provenance=None) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in arr), provenance or {})

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        cols = list(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in self.rows))

    def __pow__(self, k: int) -> "IntMatrix":
        result = IntMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def total(self) -> int:
        return sum(sum(r) for r in self.rows)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def permuted(self, perm) -> "IntMatrix":
        """Entry (a, b) -> (perm[a], perm[b])."""
        out = [[0] * self.n for _ in range(self.n)]
        for a in range(self.n):
            for b in range(self.n):
                out[perm[a]][perm[b]] = self.rows[a][b]
        return IntMatrix(tuple(map(tuple, out)), self.provenance)

    def to_csv(self) -> str:
        return "\r\n".join(",".join(str(x) for x in r) for r in self.rows) + "\r\n"

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows], "provenance": self.provenance}


def cyclo_matrix(ctx: CyclotomyContext) -> IntMatrix:
    return IntMatrix.from_array(ctx.table.values, {**ctx.data.provenance, "e": ctx.e})


def determinant(M: IntMatrix) -> int:
    """Bareiss fraction-free elimination."""
    a = [list(r) for r in M.rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def char_poly(M: IntMatrix) -> list[int]:
    """det(xI - M) as integer coefficients, leading first (Berkowitz, division free)."""
    A = [list(r) for r in M.rows]
    n = len(A)
    if n == 0:
        return [1]
    # polynomial coefficients stored leading first
    poly = [1, -A[0][0]]
    for r in range(1, n):
        R = A[r][:r]           # row r, columns < r
        C = [A[i][r] for i in range(r)]  # column r, rows < r
        S = [row[:r] for row in A[:r]]
        # Toeplitz column: 1, -a_rr, -R C, -R S C, ..., -R S^{r-1} C
        col = [1, -A[r][r]]
        v = C
        for _ in range(r):
            col.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(S[i][j] * v[j] for j in range(r)) for i in range(r)]
        # new poly = Toeplitz(col) * poly
        new = [0] * (r + 2)
        for i in range(r + 2):
            new[i] = sum(col[i - j] * poly[j] for j in range(min(i, r) + 1) if i - j < len(col))
        poly = new
    return poly


def is_squarefree(coeffs: list[int]) -> bool:
    x = sympy.Symbol("x")
    f = sympy.Poly(coeffs, x)
    return sympy.gcd(f, f.diff(x)).degree() == 0


def eigenvalues(M: IntMatrix, dps: int = 50, tol: float = 1e-8) -> list[complex]:
    """Roots of the exact characteristic polynomial, sorted by descending magnitude."""
    coeffs = char_poly(M)
    if all(c == 0 for c in coeffs[1:]):
        return [0j] * M.n
    with mpmath.workdps(dps):
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=500, extraprec=4 * dps)
        except mpmath.libmp.NoConvergence as exc:
            raise NonConvergence(str(exc)) from exc
        scale = sum(abs(c) for c in coeffs)
        for z in roots:
            res = abs(mpmath.polyval(coeffs, z))
            if res > tol * scale * max(1, abs(z)) ** len(coeffs):
                raise NonConvergence(f"residual {res} at {z}")
        out = [complex(z) for z in roots]
    out = [complex(z.real, 0.0) if abs(z.imag) < 1e-30 else z for z in out]
    return sorted(out, key=lambda z: (-abs(z), z.real))


def generator_permutation(e: int, s: int) -> list[int]:
    """Changing the generator to gamma^s maps the index class a to a * s^-1 mod e."""
    inv = pow(s, -1, e)
    return [(a * inv) % e for a in range(e)]
