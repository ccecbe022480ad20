"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is a polynomial in zeta_n = exp(2*pi*i/n) with rational
coefficients, stored on the power basis 1, zeta, ..., zeta^(phi(n)-1)
modulo the n-th cyclotomic polynomial Phi_n.  Every value is kept at its
minimal conductor: after each operation the representation descends to the
smallest m | n whose field contains the value, so equality and hashing are
plain structural comparisons and two computation routes to the same number
produce the same object state.

Coefficients are integer vectors over one positive denominator; Phi_n is
monic with integer coefficients, so reduction never leaves the integers.

Text format: E(n) denotes zeta_n, E(n)^k its k-th power, and a value is a
sum of terms with rational literals, e.g. "-1/2*E(11)^3 + 2".  str() and
parse_cyclo round-trip exactly.
"""

from __future__ import annotations

import math
import re
import threading
from fractions import Fraction

Rational = Fraction

_LOCK = threading.Lock()
_PHI_CACHE: dict[int, tuple[int, ...]] = {}
_POWER_CACHE: dict[int, tuple[tuple[int, ...], ...]] = {}
_DESCENT_CACHE: dict[int, tuple] = {}


def totient(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            count += 1
    return count


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    # exact long division of integer polynomials, den monic, low-to-high coeffs
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for top in range(len(num) - 1, len(den) - 2, -1):
        c = num[top]
        if c:
            shift = top - (len(den) - 1)
            out[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    assert not any(num), "division was not exact"
    return out


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low to high, computed by dividing x^n - 1 by
    the Phi_d of all proper divisors d of n.  Cached per conductor."""
    with _LOCK:
        got = _PHI_CACHE.get(n)
    if got is not None:
        return got
    if n == 1:
        result = (-1, 1)
    else:
        poly = [0] * (n + 1)
        poly[0], poly[n] = -1, 1
        for d in range(1, n):
            if n % d == 0:
                poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
        result = tuple(poly)
    with _LOCK:
        _PHI_CACHE.setdefault(n, result)
    return result


def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # row j is x^j reduced mod Phi_n, for j in range(n)
    with _LOCK:
        got = _POWER_CACHE.get(n)
    if got is not None:
        return got
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        lead = cur[-1]
        cur = [0] + cur[:-1]
        if lead:
            for i in range(deg):
                cur[i] -= lead * phi[i]
    table = tuple(rows)
    with _LOCK:
        _POWER_CACHE.setdefault(n, table)
    return table


class _Descent:
    """Rewrites coefficient vectors from Q(zeta_n) onto the zeta_m power
    basis for one maximal subfield m = n / p, or reports failure.

    Built once per (n, m) from the row reduction of [E | I], where the
    columns of E are the zeta_m basis powers expressed over the zeta_n
    basis.  Consistency rows are checked first so a failed attempt is one
    short dot product in the typical case.
    """

    __slots__ = ("m", "cons", "pivot")

    def __init__(self, n: int, m: int):
        self.m = m
        table = _power_table(n)
        phi_n = len(table[0])
        phi_m = len(_power_table(m)[0])
        step = n // m
        cols = [table[(j * step) % n] for j in range(phi_m)]
        aug = [
            [Fraction(cols[j][i]) for j in range(phi_m)]
            + [Fraction(1 if k == i else 0) for k in range(phi_n)]
            for i in range(phi_n)
        ]
        rank = 0
        pivots = []
        for col in range(phi_m):
            pivot = next((r for r in range(rank, phi_n) if aug[r][col]), None)
            assert pivot is not None, "subfield basis must be independent"
            aug[rank], aug[pivot] = aug[pivot], aug[rank]
            inv = 1 / aug[rank][col]
            aug[rank] = [v * inv for v in aug[rank]]
            for r in range(phi_n):
                if r != rank and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[rank])]
            pivots.append(rank)
            rank += 1

        def as_int_row(row):
            den = math.lcm(*[v.denominator for v in row]) if row else 1
            return tuple(int(v * den) for v in row), den

        self.cons = tuple(
            as_int_row(aug[r][phi_m:])[0] for r in range(rank, phi_n)
        )
        self.pivot = tuple(as_int_row(aug[r][phi_m:]) for r in pivots)

    def apply(self, num):
        for row in self.cons:
            if sum(r * v for r, v in zip(row, num) if v):
                return None
        dens = [den for _, den in self.pivot]
        lcm = math.lcm(*dens)
        out = [
            sum(r * v for r, v in zip(row, num) if v) * (lcm // den)
            for row, den in self.pivot
        ]
        return out, lcm


def _descents(n: int):
    with _LOCK:
        got = _DESCENT_CACHE.get(n)
    if got is not None:
        return got
    targets = sorted(
        {n // p for p in range(2, n + 1) if n % p == 0 and _is_prime(p)}
    )
    solvers = tuple(_Descent(n, m) for m in targets)
    with _LOCK:
        _DESCENT_CACHE.setdefault(n, solvers)
    return solvers


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _normalize(n, num, den):
    # num: list[int] of length phi(n), den: positive int
    while n > 1:
        if not any(num[1:]):
            n, num = 1, [num[0]]
            break
        for solver in _descents(n):
            res = solver.apply(num)
            if res is not None:
                out, extra = res
                n, num, den = solver.m, out, den * extra
                break
        else:
            break
    g = den
    for v in num:
        g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        den //= g
        num = [v // g for v in num]
    return n, tuple(num), den


class Cyclotomic:
    """An exact number in some Q(zeta_n), kept at minimal conductor."""

    __slots__ = ("_n", "_num", "_den")

    def __init__(self, value=0):
        c = cyclo(value)
        self._n, self._num, self._den = c._n, c._num, c._den

    @staticmethod
    def _make(n, num, den):
        if den < 0:
            den = -den
            num = [-v for v in num]
        n, num, den = _normalize(n, list(num), den)
        self = object.__new__(Cyclotomic)
        self._n, self._num, self._den = n, num, den
        return self

    @staticmethod
    def from_rational(q) -> "Cyclotomic":
        q = Fraction(q)
        return Cyclotomic._make(1, [q.numerator], q.denominator)

    # ------------------------------------------------------------------
    # basic structure

    @property
    def conductor(self) -> int:
        return self._n

    def coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients over the power basis of Q(zeta_conductor)."""
        return tuple(Fraction(v, self._den) for v in self._num)

    def is_zero(self) -> bool:
        return self._n == 1 and self._num[0] == 0

    def is_rational(self) -> bool:
        return self._n == 1

    def is_integer(self) -> bool:
        return self._n == 1 and self._den == 1

    def as_rational(self) -> Fraction:
        if self._n != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # ------------------------------------------------------------------
    # arithmetic

    def _promoted(self, n):
        # coefficient vector of self over the zeta_n basis, n multiple of
        # the own conductor; denominator is unchanged
        if n == self._n:
            return list(self._num)
        table = _power_table(n)
        step = n // self._n
        out = [0] * len(table[0])
        for i, v in enumerate(self._num):
            if v:
                row = table[(i * step) % n]
                for k, r in enumerate(row):
                    if r:
                        out[k] += v * r
        return out

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = math.lcm(self._n, other._n)
        a, b = self._promoted(n), other._promoted(n)
        da, db = self._den, other._den
        if da == db:
            return Cyclotomic._make(n, [x + y for x, y in zip(a, b)], da)
        den = math.lcm(da, db)
        fa, fb = den // da, den // db
        return Cyclotomic._make(n, [x * fa + y * fb for x, y in zip(a, b)], den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(Cyclotomic)
        out._n, out._num, out._den = self._n, tuple(-v for v in self._num), self._den
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._n == 1:
            if self._num[0] == 0:
                return ZERO
            return Cyclotomic._make(
                other._n,
                [self._num[0] * v for v in other._num],
                self._den * other._den,
            )
        if other._n == 1:
            if other._num[0] == 0:
                return ZERO
            return Cyclotomic._make(
                self._n,
                [other._num[0] * v for v in self._num],
                self._den * other._den,
            )
        n = math.lcm(self._n, other._n)
        a, b = self._promoted(n), other._promoted(n)
        table = _power_table(n)
        deg = len(table[0])
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:deg])
        for e in range(deg, len(conv)):
            c = conv[e]
            if c:
                row = table[e % n] if e >= n else table[e]
                for k, r in enumerate(row):
                    if r:
                        out[k] += c * r
        return Cyclotomic._make(n, out, self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm
        against Phi_n over Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self._n == 1:
            sign = 1 if self._num[0] > 0 else -1
            return Cyclotomic._make(1, [self._den * sign], abs(self._num[0]))
        # invariant: r_i = s_i * self (mod Phi_n); ends with r0 a nonzero
        # constant because Phi_n is squarefree and self is nonzero mod Phi_n
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self._n)]
        r1 = _trim([Fraction(v, self._den) for v in self._num])
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while r1:
            q = _poly_div(r0, r1)
            r0, r1 = r1, _poly_sub_mul(r0, q, r1)
            s0, s1 = s1, _poly_sub_mul(s0, q, s1)
        assert len(r0) == 1 and r0[0]
        coeffs = [c / r0[0] for c in s0]
        den = math.lcm(*[c.denominator for c in coeffs])
        phi = len(_power_table(self._n)[0])
        assert len(coeffs) <= phi
        num = [int(c * den) for c in coeffs] + [0] * (phi - len(coeffs))
        return Cyclotomic._make(self._n, num, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    # ------------------------------------------------------------------
    # Galois action

    def galois(self, t: int) -> "Cyclotomic":
        """Image under zeta_n -> zeta_n^t, for t coprime to the conductor."""
        n = self._n
        if n == 1:
            return self
        t %= n
        if math.gcd(t, n) != 1:
            raise ValueError(f"exponent {t} not coprime to conductor {n}")
        table = _power_table(n)
        out = [0] * len(table[0])
        for i, v in enumerate(self._num):
            if v:
                row = table[(i * t) % n]
                for k, r in enumerate(row):
                    if r:
                        out[k] += v * r
        return Cyclotomic._make(n, out, self._den)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self._n - 1) if self._n > 1 else self

    def multiplicative_order(self):
        """Order as a root of unity, or None if not one."""
        if self.is_zero():
            return None
        bound = math.lcm(2, self._n)
        if self ** bound != ONE:
            return None
        for d in sorted(_divisors(bound)):
            if self ** d == ONE:
                return d
        return None

    # ------------------------------------------------------------------
    # comparisons, hashing, formatting

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (
            self._n == other._n
            and self._den == other._den
            and self._num == other._num
        )

    def __hash__(self):
        if self._n == 1:
            return hash(Fraction(self._num[0], self._den))
        return hash((self._n, self._num, self._den))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        tau = 2.0 * math.pi / self._n
        re = sum(
            v * math.cos(tau * i) for i, v in enumerate(self._num)
        ) / self._den
        im = sum(
            v * math.sin(tau * i) for i, v in enumerate(self._num)
        ) / self._den
        return complex(re, im)

    def __str__(self):
        if self._n == 1:
            return str(Fraction(self._num[0], self._den))
        parts = []
        for i, v in enumerate(self._num):
            if not v:
                continue
            c = Fraction(v, self._den)
            if i == 0:
                body = str(abs(c))
            else:
                power = f"E({self._n})" if i == 1 else f"E({self._n})^{i}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Cyclotomic({str(self)!r})"


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_div(a, b):
    # quotient of a by b over Q, coefficients low to high, b nonzero
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        if not a[-1]:
            a.pop()
            continue
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, v in enumerate(b):
            a[shift + i] -= c * v
        a.pop()
    return q


def _poly_sub_mul(a, q, b):
    # a - q*b, trimmed
    out = list(a) + [Fraction(0)] * max(len(q) + len(b) - 1 - len(a), 0)
    for i, qc in enumerate(q):
        if qc:
            for j, bc in enumerate(b):
                if bc:
                    out[i + j] -= qc * bc
    return _trim(out)


def _coerce(value):
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, int):
        return Cyclotomic._make(1, [value], 1)
    if isinstance(value, Fraction):
        return Cyclotomic._make(1, [value.numerator], value.denominator)
    return NotImplemented


def cyclo(value) -> Cyclotomic:
    """Coerce an int, Fraction, E-notation string or Cyclotomic."""
    if isinstance(value, str):
        return parse_cyclo(value)
    got = _coerce(value)
    if got is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a cyclotomic number")
    return got


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k as an exact value."""
    if n < 1:
        raise ValueError("conductor must be positive")
    k %= n
    return Cyclotomic._make(n, list(_power_table(n)[k]), 1)


ZERO = Cyclotomic._make(1, [0], 1)
ONE = Cyclotomic._make(1, [1], 1)


# ----------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z]+|\^|\*|/|\+|-|\(|\))")


def _tokenize(text: str) -> list[str]:
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad character in {text!r} at position {pos}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def parse_expr(self) -> Cyclotomic:
        value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> Cyclotomic:
        value = self.parse_factor()
        while self.peek() == "*":
            self.take()
            value = value * self.parse_factor()
        return value

    def parse_factor(self) -> Cyclotomic:
        sign = 1
        while self.peek() == "-":
            self.take()
            sign = -sign
        atom = self.parse_atom()
        if self.peek() == "^":
            self.take()
            exp_sign = 1
            if self.peek() == "-":
                self.take()
                exp_sign = -1
            exp = int(self.take())
            atom = atom ** (exp_sign * exp)
        return atom if sign == 1 else -atom

    def parse_atom(self) -> Cyclotomic:
        tok = self.peek()
        if tok == "(":
            self.take()
            value = self.parse_expr()
            self.take(")")
            return value
        if tok == "E":
            self.take()
            self.take("(")
            n = int(self.take())
            self.take(")")
            return root_of_unity(n)
        if tok is not None and tok.isdigit():
            self.take()
            if self.peek() == "/":
                self.take()
                den = int(self.take())
                return cyclo(Fraction(int(tok), den))
            return cyclo(int(tok))
        raise ValueError(f"unexpected token {tok!r}")


def parse_cyclo(text: str) -> Cyclotomic:
    parser = _Parser(_tokenize(text))
    value = parser.parse_expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input in {text!r}")
    return value
