"""Cubic forms in five variables and group actions on them.

A cubic form lives on the fixed basis of the 35 degree-3 monomials in
x0..x4, ordered lexicographically by exponent vector, largest first, so
x0^3 is index 0 and x4^3 is index 34.  A matrix g acts by substitution
on the dual side, (g . F)(x) = F(g^-1 x), which makes the action a left
action and matches how symmetries of a hypersurface in projective space
compose.

The invariant subspace of a finite group is computed from the Reynolds
operator, the average of all substitution matrices.  Row reduction of
its transpose gives a canonical echelon basis.  Every returned basis
form is re-checked against the generators, so a wrong fast path cannot
slip through.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement

from .cyclo import Cyclotomic, cyclo, parse_cyclo, root_of_unity
from .errors import ContractViolationError
from .linalg import Matrix, rref, solve_in_span

N_VARS = 5


def _all_monomials():
    out = set()
    for picks in combinations_with_replacement(range(N_VARS), 3):
        e = [0] * N_VARS
        for i in picks:
            e[i] += 1
        out.add(tuple(e))
    return tuple(sorted(out, reverse=True))


MONOMIALS = _all_monomials()
MONOMIAL_INDEX = {e: i for i, e in enumerate(MONOMIALS)}
assert len(MONOMIALS) == 35 and MONOMIALS[0] == (3, 0, 0, 0, 0)

_ZERO = cyclo(0)


def monomial_str(expo) -> str:
    parts = []
    for i, e in enumerate(expo):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


class CubicForm:
    """Homogeneous cubic in x0..x4 with exact cyclotomic coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(cyclo(c) for c in coeffs)
        assert len(coeffs) == 35
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CubicForm is immutable")

    @staticmethod
    def zero() -> "CubicForm":
        return CubicForm([0] * 35)

    @staticmethod
    def from_dict(d) -> "CubicForm":
        coeffs = [_ZERO] * 35
        for expo, value in d.items():
            coeffs[MONOMIAL_INDEX[tuple(expo)]] = cyclo(value)
        return CubicForm(coeffs)

    @staticmethod
    def parse(text: str) -> "CubicForm":
        poly = _parse_poly(text)
        for expo in poly:
            if sum(expo) != 3:
                raise ValueError(
                    f"not homogeneous of degree 3: term {monomial_str(expo)}"
                )
        return CubicForm.from_dict(poly)

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def coefficient(self, expo) -> Cyclotomic:
        return self._coeffs[MONOMIAL_INDEX[tuple(expo)]]

    def support(self) -> tuple:
        return tuple(e for e, c in zip(MONOMIALS, self._coeffs) if c)

    def variable_support(self) -> tuple:
        used = set()
        for e, c in zip(MONOMIALS, self._coeffs):
            if c:
                used.update(i for i in range(N_VARS) if e[i])
        return tuple(sorted(used))

    def __add__(self, other):
        return CubicForm([a + b for a, b in
                          zip(self._coeffs, other._coeffs)])

    def __sub__(self, other):
        return CubicForm([a - b for a, b in
                          zip(self._coeffs, other._coeffs)])

    def __neg__(self):
        return CubicForm([-a for a in self._coeffs])

    def scale(self, s) -> "CubicForm":
        s = cyclo(s)
        return CubicForm([a * s for a in self._coeffs])

    def __bool__(self):
        return any(self._coeffs)

    def __eq__(self, other):
        return isinstance(other, CubicForm) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for e, c in zip(MONOMIALS, self._coeffs):
            if not c:
                continue
            mono = monomial_str(e)
            if c == 1:
                term = mono
            elif c == -1:
                term = f"-{mono}"
            else:
                cs = str(c)
                if "+" in cs or ("-" in cs[1:]) or "/" in cs:
                    cs = f"({cs})"
                term = f"{cs}*{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __repr__(self):
        return f"CubicForm({self})"


# ----------------------------------------------------------------------
# group action

def _inverse_rows(g_inv: Matrix):
    return [[g_inv[i, j] for j in range(N_VARS)] for i in range(N_VARS)]


def _expand_monomial(rows, expo) -> dict:
    """Image of the monomial with exponents expo when x_i is replaced by
    the linear form rows[i]."""
    factors = []
    for i, e in enumerate(expo):
        factors.extend([i] * e)
    p, q, r = factors
    out = {}
    row_q = rows[q]
    row_r = rows[r]
    for j1, c1 in enumerate(rows[p]):
        if not c1:
            continue
        for j2, c2 in enumerate(row_q):
            if not c2:
                continue
            c12 = c1 * c2
            for j3, c3 in enumerate(row_r):
                if not c3:
                    continue
                e = [0] * N_VARS
                e[j1] += 1
                e[j2] += 1
                e[j3] += 1
                key = tuple(e)
                prev = out.get(key)
                term = c12 * c3
                out[key] = term if prev is None else prev + term
    return out


def act(g: Matrix, form: CubicForm) -> CubicForm:
    """The substituted form F(g^-1 x)."""
    return _act_with_rows(_inverse_rows(g.inverse()), form)


def _act_with_rows(rows, form: CubicForm) -> CubicForm:
    total = {}
    for expo, coeff in zip(MONOMIALS, form.coefficients):
        if not coeff:
            continue
        for key, value in _expand_monomial(rows, expo).items():
            term = coeff * value
            prev = total.get(key)
            total[key] = term if prev is None else prev + term
    coeffs = [_ZERO] * 35
    for key, value in total.items():
        coeffs[MONOMIAL_INDEX[key]] = value
    return CubicForm(coeffs)


def substitution_matrix(g: Matrix) -> Matrix:
    """35x35 matrix S with S * coeffs(F) = coeffs(F(g^-1 x))."""
    rows = _inverse_rows(g.inverse())
    cols = []
    for expo in MONOMIALS:
        image = _expand_monomial(rows, expo)
        col = [_ZERO] * 35
        for key, value in image.items():
            col[MONOMIAL_INDEX[key]] = value
        cols.append(col)
    return Matrix([[cols[j][i] for j in range(35)] for i in range(35)])


def _diagonal_root_exponents(m: Matrix):
    """For a diagonal matrix of finite order n, the exponents k_i with
    entry i equal to zeta_n^k_i, or None when not diagonal."""
    d = m.rows
    for i in range(d):
        for j in range(d):
            if i != j and m[i, j]:
                return None
    from .groups import matrix_order
    n = matrix_order(m)
    exps = []
    for i in range(d):
        entry = m[i, i]
        for k in range(n):
            if entry == root_of_unity(n, k):
                exps.append(k)
                break
        else:
            return None
    return n, exps


def reynolds_operator(group) -> Matrix:
    """Average of the substitution matrices over the whole group.

    For large groups containing a diagonal element h of decent order the
    sum is folded through the cosets of <h> first: averaging over <h>
    kills every monomial column whose weight under h is nonzero, so only
    the few surviving columns need expansion, once per coset.
    """
    order = group.order
    if order > 256:
        fast = _reynolds_via_diagonal(group)
        if fast is not None:
            return fast
    total = None
    for i in range(order):
        inv = group.elements[group.inverse_index(i)]
        rows = _inverse_rows(inv)
        s = _substitution_cols(rows)
        total = s if total is None else [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(total, s)
        ]
    w = Fraction(1, order)
    return Matrix([[v * w for v in row] for row in total])


def _substitution_cols(rows):
    out = [[_ZERO] * 35 for _ in range(35)]
    for j, expo in enumerate(MONOMIALS):
        for key, value in _expand_monomial(rows, expo).items():
            out[MONOMIAL_INDEX[key]][j] = value
    return out


def _reynolds_via_diagonal(group):
    best = None
    for i, m in enumerate(group.elements):
        got = _diagonal_root_exponents(m)
        if got is None:
            continue
        n = group.element_order(i)
        if n >= 5 and (best is None or n > best[0]):
            best = (n, i, got[1])
    if best is None:
        return None
    n, h_idx, exps = best

    surviving = []
    for j, expo in enumerate(MONOMIALS):
        if sum(a * k for a, k in zip(expo, exps)) % n == 0:
            surviving.append(j)

    # left coset representatives of <h>
    h_powers = [group.identity_index]
    cur = h_idx
    while cur != group.identity_index:
        h_powers.append(cur)
        cur = group.mult(cur, h_idx)
    seen = [False] * group.order
    reps = []
    for i in range(group.order):
        if seen[i]:
            continue
        reps.append(i)
        for p in h_powers:
            seen[group.mult(i, p)] = True

    cols = {j: [_ZERO] * 35 for j in surviving}
    for r in reps:
        inv = group.elements[group.inverse_index(r)]
        rows = _inverse_rows(inv)
        for j in surviving:
            image = _expand_monomial(rows, MONOMIALS[j])
            col = cols[j]
            for key, value in image.items():
                k = MONOMIAL_INDEX[key]
                col[k] = col[k] + value
    w = Fraction(1, len(reps))
    data = [[_ZERO] * 35 for _ in range(35)]
    for j in surviving:
        col = cols[j]
        for i in range(35):
            if col[i]:
                data[i][j] = col[i] * w
    return Matrix(data)


class InvariantSpace:
    """Echelonized basis of the invariant cubics of a group.

    `spanning` carries the nonzero images of the monomials under the
    averaging operator: the same space, but with coefficients whose
    denominators divide the group order times the entry denominators.
    The echelon basis can pick up huge numerators from pivot division,
    which makes its reduction mod p degenerate for unlucky primes; the
    raw images do not have that problem, so the smoothness probe
    samples from them instead."""

    def __init__(self, basis, spanning=()):
        self.basis = tuple(basis)
        self.spanning = tuple(spanning) if spanning else self.basis

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, form: CubicForm) -> bool:
        if not self.basis:
            return not form
        rows = [list(b.coefficients) for b in self.basis]
        return solve_in_span(rows, list(form.coefficients))

    def variable_support(self) -> tuple:
        used = set()
        for b in self.basis:
            used.update(b.variable_support())
        return tuple(sorted(used))

    def missing_variables(self) -> tuple:
        used = self.variable_support()
        return tuple(i for i in range(N_VARS) if i not in used)

    def monomial_support(self) -> tuple:
        out = set()
        for b in self.basis:
            out.update(b.support())
        return tuple(sorted(out, reverse=True))

    def split_variable(self):
        """Smallest variable index i such that x_i^3 occurs in the space
        but no other monomial containing x_i does; None when there is no
        such variable.  Such a variable splits every member into
        c*x_i^3 plus a cubic in the remaining variables."""
        support = self.monomial_support()
        for i in range(N_VARS):
            cube = tuple(3 if k == i else 0 for k in range(N_VARS))
            has_cube = cube in support
            touched_elsewhere = any(
                e[i] and e != cube for e in support
            )
            if has_cube and not touched_elsewhere:
                return i
        return None

    def __iter__(self):
        return iter(self.basis)


def invariant_basis(group) -> InvariantSpace:
    """Canonical basis of the cubics fixed by every element of the group:
    row reduction of the transpose of the Reynolds operator, then an
    independent re-check of each basis form against the generators."""
    R = reynolds_operator(group)
    rank_, reduced, _ = rref(R.transpose())
    trace = R.trace().as_rational()
    if trace != rank_:
        raise ContractViolationError(
            f"averaging operator has trace {trace} but rank {rank_}"
        )
    basis = []
    for i in range(rank_):
        basis.append(CubicForm(reduced.row(i)))
    spanning = []
    for j in range(len(MONOMIALS)):
        col = CubicForm(list(R.column(j)))
        if col:
            spanning.append(col)
    space = InvariantSpace(basis, spanning)
    for g in group.generators:
        rows = _inverse_rows(g.inverse())
        for b in space.basis:
            if _act_with_rows(rows, b) != b:
                raise ContractViolationError(
                    "claimed invariant moves under a generator"
                )
    return space


# ----------------------------------------------------------------------
# parsing

_PTOKEN = re.compile(
    r"\s*(?:(?P<var>x[0-4])|(?P<eroot>E)|(?P<int>\d+)|(?P<op>[-+*/^()]))"
)

_CONST = (0, 0, 0, 0, 0)


def _parse_poly(text: str) -> dict:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _PTOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"bad character in form: {text[pos:]!r}")
            break
        pos = m.end()
        if m.lastgroup == "var":
            tokens.append(("var", int(m.group("var")[1])))
        elif m.lastgroup == "eroot":
            tokens.append(("E", None))
        elif m.lastgroup == "int":
            tokens.append(("int", int(m.group("int"))))
        else:
            tokens.append(("op", m.group("op")))
    parser = _PolyParser(tokens)
    out = parser.expr()
    parser.expect_end()
    return {k: v for k, v in out.items() if v}


def _poly_mul(a: dict, b: dict) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            term = ca * cb
            prev = out.get(key)
            out[key] = term if prev is None else prev + term
    return out


def _poly_add(a: dict, b: dict, sign=1) -> dict:
    out = dict(a)
    for e, c in b.items():
        term = c if sign > 0 else -c
        prev = out.get(e)
        out[e] = term if prev is None else prev + term
    return out


class _PolyParser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of form")
        self.pos += 1
        return tok

    def expect_op(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise ValueError(f"expected {op!r}, got {tok}")

    def expect_end(self):
        if self.peek() is not None:
            raise ValueError(f"trailing input at {self.peek()}")

    def expr(self) -> dict:
        tok = self.peek()
        sign = 1
        if tok in (("op", "+"), ("op", "-")):
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = {e: -c for e, c in acc.items()}
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            acc = _poly_add(acc, self.term(), 1 if op == "+" else -1)
        return acc

    def term(self) -> dict:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                acc = _poly_mul(acc, self.factor())
            elif tok == ("op", "/"):
                self.take()
                divisor = self.factor()
                if set(divisor) != {_CONST}:
                    raise ValueError("can only divide by constants")
                inv = divisor[_CONST].inverse()
                acc = {e: c * inv for e, c in acc.items()}
            elif tok is not None and tok[0] in ("var", "int", "E"):
                # juxtaposition like "2x0" or "x0 x1" is not allowed
                raise ValueError(f"missing operator before {tok}")
            else:
                return acc

    def factor(self) -> dict:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            tok = self.take()
            if tok == ("op", "-"):
                neg = True
                tok = self.take()
            if tok[0] != "int":
                raise ValueError("exponent must be an integer")
            k = tok[1]
            if neg:
                if set(base) != {_CONST}:
                    raise ValueError("negative powers of variables")
                return {_CONST: base[_CONST] ** (-k)}
            out = {_CONST: cyclo(1)}
            for _ in range(k):
                out = _poly_mul(out, base)
            return out
        return base

    def atom(self) -> dict:
        tok = self.take()
        if tok[0] == "var":
            e = [0] * N_VARS
            e[tok[1]] = 1
            return {tuple(e): cyclo(1)}
        if tok[0] == "int":
            return {_CONST: cyclo(tok[1])}
        if tok[0] == "E":
            self.expect_op("(")
            ntok = self.take()
            if ntok[0] != "int":
                raise ValueError("E(...) needs an integer")
            self.expect_op(")")
            return {_CONST: parse_cyclo(f"E({ntok[1]})")}
        if tok == ("op", "("):
            inner = self.expr()
            self.expect_op(")")
            return inner
        if tok == ("op", "-"):
            inner = self.factor()
            return {e: -c for e, c in inner.items()}
        raise ValueError(f"unexpected token {tok}")
