"""Exact multivariate Laurent polynomials over the integers.

Everything here is integer arithmetic on sparse dictionaries; there is no
floating point anywhere.  A :class:`LaurentPoly` carries an ordered tuple of
variable names and a map from exponent vectors (negative entries allowed) to
nonzero integer coefficients.

The module also provides determinants of polynomial matrices (unit pivoting
followed by fraction-free Bareiss elimination), exact division, gcds via the
recursive primitive-remainder-sequence algorithm, and reduction modulo
cyclotomic polynomials.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Number = int


class PolynomialError(ValueError):
    pass


def _as_vars(variables) -> Tuple[str, ...]:
    if isinstance(variables, str):
        return tuple(variables.replace(",", " ").split())
    return tuple(variables)


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients.

    >>> t = LaurentPoly.var("t")
    >>> (t - 1) * (t + 1)
    LaurentPoly('t^2 - 1', vars=('t',))
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, variables=("t",)):
        self.vars = _as_vars(variables)
        n = len(self.vars)
        clean: Dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != n:
                        raise PolynomialError(f"exponent {e} does not match variables {self.vars}")
                    clean[tuple(e)] = int(c)
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, terms: Dict[Exponent, int], variables: Tuple[str, ...]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.vars = variables
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int, variables=("t",)) -> "LaurentPoly":
        variables = _as_vars(variables)
        return cls._raw({(0,) * len(variables): int(c)} if c else {}, variables)

    @classmethod
    def zero(cls, variables=("t",)) -> "LaurentPoly":
        return cls._raw({}, _as_vars(variables))

    @classmethod
    def one(cls, variables=("t",)) -> "LaurentPoly":
        return cls.const(1, variables)

    @classmethod
    def var(cls, name: str, variables=None) -> "LaurentPoly":
        variables = _as_vars(variables) if variables is not None else (name,)
        e = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise PolynomialError(f"unknown variable {name!r}")
        return cls._raw({e: 1}, variables)

    @classmethod
    def monomial(cls, exponents: Mapping[str, int] | Sequence[int], coeff: int = 1, variables=("t",)) -> "LaurentPoly":
        variables = _as_vars(variables)
        if isinstance(exponents, Mapping):
            unknown = set(exponents) - set(variables)
            if unknown:
                raise PolynomialError(f"unknown variables {sorted(unknown)}")
            e = tuple(int(exponents.get(v, 0)) for v in variables)
        else:
            e = tuple(int(x) for x in exponents)
        return cls._raw({e: int(coeff)} if coeff else {}, variables)

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """True for ``±`` monomials, the units of the Laurent ring."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> int:
        if not self.is_constant():
            raise PolynomialError("not a constant")
        return next(iter(self.terms.values())) if self.terms else 0

    def used_vars(self) -> Tuple[str, ...]:
        used = set()
        for e in self.terms:
            for v, k in zip(self.vars, e):
                if k:
                    used.add(v)
        return tuple(v for v in self.vars if v in used)

    def min_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * len(self.vars)
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * len(self.vars)
        return tuple(max(col) for col in zip(*self.terms))

    def degree(self, var: str | None = None) -> int:
        i = self._index(var)
        return max(e[i] for e in self.terms) if self.terms else 0

    def low_degree(self, var: str | None = None) -> int:
        i = self._index(var)
        return min(e[i] for e in self.terms) if self.terms else 0

    def width(self, var: str | None = None) -> int:
        """Top degree minus bottom degree (0 for the zero polynomial)."""
        return self.degree(var) - self.low_degree(var)

    def _index(self, var):
        if var is None:
            if len(self.vars) != 1:
                raise PolynomialError("variable must be specified for multivariate polynomials")
            return 0
        return self.vars.index(var)

    def leading(self) -> Tuple[Exponent, int]:
        """Lex-largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                if not other.terms:
                    return LaurentPoly._raw({}, self.vars)
                if other.is_constant():
                    return LaurentPoly.const(other.constant_value(), self.vars)
                if self.is_constant() and not self.terms:
                    return other
                raise PolynomialError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.vars)
        return NotImplemented

    def with_vars(self, variables) -> "LaurentPoly":
        """Re-express over a different variable tuple (unused variables may be dropped)."""
        variables = _as_vars(variables)
        idx = []
        for v in variables:
            idx.append(self.vars.index(v) if v in self.vars else None)
        for i, v in enumerate(self.vars):
            if v not in variables and any(e[i] for e in self.terms):
                raise PolynomialError(f"variable {v!r} is in use")
        terms = {}
        for e, c in self.terms.items():
            terms[tuple(e[i] if i is not None else 0 for i in idx)] = c
        return LaurentPoly._raw(terms, variables)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.vars != other.vars:
            return other.__add__(self)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return LaurentPoly._raw(terms, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.vars != other.vars:
            return other.__mul__(self)
        if not self.terms or not other.terms:
            return LaurentPoly._raw({}, self.vars)
        terms: Dict[Exponent, int] = {}
        get = terms.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in terms.items() if c}, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise PolynomialError("negative power of a non-unit")
            return self.unit_inverse() ** (-k)
        result = LaurentPoly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise PolynomialError("not a unit")
        (e, c), = self.terms.items()
        return LaurentPoly._raw({tuple(-x for x in e): c}, self.vars)

    def shift(self, exponents: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        return LaurentPoly._raw(
            {tuple(a + b for a, b in zip(e, exponents)): c for e, c in self.terms.items()}, self.vars
        )

    def scale(self, c: int) -> "LaurentPoly":
        if not c:
            return LaurentPoly._raw({}, self.vars)
        return LaurentPoly._raw({e: c * x for e, x in self.terms.items()}, self.vars)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.vars != other.vars:
            if self.is_constant() and other.is_constant():
                return self.constant_value() == other.constant_value()
            return False
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- evaluation and substitution ---------------------------------------
    def __call__(self, *args, **kwargs):
        return self.evaluate(*args, **kwargs)

    def evaluate(self, *args, **kwargs) -> int:
        """Evaluate at integer points (negative exponents need values ±1)."""
        values = dict(zip(self.vars, args))
        values.update(kwargs)
        if set(values) != set(self.vars):
            raise PolynomialError(f"need values for {self.vars}")
        from fractions import Fraction

        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, k in zip(self.vars, e):
                term *= Fraction(values[v]) ** k
            total += term
        if total.denominator != 1:
            return total
        return int(total)

    def substitute(self, mapping: Mapping[str, Union["LaurentPoly", int]], variables=None) -> "LaurentPoly":
        """Substitute polynomials for variables.

        ``variables`` is the variable tuple of the result; by default the
        variable tuple of the first polynomial image.  A variable occurring
        with a negative exponent must be sent to a unit.
        """
        images = {}
        out_vars = _as_vars(variables) if variables is not None else None
        for v, img in mapping.items():
            if isinstance(img, LaurentPoly) and out_vars is None:
                out_vars = img.vars
        if out_vars is None:
            out_vars = tuple(v for v in self.vars if v not in mapping)
        for v in self.vars:
            img = mapping.get(v)
            if img is None:
                img = LaurentPoly.var(v, out_vars)
            elif isinstance(img, int):
                img = LaurentPoly.const(img, out_vars)
            else:
                img = img.with_vars(out_vars) if img.vars != out_vars else img
            images[v] = img
        low = self.min_exponents()
        for v, k in zip(self.vars, low):
            if k < 0 and not images[v].is_unit():
                raise PolynomialError(f"cannot substitute a non-unit for {v!r} (negative exponent)")
        cache: Dict[Tuple[str, int], LaurentPoly] = {}

        def power(v, k):
            key = (v, k)
            if key not in cache:
                cache[key] = images[v] ** k
            return cache[key]

        result = LaurentPoly.zero(out_vars)
        for e, c in self.terms.items():
            term = LaurentPoly.const(c, out_vars)
            for v, k in zip(self.vars, e):
                if k:
                    term = term * power(v, k)
            result = result + term
        return result

    # -- normal forms ---------------------------------------------------
    def unit_normal(self) -> "LaurentPoly":
        """Representative of the class of ``self`` modulo units ``±t^a v^b ...``.

        Every variable's lowest exponent becomes 0 and the coefficient of the
        lex-largest monomial becomes positive.
        """
        if not self.terms:
            return self
        low = self.min_exponents()
        p = self.shift(tuple(-k for k in low))
        if p.leading()[1] < 0:
            p = -p
        return p

    def is_associate(self, other: "LaurentPoly") -> bool:
        return self.unit_normal() == self._coerce(other).unit_normal()

    def primitive(self) -> "LaurentPoly":
        c = self.content()
        if c in (0, 1):
            return self
        return LaurentPoly._raw({e: x // c for e, x in self.terms.items()}, self.vars)

    # -- division ---------------------------------------------------------
    def exact_div(self, other) -> "LaurentPoly":
        q = self.try_div(other)
        if q is None:
            raise PolynomialError("division is not exact")
        return q

    def try_div(self, other) -> "LaurentPoly | None":
        """Exact quotient ``self / other`` in the Laurent ring, or None."""
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return LaurentPoly._raw({}, self.vars)
        if len(other.terms) == 1:
            (e, c), = other.terms.items()
            out = {}
            for f, x in self.terms.items():
                q, r = divmod(x, c)
                if r:
                    return None
                out[tuple(a - b for a, b in zip(f, e))] = q
            return LaurentPoly._raw(out, self.vars)
        # Newton polytope bounds: a quotient term must lie in this box.
        lo = tuple(a - b for a, b in zip(self.min_exponents(), other.min_exponents()))
        hi = tuple(a - b for a, b in zip(self.max_exponents(), other.max_exponents()))
        if any(a > b for a, b in zip(lo, hi)):
            return None
        ge, gc = other.leading()
        rem = dict(self.terms)
        quot: Dict[Exponent, int] = {}
        gitems = list(other.terms.items())
        while rem:
            fe = max(rem)
            fc = rem[fe]
            q, r = divmod(fc, gc)
            if r:
                return None
            qe = tuple(a - b for a, b in zip(fe, ge))
            if any(x < a or x > b for x, a, b in zip(qe, lo, hi)):
                return None
            quot[qe] = q
            for e, c in gitems:
                k = tuple(a + b for a, b in zip(qe, e))
                val = rem.get(k, 0) - q * c
                if val:
                    rem[k] = val
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(quot, self.vars)

    def divides(self, other) -> bool:
        """True iff ``other == self * h`` for a Laurent polynomial ``h``."""
        if not self.terms:
            raise ZeroDivisionError("zero divisor")
        return self._coerce(other).try_div(self) is not None

    # -- display --------------------------------------------------------
    def to_string(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = []
            for v, k in zip(self.vars, e):
                if k == 1:
                    mono.append(v)
                elif k:
                    mono.append(f"{v}^{k}")
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = "*".join(mono)
            else:
                body = f"{a}*" + "*".join(mono)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_string

    def __repr__(self):
        return f"LaurentPoly({self.to_string()!r}, vars={self.vars})"


# ---------------------------------------------------------------------------
# parsing


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(\+)|(-|−)|(\()|(\)))")


def parse_poly(text: str, variables) -> LaurentPoly:
    """Parse the text rendering produced by :meth:`LaurentPoly.to_string`.

    Also accepts parentheses and powers of parenthesized groups, so printed
    factorizations such as ``(t^2 - t + 1)^2`` can be read directly.
    """
    variables = _as_vars(variables)
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialError(f"cannot parse polynomial at {text[pos:]!r}")
        pos = m.end()
        num, name, caret, star, plus, minus, lp, rp = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("var", name))
        elif caret:
            tokens.append(("^", None))
        elif star:
            tokens.append(("*", None))
        elif plus:
            tokens.append(("+", None))
        elif minus:
            tokens.append(("-", None))
        elif lp:
            tokens.append(("(", None))
        else:
            tokens.append((")", None))
    i = 0

    def peek():
        return tokens[i][0] if i < len(tokens) else None

    def take(kind=None):
        nonlocal i
        tok = tokens[i]
        if kind is not None and tok[0] != kind:
            raise PolynomialError(f"expected {kind!r} in {text!r}")
        i += 1
        return tok

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
        value = term().scale(sign)
        while peek() in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
            value = value + term().scale(sign)
        return value

    def term():
        value = power()
        while peek() in ("*", "num", "var", "("):
            if peek() == "*":
                take()
            value = value * power()
        return value

    def power():
        base = atom()
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            k = take("num")[1] * sign
            base = base ** k
        return base

    def atom():
        kind = peek()
        if kind == "num":
            return LaurentPoly.const(take()[1], variables)
        if kind == "var":
            name = take()[1]
            if name not in variables:
                raise PolynomialError(f"unknown variable {name!r}")
            return LaurentPoly.var(name, variables)
        if kind == "(":
            take()
            value = expr()
            take(")")
            return value
        if kind == "-":
            take()
            return -atom()
        raise PolynomialError(f"unexpected token in {text!r}")

    result = expr()
    if i != len(tokens):
        raise PolynomialError(f"trailing input in {text!r}")
    return result


# ---------------------------------------------------------------------------
# gcd


def _split_last(f: LaurentPoly) -> Dict[int, LaurentPoly]:
    """View ``f`` as a polynomial in its last variable over the other ones."""
    inner = f.vars[:-1]
    out: Dict[int, Dict[Exponent, int]] = {}
    for e, c in f.terms.items():
        out.setdefault(e[-1], {})[e[:-1]] = c
    return {k: LaurentPoly._raw(v, inner) for k, v in out.items()}


def _join_last(parts: Mapping[int, LaurentPoly], variables: Tuple[str, ...]) -> LaurentPoly:
    terms = {}
    for k, p in parts.items():
        for e, c in p.terms.items():
            terms[e + (k,)] = c
    return LaurentPoly._raw(terms, variables)


def _shift_to_poly(f: LaurentPoly) -> LaurentPoly:
    return f.shift(tuple(-k for k in f.min_exponents())) if f.terms else f


def _gcd_rec(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """gcd of two ordinary polynomials (nonnegative exponents), up to sign."""
    if not f.terms:
        return g
    if not g.terms:
        return f
    if not f.vars:
        return LaurentPoly._raw({(): math.gcd(f.constant_value(), g.constant_value())}, ())
    fparts = _split_last(f)
    gparts = _split_last(g)
    cf = _content_rec(fparts.values())
    cg = _content_rec(gparts.values())
    c = _shift_to_poly(_gcd_rec(cf, cg))
    a = {k: p.exact_div(cf) for k, p in fparts.items()}
    b = {k: p.exact_div(cg) for k, p in gparts.items()}
    if max(a) < max(b):
        a, b = b, a
    while b and max(b) > 0:
        r = _prem(a, b)
        if not r:
            a = b
            b = {}
            break
        cr = _content_rec(r.values())
        a, b = b, {k: p.exact_div(cr) for k, p in r.items()}
    if b:
        # constant (in the main variable) nonzero remainder: primitive gcd is 1
        a = {0: LaurentPoly.one(f.vars[:-1])}
    result = {k: p * c for k, p in a.items()}
    return _join_last(result, f.vars)


def _content_rec(coeffs: Iterable[LaurentPoly]) -> LaurentPoly:
    g = None
    for p in coeffs:
        g = p if g is None else _shift_to_poly(_gcd_rec(g, p))
        if g.is_constant() and abs(g.constant_value()) == 1:
            break
    return g


def _prem(a: Dict[int, LaurentPoly], b: Dict[int, LaurentPoly]) -> Dict[int, LaurentPoly]:
    """Pseudo-remainder of ``a`` by ``b`` (dicts degree -> coefficient)."""
    a = dict(a)
    db = max(b)
    lb = b[db]
    while a and max(a) >= db:
        da = max(a)
        la = a[da]
        shift = da - db
        new = {}
        for k, p in a.items():
            new[k] = p * lb
        for k, p in b.items():
            kk = k + shift
            new[kk] = new.get(kk, LaurentPoly.zero(p.vars)) - p * la
        a = {k: p for k, p in new.items() if p.terms}
    return a


def gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in ``Z[x1^±1, ..., xk^±1]``, unit-normalized.

    Integer content is included, so ``gcd(2*t + 2, 4) == 2``.
    """
    g = f._coerce(g)
    if not f.terms:
        return g.unit_normal()
    if not g.terms:
        return f.unit_normal()
    return _gcd_rec(_shift_to_poly(f), _shift_to_poly(g)).unit_normal()


def gcd_univariate(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    used = set(f.used_vars()) | set(f._coerce(g).used_vars())
    if len(used) > 1:
        raise PolynomialError(f"univariate gcd called with variables {sorted(used)}")
    return gcd(f, g)


def gcd_bivariate(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    used = set(f.used_vars()) | set(f._coerce(g).used_vars())
    if len(used) > 2:
        raise PolynomialError(f"bivariate gcd called with variables {sorted(used)}")
    return gcd(f, g)


def gcd_list(polys: Iterable[LaurentPoly], variables=("t",)) -> LaurentPoly:
    """gcd of a generator list; the empty list and the all-zero list give 0."""
    result = LaurentPoly.zero(variables)
    for p in polys:
        if not p.terms:
            continue
        result = p.unit_normal() if not result.terms else gcd(result, p)
        if result.is_constant() and result.constant_value() == 1:
            break
    return result


def divides(f: LaurentPoly, g: LaurentPoly) -> bool:
    return f.divides(g)


# ---------------------------------------------------------------------------
# matrices


class PolyMatrix:
    """Rectangular matrix of Laurent polynomials in a common variable tuple."""

    def __init__(self, rows: Sequence[Sequence[LaurentPoly | int]], ncols: int | None = None, variables=("t",)):
        variables = _as_vars(variables)
        self.vars = variables
        self.rows = [
            [x if isinstance(x, LaurentPoly) else LaurentPoly.const(x, variables) for x in row] for row in rows
        ]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for row in self.rows:
            if len(row) != ncols:
                raise PolynomialError("ragged matrix")

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [row[j] for row in self.rows]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.rows[i][j] for j in cols] for i in rows], len(cols), self.vars)

    def drop_columns(self, cols: Iterable[int]) -> "PolyMatrix":
        drop = set(cols)
        keep = [j for j in range(self.ncols) if j not in drop]
        return self.submatrix(range(self.nrows), keep)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise PolynomialError("shape mismatch")
        zero = LaurentPoly.zero(self.vars)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, other.ncols, self.vars)

    def map(self, fn) -> "PolyMatrix":
        rows = [[fn(x) for x in row] for row in self.rows]
        new_vars = rows[0][0].vars if rows and rows[0] else self.vars
        return PolyMatrix(rows, self.ncols, new_vars)

    def det(self) -> LaurentPoly:
        return det(self)

    def reduce_units(self) -> Tuple["PolyMatrix", LaurentPoly]:
        """Eliminate unit pivots; returns the reduced matrix and the accumulated unit."""
        rows, unit = _eliminate_units([list(r) for r in self.rows], self.ncols, self.vars)
        ncols = len(rows[0]) if rows else self.ncols - (self.nrows - len(rows))
        return PolyMatrix(rows, ncols, self.vars), unit

    def minors(self, k: int) -> Iterable[LaurentPoly]:
        from itertools import combinations

        if k <= 0:
            yield LaurentPoly.one(self.vars)
            return
        if k > min(self.nrows, self.ncols):
            return
        for rs in combinations(range(self.nrows), k):
            for cs in combinations(range(self.ncols), k):
                yield det(self.submatrix(rs, cs))

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols}, vars={self.vars})"


def _eliminate_units(rows, ncols, variables):
    """Repeatedly pivot on ±monomial entries (Schur complement).

    Returns the remaining rows and the signed product of pivots, so that for a
    square input ``det(M) == unit * det(rest)``.  Pivoting preserves all the
    elementary ideals of a presentation matrix.
    """
    unit = LaurentPoly.one(variables)
    cols = list(range(ncols))
    rows = [list(r) for r in rows]
    while True:
        best = None
        for i, row in enumerate(rows):
            for jj, x in enumerate(row):
                if x.is_unit():
                    weight = sum(1 for y in row if y.terms) + sum(1 for r in rows if r[jj].terms)
                    if best is None or weight < best[0]:
                        best = (weight, i, jj)
        if best is None:
            break
        _, i, jj = best
        piv = rows[i][jj]
        inv = piv.unit_inverse()
        # sign of moving (i, jj) to the top-left corner
        sign = -1 if (i + jj) % 2 else 1
        unit = unit * piv.scale(sign)
        prow = rows[i]
        new_rows = []
        for r, row in enumerate(rows):
            if r == i:
                continue
            f = row[jj]
            if f.terms:
                fi = f * inv
                new_row = [row[k] - fi * prow[k] for k in range(len(row)) if k != jj]
            else:
                new_row = [row[k] for k in range(len(row)) if k != jj]
            new_rows.append(new_row)
        rows = new_rows
        cols.pop(jj)
        if not rows:
            break
    return rows, unit


def det_bareiss(m: PolyMatrix) -> LaurentPoly:
    """Fraction-free Bareiss elimination with exact Laurent division."""
    n = m.nrows
    if n != m.ncols:
        raise PolynomialError("determinant of a non-square matrix")
    if n == 0:
        return LaurentPoly.one(m.vars)
    a = [list(r) for r in m.rows]
    sign = 1
    prev = LaurentPoly.one(m.vars)
    for k in range(n - 1):
        if not a[k][k].terms:
            for r in range(k + 1, n):
                if a[r][k].terms:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(m.vars)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = akk * a[i][j] - aik * a[k][j]
                a[i][j] = num.exact_div(prev) if num.terms else num
            a[i][k] = LaurentPoly.zero(m.vars)
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def det(m: PolyMatrix) -> LaurentPoly:
    """Exact determinant: unit pivots first, then Bareiss on what is left."""
    if m.nrows != m.ncols:
        raise PolynomialError("determinant of a non-square matrix")
    if m.nrows == 0:
        return LaurentPoly.one(m.vars)
    rows, unit = _eliminate_units(m.rows, m.ncols, m.vars)
    if not rows:
        return unit
    return unit * det_bareiss(PolyMatrix(rows, len(rows[0]), m.vars))


def det_cofactor(m: PolyMatrix) -> LaurentPoly:
    """Laplace expansion along the first row (slow; used as an oracle)."""
    n = m.nrows
    if n == 0:
        return LaurentPoly.one(m.vars)
    if n == 1:
        return m.rows[0][0]
    total = LaurentPoly.zero(m.vars)
    for j in range(n):
        x = m.rows[0][j]
        if not x.terms:
            continue
        sub = m.submatrix(range(1, n), [k for k in range(n) if k != j])
        term = x * det_cofactor(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------------------
# cyclotomic arithmetic


def _int_poly_divmod(num: Sequence[int], den: Sequence[int]) -> Tuple[list, list]:
    """Divide coefficient lists (index = degree) by a monic polynomial."""
    num = list(num)
    if den[-1] != 1:
        raise PolynomialError("divisor must be monic")
    dd = len(den) - 1
    q = [0] * max(len(num) - dd, 1)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for i, d in enumerate(den):
                num[k - dd + i] -= c * d
    r = num[:dd] if dd else []
    return q, r


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise PolynomialError("cyclotomic index must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, r = _int_poly_divmod(num, cyclotomic_coeffs(d))
            if any(r):
                raise AssertionError("cyclotomic division not exact")
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def cyclotomic_poly(n: int, var: str = "s", variables=None) -> LaurentPoly:
    variables = _as_vars(variables) if variables is not None else (var,)
    i = variables.index(var)
    terms = {}
    for k, c in enumerate(cyclotomic_coeffs(n)):
        if c:
            e = [0] * len(variables)
            e[i] = k
            terms[tuple(e)] = c
    return LaurentPoly._raw(terms, variables)


class CyclotomicElt:
    """Element of ``Z[x]/(Phi_p(x))``, i.e. of ``Z[zeta_p]``."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Sequence[int], p: int):
        self.p = p
        phi = cyclotomic_coeffs(p)
        dd = len(phi) - 1
        coeffs = list(coeffs)
        if len(coeffs) > dd:
            _, coeffs = _int_poly_divmod(coeffs, phi)
        coeffs = list(coeffs) + [0] * (dd - len(coeffs))
        self.coeffs = tuple(coeffs)

    @classmethod
    def zeta_power(cls, k: int, p: int) -> "CyclotomicElt":
        k %= p
        c = [0] * (k + 1)
        c[k] = 1
        return cls(c, p)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        return CyclotomicElt([a + b for a, b in zip(self.coeffs, other.coeffs)], self.p)

    def __neg__(self):
        return CyclotomicElt([-a for a in self.coeffs], self.p)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicElt([a * other for a in self.coeffs], self.p)
        out = [0] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return CyclotomicElt(out, self.p)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, CyclotomicElt) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"CyclotomicElt({list(self.coeffs)}, p={self.p})"


class CyclotomicPoly:
    """Laurent polynomial in the remaining variables with ``Z[zeta_p]`` coefficients."""

    def __init__(self, terms: Mapping[Exponent, CyclotomicElt], variables: Tuple[str, ...], p: int):
        self.p = p
        self.vars = variables
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other: "CyclotomicPoly") -> "CyclotomicPoly":
        out: Dict[Exponent, CyclotomicElt] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return CyclotomicPoly(out, self.vars, self.p)

    def __eq__(self, other):
        return isinstance(other, CyclotomicPoly) and (self.p, self.vars, self.terms) == (
            other.p,
            other.vars,
            other.terms,
        )

    def __repr__(self):
        return f"CyclotomicPoly({self.terms}, vars={self.vars}, p={self.p})"


def cyclotomic_eval(f: LaurentPoly, p: int, var: str = "v") -> CyclotomicPoly:
    """Send ``var`` to a primitive p-th root of unity, exactly.

    Exponents of ``var`` are reduced mod p first (``zeta^p == 1``), then the
    coefficient polynomial is reduced modulo ``Phi_p``.
    """
    if p < 2:
        raise PolynomialError("p must be at least 2")
    if var not in f.vars:
        f = LaurentPoly._raw({e + (0,): c for e, c in f.terms.items()}, f.vars + (var,))
    i = f.vars.index(var)
    rest = f.vars[:i] + f.vars[i + 1:]
    buckets: Dict[Exponent, list] = {}
    for e, c in f.terms.items():
        key = e[:i] + e[i + 1:]
        coeffs = buckets.setdefault(key, [0] * p)
        coeffs[e[i] % p] += c
    return CyclotomicPoly({k: CyclotomicElt(c, p) for k, c in buckets.items()}, rest, p)


def monomials_in_window(variables, radius: int) -> Iterable[LaurentPoly]:
    """All units ``±x^a...`` with every exponent in ``[-radius, radius]``."""
    variables = _as_vars(variables)
    for e in product(range(-radius, radius + 1), repeat=len(variables)):
        for c in (1, -1):
            yield LaurentPoly.monomial(e, c, variables)
