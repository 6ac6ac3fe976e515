"""Exact integer Laurent polynomials in one formal variable.

Coefficients are Python ints (arbitrary precision), exponents are ints of
either sign.  Equality is exact map equality; the zero polynomial stores no
terms at all.  The same type serves the Kauffman bracket (variable read as A)
and the Jones polynomial (variable read as t).
"""

from __future__ import annotations

from .errors import ZeroScaleError


class Laurent:
    """Immutable map {exponent: nonzero int coefficient}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in dict(coeffs).items():
                if v != 0:
                    c[int(e)] = int(v)
        self._c = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def monomial(coeff: int, exp: int) -> "Laurent":
        return Laurent({exp: coeff})

    # -- ring operations ----------------------------------------------

    def add(self, other: "Laurent") -> "Laurent":
        r = dict(self._c)
        for e, v in other._c.items():
            w = r.get(e, 0) + v
            if w:
                r[e] = w
            else:
                del r[e]
        out = Laurent.__new__(Laurent)
        out._c = r
        return out

    def neg(self) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def sub(self, other: "Laurent") -> "Laurent":
        return self.add(other.neg())

    def mul(self, other: "Laurent") -> "Laurent":
        r: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = r.get(e, 0) + v1 * v2
                if w:
                    r[e] = w
                elif e in r:
                    del r[e]
        out = Laurent.__new__(Laurent)
        out._c = r
        return out

    def invert_var(self) -> "Laurent":
        """Substitute x -> x^-1 (negate every exponent)."""
        out = Laurent.__new__(Laurent)
        out._c = {-e: v for e, v in self._c.items()}
        return out

    def scale_exponents(self, k: int) -> "Laurent":
        """Substitute x -> x^k for nonzero integer k."""
        if k == 0:
            raise ZeroScaleError("scale_exponents requires k != 0")
        out = Laurent.__new__(Laurent)
        out._c = {e * k: v for e, v in self._c.items()}
        return out

    __add__ = add
    __mul__ = mul
    __sub__ = sub
    __neg__ = neg

    # -- inspection -----------------------------------------------------

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._c.items())

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: 1}

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        return isinstance(other, Laurent) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"Laurent({self._c!r})"

    # -- rendering -------------------------------------------------------

    def render(self, var: str = "t") -> str:
        """Fixed textual form: ascending exponents, ``-t^-4 + t^-3 + t^-1``.

        Coefficient 1 is suppressed, exponent 1 is suppressed, exponent 0
        renders as the bare coefficient.  The zero polynomial renders as 0.
        """
        if not self._c:
            return "0"
        parts = []
        for e, v in self.terms():
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                x = var if e == 1 else f"{var}^{e}"
                body = x if mag == 1 else f"{mag}{x}"
            parts.append(("-" if v < 0 else "+", body))
        sign0, body0 = parts[0]
        text = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


# Module-level aliases matching the operation surface.

def add(p: Laurent, q: Laurent) -> Laurent:
    return p.add(q)


def mul(p: Laurent, q: Laurent) -> Laurent:
    return p.mul(q)


def neg(p: Laurent) -> Laurent:
    return p.neg()


def invert_var(p: Laurent) -> Laurent:
    return p.invert_var()


def scale_exponents(p: Laurent, k: int) -> Laurent:
    return p.scale_exponents(k)


def monomial(coeff: int, exp: int) -> Laurent:
    return Laurent.monomial(coeff, exp)
