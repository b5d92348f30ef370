"""Exact arithmetic for countable ordinals below w^w, kept in Cantor normal form.

An ordinal is a finite sum  w^k1*c1 + ... + w^km*cm  with k1 > ... > km >= 0
and all ci >= 1.  Exponents are machine ints (word lengths never reach w^w);
coefficients are arbitrary-precision ints.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import total_ordering


class OrdinalError(ArithmeticError):
    pass


class OrdKind(enum.Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """Cantor normal form: tuple of (exponent, coefficient) terms.

    The empty tuple is 0.  Construction validates canonicity, so equal
    ordinals always carry identical term tuples.
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for exp, coeff in self.terms:
            if exp < 0 or coeff < 1:
                raise OrdinalError(f"invalid CNF term ({exp}, {coeff})")
            if prev is not None and exp >= prev:
                raise OrdinalError("CNF exponents must strictly decrease")
            prev = exp

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "Ordinal":
        if n < 0:
            raise OrdinalError("ordinals are non-negative")
        return Ordinal(((0, n),)) if n else Ordinal()

    @staticmethod
    def omega(exp: int = 1, coeff: int = 1) -> "Ordinal":
        """w^exp * coeff (exp may be 0, giving the finite ordinal coeff)."""
        if coeff == 0:
            return Ordinal()
        return Ordinal(((exp, coeff),))

    # -- basic predicates --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or self.terms[0][0] == 0

    def to_int(self) -> int:
        if not self.is_finite:
            raise OrdinalError(f"{self} is not finite")
        return self.terms[0][1] if self.terms else 0

    def kind(self) -> OrdKind:
        if not self.terms:
            return OrdKind.ZERO
        if self.terms[-1][0] == 0:
            return OrdKind.SUCCESSOR
        return OrdKind.LIMIT

    def is_power_of_omega(self) -> bool:
        """True iff the ordinal is w^k for some k >= 0 (so 1 counts, 0 does not)."""
        return len(self.terms) == 1 and self.terms[0][1] == 1

    # -- order -------------------------------------------------------------

    def __lt__(self, other: "Ordinal") -> bool:
        # Term tuples ordered lexicographically realize the ordinal order:
        # higher exponent wins, then coefficient, and a proper prefix is smaller.
        return self.terms < other.terms

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Ordinal") -> "Ordinal":
        if not other.terms:
            return self
        lead = other.terms[0][0]
        kept = tuple(t for t in self.terms if t[0] > lead)
        merged = list(other.terms)
        for exp, coeff in self.terms:
            if exp == lead:
                merged[0] = (lead, coeff + merged[0][1])
                break
        return Ordinal(kept + tuple(merged))

    def __mul__(self, other: "Ordinal") -> "Ordinal":
        if not self.terms or not other.terms:
            return Ordinal()
        lead_exp, lead_coeff = self.terms[0]
        out = Ordinal()
        for exp, coeff in other.terms:
            if exp == 0:
                part = Ordinal(((lead_exp, lead_coeff * coeff),) + self.terms[1:])
            else:
                part = Ordinal(((lead_exp + exp, coeff),))
            out = out + part
        return out

    def __str__(self) -> str:
        return format_ordinal(self)


ZERO = Ordinal()
ONE = Ordinal.from_int(1)
OMEGA = Ordinal.omega()


def sub_left(gamma: Ordinal, gamma_prime: Ordinal) -> Ordinal:
    """The unique delta with gamma + delta = gamma_prime; requires gamma <= gamma_prime."""
    a, b = gamma.terms, gamma_prime.terms
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    if i == len(a):
        return Ordinal(b[i:])
    if i == len(b):
        raise OrdinalError(f"underflow: {gamma} > {gamma_prime}")
    (e, c), (e2, c2) = a[i], b[i]
    if e < e2:
        return Ordinal(b[i:])
    if e == e2 and c < c2:
        return Ordinal(((e, c2 - c),) + b[i + 1:])
    raise OrdinalError(f"underflow: {gamma} > {gamma_prime}")


def div_left(lam: Ordinal, mu: Ordinal) -> tuple[Ordinal, Ordinal]:
    """Quotient and remainder: lam = mu * alpha + rho with rho < mu."""
    if mu.is_zero:
        raise OrdinalError("division by zero")
    alpha = Ordinal()
    rho = lam
    while rho >= mu:
        (l, cl) = rho.terms[0]
        (m, cm) = mu.terms[0]
        if l > m:
            # mu * w^(l-m) * cl has value w^l * cl, the leading chunk of rho.
            term = Ordinal.omega(l - m, cl)
            alpha = alpha + term
            rho = sub_left(Ordinal.omega(l, cl), rho)
        else:
            d = cl // cm
            while d > 0 and mu * Ordinal.from_int(d) > rho:
                d -= 1
            if d == 0:
                break
            alpha = alpha + Ordinal.from_int(d)
            rho = sub_left(mu * Ordinal.from_int(d), rho)
    return alpha, rho


# -- text form ---------------------------------------------------------------

_TERM_RE = re.compile(r"^(?:w(?:\^(\d+))?(?:\*(\d+))?|(\d+))$")


def format_ordinal(a: Ordinal) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for exp, coeff in a.terms:
        if exp == 0:
            parts.append(str(coeff))
        else:
            head = "w" if exp == 1 else f"w^{exp}"
            parts.append(head if coeff == 1 else f"{head}*{coeff}")
    return "+".join(parts)


def parse_ordinal(text: str) -> Ordinal:
    s = text.replace("ω", "w").replace(" ", "")
    if s == "0":
        return Ordinal()
    terms = []
    for pos, chunk in enumerate(s.split("+")):
        m = _TERM_RE.match(chunk)
        if not m:
            raise OrdinalError(f"bad ordinal term {chunk!r} in {text!r} (term {pos})")
        if m.group(3) is not None:
            terms.append((0, int(m.group(3))))
        else:
            exp = int(m.group(1)) if m.group(1) is not None else 1
            coeff = int(m.group(2)) if m.group(2) is not None else 1
            terms.append((exp, coeff))
    try:
        return Ordinal(tuple(terms))
    except OrdinalError as err:
        raise OrdinalError(f"{text!r}: {err}") from None
