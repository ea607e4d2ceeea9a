"""Sparse multivariate polynomials over the rationals.

These are the coefficients of the wreath-product module: every module basis
vector carries one polynomial in the torus variables t1..tn. Exponent vectors
are int tuples with one slot per variable, coefficients are
`fractions.Fraction`, and zero coefficients are never stored. Instances are
immutable by convention; every operation returns a fresh polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Exponents = tuple[int, ...]

_ZERO = Fraction(0)


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, Fraction | int] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps!r} has wrong arity (nvars={nvars})")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps!r}")
                c = Fraction(coeff)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Fraction | int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1) -> "MultiPoly":
        """The monomial t_{index}^power (index is 0-based)."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for nvars={nvars}")
        exps = [0] * nvars
        exps[index] = power
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, exps: Iterable[int], coeff: Fraction | int = 1) -> "MultiPoly":
        return cls(nvars, {tuple(exps): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def _check_arity(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials over different variable sets")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_arity(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            acc = out.get(exps, _ZERO) + c
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        res = MultiPoly.zero(self.nvars)
        res.terms = out
        return res

    def __neg__(self) -> "MultiPoly":
        res = MultiPoly.zero(self.nvars)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly | Fraction | int") -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check_arity(other)
            out: dict[Exponents, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    acc = out.get(key, _ZERO) + c1 * c2
                    if acc:
                        out[key] = acc
                    else:
                        out.pop(key, None)
            res = MultiPoly.zero(self.nvars)
            res.terms = out
            return res
        c = Fraction(other)
        if not c:
            return MultiPoly.zero(self.nvars)
        res = MultiPoly.zero(self.nvars)
        res.terms = {e: cc * c for e, cc in self.terms.items()}
        return res

    def __rmul__(self, other: "Fraction | int") -> "MultiPoly":
        return self * other

    def shift(self, index: int, power: int) -> "MultiPoly":
        """Multiply by t_{index}^power without a general convolution."""
        if power == 0:
            return self
        if not 0 <= index < self.nvars:
            raise ValueError(f"variable index {index} out of range")
        res = MultiPoly.zero(self.nvars)
        res.terms = {
            e[:index] + (e[index] + power,) + e[index + 1:]: c
            for e, c in self.terms.items()
        }
        return res

    def total_degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in sorted(self.terms.items()):
            vars_part = "*".join(
                f"t{i + 1}" if p == 1 else f"t{i + 1}^{p}"
                for i, p in enumerate(exps)
                if p
            )
            if not vars_part:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(vars_part)
            elif coeff == -1:
                pieces.append(f"-{vars_part}")
            else:
                pieces.append(f"{coeff}*{vars_part}")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self!s})"
