"""Concrete wreath-product Lie models over a polynomial torus.

An element lives in the split extension B + T where B is the free
k[t1..tn]-module on module vectors a1..am and T is an abelian torus. In the
plain model ("W") the torus is spanned by t1..tn acting on B by
multiplication; the extended model ("Wplus") adjoins u1..un acting as t_i^2.
The bracket of p = (b_p, tau_p) and q = (b_q, tau_q) is

    [p, q] = b_p * act(tau_q) - b_q * act(tau_p)

with zero torus part: the torus is abelian and B is an abelian ideal, so
every commutator lands inside B.

The Magnus-style embedding sends the i-th free metabelian generator to
a_i + t_i (with m = n = d). It is certified, not assumed: per-degree exact
rank computations check that embedded basis monomials stay independent, and
randomized checks confirm the homomorphism property.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import metabelian
from .expr import Generator, LieExpr, evaluate, left_normed, random_expr
from .metabelian import MetabelianElement
from .poly import MultiPoly
from .rowspace import RowSpace

MODE_W = "W"
MODE_WPLUS = "Wplus"
MODES = (MODE_W, MODE_WPLUS)

_ZERO = Fraction(0)


class ModeMismatchError(ValueError):
    pass


class WreathElement:
    """Module part (m polynomials in t1..tn) plus torus coefficients.

    tor_t[i] and tor_u[i] are the coefficients of t_{i+1} and u_{i+1}. The
    u-block must stay zero when the element is used in mode "W".
    """

    __slots__ = ("m", "n", "module", "tor_t", "tor_u")

    def __init__(
        self,
        m: int,
        n: int,
        module: Iterable[MultiPoly] | None = None,
        tor_t: Iterable[Fraction | int] | None = None,
        tor_u: Iterable[Fraction | int] | None = None,
    ):
        if m < 1 or n < 1:
            raise ValueError("m and n must be >= 1")
        self.m = m
        self.n = n
        mod = tuple(module) if module is not None else tuple(MultiPoly.zero(n) for _ in range(m))
        if len(mod) != m or any(p.nvars != n for p in mod):
            raise ValueError("module part must be m polynomials in n variables")
        self.module = mod
        tt = tuple(Fraction(c) for c in tor_t) if tor_t is not None else (_ZERO,) * n
        tu = tuple(Fraction(c) for c in tor_u) if tor_u is not None else (_ZERO,) * n
        if len(tt) != n or len(tu) != n:
            raise ValueError("torus parts must have length n")
        self.tor_t = tt
        self.tor_u = tu

    @classmethod
    def zero(cls, m: int, n: int) -> "WreathElement":
        return cls(m, n)

    @classmethod
    def gen_a(cls, k: int, m: int, n: int) -> "WreathElement":
        if not 0 <= k < m:
            raise ValueError(f"module index {k} out of range")
        mod = [MultiPoly.zero(n) for _ in range(m)]
        mod[k] = MultiPoly.constant(n, 1)
        return cls(m, n, mod)

    @classmethod
    def gen_t(cls, i: int, m: int, n: int) -> "WreathElement":
        if not 0 <= i < n:
            raise ValueError(f"torus index {i} out of range")
        tt = [_ZERO] * n
        tt[i] = Fraction(1)
        return cls(m, n, None, tt)

    @classmethod
    def gen_u(cls, i: int, m: int, n: int) -> "WreathElement":
        if not 0 <= i < n:
            raise ValueError(f"torus index {i} out of range")
        tu = [_ZERO] * n
        tu[i] = Fraction(1)
        return cls(m, n, None, None, tu)

    def is_zero(self) -> bool:
        return (
            all(p.is_zero() for p in self.module)
            and not any(self.tor_t)
            and not any(self.tor_u)
        )

    def __bool__(self) -> bool:
        return not self.is_zero()

    def has_u_component(self) -> bool:
        return any(self.tor_u)

    def _check_shape(self, other: "WreathElement") -> None:
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("elements from different models")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WreathElement):
            return NotImplemented
        return (
            (self.m, self.n) == (other.m, other.n)
            and self.module == other.module
            and self.tor_t == other.tor_t
            and self.tor_u == other.tor_u
        )

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "WreathElement") -> "WreathElement":
        self._check_shape(other)
        return WreathElement(
            self.m,
            self.n,
            [p + q for p, q in zip(self.module, other.module)],
            [a + b for a, b in zip(self.tor_t, other.tor_t)],
            [a + b for a, b in zip(self.tor_u, other.tor_u)],
        )

    def __neg__(self) -> "WreathElement":
        return WreathElement(
            self.m,
            self.n,
            [-p for p in self.module],
            [-c for c in self.tor_t],
            [-c for c in self.tor_u],
        )

    def __sub__(self, other: "WreathElement") -> "WreathElement":
        return self + (-other)

    def __mul__(self, scalar: Fraction | int) -> "WreathElement":
        c = Fraction(scalar)
        return WreathElement(
            self.m,
            self.n,
            [p * c for p in self.module],
            [a * c for a in self.tor_t],
            [a * c for a in self.tor_u],
        )

    __rmul__ = __mul__

    def module_degree(self) -> int:
        """Max total degree across module polynomials; -1 if the module part is 0."""
        return max(p.total_degree() for p in self.module)

    def coords(self) -> dict:
        """Flatten to a sparse vector over disjoint coordinate keys.

        Keys: ("m", k, exps) for module terms, ("t", i) and ("u", i) for the
        torus; all keys are mutually comparable, as the rank engine requires.
        """
        vec: dict = {}
        for k, poly in enumerate(self.module):
            for exps, c in poly.terms.items():
                vec[("m", k, exps)] = c
        for i, c in enumerate(self.tor_t):
            if c:
                vec[("t", i)] = c
        for i, c in enumerate(self.tor_u):
            if c:
                vec[("u", i)] = c
        return vec

    def __str__(self) -> str:
        pieces = []
        for k, poly in enumerate(self.module):
            for exps, coeff in sorted(poly.terms.items()):
                mono = MultiPoly.monomial(self.n, exps, 1)
                unit = str(mono) if any(exps) else ""
                body = f"a{k + 1}" + (f"*{unit}" if unit else "")
                if coeff == 1:
                    pieces.append(body)
                elif coeff == -1:
                    pieces.append(f"-{body}")
                else:
                    pieces.append(f"{coeff}*{body}")
        for sym, block in (("t", self.tor_t), ("u", self.tor_u)):
            for i, coeff in enumerate(block):
                if not coeff:
                    continue
                body = f"{sym}{i + 1}"
                if coeff == 1:
                    pieces.append(body)
                elif coeff == -1:
                    pieces.append(f"-{body}")
                else:
                    pieces.append(f"{coeff}*{body}")
        if not pieces:
            return "0"
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"WreathElement(m={self.m}, n={self.n}, {self!s})"


# --------------------------------------------------------------------- bracket

def action_poly(e: WreathElement) -> MultiPoly:
    """The polynomial by which the torus part of e acts on the module."""
    out = MultiPoly.zero(e.n)
    for i, c in enumerate(e.tor_t):
        if c:
            out = out + MultiPoly.variable(e.n, i) * c
    for i, c in enumerate(e.tor_u):
        if c:
            out = out + MultiPoly.variable(e.n, i, 2) * c
    return out


def wreath_bracket(p: WreathElement, q: WreathElement, mode: str = MODE_WPLUS) -> WreathElement:
    """[p, q] = module(p) * act(q) - module(q) * act(p); torus part is zero."""
    if mode not in MODES:
        raise ModeMismatchError(f"unknown mode {mode!r}")
    p._check_shape(q)
    if mode == MODE_W and (p.has_u_component() or q.has_u_component()):
        raise ModeMismatchError("u-component present in mode W")
    act_p = action_poly(p)
    act_q = action_poly(q)
    module = [bp * act_q - bq * act_p for bp, bq in zip(p.module, q.module)]
    return WreathElement(p.m, p.n, module)


def standard_assignment(m: int, n: int, mode: str = MODE_WPLUS) -> dict[Generator, WreathElement]:
    """Generator -> model element map: a_k, t_i, and (in Wplus) u_i."""
    out: dict[Generator, WreathElement] = {}
    for k in range(m):
        out[Generator("a", k)] = WreathElement.gen_a(k, m, n)
    for i in range(n):
        out[Generator("t", i)] = WreathElement.gen_t(i, m, n)
    if mode == MODE_WPLUS:
        for i in range(n):
            out[Generator("u", i)] = WreathElement.gen_u(i, m, n)
    return out


# ------------------------------------------------------------------- embedding

def magnus_generator_images(d: int) -> dict[Generator, WreathElement]:
    """x_i -> a_i + t_i in the model with m = n = d."""
    return {
        Generator("x", i): WreathElement.gen_a(i, d, d) + WreathElement.gen_t(i, d, d)
        for i in range(d)
    }


def magnus_embedding(elem: MetabelianElement, d: int | None = None) -> WreathElement:
    """Image of a normal-form element under x_i -> a_i + t_i (mode W)."""
    if d is None:
        d = elem.d
    elif d != elem.d:
        raise ValueError("d does not match the element")
    images = magnus_generator_images(d)
    brack = lambda p, q: wreath_bracket(p, q, MODE_W)
    total = WreathElement.zero(d, d)
    for word, coeff in sorted(elem.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
        val = images[Generator("x", word[0])]
        for i in word[1:]:
            val = brack(val, images[Generator("x", i)])
        total = total + val * coeff
    return total


@dataclass
class EmbeddingReport:
    d: int
    n_max: int
    ranks: list[tuple[int, int, int]]  # (degree, rank, expected)
    hom_checks: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def certify_embedding(d: int, n_max: int, seed: int = 0, trials: int = 25) -> EmbeddingReport:
    """Certify injectivity degree by degree, plus the homomorphism property.

    For each degree n <= n_max the images of the degree-n basis monomials are
    flattened to sparse vectors and their exact rank must equal the graded
    dimension; a deficiency reports the offending dependent combination. Then
    `trials` random expressions check that normal form followed by embedding
    equals direct evaluation under x_i -> a_i + t_i.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    report = EmbeddingReport(d=d, n_max=n_max, ranks=[], hom_checks=0)
    for n in range(1, n_max + 1):
        monos = metabelian.basis_monomials(d, n)
        expected = metabelian.graded_dim(d, n)
        space = RowSpace(track=True)
        rank = 0
        for mono in monos:
            elem = MetabelianElement(d, {mono: Fraction(1)})
            image = magnus_embedding(elem)
            grew, combo = space.add_with_witness(image.coords())
            if grew:
                rank += 1
            else:
                deps = " + ".join(
                    f"{c}*{metabelian.format_monomial(monos[i])}" for i, c in sorted(combo.items())
                )
                report.failures.append(
                    f"degree {n}: image of {metabelian.format_monomial(mono)} depends on {deps}"
                )
        report.ranks.append((n, rank, expected))
        if rank != expected:
            report.failures.append(f"degree {n}: rank {rank} != expected {expected}")
    rng = random.Random(seed)
    images = magnus_generator_images(d)
    brack = lambda p, q: wreath_bracket(p, q, MODE_W)
    gens = [Generator("x", i) for i in range(d)]
    for _ in range(trials):
        e = random_expr(rng, gens, rng.randint(1, 6))
        via_normal_form = magnus_embedding(metabelian.normalize_expr(e, d))
        direct = evaluate(e, images, brack)
        report.hom_checks += 1
        if via_normal_form != direct:
            report.failures.append(f"homomorphism property failed on {e!r}")
    return report


# ------------------------------------------------------------------ model laws

@dataclass
class LawReport:
    mode: str
    m: int
    n: int
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _random_element(rng: random.Random, m: int, n: int, mode: str) -> WreathElement:
    module = []
    for _ in range(m):
        terms = {}
        for _ in range(rng.randint(0, 2)):
            exps = tuple(rng.randint(0, 2) for _ in range(n))
            terms[exps] = Fraction(rng.randint(-3, 3))
        module.append(MultiPoly(n, terms))
    tor_t = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
    if mode == MODE_WPLUS:
        tor_u = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
    else:
        tor_u = [_ZERO] * n
    return WreathElement(m, n, module, tor_t, tor_u)


def model_laws_report(
    d: int,
    mode: str = MODE_WPLUS,
    seed: int = 0,
    trials: int = 50,
    span_degree: int = 4,
) -> LawReport:
    """Random checks of the Lie axioms and of the module spanning towers.

    Verifies antisymmetry and the Jacobi identity on random elements, that
    every commutator has zero torus part, that the module part is abelian,
    that the iterated bracket [a_l, t_{j1}, ..., t_{js}] equals the module
    monomial a_l * t_{j1} * ... * t_{js}, and that the towers of torus length
    s span the degree-s module slice (exact rank d * C(s+d-1, d-1)).
    """
    rng = random.Random(seed)
    report = LawReport(mode=mode, m=d, n=d, checked=0)
    brack = lambda p, q: wreath_bracket(p, q, mode)

    def check(ok: bool, message: str) -> None:
        report.checked += 1
        if not ok:
            report.failures.append(message)

    for _ in range(trials):
        p = _random_element(rng, d, d, mode)
        q = _random_element(rng, d, d, mode)
        r = _random_element(rng, d, d, mode)
        check((brack(p, q) + brack(q, p)).is_zero(), f"antisymmetry failed: p={p}, q={q}")
        jac = brack(brack(p, q), r) + brack(brack(q, r), p) + brack(brack(r, p), q)
        check(jac.is_zero(), f"Jacobi failed: p={p}, q={q}, r={r}")
        pq = brack(p, q)
        check(
            not any(pq.tor_t) and not any(pq.tor_u),
            f"commutator left the module: [{p}, {q}] = {pq}",
        )
        b1 = WreathElement(d, d, p.module)
        b2 = WreathElement(d, d, q.module)
        check(brack(b1, b2).is_zero(), f"module part not abelian: {b1}, {b2}")

    # towers [a_l, t_{j1}, ..., t_{js}] against explicit monomials, per degree
    from itertools import combinations_with_replacement

    for s in range(0, span_degree + 1):
        space = RowSpace()
        count = 0
        for l in range(d):
            for js in combinations_with_replacement(range(d), s):
                val = WreathElement.gen_a(l, d, d)
                for j in js:
                    val = brack(val, WreathElement.gen_t(j, d, d))
                exps = [0] * d
                for j in js:
                    exps[j] += 1
                mono = [MultiPoly.zero(d) for _ in range(d)]
                mono[l] = MultiPoly.monomial(d, exps, 1)
                check(
                    val == WreathElement(d, d, mono),
                    f"tower a{l + 1},{js} is not the expected monomial",
                )
                if space.add(val.coords()):
                    count += 1
        from math import comb

        expected = d * comb(s + d - 1, d - 1)
        check(
            count == expected,
            f"towers of torus length {s} span rank {count}, expected {expected}",
        )
    return report
