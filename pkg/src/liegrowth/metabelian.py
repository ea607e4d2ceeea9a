"""The free metabelian Lie algebra on d generators, with exact normal forms.

Elements are rational combinations of basis monomials. A basis monomial of
degree n >= 2 is a left-normed word (w0, w1, ..., w_{n-1}) of generator
indices with

    w0 > w1 <= w2 <= ... <= w_{n-1},

i.e. the second letter is the minimum and the tail is sorted; degree-1
monomials are the generators themselves. Every left-normed word reduces to a
combination of these using three facts that hold in any metabelian algebra:

* antisymmetry in the first two letters,
* letters at positions >= 2 commute freely (the prefix of length 2 already
  lies in the derived subalgebra, which is abelian),
* the degree-3 rewrite [c,b,a] = [c,a,b] - [b,a,c] for a <= b <= c, applied
  at the first three positions.

The rewrite terminates after at most one degree-3 step per word because it
moves the global minimum letter into position 1. Soundness of the whole
normal form is certified externally by the wreath-model embedding (see
`wreath.certify_embedding`) rather than trusted.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

from .expr import Generator, LieExpr, left_normalize

Monomial = tuple[int, ...]


def is_basis_monomial(word: Sequence[int]) -> bool:
    if len(word) == 0:
        return False
    if len(word) == 1:
        return word[0] >= 0
    if word[0] <= word[1]:
        return False
    return all(word[i] <= word[i + 1] for i in range(1, len(word) - 1))


def format_monomial(word: Monomial) -> str:
    if len(word) == 1:
        return f"x{word[0] + 1}"
    return "[" + ",".join(f"x{i + 1}" for i in word) + "]"


class MetabelianElement:
    """Rational combination of basis monomials over x1..xd."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: dict[Monomial, Fraction] | None = None):
        if d < 1:
            raise ValueError("d must be >= 1")
        self.d = d
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for word, coeff in terms.items():
                if not is_basis_monomial(word):
                    raise ValueError(f"not a basis monomial: {word}")
                if any(not 0 <= i < d for i in word):
                    raise ValueError(f"generator index out of range in {word}")
                c = Fraction(coeff)
                if c:
                    clean[tuple(word)] = c
        self.terms = clean

    @classmethod
    def zero(cls, d: int) -> "MetabelianElement":
        return cls(d)

    @classmethod
    def generator(cls, i: int, d: int) -> "MetabelianElement":
        return cls(d, {(i,): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MetabelianElement):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "MetabelianElement") -> "MetabelianElement":
        if self.d != other.d:
            raise ValueError("elements over different generator counts")
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w, Fraction(0)) + c
            if acc:
                out[w] = acc
            else:
                out.pop(w, None)
        res = MetabelianElement.zero(self.d)
        res.terms = out
        return res

    def __neg__(self) -> "MetabelianElement":
        res = MetabelianElement.zero(self.d)
        res.terms = {w: -c for w, c in self.terms.items()}
        return res

    def __sub__(self, other: "MetabelianElement") -> "MetabelianElement":
        return self + (-other)

    def __mul__(self, scalar: Fraction | int) -> "MetabelianElement":
        c = Fraction(scalar)
        res = MetabelianElement.zero(self.d)
        if c:
            res.terms = {w: cc * c for w, cc in self.terms.items()}
        return res

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for word, coeff in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            m = format_monomial(word)
            if coeff == 1:
                pieces.append(m)
            elif coeff == -1:
                pieces.append(f"-{m}")
            else:
                pieces.append(f"{coeff}*{m}")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"MetabelianElement(d={self.d}, {self!s})"


# ----------------------------------------------------------------- normal form

def normalize_word(word: Sequence[int], d: int) -> MetabelianElement:
    """Normal form of the left-normed word with the given generator indices."""
    w = tuple(word)
    if not w:
        raise ValueError("empty word")
    if any(not 0 <= i < d for i in w):
        raise ValueError(f"generator index out of range in {w}")
    out = MetabelianElement.zero(d)
    for mono, coeff in _normalize(w).items():
        out = out + MetabelianElement(d, {mono: coeff})
    return out


def _normalize(w: Monomial) -> dict[Monomial, Fraction]:
    if len(w) == 1:
        return {w: Fraction(1)}
    if len(w) == 2:
        i, j = w
        if i == j:
            return {}
        if i > j:
            return {w: Fraction(1)}
        return {(j, i): Fraction(-1)}
    head, second = w[0], w[1]
    rest = tuple(sorted(w[2:]))  # positions >= 2 commute freely
    if head == second:
        return {}
    if head < second:
        return {m: -c for m, c in _normalize((second, head) + rest).items()}
    if second <= rest[0]:
        return {(head, second) + rest: Fraction(1)}
    # move the minimum into position 1: for a <= b <= c,
    # [c,b,a,...] = [c,a,b,...] - [b,a,c,...]
    small, remainder = rest[0], rest[1:]
    out: dict[Monomial, Fraction] = {}
    for m, c in _normalize((head, small, second) + remainder).items():
        out[m] = out.get(m, Fraction(0)) + c
    for m, c in _normalize((second, small, head) + remainder).items():
        acc = out.get(m, Fraction(0)) - c
        if acc:
            out[m] = acc
        else:
            out.pop(m, None)
    return {m: c for m, c in out.items() if c}


def normalize_expr(e: LieExpr, d: int) -> MetabelianElement:
    """Normal form of an arbitrary expression over x-generators.

    The kernel is exactly the second derived ideal: any expression containing
    a bracket of two degree->=2 subtrees maps to 0.
    """
    out = MetabelianElement.zero(d)
    for word, coeff in left_normalize(e).items():
        indices = []
        for g in word:
            if g.kind != "x":
                raise ValueError(f"expected x-generators only, found {g}")
            indices.append(g.index)
        out = out + normalize_word(indices, d) * coeff
    return out


def bracket(p: MetabelianElement, q: MetabelianElement) -> MetabelianElement:
    """Lie bracket of two normal-form elements, re-normalized."""
    if p.d != q.d:
        raise ValueError("elements over different generator counts")
    out = MetabelianElement.zero(p.d)
    for w1, c1 in p.terms.items():
        for w2, c2 in q.terms.items():
            scale = c1 * c2
            if len(w2) == 1:
                out = out + normalize_word(w1 + w2, p.d) * scale
            elif len(w1) == 1:
                out = out - normalize_word(w2 + w1, p.d) * scale
            # both factors in the derived subalgebra: bracket is 0
    return out


# ------------------------------------------------------------ basis and growth

def basis_monomials(d: int, n: int) -> list[Monomial]:
    """Degree-n basis monomials, in deterministic order.

    Degree 1 lists the generators by index. For n >= 2 the tail (positions
    1..n-1, a nondecreasing word) runs in colexicographic order and, within a
    tail, the head runs over the indices strictly above the tail minimum in
    ascending order.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return [(i,) for i in range(d)]
    out: list[Monomial] = []
    for tail in sorted(_nondecreasing_words(d, n - 1), key=lambda t: t[::-1]):
        for head in range(tail[0] + 1, d):
            out.append((head,) + tail)
    return out


def _nondecreasing_words(d: int, k: int) -> Iterator[Monomial]:
    from itertools import combinations_with_replacement

    yield from combinations_with_replacement(range(d), k)


def graded_dim(d: int, n: int) -> int:
    """Dimension of the degree-n component, by the head-index sum formula.

    For n >= 2 this is sum over j = 1..d-1 of (d-j) * C(n-2+d-j, d-j):
    grouping basis monomials by their minimum letter j (0-based j-1), there
    are d-j choices of head and C(n-2+d-j, d-j) tails. Degree 1 is d.
    """
    if d < 1 or n < 1:
        raise ValueError("d and n must be >= 1")
    if n == 1:
        return d
    return sum((d - j) * comb(n - 2 + d - j, d - j) for j in range(1, d))


def graded_dim_closed(d: int, n: int) -> int:
    """Independent closed form: (n-1) * C(n+d-2, n) for n >= 2, d for n = 1."""
    if d < 1 or n < 1:
        raise ValueError("d and n must be >= 1")
    if n == 1:
        return d
    return (n - 1) * comb(n + d - 2, n)


def growth(d: int, n_max: int) -> list[int]:
    """Cumulative dimensions gamma(0..n_max); gamma[0] = 0."""
    gamma = [0]
    total = 0
    for n in range(1, n_max + 1):
        total += graded_dim(d, n)
        gamma.append(total)
    return gamma
