"""Exact growth functions by filtration search, plus closed-form counts.

gamma(n) is the dimension of the span of all bracket monomials of length at
most n in the chosen generating set. The search maintains the filtration
X^{n+1} = X^n + [X^n, X^1] with exact rational rank bookkeeping: left-normed
monomials of a given length span all monomials of that length, so bracketing
each newly independent element with the generators is enough.

Three generating sets are supported: the free metabelian algebra on x1..xd,
the plain wreath model on {a_i, t_i}, and the extended model on
{a_i, t_i, u_i} (m = n = d throughout).

For the extended model two counting functions accompany the search. A module
monomial a_i * t^beta first appears at level 1 + sum_j ceil(beta_j / 2)
(u-letters contribute exponent pairs), which yields the exact graded counts
used to extend growth sequences beyond the search range. Counting towers
[a_i, t_{j1}, ..., t_{js}] by letters instead gives

    spanning_count(n) = 3d + d * sum_{s=1}^{n-1} C(s+d-1, d-1),

which undercounts reachability: one u-letter buys two degrees, so the exact
gamma(n) exceeds this already at n = 2. The valid letter-count bound caps the
module degree at 2(n-1):

    growth_bound(n) = 3d + d * sum_{s=1}^{2(n-1)} C(s+d-1, d-1),

and growth_bound(n) == spanning_count(2n-1), so both count the same towers up
to the linear rescaling under which growth types are compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from . import metabelian
from .metabelian import MetabelianElement
from .rowspace import RowSpace
from .wreath import MODE_W, MODE_WPLUS, WreathElement, wreath_bracket

MODE_METABELIAN = "metabelian"
GROWTH_MODES = (MODE_METABELIAN, MODE_W, MODE_WPLUS)


@dataclass
class GrowthReport:
    mode: str
    d: int
    gamma: list[int]  # gamma[0] == 0
    graded: list[int]  # graded[n] = gamma[n] - gamma[n-1]

    def n_max(self) -> int:
        return len(self.gamma) - 1


def growth_bfs(mode: str, d: int, n_max: int, generator_order: Sequence[int] | None = None) -> GrowthReport:
    """Exact gamma(1..n_max) for the chosen mode.

    generator_order optionally permutes the generating set before the search;
    the resulting dimensions are identical (the span does not depend on
    insertion order), which the tests exercise.
    """
    if mode not in GROWTH_MODES:
        raise ValueError(f"unknown growth mode {mode!r}")
    if d < 1 or n_max < 1:
        raise ValueError("d and n_max must be >= 1")
    if mode == MODE_METABELIAN:
        gens: list = [MetabelianElement.generator(i, d) for i in range(d)]
        brack: Callable = metabelian.bracket
        coords = lambda e: dict(e.terms)
        guard = None
    else:
        gens = [WreathElement.gen_a(k, d, d) for k in range(d)]
        gens += [WreathElement.gen_t(i, d, d) for i in range(d)]
        if mode == MODE_WPLUS:
            gens += [WreathElement.gen_u(i, d, d) for i in range(d)]
        brack = lambda p, q: wreath_bracket(p, q, mode)
        coords = lambda e: e.coords()
        cap = 2 * (n_max - 1)

        def guard(elem: WreathElement, level: int) -> None:
            # each letter raises module degree by at most 2
            deg = elem.module_degree()
            if deg > min(2 * (level - 1), cap):
                raise ArithmeticError(
                    f"module degree {deg} overflows the level-{level} cap"
                )

    if generator_order is not None:
        if sorted(generator_order) != list(range(len(gens))):
            raise ValueError("generator_order must be a permutation")
        gens = [gens[i] for i in generator_order]

    space = RowSpace()
    gamma = [0]
    frontier = []
    for g in gens:
        if space.add(coords(g)):
            frontier.append(g)
    gamma.append(space.rank)
    for level in range(2, n_max + 1):
        fresh = []
        for e in frontier:
            for g in gens:
                cand = brack(e, g)
                if guard is not None:
                    guard(cand, level)
                vec = coords(cand)
                if vec and space.add(vec):
                    fresh.append(cand)
        gamma.append(space.rank)
        frontier = fresh
    graded = [0] + [gamma[k] - gamma[k - 1] for k in range(1, n_max + 1)]
    if mode == MODE_WPLUS and gamma != wplus_gamma_closed(d, n_max):
        raise ArithmeticError("filtration search disagrees with the closed-form count")
    return GrowthReport(mode=mode, d=d, gamma=gamma, graded=graded)


# ---------------------------------------------------------- closed-form counts

def _ceil_weight_counts(d: int, s_max: int) -> list[int]:
    """counts[s] = #{beta in N^d : sum_j ceil(beta_j/2) = s}.

    Per coordinate the weight generating function is (1+t)/(1-t); this
    multiplies d of them by repeated shift-add and prefix summation.
    """
    c = [0] * (s_max + 1)
    c[0] = 1
    for _ in range(d):
        c = [c[i] + (c[i - 1] if i > 0 else 0) for i in range(s_max + 1)]
        for i in range(1, s_max + 1):
            c[i] += c[i - 1]
    return c


def wplus_graded_dims(d: int, n_max: int) -> list[int]:
    """Exact graded dimensions a_n of the extended-model filtration.

    a_1 = 3d (the generators); for n >= 2, a_n = d * #{beta : sum_j
    ceil(beta_j/2) = n-1}, since a module monomial a_i * t^beta is first
    reachable by a word of 1 + sum_j ceil(beta_j/2) letters.
    """
    if d < 1 or n_max < 1:
        raise ValueError("d and n_max must be >= 1")
    counts = _ceil_weight_counts(d, max(n_max - 1, 0))
    out = [0] * (n_max + 1)
    out[1] = 3 * d
    for n in range(2, n_max + 1):
        out[n] = d * counts[n - 1]
    return out


def wplus_gamma_closed(d: int, n_max: int) -> list[int]:
    graded = wplus_graded_dims(d, n_max)
    gamma = [0]
    for n in range(1, n_max + 1):
        gamma.append(gamma[-1] + graded[n])
    return gamma


def w_gamma_closed(d: int, n_max: int) -> list[int]:
    """Plain model: gamma(n) = d + d * C(n-1+d, d) (torus plus module monomials)."""
    return [0] + [d + d * comb(n - 1 + d, d) for n in range(1, n_max + 1)]


def wplus_spanning_count(d: int, n: int) -> int:
    """Letter count of the module towers of torus length < n, plus generators."""
    return 3 * d + d * sum(comb(s + d - 1, d - 1) for s in range(1, n))


def wplus_growth_bound(d: int, n: int) -> int:
    """Valid exact upper bound for gamma(n): tower length capped at 2(n-1)."""
    return 3 * d + d * sum(comb(s + d - 1, d - 1) for s in range(1, 2 * (n - 1) + 1))
