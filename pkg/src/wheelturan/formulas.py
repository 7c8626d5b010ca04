"""Exact evaluators for the extremal-number expressions.

Every max-form evaluator scans its whole integer range and breaks ties
towards the smallest parameter.  Closed-form optimizers are only used as
cross-checks (see :func:`closed_form_n0_candidates`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Literal, Sequence

from .errors import DomainError

# Smallest order admitting a family member: one vertex pair on each side.
MIN_FAMILY_ORDER = 4

LiuVariant = Literal["verbatim", "corrected"]


@dataclass(frozen=True)
class FormulaResult:
    value: int
    optimizers: dict[str, int] = field(default_factory=dict)
    asymptotic: bool = True
    note: str = ""


def _argmax(candidates, objective) -> tuple[int, int]:
    best_x, best_v = None, None
    for x in candidates:
        v = objective(x)
        if best_v is None or v > best_v:
            best_x, best_v = x, v
    if best_x is None:
        raise DomainError("empty scan range")
    return best_x, best_v


def turan_part_sizes(n: int, p: int) -> list[int]:
    if p < 1:
        raise DomainError("Turán graph needs p >= 1 parts")
    if n < 0:
        raise DomainError("n must be non-negative")
    q, r = divmod(n, p)
    return [q + 1] * r + [q] * (p - r)


def turan_edges(n: int, p: int) -> int:
    """Edge count of the Turán graph T(n, p)."""
    sizes = turan_part_sizes(n, p)
    return (n * n - sum(s * s for s in sizes)) // 2


def check_family_params(t: int, n1: int, n2: int, k: int) -> None:
    if t < 0:
        raise DomainError(f"clique size t={t} must be >= 0")
    if k < 2:
        raise DomainError(f"wheel parameter k={k} must be >= 2")
    if not n1 >= n2 >= 2:
        raise DomainError(f"need n1 >= n2 >= 2, got n1={n1}, n2={n2}")


def family_edges(t: int, n1: int, n2: int, k: int) -> int:
    """Edges of K_t joined to K_{n1,n2} with floor((k-1)n1/2) edges inside the
    larger side and one edge inside the smaller side."""
    check_family_params(t, n1, n2, k)
    return comb(t, 2) + t * (n1 + n2) + n1 * n2 + (k - 1) * n1 // 2 + 1


def star_path_free_edges(n: int, k: int) -> int:
    """floor((k-1)n/2); exact for {S_{k+1}, P_{2k+1}}-free graphs once n >= 2k."""
    if n < 0 or k < 2:
        raise DomainError("need n >= 0 and k >= 2")
    return (k - 1) * n // 2


def ex_odd_wheel(n: int, k: int) -> FormulaResult:
    """Asymptotic ex(n, W_{2k+1})."""
    if k < 2:
        raise DomainError(f"k={k} must be >= 2")
    if n < MIN_FAMILY_ORDER:
        return FormulaResult(0, {}, True, f"degenerate: n={n} < {MIN_FAMILY_ORDER}")
    if k == 2:
        return FormulaResult((-(-n // 2) + 1) * (n // 2), {"n_0": -(-n // 2)})
    n0, value = _argmax(range(n + 1), lambda a: a * (n - a) + (k - 1) * a // 2 + 1)
    return FormulaResult(value, {"n_0": n0})


def f_value(n: int, t: int, k: int) -> FormulaResult:
    """Largest edge count in the family with a joined K_t on n vertices,
    scanned over the split n1 + n2 = n - t."""
    rest = n - t
    lo, hi = -(-rest // 2), rest - 2
    if t < 0 or lo > hi:
        raise DomainError(f"no family member with t={t} on n={n} vertices")
    n1, value = _argmax(range(lo, hi + 1), lambda a: family_edges(t, a, rest - a, k))
    return FormulaResult(value, {"n_0": n1})


def ex_m_odd_wheels(n: int, k: int, m: int) -> FormulaResult:
    """Asymptotic ex(n, m W_{2k+1}), evaluated from the displayed max
    expression over the valid range of the larger side n_0."""
    if k < 2 or m < 1:
        raise DomainError("need k >= 2 and m >= 1")
    if n < m + 3:
        raise DomainError(f"n={n} too small for m={m}: need n >= m + 3")
    rest = n - m + 1
    lo, hi = -(-rest // 2), rest - 2
    base = comb(m - 1, 2)
    n0, value = _argmax(
        range(lo, hi + 1),
        lambda a: base + (k - 1) * a // 2 + (a + m - 1) * (n - m + 1) - a * a + 1)
    return FormulaResult(value, {"n_0": n0})


def closed_form_n0_candidates(n: int, k: int, m: int) -> set[int]:
    """Integer roundings of (floor((k-1)/2) + n - m + 1)/2 and its ceiling twin."""
    out = set()
    for half in ((k - 1) // 2, -(-(k - 1) // 2)):
        c = half + n - m + 1
        out |= {c // 2, -(-c // 2)}
    return out


def g_value(n1: int, n2: int, m: int, k: int) -> FormulaResult:
    """max over j of e(K^{m-1}_{n1-j, n2-(m-1-j)}); invalid j are skipped."""
    if m < 1 or k < 2:
        raise DomainError("need m >= 1 and k >= 2")
    valid = [j for j in range(m) if n1 - j >= n2 - (m - 1 - j) >= 2]
    if not valid:
        raise DomainError(f"no valid j for n1={n1}, n2={n2}, m={m}")
    j, value = _argmax(valid, lambda j: family_edges(m - 1, n1 - j, n2 - (m - 1 - j), k))
    return FormulaResult(value, {"j": j}, asymptotic=False)


def ex_even_wheel_mix(n: int, h: int) -> FormulaResult:
    """Asymptotic ex(n, W^h) for a wheel union containing h >= 1 even wheels."""
    if h < 1:
        raise DomainError("h must be >= 1")
    if n < h - 1:
        raise DomainError(f"n={n} < h-1={h - 1}")
    return FormulaResult(comb(h - 1, 2) + (h - 1) * (n - h + 1) + turan_edges(n - h + 1, 3))


def kst_upper_bound(n: int, a: int, b: int) -> float:
    """Kővári–Sós–Turán upper bound on ex(n, K_{a,b})."""
    if not b >= a >= 1:
        raise DomainError("need b >= a >= 1")
    return (b - 1) ** (1 / a) / 2 * n ** (2 - 1 / a) + (a - 1) / 2 * n


def _check_nonincreasing(seq: Sequence[int], least: int, what: str) -> None:
    if not seq:
        raise DomainError(f"{what} must be nonempty")
    if any(x < least for x in seq):
        raise DomainError(f"{what} entries must be >= {least}")
    if any(a < b for a, b in zip(seq, seq[1:])):
        raise DomainError(f"{what} must be nonincreasing")


def liu_term(n: int, i: int, d: int, variant: LiuVariant = "verbatim") -> int:
    """The i-th term of the star-forest maximum (i is 1-based)."""
    span = n - i - 1 if variant == "verbatim" else n - i + 1
    return (i - 1) * span + comb(i - 1, 2) + (d - 1) * span // 2


def ex_star_forest(n: int, degrees: Sequence[int], variant: LiuVariant = "verbatim") -> FormulaResult:
    """Asymptotic ex(n, F) for the star forest with the given centre degrees.

    ``variant="corrected"`` replaces every (n-i-1) by (n-i+1), which
    reproduces ex(n, K_{1,d}) = floor((d-1)n/2) for a single star.
    """
    _check_nonincreasing(degrees, 1, "degrees")
    if variant not in ("verbatim", "corrected"):
        raise DomainError(f"unknown variant {variant!r}")
    i, value = _argmax(range(1, len(degrees) + 1),
                       lambda i: liu_term(n, i, degrees[i - 1], variant))
    return FormulaResult(value, {"i": i}, note=variant)


@dataclass(frozen=True)
class ConjectureValue:
    form_a: FormulaResult
    form_b: FormulaResult

    @property
    def agree(self) -> bool:
        return self.form_a.value == self.form_b.value


def conjecture_ex(n: int, ks: Sequence[int], variant: LiuVariant = "verbatim") -> ConjectureValue:
    """Both displayed forms of the conjectured ex(n, union of W_{2k_i+1}).

    Form A maximises n_0(n-n_0) + ex(n_0, union of S_{k_i+1}) + 1 using
    :func:`ex_star_forest`; form B is the expanded double maximum written out
    term by term.  Both honour ``variant``.  Nothing is assumed about their
    equality.
    """
    _check_nonincreasing(ks, 2, "k list")

    def form_a(n0: int) -> int:
        return n0 * (n - n0) + ex_star_forest(n0, ks, variant).value + 1

    n0_a, val_a = _argmax(range(1, n + 1), form_a)
    opt_a = {"n_0": n0_a, "i": ex_star_forest(n0_a, ks, variant).optimizers["i"]}

    shift = 1 if variant == "corrected" else -1

    def form_b(pair: tuple[int, int]) -> int:
        i, n0 = pair
        k = ks[i - 1]
        return (n0 * (n - n0) + (i - 1) * (n0 - i + shift) + comb(i - 1, 2)
                + (k - 1) * (n0 - i + shift) // 2 + 1)

    (i_b, n0_b), val_b = _argmax(
        ((i, n0) for i in range(1, len(ks) + 1) for n0 in range(1, n + 1)), form_b)
    return ConjectureValue(FormulaResult(val_a, opt_a), FormulaResult(val_b, {"i": i_b, "n_0": n0_b}))
