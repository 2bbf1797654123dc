"""Linear codes whose check matrices list one column per projective
point: either the degree-d monomial evaluation of the point, or the
coefficients of the d-th power of its linear form.

The minimum distance of such a code is the size of the smallest
dependent column set.  The search therefore walks subset sizes upward
and records minimal supports: subsets that are dependent while every
proper subset is independent.  At the first size where any support
appears, that size is the minimum weight and the supports carry
full-support dependency vectors.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BudgetExceeded
from .field import FieldSpec
from .linalg import Matrix, Vector, _rref_raw, projective_points, rank, span
from .monomials import num_monomials
from .polyalgebra import HomogPoly, linear_form_power
from .veronese import veronese_vector

SEARCH_BUDGET = 10 ** 7


@dataclass(frozen=True)
class CheckMatrix:
    """N x M check matrix plus the source point of each column."""

    field: FieldSpec
    h: Matrix
    column_tags: tuple[Vector, ...]

    @property
    def n_rows(self) -> int:
        return self.h.rows

    @property
    def n_cols(self) -> int:
        return self.h.cols

    def column(self, j: int) -> list:
        return [self.h.at(i, j).v for i in range(self.h.rows)]


def veronese_check_matrix(n: int, d: int, f: FieldSpec) -> CheckMatrix:
    """Columns are the degree-d monomial vectors of the normalized
    projective points of K^n, in point-enumeration order."""
    pts = projective_points(f, n)
    cols = [veronese_vector(t, d) for t in pts]
    big_n = num_monomials(n, d)
    rows = [
        tuple(cols[j][i] for j in range(len(cols))) for i in range(big_n)
    ]
    return CheckMatrix(f, Matrix.from_rows(f, rows), tuple(pts))


def powerpoint_check_matrix(n: int, d: int, f: FieldSpec) -> CheckMatrix:
    """Columns are the coefficient vectors of (t1 x1 + ... + tn xn)^d for
    the normalized points t, in the same order."""
    pts = projective_points(f, n)
    cols = [linear_form_power(HomogPoly.linear_form(t), d).coeffs for t in pts]
    big_n = num_monomials(n, d)
    rows = [
        tuple(cols[j][i] for j in range(len(cols))) for i in range(big_n)
    ]
    return CheckMatrix(f, Matrix.from_rows(f, rows), tuple(pts))


def _columns_raw(cm: CheckMatrix, idxs) -> list[list]:
    return [[cm.h.at(i, j).v for i in range(cm.n_rows)] for j in idxs]


def _subset_kernel(cm: CheckMatrix, idxs) -> list | None:
    """A kernel vector of the chosen columns if they are dependent."""
    f = cm.field
    cols = _columns_raw(cm, idxs)
    w = len(idxs)
    rows = [[cols[j][i] for j in range(w)] for i in range(cm.n_rows)]
    reduced, pivots = _rref_raw(f, rows)
    if len(pivots) == w:
        return None
    free = [c for c in range(w) if c not in pivots][0]
    vec = [f.zero_raw] * w
    vec[free] = f.one_raw
    for i, p in enumerate(pivots):
        vec[p] = f.neg(reduced[i][free])
    return vec


def minimal_supports(
    cm: CheckMatrix, w_max: int, budget: int = SEARCH_BUDGET
) -> dict[int, list[tuple[int, ...]]]:
    """Minimal dependent column sets of each size up to w_max: dependent
    subsets all of whose proper subsets are independent.  Every such
    subset carries a unique (up to scale) full-support dependency."""
    m_cols = cm.n_cols
    total = sum(math.comb(m_cols, w) for w in range(1, w_max + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} subsets exceed budget {budget}")
    found: dict[int, list[tuple[int, ...]]] = {}
    smaller: list[set[int]] = []
    for w in range(1, w_max + 1):
        hits = []
        for idxs in itertools.combinations(range(m_cols), w):
            s = set(idxs)
            if any(sup <= s for sup in smaller):
                continue
            cols = _columns_raw(cm, idxs)
            r = len(_rref_raw(cm.field, [list(c) for c in zip(*cols)])[1])
            if r < w:
                hits.append(idxs)
        if hits:
            found[w] = hits
            smaller.extend(set(h) for h in hits)
    return found


def min_weight(
    cm: CheckMatrix, w_max: int, budget: int = SEARCH_BUDGET
) -> tuple[int | None, list[tuple[int, ...]]]:
    """Smallest w <= w_max with a full-support dependency among some w
    columns, plus all minimal supports of that size; (None, []) if none."""
    found = minimal_supports(cm, w_max, budget)
    if not found:
        return None, []
    w = min(found)
    return w, found[w]


def dependency_vector(cm: CheckMatrix, support) -> list:
    """The kernel vector witnessing the dependency on a minimal support."""
    vec = _subset_kernel(cm, tuple(support))
    if vec is None:
        raise ValueError(f"columns {support} are independent")
    return vec


@dataclass(frozen=True)
class SupportReport:
    indices: tuple[int, ...]
    source_rank: int
    two_line_split: tuple[tuple[int, ...], tuple[int, ...]] | None


def classify_supports(cm: CheckMatrix, supports) -> list[SupportReport]:
    """For each support, the rank of the span of its source points; for
    rank-3 supports of even size, also a split into two half-size sets of
    points each spanning a 2-space, when one exists."""
    f = cm.field
    out = []
    for sup in supports:
        sup = tuple(sup)
        pts = [cm.column_tags[j] for j in sup]
        amb = len(pts[0])
        r = span(pts, amb, f).dim
        split = None
        if r == 3 and len(sup) % 2 == 0:
            half = len(sup) // 2
            for left in itertools.combinations(range(len(sup)), half):
                right = tuple(i for i in range(len(sup)) if i not in left)
                if (
                    span([pts[i] for i in left], amb, f).dim <= 2
                    and span([pts[i] for i in right], amb, f).dim <= 2
                ):
                    split = (
                        tuple(sup[i] for i in left),
                        tuple(sup[i] for i in right),
                    )
                    break
        out.append(SupportReport(indices=sup, source_rank=r, two_line_split=split))
    return out


def code_rank(cm: CheckMatrix) -> int:
    return rank(cm.h)


def verify_dependency(cm: CheckMatrix, support, vec) -> bool:
    """H restricted to the support times vec is zero and vec has full
    support."""
    f = cm.field
    if any(v == f.zero_raw for v in vec):
        return False
    cols = _columns_raw(cm, tuple(support))
    for i in range(cm.n_rows):
        acc = f.zero_raw
        for j, col in enumerate(cols):
            acc = f.add(acc, f.mul(col[i], vec[j]))
        if acc != f.zero_raw:
            return False
    return True
