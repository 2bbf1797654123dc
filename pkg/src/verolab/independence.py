"""r-independence of subspace families: every r members span their
direct sum.  Failures always carry the lexicographically first violating
index set, so reports stay actionable and reproducible.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field as dc_field

from .errors import AmbientMismatch, BudgetExceeded, DuplicateMember
from .field import FieldSpec
from .linalg import Subspace, span
from .veronese import veronese_subspace

SUBSET_BUDGET = 10 ** 7


class SubspaceFamily:
    """An ordered family of distinct nonzero subspaces of one K^m."""

    __slots__ = ("field", "ambient_dim", "members")

    def __init__(self, members) -> None:
        members = list(members)
        if not members:
            raise ValueError("family must have at least one member")
        f = members[0].field
        m = members[0].ambient_dim
        seen = set()
        for s in members:
            if s.field != f or s.ambient_dim != m:
                raise AmbientMismatch("family members in different spaces")
            if s.is_zero():
                raise ValueError("family members must be nonzero")
            if s in seen:
                raise DuplicateMember(f"repeated member {s!r}")
            seen.add(s)
        self.field: FieldSpec = f
        self.ambient_dim: int = m
        self.members: tuple[Subspace, ...] = tuple(members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Subspace:
        return self.members[i]

    def __repr__(self) -> str:
        return f"SubspaceFamily({len(self.members)} members in {self.field.name}^{self.ambient_dim})"


def _subset_direct(members, idxs) -> bool:
    rows = []
    total = 0
    for i in idxs:
        rows.extend(members[i].basis.row_list())
        total += members[i].dim
    s = span(rows, members[idxs[0]].ambient_dim, members[idxs[0]].field)
    return s.dim == total


def is_r_independent(
    fam: SubspaceFamily,
    r: int,
    budget: int = SUBSET_BUDGET,
    sample_trials: int | None = None,
    seed: int = 0,
) -> tuple[bool, tuple[int, ...] | None]:
    """Does every r-subset span its direct sum?

    Exhaustive subset enumeration in lexicographic order; the witness of
    a failure is the first violating index set.  When C(|F|, r) exceeds
    the budget, a seeded sample of sample_trials subsets is checked
    instead (the caller opts in by passing sample_trials); otherwise
    BudgetExceeded is raised.
    """
    if not 2 <= r <= len(fam):
        raise ValueError(f"r={r} outside [2, {len(fam)}]")
    count = math.comb(len(fam), r)
    if count > budget:
        if sample_trials is None:
            raise BudgetExceeded(f"C({len(fam)}, {r}) = {count} subsets exceed budget {budget}")
        rng = random.Random(seed)
        for _ in range(sample_trials):
            idxs = tuple(sorted(rng.sample(range(len(fam)), r)))
            if not _subset_direct(fam.members, idxs):
                return False, idxs
        return True, None
    for idxs in itertools.combinations(range(len(fam)), r):
        if not _subset_direct(fam.members, idxs):
            return False, idxs
    return True, None


def max_independence(fam: SubspaceFamily, budget: int = SUBSET_BUDGET) -> int:
    """Largest r <= |F| with every r-subset direct; 1 if some pair meets.

    r-independence is inherited by smaller subset sizes, so ascending
    until the first failure is valid.
    """
    if len(fam) < 2:
        return len(fam)
    best = 1
    for r in range(2, len(fam) + 1):
        ok, _ = is_r_independent(fam, r, budget=budget)
        if not ok:
            return best
        best = r
    return best


@dataclass(frozen=True)
class IndependenceReport:
    """Outcome of a hypothesis-gated independence check."""

    hypothesis_ok: bool
    conclusion_ok: bool | None
    r: int | None = None
    witness: tuple[int, ...] | None = None
    detail: dict = dc_field(default_factory=dict)


def check_image_independence(
    fam: SubspaceFamily,
    d: int,
    e: int,
    budget: int = SUBSET_BUDGET,
) -> IndependenceReport:
    """Verify that (e+1)-independence of a family with at least de+1
    members forces (de+1)-independence of the family of image spans
    under the degree-d map."""
    r_hyp = e + 1
    r_conc = d * e + 1
    if len(fam) < r_conc or len(fam) < r_hyp:
        return IndependenceReport(False, None, r=r_conc, detail={"reason": "too few members"})
    hyp_ok, hyp_wit = is_r_independent(fam, r_hyp, budget=budget)
    if not hyp_ok:
        return IndependenceReport(False, None, r=r_conc, witness=hyp_wit, detail={"reason": "hypothesis"})
    try:
        images = SubspaceFamily([veronese_subspace(u, d) for u in fam])
    except DuplicateMember:
        return IndependenceReport(True, False, r=r_conc, detail={"reason": "image collision"})
    ok, wit = is_r_independent(images, r_conc, budget=budget)
    return IndependenceReport(True, ok, r=r_conc, witness=wit)
