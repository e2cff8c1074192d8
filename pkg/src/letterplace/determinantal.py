"""Staircase determinantal ideals whose initial ideals are letterplace ideals.

A weakly increasing sequence l_a <= ... <= l_b defines a matrix with columns
l_a+1..l_b and rows a..b-1, filled with variables y[p,i] below a staircase and
zeros above it.  The ideal collects, for every c in (a, b], the maximal minors
of the lower-left submatrix with columns up to l_c.  Its initial ideal under
the diagonal order is the column-shifted letterplace ideal of the associated
terrace/i-sequence pair, of codimension i_b - i_a.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import NotTerrace
from .groebner import Polynomial, TermOrder, buchberger, diagonal_order, initial_ideal, reduce
from .monomial import Monomial, MonomialIdeal, height, pair_var
from .poset import chain


@dataclass(frozen=True)
class LSequence:
    """Weakly increasing integer sequence indexed a..b with a < b."""

    a: int
    vals: tuple

    def __post_init__(self):
        object.__setattr__(self, "vals", tuple(self.vals))
        if len(self.vals) < 2:
            raise ValueError("need at least two entries (a < b)")
        if any(x > y for x, y in zip(self.vals, self.vals[1:])):
            raise ValueError(f"sequence {self.vals} is not weakly increasing")

    @property
    def b(self) -> int:
        return self.a + len(self.vals) - 1

    def __getitem__(self, c: int) -> int:
        return self.vals[c - self.a]

    def __len__(self):
        return len(self.vals)


class DetMatrix:
    """The staircase matrix of an LSequence: entry(p, i) is a variable or None."""

    __slots__ = ("seq", "columns", "rows", "_top")

    def __init__(self, seq: LSequence):
        self.seq = seq
        self.columns = tuple(range(seq[seq.a] + 1, seq[seq.b] + 1))
        self.rows = tuple(range(seq.a, seq.b))
        top = {}
        for c in range(seq.a, seq.b):
            for p in range(seq[c] + 1, seq[c + 1] + 1):
                top[p] = c
        self._top = top

    def column_top(self, p: int) -> int:
        return self._top[p]

    def entry(self, p: int, i: int):
        if p not in self._top or i not in self.rows:
            raise IndexError(f"position ({p},{i}) outside the matrix")
        return pair_var(p, i) if i <= self._top[p] else None

    def variables(self) -> list:
        return [
            pair_var(p, i)
            for p in self.columns
            for i in self.rows
            if i <= self._top[p]
        ]


def build_matrix(seq: LSequence) -> DetMatrix:
    return DetMatrix(seq)


def _determinant(M: DetMatrix, rows: tuple, cols: tuple) -> Polynomial:
    """Cofactor expansion along the first row, short-circuiting staircase zeros."""
    if not rows:
        return Polynomial.from_monomial(Monomial.one())
    i, rest = rows[0], rows[1:]
    acc = {}
    for j, p in enumerate(cols):
        e = M.entry(p, i)
        if e is None:
            continue
        sub = _determinant(M, rest, cols[:j] + cols[j + 1 :])
        sign = -1 if j % 2 else 1
        for m, c in sub.terms.items():
            key = m * Monomial.variable(e)
            acc[key] = acc.get(key, Fraction(0)) + sign * c
    return Polynomial(acc)


def minors_with_positions(seq: LSequence) -> list:
    """(c, rows, cols, polynomial) for every structurally nonzero generating minor."""
    M = DetMatrix(seq)
    out = []
    for c in range(seq.a + 1, seq.b + 1):
        size = c - seq.a
        rows = tuple(range(seq.a, c))
        col_pool = range(seq[seq.a] + 1, seq[c] + 1)
        for cols in combinations(col_pool, size):
            det = _determinant(M, rows, cols)
            if det:
                out.append((c, rows, cols, det))
    return out


def ideal_gens(seq: LSequence) -> list:
    """Generators of the staircase determinantal ideal, zero minors dropped."""
    return [det for _, _, _, det in minors_with_positions(seq)]


def terrace(seq: LSequence) -> LSequence:
    """Successive-maxima flattening; a terrace sequence is its own image.

    Scan l_a - a, l_{a+1} - a, l_{a+2} - (a+1), ..., l_b - (b-1) for strict
    running maxima after the first entry; between consecutive maxima the output
    repeats the value at the previous maximum.  The result is pointwise <= the
    input and satisfies the terrace step condition.
    """
    a, vals = seq.a, seq.vals
    n = len(vals)
    diffs = [vals[0] - a] + [vals[k] - (a + k - 1) for k in range(1, n)]
    maxima = []
    running = diffs[0]
    for k in range(1, n):
        if diffs[k] > running:
            running = diffs[k]
            maxima.append(k)
    marks = [0] + maxima + [n]
    out = []
    for m, nxt in zip(marks, marks[1:]):
        out.extend([vals[m]] * (nxt - m))
    return LSequence(a, out)


def is_terrace(seq: LSequence) -> bool:
    return terrace(seq) == seq


def i_sequence(seq: LSequence) -> LSequence:
    """The weakly increasing sequence associated to a terrace sequence."""
    if not is_terrace(seq):
        raise NotTerrace(f"{seq.vals} fails the terrace condition")
    a, vals = seq.a, seq.vals
    out = [vals[0] - a]
    for k in range(1, len(vals)):
        c = a + k
        out.append(vals[k] - c + 1 if vals[k] > vals[k - 1] else out[-1])
    return LSequence(a, out)


def l_from_i(iseq: LSequence) -> LSequence:
    """Inverse of i_sequence: the terrace sequence of a weakly increasing one."""
    a, vals = iseq.a, iseq.vals
    out = [vals[0] + a]
    for k in range(1, len(vals)):
        c = a + k
        out.append(vals[k] + c - 1 if vals[k] > vals[k - 1] else out[-1])
    return LSequence(a, out)


def ly_ideal(iseq: LSequence) -> MonomialIdeal:
    """Column-shifted principal letterplace ideal of the i-sequence.

    The chain elements are i_a+1..i_b with value c on (i_c, i_{c+1}]; chain
    positions run from a; the shift sends x[p,j] to y[p+j,j], injective on
    variables, so the generators stay squarefree.
    """
    a, b = iseq.a, iseq.b
    lo, hi = iseq[a] + 1, iseq[b]
    value = {}
    for c in range(a, b):
        for p in range(iseq[c] + 1, iseq[c + 1] + 1):
            value[p] = c
    gens = []
    chain_buf = []

    def rec(last, pos):
        for q in range(lo if last is None else last, hi + 1):
            if value.get(q, -1) < pos:
                continue
            chain_buf.append(q)
            if value[q] == pos:
                gens.append(
                    Monomial((pair_var(p + j, j), 1) for j, p in enumerate(chain_buf, start=a))
                )
            else:
                rec(q, pos + 1)
            chain_buf.pop()

    rec(None, a)
    return MonomialIdeal(gens)


def codim_formulas(seq: LSequence) -> dict:
    """Endpoint difference of the i-sequence and the direct max formula.

    The two agree for every weakly increasing sequence: the i endpoints are
    running maxima of the shifted differences, whose first entry never exceeds
    the second.
    """
    iseq = i_sequence(terrace(seq))
    return {
        "from_i": iseq[iseq.b] - iseq[iseq.a],
        "max_formula": max(
            seq[d] - seq[seq.a] - (d - seq.a) + 1 for d in range(seq.a + 1, seq.b + 1)
        ),
    }


def diagonal_leads_ok(seq: LSequence, order: TermOrder = None) -> bool:
    """Every generating minor with nonzero main diagonal leads with it."""
    M = DetMatrix(seq)
    if order is None:
        order = diagonal_order(M.variables())
    for _, rows, cols, det in minors_with_positions(seq):
        diag = [M.entry(p, i) for p, i in zip(cols, rows)]
        if any(v is None for v in diag):
            continue
        product = Monomial((v, 1) for v in diag)
        if det.leading_monomial(order) != product:
            return False
    return True


def verify_main(seq: LSequence, degree_cap: int = None, pair_cap: int = 200_000) -> dict:
    """End-to-end check: initial ideal equals the shifted letterplace ideal and
    the codimension formulas agree with the height of that monomial ideal.

    Raises BudgetExceeded if the basis computation overruns its caps.  For a
    non-terrace input the report also carries the terrace-reduced instance.
    """
    t0 = time.perf_counter()
    M = DetMatrix(seq)
    order = diagonal_order(M.variables())
    gens = ideal_gens(seq)
    ter = terrace(seq)
    iseq = i_sequence(ter)
    target = ly_ideal(iseq)
    diag_ok = diagonal_leads_ok(seq, order)
    effective_cap = (
        degree_cap
        if degree_cap is not None
        else 3 + max((g.total_degree() for g in gens), default=0)
    )
    basis = buchberger(gens, order, degree_cap, pair_cap)
    init = initial_ideal(basis, order)
    initial_ok = init.gens == target.gens
    codims = codim_formulas(seq)
    h = height(target)
    codim_ok = h == codims["from_i"] == codims["max_formula"]
    report = {
        "a": seq.a,
        "l": list(seq.vals),
        "terrace": list(ter.vals),
        "i_sequence": list(iseq.vals),
        "num_variables": len(M.variables()),
        "num_generators": len(gens),
        "gb_size": len(basis),
        "diagonal_leads_ok": diag_ok,
        "initial_equals_target": initial_ok,
        "codim": {"height": h, **codims},
        "codim_ok": codim_ok,
        "ok": diag_ok and initial_ok and codim_ok,
        "budget": {"degree_cap": effective_cap, "pair_cap": pair_cap},
        "runtime_s": round(time.perf_counter() - t0, 3),
    }
    if ter != seq:
        report["terrace_instance"] = verify_main(ter, degree_cap, pair_cap)
        report["ok"] = report["ok"] and report["terrace_instance"]["ok"]
    return report


def same_ideal_by_membership(
    gens_a: Iterable[Polynomial],
    gens_b: Iterable[Polynomial],
    order: TermOrder,
    degree_cap: int = None,
    pair_cap: int = 200_000,
) -> bool:
    """Bidirectional membership: each side's generators reduce to zero against
    the other side's reduced basis."""
    ga, gb = list(gens_a), list(gens_b)
    basis_a = buchberger(ga, order, degree_cap, pair_cap)
    basis_b = buchberger(gb, order, degree_cap, pair_cap)
    return all(not reduce(f, basis_b, order) for f in ga) and all(
        not reduce(f, basis_a, order) for f in gb
    )
