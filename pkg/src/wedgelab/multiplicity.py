"""Multiplicity-one certificates for components of ``W_m(x_1 ... x_r)``.

Let ``P`` be a minimal prime and ``R`` the polynomial ring of the wedge
space.  ``R_P`` is regular with maximal ideal ``P R_P`` and the prime's
variables are a basis of ``P/P^2`` over the residue field (rational
functions in the remaining variables).  If the images of some wedge
equations span ``P/P^2``, they generate ``P R_P`` and the wedge scheme
has multiplicity one along ``V(P)``.

Images in ``P/P^2`` are read off term by term (:func:`linear_part`).
Whether they span is decided by specialising the free variables: a
nonzero maximal minor at one point proves the symbolic minor nonzero.
Failing to find such a point proves nothing, hence ``inconclusive``.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .components import MonomialHypersurface, StaircasePrime, enumerate_minimal_primes, reduced_minimal_primes
from .monomial_ideals import prime_contains
from .polynomial import Polynomial, wedge
from .schemes import WedgeIdeal
from .series import wedge_indices

__all__ = [
    "PROVEN",
    "INCONCLUSIVE",
    "NotMinimalPrimeError",
    "LinearPart",
    "Certificate",
    "SweepRow",
    "SweepResult",
    "linear_part",
    "linear_parts",
    "paper_roles",
    "paper_selection",
    "paper_evaluation",
    "paper_matrix",
    "certify",
    "conjecture_sweep",
    "determinant",
    "rank_mod",
]

PROVEN = "multiplicity_one_proven"
INCONCLUSIVE = "inconclusive"

DEFAULT_Q = 65521
DEFAULT_TRIALS = 5


class NotMinimalPrimeError(ValueError):
    pass


@dataclass(frozen=True)
class LinearPart:
    prime: StaircasePrime
    columns: tuple
    rows: dict = field(compare=False)


@dataclass
class Certificate:
    prime: StaircasePrime
    strategy: str
    selected_rows: list
    evaluation: dict
    det_or_rank: object
    verdict: str
    seed: int | None = None
    trials_used: int = 0

    @property
    def proven(self) -> bool:
        return self.verdict == PROVEN


def linear_part(g: Polynomial, P) -> dict:
    """Image of ``g`` in ``P/P^2`` as ``{prime variable: cofactor}``.

    Terms with exactly one prime factor (counted with multiplicity)
    contribute their cofactor; terms with two or more vanish mod ``P^2``.
    """
    P = P if isinstance(P, (set, frozenset)) else frozenset(P)
    if not prime_contains(P, g):
        raise ValueError(f"{g} does not lie in the prime")
    row: dict = {}
    for mono, c in g.items():
        hits = [(v, e) for v, e in mono if v in P]
        if len(hits) != 1 or hits[0][1] != 1:
            continue
        v = hits[0][0]
        cof = Polynomial.monomial(mono / type(mono).of(v), c)
        row[v] = row[v] + cof if v in row else cof
    return {v: p for v, p in row.items() if p}


def _ordered_prime_vars(X: MonomialHypersurface, P: StaircasePrime, roles: Sequence[int] | None = None) -> list:
    roles = range(X.r) if roles is None else roles
    return [wedge(X.names[k], i, j) for k in roles for i, j in wedge_indices(P.t[k] - 1)]


def linear_parts(W: WedgeIdeal, X: MonomialHypersurface, P: StaircasePrime) -> LinearPart:
    cols = tuple(_ordered_prime_vars(X, P))
    pv = frozenset(cols)
    rows = {}
    for (k, i, j), g in W.gens.items():
        if g:
            rows[k, i, j] = linear_part(g, pv)
    return LinearPart(P, cols, rows)


def _require_paper_case(X: MonomialHypersurface):
    if not X.reduced:
        raise ValueError("certificates need a reduced hypersurface (all exponents 1)")
    if X.r not in (2, 3):
        raise ValueError(f"explicit selections exist only for r = 2 or 3, not r = {X.r}")


def paper_roles(X: MonomialHypersurface, P: StaircasePrime) -> list:
    """Factor indices in the roles x, y (, z): order tuple sorted ascending when r = 3."""
    _require_paper_case(X)
    if X.r == 2:
        return [0, 1]
    return sorted(range(3), key=lambda k: P.t[k])


def paper_selection(X: MonomialHypersurface, P: StaircasePrime, m: int) -> list:
    """One wedge equation per prime variable, as ``[(variable, (i, j)), ...]``.

    r = 2: ``x_(i,j) -> g_(i, j+t2)``, ``y_(k,l) -> g_(k+t1, l)``.
    r = 3 (``t1 <= t2 <= t3``): ``x -> g_(i, j+t2+t3)``,
    ``y -> g_(k+t1+t3, l)``, ``z -> g_(p+t1, q+t2)``.
    """
    roles = paper_roles(X, P)
    t = [P.t[k] for k in roles]
    names = [X.names[k] for k in roles]
    if X.r == 2:
        shifts = [(0, t[1]), (t[0], 0)]
    else:
        shifts = [(0, t[1] + t[2]), (t[0] + t[2], 0), (t[0], t[1])]
    out = []
    for name, tk, (di, dj) in zip(names, t, shifts):
        for i, j in wedge_indices(tk - 1):
            a, b = i + di, j + dj
            if a + b > m:
                raise AssertionError(f"selected index {(a, b)} exceeds m={m}")
            out.append((wedge(name, i, j), (a, b)))
    return out


def paper_evaluation(X: MonomialHypersurface, P: StaircasePrime, m: int) -> dict:
    """Specialisation of the free variables that makes the selected matrix unitriangular.

    r = 2: ``x_(t1,0) = y_(0,t2) = 1``; r = 3: additionally ``z_(0,t3) = z_(t3,0) = 1``.
    Variables of superscript sum above ``m`` do not exist and are skipped.
    """
    roles = paper_roles(X, P)
    t = [P.t[k] for k in roles]
    names = [X.names[k] for k in roles]
    ones = [(names[0], t[0], 0), (names[1], 0, t[1])]
    if X.r == 3:
        ones += [(names[2], 0, t[2]), (names[2], t[2], 0)]
    inside = P.expand(X.names)
    point = {
        wedge(n, i, j): 0
        for n in X.names[: X.r]
        for i, j in wedge_indices(m)
        if wedge(n, i, j) not in inside
    }
    for n, i, j in ones:
        if i + j <= m:
            point[wedge(n, i, j)] = 1
    return point


def paper_matrix(W: WedgeIdeal, X: MonomialHypersurface, P: StaircasePrime, m: int, point: dict | None = None) -> list:
    """Selected rows against the prime variables, in role order, evaluated at ``point``."""
    sel = paper_selection(X, P, m)
    cols = [v for v, _ in sel]
    pv = frozenset(cols)
    point = paper_evaluation(X, P, m) if point is None else point
    matrix = []
    for _, (i, j) in sel:
        row = linear_part(W.gens[0, i, j], pv)
        matrix.append([row[c].evaluate(point) if c in row else 0 for c in cols])
    return matrix


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    A = [[Fraction(x) for x in row] for row in matrix]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        inv = 1 / A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] * inv
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return det


def rank_mod(matrix: Sequence[Sequence[int]], q: int) -> int:
    A = [[x % q for x in row] for row in matrix]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, q)
        A[rank] = [x * inv % q for x in A[rank]]
        for r in range(len(A)):
            if r != rank and A[r][c]:
                f = A[r][c]
                A[r] = [(x - f * y) % q for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


def _check_minimal(X: MonomialHypersurface, P: StaircasePrime, m: int):
    if P.m != m or len(P.t) != X.r or P not in enumerate_minimal_primes(X, m):
        raise NotMinimalPrimeError(f"{P.t} is not a minimal prime of W_{m} for exponents {X.a}")


def certify(
    X: MonomialHypersurface,
    P: StaircasePrime,
    m: int,
    strategy: str = "paper",
    q: int = DEFAULT_Q,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    ideal: WedgeIdeal | None = None,
) -> Certificate:
    """Try to prove that ``W_m(X)`` has multiplicity one along ``V(P)``.

    ``strategy="paper"`` uses the explicit selection and specialisation
    (r = 2, 3); ``"randomized"`` uses every wedge equation and random
    points of ``F_q``, up to ``trials`` attempts seeded by ``seed``.
    """
    if not X.reduced:
        raise ValueError("certificates need a reduced hypersurface (all exponents 1)")
    _check_minimal(X, P, m)
    W = ideal if ideal is not None else X.wedge_ideal(m)
    height = P.height
    if strategy == "paper":
        point = paper_evaluation(X, P, m)
        M = paper_matrix(W, X, P, m, point)
        det = determinant(M)
        sel = [ij for _, ij in paper_selection(X, P, m)]
        return Certificate(P, "paper", sel, point, det, PROVEN if det != 0 else INCONCLUSIVE)
    if strategy in ("randomized", "random"):
        lp = linear_parts(W, X, P)
        cols = lp.columns
        rows = [r for r in lp.rows.values() if r]
        free = [
            wedge(n, i, j)
            for n in X.names[: X.r]
            for i, j in wedge_indices(m)
            if wedge(n, i, j) not in set(cols)
        ]
        rng = random.Random(seed)
        point, rank = {}, 0
        for attempt in range(1, trials + 1):
            point = {v: rng.randrange(q) for v in free}
            M = [[row[c].evaluate(point, modulus=q) if c in row else 0 for c in cols] for row in rows]
            rank = rank_mod(M, q) if M else 0
            if rank == height:
                return Certificate(P, "randomized", sorted(k[1:] for k in lp.rows), point, rank, PROVEN, seed, attempt)
        return Certificate(P, "randomized", sorted(k[1:] for k in lp.rows), point, rank, INCONCLUSIVE, seed, trials)
    raise ValueError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True)
class SweepRow:
    m: int
    t: tuple
    strategy: str
    verdict: str
    seed: int | None

    def tsv(self) -> str:
        seed = "-" if self.seed is None else str(self.seed)
        return "\t".join([str(self.m), ",".join(map(str, self.t)), self.strategy, self.verdict, seed])


@dataclass
class SweepResult:
    r: int
    m_max: int
    rows: list

    @property
    def all_proven(self) -> bool:
        return all(row.verdict == PROVEN for row in self.rows)

    def to_tsv(self, header: bool = True) -> str:
        lines = ["m\tt\tstrategy\tverdict\tseed"] if header else []
        lines += [row.tsv() for row in self.rows]
        return "\n".join(lines) + "\n"


def _sweep_task(args) -> list:
    r, m, jobs, strategy, q, trials = args
    X = MonomialHypersurface((1,) * r)
    W = X.wedge_ideal(m)
    out = []
    for t, seed in jobs:
        cert = certify(X, StaircasePrime(m, t), m, strategy, q=q, trials=trials, seed=seed or 0, ideal=W)
        out.append(SweepRow(m, t, cert.strategy, cert.verdict, seed))
    return out


def _thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("WEDGELAB_THREADS", "1")))
    except ValueError:
        return 1


def conjecture_sweep(
    r: int,
    m_max: int,
    strategy: str = "randomized",
    q: int = DEFAULT_Q,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    workers: int | None = None,
) -> SweepResult:
    """Certify every component of ``W_m(x_1 ... x_r)`` for ``m = 0..m_max``.

    Per-row seeds are drawn from one generator seeded with ``seed`` in the
    canonical row order, so results do not depend on scheduling.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if strategy == "random":
        strategy = "randomized"
    master = random.Random(seed)
    tasks = []
    for m in range(m_max + 1):
        jobs = []
        for P in reduced_minimal_primes(r, m):
            row_seed = master.getrandbits(32) if strategy == "randomized" else None
            jobs.append((P.t, row_seed))
        tasks.append((r, m, jobs, strategy, q, trials))
    workers = workers or _thread_cap()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_sweep_task, tasks))
    else:
        chunks = [_sweep_task(t) for t in tasks]
    return SweepResult(r, m_max, [row for chunk in chunks for row in chunk])
