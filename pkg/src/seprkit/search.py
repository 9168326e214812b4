"""Search for matrices attaining target sign patterns, randomized
counterexample hunting, and the attainability census.

Randomness is fully seeded: identical configurations produce identical
reports.  Random matrices draw the diagonal (real part only) and the upper
triangle independently and uniformly from the entry pool; the lower
triangle follows by conjugate symmetry.  Exhaustive mode enumerates the
same free entries in odometer order, diagonal candidates being the
distinct real parts occurring in the pool.

Absence of a witness within a budget is only ever reported as "not found",
never as impossibility.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .catalog import build_witness, get_record, witness_ids
from .classify import Field, all_patterns, forbidden_order2, forbidden_order3
from .exact import GaussianRational, I
from .matrix import HermitianMatrix, SingularMatrixError
from .properties import run_suite
from .sepr import SeprSequence, SeprTerm, compute_sepr

DEFAULT_SEED = 1729

REAL_DEFAULT_POOL: Tuple[GaussianRational, ...] = tuple(
    GaussianRational(v) for v in (-2, -1, 0, 1, 2)
)
COMPLEX_DEFAULT_POOL: Tuple[GaussianRational, ...] = REAL_DEFAULT_POOL + (
    I,
    -I,
    GaussianRational(0, 2),
    GaussianRational(0, -2),
    GaussianRational(1, 1),
    GaussianRational(1, -1),
)


REAL_WIDE_POOL: Tuple[GaussianRational, ...] = tuple(
    GaussianRational(v) for v in (-7, -5, -3, -2, -1, 0, 1, 2, 3, 5, 7)
)
COMPLEX_WIDE_POOL: Tuple[GaussianRational, ...] = REAL_WIDE_POOL + (
    I,
    -I,
    GaussianRational(0, 2),
    GaussianRational(0, -2),
    GaussianRational(1, 1),
    GaussianRational(1, -1),
)


def default_pool(field: Field) -> Tuple[GaussianRational, ...]:
    if field is Field.REAL_SYMMETRIC:
        return REAL_DEFAULT_POOL
    return COMPLEX_DEFAULT_POOL


def wide_pool(field: Field) -> Tuple[GaussianRational, ...]:
    if field is Field.REAL_SYMMETRIC:
        return REAL_WIDE_POOL
    return COMPLEX_WIDE_POOL


OrderSpec = Union[int, Tuple[int, int]]


@dataclass(frozen=True)
class SearchConfig:
    n: OrderSpec
    pool: Tuple[GaussianRational, ...]
    field: Field
    target: Optional[SeprSequence] = None
    mode: str = "random"  # "random" or "exhaustive"
    budget: int = 10000
    seed: int = DEFAULT_SEED
    subsequence: bool = False

    def __post_init__(self):
        if self.mode not in ("random", "exhaustive"):
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.budget < 1:
            raise ValueError("budget must be positive")
        if not self.pool:
            raise ValueError("entry pool is empty")
        if self.field is Field.REAL_SYMMETRIC:
            for v in self.pool:
                if v.im != 0:
                    raise ValueError(
                        f"real-symmetric search cannot use non-real pool entry {v}"
                    )
        if isinstance(self.n, tuple):
            lo, hi = self.n
            if lo < 1 or hi < lo:
                raise ValueError(f"bad order range {self.n!r}")
            if self.mode == "exhaustive":
                raise ValueError("exhaustive mode needs a fixed order")
        elif self.n < 1:
            raise ValueError("order must be at least 1")


def _diag_candidates(pool) -> Tuple[Fraction, ...]:
    return tuple(sorted({v.re for v in pool}))


def random_matrix(
    rng: random.Random, n: int, pool, field: Field
) -> HermitianMatrix:
    """One random Hermitian matrix: uniform pool draws, diagonal keeping
    only the real part."""
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = GaussianRational(rng.choice(pool).re)
        for j in range(i + 1, n):
            v = rng.choice(pool)
            rows[i][j] = v
            rows[j][i] = v.conjugate()
    return HermitianMatrix(rows, validate=False)


def exhaustive_matrices(n: int, pool, field: Field) -> Iterator[HermitianMatrix]:
    """Deterministic odometer enumeration over free entries: n diagonal
    slots over the pool's distinct real parts, then the upper triangle
    row-major over the pool."""
    diag_values = _diag_candidates(pool)
    upper_slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for diag in product(diag_values, repeat=n):
        base = [[GaussianRational(0)] * n for _ in range(n)]
        for i in range(n):
            base[i][i] = GaussianRational(diag[i])
        if not upper_slots:
            yield HermitianMatrix([row[:] for row in base], validate=False)
            continue
        for vals in product(pool, repeat=len(upper_slots)):
            rows = [row[:] for row in base]
            for (i, j), v in zip(upper_slots, vals):
                rows[i][j] = v
                rows[j][i] = v.conjugate()
            yield HermitianMatrix(rows, validate=False)


def _orders(spec: OrderSpec) -> Tuple[int, int]:
    if isinstance(spec, tuple):
        return spec
    return (spec, spec)


def _iter_config(cfg: SearchConfig) -> Iterator[HermitianMatrix]:
    if cfg.mode == "exhaustive":
        count = 0
        for m in exhaustive_matrices(cfg.n, cfg.pool, cfg.field):
            if count >= cfg.budget:
                return
            count += 1
            yield m
        return
    rng = random.Random(cfg.seed)
    lo, hi = _orders(cfg.n)
    for _ in range(cfg.budget):
        n = lo if lo == hi else rng.randint(lo, hi)
        yield random_matrix(rng, n, cfg.pool, cfg.field)


@dataclass(frozen=True)
class SearchHit:
    matrix: HermitianMatrix
    sepr: SeprSequence
    position: int  # 1-based window start


def find_witness(cfg: SearchConfig) -> Optional[SearchHit]:
    """First matrix whose sequence equals the target (or contains it as a
    window, in subsequence mode); None if the budget runs out."""
    if cfg.target is None:
        raise ValueError("find_witness needs a target sequence")
    lo, hi = _orders(cfg.n)
    if not cfg.subsequence and not (lo <= len(cfg.target) <= hi):
        raise ValueError(
            f"target of length {len(cfg.target)} cannot be the full sequence "
            f"of an order-{cfg.n} matrix"
        )
    for m in _iter_config(cfg):
        s = compute_sepr(m)
        if cfg.subsequence:
            pos = s.find(cfg.target)
            if pos is not None:
                return SearchHit(m, s, pos)
        elif s == cfg.target:
            return SearchHit(m, s, 1)
    return None


@dataclass
class HuntReport:
    field: Field
    mode: str
    seed: int
    samples: int = 0
    check_counts: Dict[str, int] = dataclass_field(default_factory=dict)
    violations: List[str] = dataclass_field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations

    def merge_counts(self, counts: Dict[str, int]):
        for k, v in counts.items():
            self.check_counts[k] = self.check_counts.get(k, 0) + v

    def lines(self):
        yield f"samples\t{self.samples}"
        for name in sorted(self.check_counts):
            yield f"check\t{name}\t{self.check_counts[name]}"
        yield f"violations\t{len(self.violations)}"
        for v in self.violations:
            yield f"violation\t{v}"

    def summary(self) -> str:
        total = sum(self.check_counts.values())
        return (
            f"{self.samples} matrices, {total} checks, "
            f"{len(self.violations)} violations"
        )


def hunt_counterexamples(
    cfg: SearchConfig, permutation_samples: int = 5
) -> HuntReport:
    """Sample matrices per the configuration and run the full property
    suite (including the forbidden-window scan) on each."""
    report = HuntReport(field=cfg.field, mode=cfg.mode, seed=cfg.seed)
    rng = random.Random(cfg.seed ^ 0x5EB2)  # separate stream for permutations
    for m in _iter_config(cfg):
        report.samples += 1
        counts, violations = run_suite(
            m, cfg.field, rng, permutation_samples=permutation_samples
        )
        report.merge_counts(counts)
        report.violations.extend(violations)
    return report


# ---------------------------------------------------------------------------
# attainability census
# ---------------------------------------------------------------------------


@dataclass
class CensusRow:
    pattern: SeprSequence
    status: str  # "witnessed" or "open"
    source: str

    def line(self) -> str:
        return f"{self.pattern}\t{self.status}\t{self.source}"


@dataclass
class CensusReport:
    order: int
    field: Field
    rows: List[CensusRow]
    budgets: Dict[str, int]
    violations: List[str]

    @property
    def witnessed(self) -> int:
        return sum(1 for r in self.rows if r.status == "witnessed")

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def open_patterns(self) -> List[SeprSequence]:
        return [r.pattern for r in self.rows if r.status == "open"]

    def source_of(self, pattern: SeprSequence) -> Optional[str]:
        for r in self.rows:
            if r.pattern == pattern:
                return r.source if r.status == "witnessed" else None
        return None

    def lines(self):
        for r in self.rows:
            yield r.line()

    def summary(self) -> str:
        budget = ", ".join(f"{k}={v}" for k, v in sorted(self.budgets.items()))
        return (
            f"census order {self.order} over {self.field.human}: "
            f"{self.witnessed}/{self.total} patterns witnessed "
            f"({len(self.open_patterns)} open; budgets: {budget})"
        )


_STOCK: Tuple[Tuple[str, HermitianMatrix], ...] = (
    ("O1", HermitianMatrix.zero(1)),
    ("O2", HermitianMatrix.zero(2)),
    ("O3", HermitianMatrix.zero(3)),
    ("I1", HermitianMatrix.identity(1)),
    ("I2", HermitianMatrix.identity(2)),
    ("I3", HermitianMatrix.identity(3)),
    ("diag(1,-1)", HermitianMatrix.diagonal([1, -1])),
    ("diag(1,-1,-1,0)", HermitianMatrix.diagonal([1, -1, -1, 0])),
)

_SWEEP_CACHE: Dict[Tuple[Field, tuple, int], Dict[str, HermitianMatrix]] = {}


def _sweep_pool(field: Field) -> Tuple[GaussianRational, ...]:
    if field is Field.REAL_SYMMETRIC:
        return REAL_DEFAULT_POOL
    return (
        GaussianRational(0),
        GaussianRational(1),
        GaussianRational(-1),
        I,
        -I,
    )


def full_sequence_sweep(
    order: int, field: Field, pool=None, budget: int = 200_000
) -> Dict[str, HermitianMatrix]:
    """Exhaustively enumerate small matrices and index them by their full
    sign sequence (first matrix found wins).  Cached per configuration."""
    pool = tuple(pool) if pool is not None else _sweep_pool(field)
    key = (field, pool, order)
    cached = _SWEEP_CACHE.get(key)
    if cached is not None:
        return cached
    found: Dict[str, HermitianMatrix] = {}
    count = 0
    for m in exhaustive_matrices(order, pool, field):
        count += 1
        if count > budget:
            break
        text = str(compute_sepr(m))
        if text not in found:
            found[text] = m
    _SWEEP_CACHE[key] = found
    return found


def _fraction_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def _rational_quadratic_roots(a: Fraction, b: Fraction, c: Fraction):
    """Rational roots of a*t**2 + b*t + c = 0 (all coefficients rational)."""
    if a == 0:
        if b == 0:
            return ()
        return (Fraction(-c, b),)
    disc = b * b - 4 * a * c
    root = _fraction_sqrt(disc)
    if root is None:
        return ()
    if root == 0:
        return (Fraction(-b, 2 * a),)
    return (Fraction(-b + root, 2 * a), Fraction(-b - root, 2 * a))


def singular_completions(values) -> Iterator[HermitianMatrix]:
    """Real symmetric 3x3 matrices [[x,a,b],[a,y,c],[b,c,z]] with
    determinant forced to zero.

    Five entries range over the given rational values; the last
    off-diagonal entry is solved for exactly (rational roots of the
    det = 0 quadratic), which reaches witnesses whose final entry lies far
    outside any small pool.  Deterministic; duplicates skipped.
    """
    vals = sorted({Fraction(v.re) if isinstance(v, GaussianRational) else Fraction(v) for v in values})
    seen = set()
    for x, y, z, a, b in product(vals, repeat=5):
        # det = -x c^2 + 2ab c + (xyz - y b^2 - z a^2)
        qa = -x
        qb = 2 * a * b
        qc = x * y * z - y * b * b - z * a * a
        if qa == 0 and qb == 0:
            roots = tuple(vals) if qc == 0 else ()
        else:
            roots = _rational_quadratic_roots(qa, qb, qc)
        for c in roots:
            m = HermitianMatrix([[x, a, b], [a, y, c], [b, c, z]])
            if m not in seen:
                seen.add(m)
                yield m


def _strengthened(pattern: SeprSequence, keep_first: bool) -> Optional[SeprSequence]:
    """Reverse of the append-weakening: S -> A keeping superscripts, N
    fixed.  Returns None when a weakened position holds an A-term, which
    appending can never produce."""
    terms = []
    for j, t in enumerate(pattern.terms):
        if keep_first and j == 0:
            terms.append(t)
        elif t.letter == "S":
            terms.append(SeprTerm("A" + t.superscript))
        elif t is SeprTerm.N:
            terms.append(t)
        else:
            return None
    return SeprSequence(terms)


def _census_base_matrices(field: Field) -> Iterator[Tuple[str, HermitianMatrix]]:
    for label, m in _STOCK:
        yield f"stock:{label}", m
    for wid in witness_ids():
        rec = get_record(wid)
        if field is Field.REAL_SYMMETRIC and rec.field != "real":
            continue
        yield f"catalog:{wid}", build_witness(wid)


def _derived_matrices(
    label: str, matrix: HermitianMatrix
) -> Iterator[Tuple[str, HermitianMatrix]]:
    negated = matrix.negate()
    yield f"transform:negate({label})", negated
    for tag, m in (("", matrix), ("negate:", negated)):
        yield f"transform:append-zero({tag}{label})", m.direct_sum(HermitianMatrix.zero(1))
        yield f"transform:duplicate-last({tag}{label})", m.duplicate_last()
        last = compute_sepr(m).terms[-1]
        if last in (SeprTerm.A_PLUS, SeprTerm.A_MINUS):
            try:
                yield f"transform:inverse({tag}{label})", m.inverse()
            except SingularMatrixError:  # pragma: no cover - last term says nonsingular
                pass


def attainability_census(
    order: int,
    field: Field,
    search_budget: int = 300,
    seed: int = DEFAULT_SEED,
    search_pool=None,
    max_search_order: int = 6,
    sweep_budget: int = 200_000,
) -> CensusReport:
    """Try to witness every non-forbidden pattern of the given order.

    Witness sources, in preference order: catalog windows (plus a few
    stock matrices), structural transforms of catalog witnesses, append
    constructions over exhaustive small-matrix sweeps, and seeded random
    search.  Patterns still missing are reported as open, never as
    impossible.
    """
    if order not in (2, 3):
        raise ValueError("census supports orders 2 and 3")
    forbidden = (
        forbidden_order2(field) if order == 2 else forbidden_order3(field)
    )
    targets = [p for p in all_patterns(order) if p not in forbidden]
    missing = set(targets)
    found: Dict[SeprSequence, str] = {}
    violations: List[str] = []

    def absorb(source: str, matrix: HermitianMatrix):
        s = compute_sepr(matrix)
        for _, w in s.windows(order):
            if w in forbidden:
                violations.append(
                    f"forbidden pattern {w} appeared in {s} from {source}"
                )
            elif w in missing:
                missing.discard(w)
                found[w] = source

    bases = []
    for label, m in _census_base_matrices(field):
        bases.append((label, m))
        absorb(label, m)

    if missing:
        for label, m in bases:
            if not missing:
                break
            for dlabel, dm in _derived_matrices(label, m):
                absorb(dlabel, dm)
                if not missing:
                    break

    # exhaustive small-matrix sweeps; real matrices also count for Hermitian
    sweeps: List[Dict[str, HermitianMatrix]] = []
    sweep_sizes: Dict[str, int] = {}
    if missing:
        sweeps.append(
            full_sequence_sweep(order, Field.REAL_SYMMETRIC, budget=sweep_budget)
        )
        sweep_sizes["sweep-real"] = len(sweeps[-1])
        if field is Field.HERMITIAN:
            sweeps.append(full_sequence_sweep(order, field, budget=sweep_budget))
            sweep_sizes["sweep-complex"] = len(sweeps[-1])
        for sweep in sweeps:
            for text, m in sweep.items():
                if not missing:
                    break
                absorb(f"search:exhaustive-{order}x{order}", m)

    if missing and order == 3:
        def lookup(base: SeprSequence) -> Optional[HermitianMatrix]:
            for sweep in sweeps:
                m = sweep.get(str(base))
                if m is not None:
                    return m
            return None

        for pattern in sorted(missing, key=str):
            # zero-append route: strengthen every S, demand a full-sequence base
            base = _strengthened(pattern, keep_first=False)
            if base is not None:
                m = lookup(base)
                if m is not None:
                    absorb(
                        f"construction:append-zero(base={base})",
                        m.direct_sum(HermitianMatrix.zero(1)),
                    )
                    continue
            base = _strengthened(pattern, keep_first=True)
            if base is not None:
                m = lookup(base)
                if m is not None:
                    absorb(
                        f"construction:duplicate-last(base={base})", m.duplicate_last()
                    )

    completions_tried = 0
    if missing and order == 3:
        # deterministic det=0 completions reach trailing-N patterns whose
        # witnesses need one large entry
        label = "construction:det-zero-completion"
        for m in singular_completions(REAL_DEFAULT_POOL):
            completions_tried += 1
            absorb(label, m)
            if not missing:
                break

    searched = wide_searched = 0
    if missing:
        # pooled random search: absorb every window of every sample (and of
        # its negation), not just one target
        def pooled(pool, budget, seed_, tag) -> int:
            rng = random.Random(seed_)
            count = 0
            label = f"search:{tag}(orders {order}..{max_search_order}, seed {seed_})"
            while count < budget and missing:
                n = rng.randint(order, max_search_order)
                m = random_matrix(rng, n, pool, field)
                count += 1
                absorb(label, m)
                if missing:
                    absorb(f"{label}+negate", m.negate())
            return count

        pool = tuple(search_pool) if search_pool is not None else default_pool(field)
        searched = pooled(pool, search_budget, seed, "random")
        if missing and search_pool is None:
            wide_searched = pooled(
                wide_pool(field), search_budget, seed + 1, "random-wide"
            )

    rows = [
        CensusRow(p, "witnessed", found[p]) if p in found else CensusRow(p, "open", "-")
        for p in targets
    ]
    budgets = {
        "search-sample-budget": search_budget,
        "search-samples-used": searched,
        "wide-search-samples-used": wide_searched,
        "completions-tried": completions_tried,
        "max-search-order": max_search_order,
        **sweep_sizes,
    }
    return CensusReport(order=order, field=field, rows=rows, budgets=budgets, violations=violations)
