"""Resonance varieties of the cup-product (Aomoto) complex.

R^1_k is the locus of u in H^1 where the complex (H^*, u wedge) has first
cohomology of dimension >= k; away from 0 that reads

    dim ker(mu_u) - 1 >= k,  i.e.  rank(mu_u) <= b1 - 1 - k,

with mu_u the linear map v -> mu(u, v) into H^2.  Component discovery is
seeded sampling plus symbolic certification: a rational subspace is accepted
only when the rank condition holds identically along a parametrization,
checked by fraction-free elimination over the polynomial ring.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact.fields import QQ
from .exact.laurent import LaurentPoly
from .exact.linalg import (
    nullspace,
    poly_det,
    poly_rank_generic,
    primitive_vector,
    rank_mod_p,
    rank_rational,
    subspace_canonical,
    subspace_leq,
    subspace_sum,
)


@dataclass(frozen=True)
class ResonanceLocus:
    k: int
    b1: int
    cup: object  # CupTensor

    def rank_threshold(self):
        return self.b1 - 1 - self.k


@dataclass(frozen=True)
class LinearComponent:
    """A certified rational linear subspace of H^1 inside R^1_k."""

    basis: tuple  # canonical primitive integer rows
    dim: int
    k_max: int

    def key(self):
        return self.basis


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 20240901
    samples: int = 200
    max_b1: int = 12
    numerator_bound: int = 100
    max_nodes: int = 5000


_MEMBER_PRIME = 2147483647


def resonance_member(locus, u):
    """Is the rational vector u in R^1_k?  (u = 0 uses the b1 >= k convention.)"""
    if len(u) != locus.b1:
        raise ValueError("vector length %d, expected %d" % (len(u), locus.b1))
    if all(x == 0 for x in u):
        return locus.b1 >= locus.k
    m = locus.cup.mu_matrix([Fraction(x) for x in u])
    thr = locus.rank_threshold()
    # rank mod p lower-bounds the rational rank, so it rejects non-members
    # without exact arithmetic
    p = _MEMBER_PRIME
    try:
        mp = [
            [
                (x.numerator * pow(x.denominator, -1, p)) % p
                if isinstance(x, Fraction)
                else x % p
                for x in row
            ]
            for row in m
        ]
        if rank_mod_p(mp, p) > thr:
            return False
    except ValueError:
        pass
    return rank_rational(m) <= thr


def _symbolic_mu_matrix(cup, basis_rows):
    """mu_u as a matrix of linear polynomials in parameters s_i, u = sum s_i w_i."""
    d = len(basis_rows)
    b1 = cup.b1
    rows = []
    for h in range(cup.h2_dim):
        row = []
        for j in range(b1):
            terms = {}
            for p, w in enumerate(basis_rows):
                c = Fraction(0)
                for i in range(b1):
                    if w[i]:
                        c += Fraction(w[i]) * cup.mu[i][j][h]
                if c:
                    e = [0] * d
                    e[p] = 1
                    terms[tuple(e)] = c
            row.append(LaurentPoly(d, terms, QQ))
        rows.append(row)
    return rows


def certify_subspace(cup, k, basis_rows):
    """Does the rank condition for R^1_k hold identically on span(basis_rows)?

    Returns (ok, generic_rank).  Generic rank over the function field bounds
    the rank at every point, so ok certifies the whole subspace.
    """
    b1 = cup.b1
    threshold = b1 - 1 - k
    if threshold < 0:
        return False, None
    if cup.h2_dim == 0:
        return b1 - 1 >= k, 0
    sym = _symbolic_mu_matrix(cup, basis_rows)
    r = poly_rank_generic(sym)
    return r <= threshold, r


def _rational_roots(coeffs):
    """Rational roots of an integer polynomial given low-to-high."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs:
        return []
    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    roots = set()
    if shift:
        roots.add(Fraction(0))
        coeffs = coeffs[shift:]
    a0, an = abs(coeffs[0]), abs(coeffs[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for sgn in (1, -1):
                r = Fraction(sgn * p, q)
                if sum(c * r ** i for i, c in enumerate(coeffs)) == 0:
                    roots.add(r)
    return sorted(roots)


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _line_section_points(locus, rng, tries, minors_cap=12):
    """Candidate points of R^1_k on random rational lines u = a + t*b.

    Rational roots of a few symbolic minors along the line; candidates are
    filtered through resonance_member afterwards, so this is a point source,
    not a decision procedure.
    """
    from itertools import combinations, islice

    cup = locus.cup
    b1 = locus.b1
    found = []
    size = b1 - locus.k
    if size < 1 or size > min(cup.h2_dim, b1):
        return found
    for _ in range(tries):
        a = [rng.randint(-5, 5) for _ in range(b1)]
        b = [rng.randint(-5, 5) for _ in range(b1)]
        if not any(b):
            continue
        sym = _symbolic_mu_matrix(cup, [a, b])  # parameters s0, s1; the line is s0=1
        picks = islice(
            (
                (ri, ci)
                for ri in combinations(range(cup.h2_dim), size)
                for ci in combinations(range(b1), size)
            ),
            minors_cap,
        )
        roots = set()
        for rows_idx, cols_idx in picks:
            sub = [[sym[i][j] for j in cols_idx] for i in rows_idx]
            pol = poly_det(sub)
            if pol.is_zero():
                continue
            deg = max(e[1] for e in pol.terms)
            uni = [Fraction(0)] * (deg + 1)
            for (_, e1), c in pol.terms.items():
                uni[e1] += c
            den = 1
            for c in uni:
                den = den * c.denominator // gcd(den, c.denominator)
            roots.update(_rational_roots([int(c * den) for c in uni]))
        for t in sorted(roots):
            pt = [Fraction(x) + t * Fraction(y) for x, y in zip(a, b)]
            if any(pt):
                found.append(pt)
    return found


def resonance_components(locus, config=None):
    """Certified irreducible components of R^1_k that are linear subspaces.

    Searches the lattice of rational subspaces: seed points (coordinate
    vectors, seeded random samples, line-section roots) give kernels of
    mu_u; certified candidates are grown direction by direction and only
    maximal certified subspaces are kept.  Returns (components, uncertified)
    where uncertified lists sample points not absorbed into any component.
    """
    if config is None:
        config = SamplerConfig()
    cup = locus.cup
    b1 = locus.b1
    if b1 == 0:
        return [], []
    if b1 > config.max_b1:
        raise ValueError("b1 = %d exceeds the sampler bound %d" % (b1, config.max_b1))
    rng = random.Random(config.seed)

    full = [[int(i == j) for j in range(b1)] for i in range(b1)]
    ok, r = certify_subspace(cup, locus.k, full)
    if ok:
        comp = LinearComponent(
            basis=subspace_canonical(full), dim=b1, k_max=b1 - 1 - (r or 0)
        )
        return [comp], []

    # --- seed points -----------------------------------------------------
    pool = []
    for i in range(b1):
        e = [0] * b1
        e[i] = 1
        pool.append(list(e))
    for i in range(b1):
        for j in range(i + 1, b1):
            for s in (1, -1):
                v = [0] * b1
                v[i] = 1
                v[j] = s
                pool.append(v)
    for _ in range(config.samples):
        v = [
            Fraction(rng.randint(-config.numerator_bound, config.numerator_bound),
                     rng.randint(1, config.numerator_bound))
            for _ in range(b1)
        ]
        if any(v):
            pool.append(v)
    pool.extend(_line_section_points(locus, rng, tries=min(8, config.samples)))

    members = [u for u in pool if resonance_member(locus, u)]

    # --- direction pool: coordinate vectors and kernels of seed points ---
    directions = []
    seen_dirs = set()
    for r_ in full:
        directions.append(tuple(r_))
        seen_dirs.add(tuple(r_))
    atom_spaces = []
    for u in members:
        m = cup.mu_matrix([Fraction(x) for x in u])
        ker = nullspace(m, ncols=b1)
        if ker:
            atom_spaces.append(subspace_canonical(ker))
            for v in ker:
                tv = tuple(primitive_vector(v))
                if tv not in seen_dirs:
                    seen_dirs.add(tv)
                    directions.append(tv)

    # --- certified-subspace DFS over direction extensions ----------------
    certified = {}
    uncertified = []

    def plausible(rows):
        # cheap necessary test before symbolic certification: a couple of
        # random rational points of the span must already lie in R^1_k
        for _ in range(2):
            v = [0] * b1
            for row in rows:
                c = rng.randint(-97, 97)
                for t in range(b1):
                    v[t] += c * row[t]
            if any(v) and not resonance_member(locus, v):
                return False
        return True

    def certify(key):
        # key must already be canonical (subspace_canonical output)
        if key in certified:
            return certified[key]
        if not plausible(key):
            certified[key] = (False, None)
            return False, None
        ok, r_ = certify_subspace(cup, locus.k, [list(x) for x in key])
        certified[key] = (ok, r_)
        return ok, r_

    def reduce_against(key, d):
        # integer elimination of d against a canonical basis; the residue is
        # nonzero iff d extends the span
        v = list(d)
        for row in key:
            p = next(i for i, x in enumerate(row) if x)
            if v[p]:
                a, c = row[p], v[p]
                v = [a * x - c * y for x, y in zip(v, row)]
        return v

    def extend_canonical(key, v):
        # canonical basis of span(key + [v]) for v a nonzero residue of
        # reduce_against(key, v0); pure integer arithmetic
        w = primitive_vector(v)
        p = next(i for i, x in enumerate(w) if x)
        rows = []
        for row in key:
            if row[p]:
                a, c = w[p], row[p]
                row = primitive_vector([a * x - c * y for x, y in zip(row, w)])
            rows.append(tuple(row))
        rows.append(tuple(w))
        rows.sort(key=lambda r_: next(i for i, x in enumerate(r_) if x))
        return tuple(rows)

    seeds = []
    seen_seeds = set()
    for sp in atom_spaces + [subspace_canonical([u]) for u in members]:
        if sp not in seen_seeds:
            seen_seeds.add(sp)
            seeds.append(sp)
    # big atoms first: components get found early and the certify cache warms
    seeds.sort(key=len, reverse=True)

    maximal = []
    visited = set()
    budget = [config.max_nodes]

    def grow(space_key):
        if space_key in visited or budget[0] <= 0:
            return
        visited.add(space_key)
        budget[0] -= 1
        ok, _ = certify(space_key)
        if not ok:
            return
        dim = len(space_key)
        good = []
        for d in directions:
            v = reduce_against(space_key, d)
            if not any(v):
                continue
            cand = extend_canonical(space_key, v)
            okc, _ = certify(cand)
            if okc:
                good.append((d, cand))
        if good:
            # containment in R^1_k is monotone, so any certified space above
            # this one only uses directions whose one-step extension is
            # certified; when the join of those certifies, it subsumes them all
            join = space_key
            for d, _ in good:
                v = reduce_against(join, d)
                if any(v):
                    join = extend_canonical(join, v)
            if join != space_key:
                okj, _ = certify(join)
                if okj:
                    grow(join)
                    return
            for _, cand in good:
                grow(cand)
        if not good:
            _, r_ = certified[space_key]
            comp = LinearComponent(basis=space_key, dim=dim, k_max=locus.b1 - 1 - r_)
            if comp.key() not in {c.key() for c in maximal}:
                maximal.append(comp)

    for sp in seeds:
        ok, _ = certify(sp)
        if ok:
            grow(sp)
        else:
            uncertified.append(sp)

    # keep only maximal components
    keep = []
    for c in maximal:
        if any(
            c.key() != d.key() and subspace_leq(c.basis, d.basis) for d in maximal
        ):
            continue
        keep.append(c)
    keep.sort(key=lambda c: (-c.dim, c.basis))
    # drop uncertified seeds absorbed by a component
    uncert = [
        sp
        for sp in uncertified
        if not any(subspace_leq(sp, c.basis) for c in keep)
    ]
    return keep, uncert
