"""Truncated free Lie algebras, relator logarithms, and graded quotients.

The free Lie algebra on the generators embeds in the tensor algebra; Lyndon
words give a per-degree basis whose expansions let us test Lie membership
and extract coordinates by exact linear algebra.  Relator logarithms (log of
the Magnus expansion) generate an ideal whose leading-term spaces produce
the lower-central-series graded quotient; generator and relation degrees of
that graded algebra come from quotient-by-brackets and degreewise
Chevalley-Eilenberg 2-homology.

Degrees here are positive; a statement about weight -d in the Hodge-theoretic
grading corresponds to degree d.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .magnus import nc_add, nc_mul, nc_one

MAX_DEGREE = 6
MALCEV_MAX_DEGREE = 5


# -- Lyndon words and the Witt formula ------------------------------------


def _mobius(n):
    if n == 1:
        return 1
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def free_lie_dims(n, degree_cap):
    """Per-degree dimensions of the free Lie algebra on n generators (Witt)."""
    if n < 1:
        raise ValueError("need at least one generator")
    if not 2 <= degree_cap <= MAX_DEGREE:
        raise ValueError("degree cap must be between 2 and %d" % MAX_DEGREE)
    dims = []
    for d in range(1, degree_cap + 1):
        total = 0
        for e in range(1, d + 1):
            if d % e == 0:
                total += _mobius(e) * n ** (d // e)
        dims.append(total // d)
    return dims


def lyndon_words(n, length):
    """All Lyndon words of the exact length over the alphabet 0..n-1 (Duval)."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == length:
            out.append(tuple(w))
        while len(w) < length:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
    return out


def standard_bracketing(word):
    """Right Lyndon factorization bracketing of a Lyndon word."""
    if len(word) == 1:
        return word[0]
    # longest proper Lyndon suffix
    for i in range(1, len(word)):
        if _is_lyndon(word[i:]):
            return (standard_bracketing(word[:i]), standard_bracketing(word[i:]))
    raise ValueError("not a Lyndon word: %r" % (word,))


def _is_lyndon(w):
    return all(w < w[i:] for i in range(1, len(w)))


def bracket_expand(tree):
    """Tensor expansion of a bracketing tree, as {word: coefficient}."""
    if isinstance(tree, int):
        return {(tree,): Fraction(1)}
    left = bracket_expand(tree[0])
    right = bracket_expand(tree[1])
    out = {}
    for kl, cl in left.items():
        for kr, cr in right.items():
            for key, sign in ((kl + kr, 1), (kr + kl, -1)):
                s = out.get(key, Fraction(0)) + sign * cl * cr
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return out


# -- dense per-degree linear algebra over Q -------------------------------


def _order_key(word):
    return (len(word), word)


class _Solver:
    """Sparse row space with tracked coefficients over word-tuple columns.

    Rows are {word: Fraction} dicts; each stored row is normalized with its
    minimal word (in degree-then-lex order) as pivot, so eliminating the
    minimal pivot candidate only introduces later words and reduction
    terminates.  decompose expresses a vector over the appended rows.
    """

    def __init__(self, rows=()):
        self.by_pivot = {}  # pivot word -> (vec, tag over appended indices)
        self.nrows = 0
        for r in rows:
            self.append(r)

    def append(self, vec):
        vec, tag = self._reduce(dict(vec), {self.nrows: Fraction(1)})
        self.nrows += 1
        if not vec:
            return False
        piv = min(vec, key=_order_key)
        inv = 1 / vec[piv]
        vec = {k: v * inv for k, v in vec.items()}
        tag = {k: v * inv for k, v in tag.items()}
        self.by_pivot[piv] = (vec, tag)
        return True

    def _reduce(self, vec, tag):
        while True:
            hits = [k for k in vec if k in self.by_pivot]
            if not hits:
                return vec, tag
            k = min(hits, key=_order_key)
            row, rtag = self.by_pivot[k]
            c = vec[k]
            for kk, vv in row.items():
                s = vec.get(kk, Fraction(0)) - c * vv
                if s:
                    vec[kk] = s
                else:
                    vec.pop(kk, None)
            for kk, vv in rtag.items():
                s = tag.get(kk, Fraction(0)) - c * vv
                if s:
                    tag[kk] = s
                else:
                    tag.pop(kk, None)

    def decompose(self, vec):
        """Coefficients over the appended rows, or None if not in the span."""
        res, tag = self._reduce(dict(vec), {})
        if res:
            return None
        return [-tag.get(i, Fraction(0)) for i in range(self.nrows)]


@lru_cache(maxsize=None)
def _lie_basis_data(n, degree):
    """(lyndon words, their tensor expansions, decomposition solver)."""
    words = lyndon_words(n, degree)
    vectors = [bracket_expand(standard_bracketing(w)) for w in words]
    solver = _Solver(vectors)
    return words, vectors, solver


class FreeLieTruncation:
    """Free Lie algebra on n weight-1 generators, truncated at a degree cap.

    Elements are represented by their tensor expansions; Lyndon words index
    the per-degree basis.
    """

    def __init__(self, n, degree_cap):
        if not 2 <= degree_cap <= MAX_DEGREE:
            raise ValueError("degree cap must be between 2 and %d" % MAX_DEGREE)
        self.n = n
        self.degree_cap = degree_cap
        self.dims = free_lie_dims(n, degree_cap)

    def basis_words(self, degree):
        return _lie_basis_data(self.n, degree)[0]

    def basis_tensor(self, degree, index):
        return _lie_basis_data(self.n, degree)[1][index]

    def lie_coordinates(self, tensor, degree):
        """Coordinates of a degree-homogeneous Lie tensor in the Lyndon basis."""
        for key in tensor:
            if len(key) != degree:
                raise ValueError("tensor is not homogeneous of degree %d" % degree)
        _, _, solver = _lie_basis_data(self.n, degree)
        coeffs = solver.decompose(tensor)
        if coeffs is None:
            raise ValueError("tensor is not a Lie element")
        return coeffs


# -- relator logarithms ---------------------------------------------------


@dataclass(frozen=True)
class RelatorLog:
    """Truncated logarithms of the relators in the Lyndon basis.

    coords[j][d] is the degree-d coordinate vector of log(r_j); tensors[j]
    keeps the raw truncated log as a tensor for downstream ideal closure.
    """

    degree_cap: int
    ngens: int
    coords: tuple
    tensors: tuple


def _exp_generator(i, exponent, cap):
    """exp(e X_i) truncated: the exponential Magnus image of a generator power."""
    out = {}
    coeff = Fraction(1)
    for m in range(cap + 1):
        if m:
            coeff = coeff * exponent / m
        out[(i,) * m] = coeff
    return out


def exp_magnus_of_word(word, cap):
    """Magnus image of a word under the exponential embedding x_i -> exp(X_i).

    Unlike x_i -> 1 + X_i, this sends group elements to group-like series,
    so their logarithms are Lie (primitive) in each degree.
    """
    out = nc_one()
    for (g, e) in word.syllables:
        out = nc_mul(out, _exp_generator(g, e, cap), cap)
    return out


def log_of_group_element(word, cap):
    """Truncated log of the exponential Magnus expansion of a group word."""
    z = nc_add(exp_magnus_of_word(word, cap), nc_one(), scale=Fraction(-1))
    acc = {}
    power = nc_one()
    for m in range(1, cap + 1):
        power = nc_mul(power, z, cap)
        acc = nc_add(acc, power, scale=Fraction((-1) ** (m + 1), m))
    return acc


def relator_logs(pres, degree_cap=4):
    """Logs of all relators, truncated and expressed in the Lyndon basis."""
    if not 2 <= degree_cap <= MAX_DEGREE:
        raise ValueError("degree cap must be between 2 and %d" % MAX_DEGREE)
    lie = FreeLieTruncation(pres.ngens, degree_cap)
    coords = []
    tensors = []
    for r in pres.relators:
        log = log_of_group_element(r, degree_cap)
        per_degree = {}
        for d in range(1, degree_cap + 1):
            part = {k: c for k, c in log.items() if len(k) == d}
            if part:
                per_degree[d] = tuple(lie.lie_coordinates(part, d))
        coords.append(per_degree)
        tensors.append(log)
    return RelatorLog(
        degree_cap=degree_cap, ngens=pres.ngens, coords=tuple(coords), tensors=tuple(tensors)
    )


# -- ideal closure and the graded quotient --------------------------------


class _SparseEchelon:
    """Echelon basis of sparse tensor vectors ordered by (degree, word)."""

    def __init__(self):
        self.rows = {}  # pivot word -> normalized sparse vector

    def reduce(self, vec):
        vec = dict(vec)
        while vec:
            piv = min(vec, key=_order_key)
            row = self.rows.get(piv)
            if row is None:
                return vec
            c = vec[piv]
            for k, v in row.items():
                s = vec.get(k, Fraction(0)) - c * v
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
        return vec

    def add(self, vec):
        vec = self.reduce(vec)
        if not vec:
            return None
        piv = min(vec, key=_order_key)
        inv = 1 / vec[piv]
        vec = {k: v * inv for k, v in vec.items()}
        self.rows[piv] = vec
        return vec


@dataclass(frozen=True)
class GradedQuotient:
    """Lower-central-series graded quotient data, truncated at degree_cap.

    dims[d-1] is the dimension of the degree-d graded piece; generator_dims
    and relation_dims map degrees to counts of minimal generators/relations
    visible up to the truncation.
    """

    degree_cap: int
    dims: tuple
    generator_dims: dict
    relation_dims: dict

    def generator_degrees(self):
        return sorted(d for d, c in self.generator_dims.items() if c > 0)

    def relation_degrees(self):
        return sorted(d for d, c in self.relation_dims.items() if c > 0)


def malcev_truncation(pres, degree_cap=4):
    """Graded quotient of the free Lie truncation by the relator-log ideal.

    The ideal generated by the truncated relator logarithms is closed under
    bracketing with the generators; its leading-term spaces per degree cut
    the free Lie pieces down to the lower-central-series quotients of the
    group's Malcev Lie algebra (verified against fixtures, not proven here).
    """
    if not 2 <= degree_cap <= MALCEV_MAX_DEGREE:
        raise ValueError("degree cap must be between 2 and %d" % MALCEV_MAX_DEGREE)
    n = pres.ngens
    lie = FreeLieTruncation(n, degree_cap)
    logs = relator_logs(pres, degree_cap)

    ech = _SparseEchelon()
    queue = []
    for t in logs.tensors:
        t = {k: c for k, c in t.items() if 1 <= len(k) <= degree_cap}
        row = ech.add(t)
        if row:
            queue.append(row)
    while queue:
        elem = queue.pop()
        if min(len(k) for k in elem) >= degree_cap:
            continue
        for i in range(n):
            bracket = {}
            for k, c in elem.items():
                if len(k) + 1 > degree_cap:
                    continue
                for key, sign in (((i,) + k, 1), (k + (i,), -1)):
                    s = bracket.get(key, Fraction(0)) + sign * c
                    if s:
                        bracket[key] = s
                    else:
                        bracket.pop(key, None)
            if bracket:
                row = ech.add(bracket)
                if row:
                    queue.append(row)

    if not ech.rows:
        # free case: no relator ideal, the quotient is the free truncation
        return GradedQuotient(
            degree_cap=degree_cap,
            dims=tuple(lie.dims),
            generator_dims={1: n, **{d: 0 for d in range(2, degree_cap + 1)}},
            relation_dims={d: 0 for d in range(2, degree_cap + 1)},
        )

    # leading-term spaces per degree
    leading = {d: [] for d in range(1, degree_cap + 1)}
    for piv, row in ech.rows.items():
        d = len(piv)
        lead = {k: c for k, c in row.items() if len(k) == d}
        leading[d].append(lead)

    # graded pieces: representatives are Lyndon expansions independent mod leading terms
    reps = []  # list of (degree, tensor)
    dims = []
    solvers = {}
    for d in range(1, degree_cap + 1):
        solver = _Solver(leading[d])
        base_rows = solver.nrows
        words = lie.basis_words(d)
        deg_reps = []
        rep_positions = []
        for idx in range(len(words)):
            tensor = lie.basis_tensor(d, idx)
            if solver.append(tensor):
                deg_reps.append(tensor)
                rep_positions.append(base_rows + idx)
        dims.append(len(deg_reps))
        reps.extend((d, t) for t in deg_reps)
        solvers[d] = (solver, rep_positions)

    # structure constants of the graded algebra on the representatives
    index_by_degree = {}
    for i, (d, _) in enumerate(reps):
        index_by_degree.setdefault(d, []).append(i)

    def gr_coords(tensor, d):
        """Coordinates of a degree-d Lie tensor in the gr_d representatives."""
        solver, rep_positions = solvers[d]
        coeffs = solver.decompose(tensor)
        if coeffs is None:
            raise ValueError("tensor not in the truncated Lie span")
        return [coeffs[p] for p in rep_positions]

    nreps = len(reps)
    bracket_cache = {}

    def bracket_coords(i, j):
        if (i, j) in bracket_cache:
            return bracket_cache[(i, j)]
        di, ti = reps[i]
        dj, tj = reps[j]
        d = di + dj
        if d > degree_cap:
            out = (d, [])
        else:
            tensor = {}
            for ka, ca in ti.items():
                for kb, cb in tj.items():
                    for key, sign in ((ka + kb, 1), (kb + ka, -1)):
                        s = tensor.get(key, Fraction(0)) + sign * ca * cb
                        if s:
                            tensor[key] = s
                        else:
                            tensor.pop(key, None)
            out = (d, gr_coords(tensor, d) if tensor else [Fraction(0)] * len(index_by_degree.get(d, [])))
        bracket_cache[(i, j)] = out
        return out

    generator_dims = _generator_dims(reps, index_by_degree, bracket_coords, dims, degree_cap)
    relation_dims = _relation_dims(reps, index_by_degree, bracket_coords, degree_cap)
    return GradedQuotient(
        degree_cap=degree_cap,
        dims=tuple(dims),
        generator_dims=generator_dims,
        relation_dims=relation_dims,
    )


_CERT_PRIME = 2147483647


def _rank_exact(rows):
    """Exact rational rank, with a cheap mod-p full-rank certificate first.

    Rank mod p never exceeds the rational rank, so a full-rank answer mod a
    large prime is already exact; otherwise fall back to fraction-free
    elimination over Z.
    """
    if not rows or not rows[0]:
        return 0
    from .exact.linalg import _integer_rows, rank_mod_p, rank_rational

    a = _integer_rows(rows)
    r = rank_mod_p(a, _CERT_PRIME)
    if r == min(len(a), len(a[0])):
        return r
    return rank_rational(a)


def _generator_dims(reps, index_by_degree, bracket_coords, dims, degree_cap):
    """Minimal generator count per degree: gr_d modulo brackets of lower pieces."""
    out = {}
    for d in range(1, degree_cap + 1):
        target = index_by_degree.get(d, [])
        if not target:
            out[d] = 0
            continue
        products = []
        for a in range(1, d):
            b = d - a
            for i in index_by_degree.get(a, []):
                for j in index_by_degree.get(b, []):
                    _, coords = bracket_coords(i, j)
                    if any(coords):
                        products.append([Fraction(x) for x in coords])
        out[d] = dims[d - 1] - _rank_exact(products)
    return out


def _relation_dims(reps, index_by_degree, bracket_coords, degree_cap):
    """Degreewise Chevalley-Eilenberg 2-homology of the graded quotient."""
    nreps = len(reps)
    degree_of = [d for d, _ in reps]
    out = {}
    for s in range(2, degree_cap + 1):
        pairs = [
            (i, j)
            for i in range(nreps)
            for j in range(i + 1, nreps)
            if degree_of[i] + degree_of[j] == s
        ]
        if not pairs:
            out[s] = 0
            continue
        pair_index = {p: t for t, p in enumerate(pairs)}
        target = index_by_degree.get(s, [])
        target_pos = {g: t for t, g in enumerate(target)}
        # d2: wedge -> gr_s
        d2 = []
        for (i, j) in pairs:
            bd, coords = bracket_coords(i, j)
            row = [Fraction(0)] * len(target)
            if bd <= degree_cap:
                for t, c in enumerate(coords):
                    row[t] = c
            d2.append(row)
        rank_d2 = _rank_exact(d2) if target else 0
        ker_dim = len(pairs) - rank_d2
        # d3: wedge^3 -> wedge^2
        triples = [
            (i, j, k)
            for i in range(nreps)
            for j in range(i + 1, nreps)
            for k in range(j + 1, nreps)
            if degree_of[i] + degree_of[j] + degree_of[k] == s
        ]
        d3 = []
        for (i, j, k) in triples:
            row = [Fraction(0)] * len(pairs)

            def add_wedge(coords, bdeg, other, sign):
                # sum_h coords[h] * (rep_h wedge rep_other)
                for t, c in enumerate(coords):
                    if not c:
                        continue
                    h = index_by_degree[bdeg][t]
                    if h == other:
                        continue
                    if h < other:
                        row[pair_index[(h, other)]] += sign * c
                    else:
                        row[pair_index[(other, h)]] -= sign * c

            bd, coords = bracket_coords(i, j)
            if bd <= degree_cap:
                add_wedge(coords, bd, k, 1)
            bd, coords = bracket_coords(i, k)
            if bd <= degree_cap:
                add_wedge(coords, bd, j, -1)
            bd, coords = bracket_coords(j, k)
            if bd <= degree_cap:
                add_wedge(coords, bd, i, 1)
            if any(row):
                d3.append(row)
        rank_d3 = _rank_exact(d3) if d3 else 0
        out[s] = ker_dim - rank_d3
    return out


# -- degree-bound verdicts ------------------------------------------------


@dataclass(frozen=True)
class DegreeVerdict:
    variety_class: str
    passed: bool
    witness: object
    truncation_degree: int

    @property
    def annotation(self):
        return "up to degree %d" % self.truncation_degree


def morgan_degree_check(quotient, variety_class):
    """Degree-bound obstruction on the graded Malcev quotient.

    projective: generators only in degree 1, relations only in degree 2;
    quasiprojective: generators in degrees {1,2}, relations in {2,3,4}.
    PASS means no obstruction found up to the truncation degree; FAIL is
    definitive, with the offending degree as witness.
    """
    if variety_class not in ("projective", "quasiprojective"):
        raise ValueError("variety class must be projective or quasiprojective")
    need = 3 if variety_class == "projective" else 4
    if quotient.degree_cap < need:
        raise ValueError(
            "truncation degree %d insufficient for the %s check (need >= %d)"
            % (quotient.degree_cap, variety_class, need)
        )
    allowed_gens = {1} if variety_class == "projective" else {1, 2}
    allowed_rels = {2} if variety_class == "projective" else {2, 3, 4}
    for d in quotient.generator_degrees():
        if d not in allowed_gens:
            return DegreeVerdict(variety_class, False, ("generator", d), quotient.degree_cap)
    for d in quotient.relation_degrees():
        if d not in allowed_rels:
            return DegreeVerdict(variety_class, False, ("relation", d), quotient.degree_cap)
    return DegreeVerdict(variety_class, True, None, quotient.degree_cap)
