"""Finite group presentations: words, parsing, constructions, abelianization.

Words are stored freely reduced; relators are additionally cyclically
reduced.  The input grammar is line oriented:

    gens: a b c        # generator names
    rels:              # zero or more relator lines follow
    [a,b]
    a b^-1 a^-1 b^-1

A relator is a sequence of terms; a term is a name, a parenthesized word or
a commutator [u,v] = u v u^-1 v^-1, optionally followed by ^<int>.
"""

from dataclasses import dataclass, field
from math import gcd

from .exact.smith import smith_with_transforms


class ParseError(ValueError):
    def __init__(self, message, line, col):
        super().__init__("line %d, column %d: %s" % (line, col, message))
        self.line = line
        self.col = col


# -- words ----------------------------------------------------------------


def free_reduce(syllables):
    """Collapse adjacent syllables on the same generator, dropping zeros."""
    out = []
    for g, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            merged = out[-1][1] + e
            out.pop()
            if merged:
                out.append((g, merged))
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word, as (generator index, nonzero exponent) syllables."""

    syllables: tuple

    def __post_init__(self):
        object.__setattr__(self, "syllables", free_reduce(self.syllables))

    @classmethod
    def identity(cls):
        return cls(())

    @classmethod
    def gen(cls, i, e=1):
        return cls(((i, e),))

    def __mul__(self, other):
        return Word(self.syllables + other.syllables)

    def inverse(self):
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def is_identity(self):
        return not self.syllables

    def cyclically_reduced(self):
        syl = list(self.syllables)
        while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
            g = syl[0][0]
            e = syl[0][1] + syl[-1][1]
            syl = syl[1:-1]
            if e:
                syl.insert(0, (g, e))
                break
        return Word(tuple(syl))

    def exponent_vector(self, ngens):
        v = [0] * ngens
        for g, e in self.syllables:
            v[g] += e
        return v

    def letters(self):
        """The word as a sequence of single +/-1 letters (gen, sign)."""
        out = []
        for g, e in self.syllables:
            s = 1 if e > 0 else -1
            out.extend((g, s) for _ in range(abs(e)))
        return out

    def length(self):
        return sum(abs(e) for _, e in self.syllables)

    def format(self, names):
        if not self.syllables:
            return "1"
        bits = []
        for g, e in self.syllables:
            bits.append(names[g] if e == 1 else "%s^%d" % (names[g], e))
        return " ".join(bits)


def commutator(u, v):
    return u * v * u.inverse() * v.inverse()


# -- presentations --------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    gen_names: tuple
    relators: tuple

    def __post_init__(self):
        if not self.gen_names:
            raise ValueError("a presentation needs at least one generator")
        if len(set(self.gen_names)) != len(self.gen_names):
            raise ValueError("duplicate generator names")
        reduced = []
        n = len(self.gen_names)
        for r in self.relators:
            for g, _ in r.syllables:
                if not 0 <= g < n:
                    raise ValueError("relator uses generator index %d out of range" % g)
            r = r.cyclically_reduced()
            if not r.is_identity():
                reduced.append(r)
        object.__setattr__(self, "relators", tuple(reduced))

    @property
    def ngens(self):
        return len(self.gen_names)

    def relator_matrix(self):
        """Exponent matrix of the relators: one row per relator."""
        return [r.exponent_vector(self.ngens) for r in self.relators]

    def format(self):
        lines = ["gens: " + " ".join(self.gen_names), "rels:"]
        lines += [r.format(self.gen_names) for r in self.relators]
        return "\n".join(lines) + "\n"


# -- parser ---------------------------------------------------------------


class _Tokenizer:
    SYMBOLS = "()[],^"

    def __init__(self, text):
        self.tokens = []
        for ln, line in enumerate(text.splitlines(), start=1):
            i = 0
            while i < len(line):
                c = line[i]
                if c == "#":
                    break
                if c.isspace():
                    i += 1
                    continue
                col = i + 1
                if c in self.SYMBOLS:
                    self.tokens.append((c, c, ln, col))
                    i += 1
                elif c.isalpha():
                    j = i
                    while j < len(line) and (line[j].isalnum() or line[j] == "_"):
                        j += 1
                    self.tokens.append(("name", line[i:j], ln, col))
                    i = j
                elif c.isdigit() or (c == "-" and i + 1 < len(line) and line[i + 1].isdigit()):
                    j = i + 1
                    while j < len(line) and line[j].isdigit():
                        j += 1
                    self.tokens.append(("int", int(line[i:j]), ln, col))
                    i = j
                elif c == ":":
                    self.tokens.append((":", ":", ln, col))
                    i += 1
                else:
                    raise ParseError("unexpected character %r" % c, ln, col)
            self.tokens.append(("newline", None, ln, len(line) + 1))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("eof", None, -1, -1)

    def next(self):
        t = self.peek()
        if t[0] != "eof":
            self.pos += 1
        return t

    def skip_newlines(self):
        while self.peek()[0] == "newline":
            self.next()


def parse_presentation(text):
    """Parse the presentation grammar; raises ParseError with line/column."""
    tz = _Tokenizer(text)
    tz.skip_newlines()
    t = tz.next()
    if t[0] != "name" or t[1] != "gens":
        raise ParseError("expected 'gens:'", t[2], t[3])
    t = tz.next()
    if t[0] != ":":
        raise ParseError("expected ':' after 'gens'", t[2], t[3])
    names = []
    while tz.peek()[0] == "name":
        names.append(tz.next()[1])
    if not names:
        t = tz.peek()
        raise ParseError("empty generator list", t[2], t[3])
    t = tz.next()
    if t[0] != "newline":
        raise ParseError("junk after generator list", t[2], t[3])
    index = {nm: i for i, nm in enumerate(names)}
    tz.skip_newlines()
    t = tz.next()
    if t[0] != "name" or t[1] != "rels":
        raise ParseError("expected 'rels:'", t[2], t[3])
    t = tz.next()
    if t[0] != ":":
        raise ParseError("expected ':' after 'rels'", t[2], t[3])
    relators = []
    # a relator may share the rels: line
    if tz.peek()[0] not in ("newline", "eof"):
        relators.append(_parse_word(tz, index, stop=("newline",)))
    t = tz.next()
    if t[0] not in ("newline", "eof"):
        raise ParseError("junk after relator", t[2], t[3])
    while True:
        tz.skip_newlines()
        if tz.peek()[0] == "eof":
            break
        relators.append(_parse_word(tz, index, stop=("newline",)))
        t = tz.next()
        if t[0] not in ("newline", "eof"):
            raise ParseError("junk after relator", t[2], t[3])
    return Presentation(tuple(names), tuple(relators))


def _parse_word(tz, index, stop):
    word = Word.identity()
    first = True
    while True:
        t = tz.peek()
        if t[0] in stop or t[0] == "eof":
            if first:
                raise ParseError("empty word", t[2], t[3])
            return word
        word = word * _parse_term(tz, index)
        first = False


def _parse_term(tz, index):
    atom = _parse_atom(tz, index)
    if tz.peek()[0] == "^":
        tz.next()
        t = tz.next()
        if t[0] != "int":
            raise ParseError("expected integer exponent after '^'", t[2], t[3])
        e = t[1]
        if e >= 0:
            out = Word.identity()
            for _ in range(e):
                out = out * atom
            return out
        inv = atom.inverse()
        out = Word.identity()
        for _ in range(-e):
            out = out * inv
        return out
    return atom


def _parse_atom(tz, index):
    t = tz.next()
    if t[0] == "name":
        if t[1] not in index:
            raise ParseError("unknown generator %r" % t[1], t[2], t[3])
        return Word.gen(index[t[1]])
    if t[0] == "(":
        w = _parse_word(tz, index, stop=(")",))
        t2 = tz.next()
        if t2[0] != ")":
            raise ParseError("expected ')'", t2[2], t2[3])
        return w
    if t[0] == "[":
        u = _parse_word(tz, index, stop=(",",))
        t2 = tz.next()
        if t2[0] != ",":
            raise ParseError("malformed commutator: expected ','", t2[2], t2[3])
        v = _parse_word(tz, index, stop=("]",))
        t3 = tz.next()
        if t3[0] != "]":
            raise ParseError("malformed commutator: expected ']'", t3[2], t3[3])
        return commutator(u, v)
    raise ParseError("unexpected token %r" % (t[1],), t[2], t[3])


# -- standard constructions ----------------------------------------------


def free_presentation(n, prefix="x"):
    if n < 1:
        raise ValueError("free rank must be at least 1; use trivial_presentation()")
    return Presentation(tuple("%s%d" % (prefix, i + 1) for i in range(n)), ())


def trivial_presentation():
    return Presentation(("a",), (Word.gen(0),))


def raag_presentation(graph):
    """Right-angled Artin group of a simple graph: one commutator per edge."""
    names = tuple(graph.vertices)
    index = {nm: i for i, nm in enumerate(names)}
    rels = []
    for u, v in graph.sorted_edges():
        rels.append(commutator(Word.gen(index[u]), Word.gen(index[v])))
    return Presentation(names, tuple(rels))


def surface_presentation(genus, punctures=0):
    """Standard presentation of a genus-g surface group with s punctures.

    For s > 0 the product relator is eliminated, leaving a free group of
    rank 2g + s - 1.
    """
    g, s = genus, punctures
    if g < 0 or s < 0:
        raise ValueError("genus and punctures must be nonnegative")
    if (g, s) == (0, 0) or (g, s) == (0, 1):
        return trivial_presentation()
    if s > 0:
        return free_presentation(2 * g + s - 1)
    names = []
    for i in range(g):
        names += ["a%d" % (i + 1), "b%d" % (i + 1)]
    rel = Word.identity()
    for i in range(g):
        rel = rel * commutator(Word.gen(2 * i), Word.gen(2 * i + 1))
    return Presentation(tuple(names), (rel,))


def direct_product(p, q):
    """Direct product: disjoint generators, all relators, cross commutators."""
    names = tuple("p_%s" % nm for nm in p.gen_names) + tuple("q_%s" % nm for nm in q.gen_names)
    np_ = p.ngens
    rels = list(p.relators)
    for r in q.relators:
        rels.append(Word(tuple((g + np_, e) for g, e in r.syllables)))
    for i in range(np_):
        for j in range(q.ngens):
            rels.append(commutator(Word.gen(i), Word.gen(np_ + j)))
    return Presentation(names, tuple(rels))


# -- abelianization -------------------------------------------------------


@dataclass(frozen=True)
class AbelianizationData:
    """H_1 of the presented group: Betti number, torsion, and basis map.

    basis_map[j] is the image of generator j in the chosen basis of the free
    part of H_1 (a length-b1 integer vector); torsion_map[j] collects its
    coordinates modulo the torsion invariants.
    """

    b1: int
    torsion: tuple
    basis_map: tuple
    torsion_map: tuple = field(default=())

    def free_image(self, word, ngens):
        v = word.exponent_vector(ngens)
        return tuple(
            sum(v[j] * self.basis_map[j][h] for j in range(ngens)) for h in range(self.b1)
        )

    def torsion_image(self, word, ngens):
        v = word.exponent_vector(ngens)
        return tuple(
            sum(v[j] * self.torsion_map[j][h] for j in range(ngens)) % self.torsion[h]
            for h in range(len(self.torsion))
        )


def abelianization(pres):
    """Smith-form abelianization of a presentation."""
    n = pres.ngens
    rel = pres.relator_matrix()
    if not rel:
        basis = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return AbelianizationData(b1=n, torsion=(), basis_map=basis, torsion_map=tuple(() for _ in range(n)))
    sf, u, v = smith_with_transforms(rel)
    r = sf.rank
    # in coordinates y = x * V the relations become d_i * y_i = 0
    free_cols = list(range(r, n))
    tor_cols = [i for i in range(r) if sf.diag[i] > 1]
    basis = tuple(tuple(v[j][c] for c in free_cols) for j in range(n))
    tormap = tuple(tuple(v[j][c] % sf.diag[c] for c in tor_cols) for j in range(n))
    return AbelianizationData(
        b1=n - r,
        torsion=tuple(sf.diag[c] for c in tor_cols),
        basis_map=basis,
        torsion_map=tormap,
    )


# -- cyclic covers (Reidemeister-Schreier) --------------------------------


def cyclic_cover_presentation(pres, phi, order):
    """Presentation of the kernel of G -> Z/N, phi giving generator images.

    Uses Schreier coset rewriting along a spanning tree of the coset graph;
    Schreier generators on tree edges are removed.  phi must be surjective
    (its images together with N generate Z/N) and must kill every relator.
    """
    n = pres.ngens
    N = order
    if len(phi) != n:
        raise ValueError("phi needs one image per generator")
    g = N
    for x in phi:
        g = gcd(g, x)
    if g != 1:
        raise ValueError("phi is not surjective onto Z/%d" % N)
    for r in pres.relators:
        if sum(e * phi[g2] for g2, e in r.syllables) % N != 0:
            raise ValueError("phi does not vanish on relator %s" % r.format(pres.gen_names))

    # BFS spanning tree of the coset graph on Z/N
    tree_edge = {}  # coset j -> (parent_coset, gen, sign) reaching j
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(n):
                for s in (1, -1):
                    d = (c + s * phi[i]) % N
                    if d not in seen:
                        seen.add(d)
                        tree_edge[d] = (c, i, s)
                        nxt.append(d)
        frontier = nxt
    if len(seen) != N:
        raise ValueError("coset graph not connected; phi not surjective")

    tree = set()
    for d, (c, i, s) in tree_edge.items():
        tree.add((c, i) if s == 1 else (d, i))

    sg_index = {}
    sg_names = []
    for c in range(N):
        for i in range(n):
            if (c, i) in tree:
                continue
            sg_index[(c, i)] = len(sg_names)
            sg_names.append("%s_%d" % (pres.gen_names[i], c))

    def rewrite(word, start):
        out = []
        c = start
        for i, s in word.letters():
            if s == 1:
                if (c, i) not in tree:
                    out.append((sg_index[(c, i)], 1))
                c = (c + phi[i]) % N
            else:
                c = (c - phi[i]) % N
                if (c, i) not in tree:
                    out.append((sg_index[(c, i)], -1))
        return Word(tuple(out))

    relators = []
    seen_rel = set()
    for r in pres.relators:
        for c in range(N):
            w = rewrite(r, c).cyclically_reduced()
            if not w.is_identity() and w.syllables not in seen_rel:
                seen_rel.add(w.syllables)
                relators.append(w)
    if not sg_names:
        # finite cyclic base with trivial kernel presentation collapses
        sg_names = ["triv"]
        relators = [Word.gen(0)]
    return Presentation(tuple(sg_names), tuple(relators))
