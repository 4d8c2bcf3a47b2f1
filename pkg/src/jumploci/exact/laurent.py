"""Multivariate Laurent polynomials with exact coefficients.

Terms are a map from integer exponent vectors (entries may be negative) to
nonzero coefficients in a fixed field (QQ or a prime field).  These carry the
coordinate ring of the character torus: variable t_i is the coordinate dual to
the i-th basis element of the free part of H_1.
"""

from fractions import Fraction

from .fields import QQ, PrimeField, prime_for_root_of_unity, primitive_root_of_unity


class LaurentError(ValueError):
    pass


class LaurentPoly:
    """An immutable Laurent polynomial in `nvars` variables over `field`."""

    __slots__ = ("nvars", "field", "terms", "_hash")

    def __init__(self, nvars, terms, field=QQ):
        clean = {}
        for exps, c in terms.items():
            if len(exps) != nvars:
                raise LaurentError("exponent vector %r has wrong length" % (exps,))
            c = field.coerce(c)
            if not field.is_zero(c):
                clean[tuple(int(e) for e in exps)] = c
        self.nvars = nvars
        self.field = field
        self.terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars, field=QQ):
        return cls(nvars, {}, field)

    @classmethod
    def constant(cls, nvars, c, field=QQ):
        return cls(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def one(cls, nvars, field=QQ):
        return cls.constant(nvars, 1, field)

    @classmethod
    def variable(cls, nvars, i, field=QQ):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, field)

    @classmethod
    def monomial(cls, nvars, exps, c=1, field=QQ):
        return cls(nvars, {tuple(exps): c}, field)

    # -- basic structure ------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def sorted_terms(self):
        """Terms in descending lexicographic exponent order (canonical)."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def leading(self):
        """(exponent, coefficient) of the lexicographically largest term."""
        if not self.terms:
            raise LaurentError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.field, tuple(self.sorted_terms())))
        return self._hash

    # -- arithmetic -----------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise LaurentError("nvars mismatch: %d vs %d" % (self.nvars, other.nvars))
        if self.field != other.field:
            raise LaurentError("field mismatch: %s vs %s" % (self.field, other.field))

    def __add__(self, other):
        self._check(other)
        f = self.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = f.add(terms.get(e, f.zero), c)
        return LaurentPoly(self.nvars, terms, f)

    def __neg__(self):
        f = self.field
        return LaurentPoly(self.nvars, {e: f.neg(c) for e, c in self.terms.items()}, f)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        f = self.field
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = f.add(terms.get(e, f.zero), f.mul(c1, c2))
        return LaurentPoly(self.nvars, terms, f)

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        return LaurentPoly(self.nvars, {e: f.mul(v, c) for e, v in self.terms.items()}, f)

    # -- evaluation and substitution ------------------------------------

    def evaluate(self, point):
        """Evaluate at a CharacterPoint (or plain coordinate sequence)."""
        coords = point.coords if isinstance(point, CharacterPoint) else tuple(point)
        field = point.field if isinstance(point, CharacterPoint) else self.field
        if field != self.field:
            raise LaurentError("field mismatch in evaluation")
        if len(coords) != self.nvars:
            raise LaurentError("point has %d coordinates, expected %d" % (len(coords), self.nvars))
        f = self.field
        acc = f.zero
        for exps, c in self.terms.items():
            val = c
            for x, e in zip(coords, exps):
                if e:
                    val = f.mul(val, f.pow(x, e))
            acc = f.add(acc, val)
        return acc

    def substitute(self, images):
        """Compose with a monomial map: variable i maps to images[i].

        Each image must be a single-term Laurent polynomial (a monomial times
        an invertible scalar), all in a common target ring; this implements
        restriction to a (possibly translated) subtorus.
        """
        if len(images) != self.nvars:
            raise LaurentError("need one image per variable")
        if not images:
            raise LaurentError("cannot substitute into a 0-variable ring")
        tgt_nvars = images[0].nvars
        tgt_field = images[0].field
        for im in images:
            if im.nvars != tgt_nvars or im.field != tgt_field:
                raise LaurentError("images live in different rings")
            if len(im.terms) != 1:
                raise LaurentError("substitution images must be monomials")
        f = tgt_field
        mono = [next(iter(im.terms.items())) for im in images]
        out = {}
        for exps, c in self.terms.items():
            e_acc = [0] * tgt_nvars
            c_acc = f.coerce(c)
            for (ie, ic), e in zip(mono, exps):
                if e:
                    for j in range(tgt_nvars):
                        e_acc[j] += ie[j] * e
                    c_acc = f.mul(c_acc, f.pow(ic, e))
            key = tuple(e_acc)
            out[key] = f.add(out.get(key, f.zero), c_acc)
        return LaurentPoly(tgt_nvars, out, f)

    def map_to_field(self, field):
        """Reduce coefficients into another field (QQ -> F_p)."""
        return LaurentPoly(self.nvars, {e: field.coerce(c) for e, c in self.terms.items()}, field)

    # -- normalization --------------------------------------------------

    def normalized(self):
        """Canonical form for ideal generators.

        Clears the monomial content (shift so each variable's minimum exponent
        is zero), divides by the rational content, and fixes the sign so the
        lexicographically largest term has positive coefficient.  Only defined
        over QQ.
        """
        if self.field != QQ:
            raise LaurentError("normalized() requires rational coefficients")
        if not self.terms:
            return self
        shift = [min(e[i] for e in self.terms) for i in range(self.nvars)]
        terms = {tuple(a - b for a, b in zip(e, shift)): c for e, c in self.terms.items()}
        from math import gcd

        num = 0
        den = 1
        for c in terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        content = Fraction(num, den)
        lead = max(terms)
        if terms[lead] < 0:
            content = -content
        return LaurentPoly(self.nvars, {e: c / content for e, c in terms.items()}, QQ)

    # -- formatting -----------------------------------------------------

    def __repr__(self):
        return "LaurentPoly(%s)" % self.format()

    def format(self, names=None):
        if not self.terms:
            return "0"
        if names is None:
            names = ["t%d" % (i + 1) for i in range(self.nvars)]
        bits = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                ("%s" % names[i] if e == 1 else "%s^%d" % (names[i], e))
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = "%s*%s" % (c, mono)
            bits.append(s)
        out = bits[0]
        for s in bits[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out


class CharacterPoint:
    """A point of the character torus with exact invertible coordinates.

    Over QQ the coordinates are nonzero rationals; over F_p they are nonzero
    residues, optionally realizing root-of-unity (torsion) coordinates of a
    declared order via p = 1 (mod order).
    """

    __slots__ = ("coords", "field", "torsion_order")

    def __init__(self, coords, field=QQ, torsion_order=None):
        coords = tuple(field.coerce(c) for c in coords)
        for c in coords:
            if field.is_zero(c):
                raise LaurentError("character coordinates must be invertible")
        if torsion_order is not None:
            if not isinstance(field, PrimeField):
                raise LaurentError("torsion characters are realized over prime fields")
            if (field.p - 1) % torsion_order != 0:
                raise LaurentError(
                    "field %s has no roots of unity of order %d" % (field.name, torsion_order)
                )
        self.coords = coords
        self.field = field
        self.torsion_order = torsion_order

    def __len__(self):
        return len(self.coords)

    def is_trivial(self):
        return all(c == self.field.one for c in self.coords)

    @classmethod
    def trivial(cls, nvars, field=QQ):
        return cls((field.one,) * nvars, field)

    @classmethod
    def torsion(cls, exponents, order, lower_bound=10 ** 6):
        """The torsion character with coordinates zeta^e_i, zeta of the given order.

        Realized exactly in F_p for the smallest prime p = 1 (mod order)
        exceeding lower_bound.
        """
        p = prime_for_root_of_unity(order, lower_bound)
        field = PrimeField(p)
        z = primitive_root_of_unity(field, order)
        return cls(tuple(pow(z, e % order, p) for e in exponents), field, torsion_order=order)

    def __repr__(self):
        return "CharacterPoint(%s over %s)" % (list(self.coords), self.field)
