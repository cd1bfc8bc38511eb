"""Cyclic words, their Poisson-type bracket, and the wedge complex.

A cyclic word over C^{2n|m} is a tensor word modulo rotation, where
rotating a letter past the rest carries the Koszul sign; a word can cancel
itself (one odd letter rotated around an odd remainder), e.g. the fourth
power of an odd letter is zero.  Chains of cyclic words form a Lie
(super)algebra: the bracket contracts one letter of each word through the
inner product and splices the remainders into one cyclic word.  Wedge
words of these chains form a complex whose differential replaces a pair of
factors by their bracket; quadratic cyclic words act on everything by the
bracket, and dividing by that action is implemented as an explicit exact
reduction.  The linear Darboux normalization lives here too, since it is
what moves an arbitrary even inner product to the canonical one before any
of the above is applied.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .scalars import Surd, format_scalar, mat_mul, mat_transpose
from .superspace import (SuperDim, SuperTensor, SymplecticForm,
                         canonical_form_matrix, norm)


# ------------------------------------------------------------ cyclic words

def cyclic_reduce(word, dim: SuperDim):
    """Canonical rotation of a word with its sign, or None if the word
    cancels itself (its class is zero).

    The canonical representative is the lexicographically smallest
    rotation; the sign moves the original to it one letter at a time, each
    move of an odd letter past an odd remainder costing -1.
    """
    word = tuple(word)
    k = len(word)
    if k == 0:
        return (), 1
    pars = dim.parities(word)
    best = None
    best_signs = set()
    cur_sign = 1
    for r in range(k):
        rot = word[r:] + word[:r]
        if best is None or rot < best:
            best = rot
            best_signs = {cur_sign}
        elif rot == best:
            best_signs.add(cur_sign)
        # advance: move letter r past the rest
        if pars[r] and (sum(pars) - pars[r]) % 2:
            cur_sign = -cur_sign
    if len(best_signs) == 2:
        return None
    return best, best_signs.pop()


class CyclicWord:
    """A finite linear combination of cyclic words (mixed lengths allowed).

    Terms map canonical word tuples to exact coefficients; construction
    reduces arbitrary representatives and drops self-cancelling ones.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim: SuperDim, terms=None):
        self.dim = dim
        acc: dict = {}
        for word, coeff in (terms or {}).items():
            if not coeff:
                continue
            red = cyclic_reduce(word, dim)
            if red is None:
                continue
            w, s = red
            acc[w] = acc.get(w, 0) + s * coeff
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def word(cls, dim: SuperDim, letters, coeff=Fraction(1)) -> "CyclicWord":
        return cls(dim, {tuple(letters): coeff})

    @classmethod
    def from_tensor(cls, t: SuperTensor) -> "CyclicWord":
        """Class of a tensor in the rotation quotient."""
        return cls(t.dim, dict(t.terms))

    def to_invariant_tensor(self, rank: int) -> SuperTensor:
        """The rotation-invariant tensor representing the rank-`rank` part
        (inverse of `from_tensor` restricted to invariant tensors)."""
        total = SuperTensor.zero(self.dim, rank)
        for w, c in self.terms.items():
            if len(w) == rank:
                total = total + norm(SuperTensor.word(self.dim, w, c)).scale(
                    Fraction(1, rank))
        return total

    def ranks(self):
        return sorted({len(w) for w in self.terms})

    def rank_part(self, rank: int) -> "CyclicWord":
        return CyclicWord(self.dim,
                          {w: c for w, c in self.terms.items() if len(w) == rank})

    def word_parity(self, word) -> int:
        return sum(self.dim.parities(word)) % 2

    def is_parity_homogeneous(self, parity: int) -> bool:
        return all(self.word_parity(w) == parity for w in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, CyclicWord) and self.dim == other.dim
                and self.terms == other.terms)

    def __add__(self, other):
        if other == 0:
            return self
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return CyclicWord(self.dim, terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor) -> "CyclicWord":
        return CyclicWord(self.dim, {w: c * factor for w, c in self.terms.items()})

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "CyclicWord(0)"
        bits = []
        for w, c in sorted(self.terms.items(), key=lambda it: (len(it[0]), it[0])):
            mono = ".".join(self.dim.letter_name(a) for a in w) or "1"
            bits.append(f"({format_scalar(c)})*[{mono}]")
        return " + ".join(bits)


def _form_matrix(dim: SuperDim, form):
    if form is None:
        return canonical_form_matrix(dim)
    if isinstance(form, SymplecticForm):
        return [list(r) for r in form.matrix]
    return form


def bracket(a: CyclicWord, b: CyclicWord, form=None) -> CyclicWord:
    """Bracket of cyclic-word chains: contract one letter of each factor
    through the pairing and splice the rotated remainders.

    With the default canonical pairing, {p1, q1} = 1 and
    {p1.p1, q1.q1} = 4 p1.q1; the bracket is super-skew and satisfies the
    super Jacobi identity (checked exhaustively in the tests).
    """
    if a.dim != b.dim:
        raise ValueError("bracket of words over different spaces")
    dim = a.dim
    mat = _form_matrix(dim, form)
    out: dict = {}
    for aw, ac in a.terms.items():
        pa = dim.parities(aw)
        k = len(aw)
        pre_a = [0] * (k + 1)
        for t in range(k):
            pre_a[t + 1] = pre_a[t] + pa[t]
        for bw, bc in b.terms.items():
            pb = dim.parities(bw)
            l = len(bw)
            pre_b = [0] * (l + 1)
            for t in range(l):
                pre_b[t + 1] = pre_b[t] + pb[t]
            base = ac * bc
            for i in range(k):
                suf_a = pre_a[k] - pre_a[i + 1]
                for j in range(l):
                    val = mat[aw[i]][bw[j]]
                    if not val:
                        continue
                    suf_b = pre_b[l] - pre_b[j + 1]
                    # move the contracted letter a_i past the tail of a and
                    # the head of b, then rotate each punctured word so it
                    # starts right after its removed letter
                    eps = (pa[i] * (suf_a + pre_b[j])
                           + pre_a[i] * suf_a + pre_b[j] * suf_b)
                    word_a = aw[i + 1:] + aw[:i]
                    word_b = bw[j + 1:] + bw[:j]
                    sign = -1 if eps % 2 else 1
                    new = word_a + word_b
                    out[new] = out.get(new, 0) + base * val * sign
    return CyclicWord(dim, out)


# --------------------------------------------------------------- CE chains

def _word_key(word):
    return (len(word), word)


class CEChain:
    """Chains of wedge words of cyclic words.

    A term is a tuple of canonical cyclic monomials; factors commute up to
    -(-1)^{|g||h|}, so equal even factors annihilate a term while equal odd
    factors are symmetric.  Terms are kept factor-sorted.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim: SuperDim, terms=None):
        self.dim = dim
        acc: dict = {}
        for factors, coeff in (terms or {}).items():
            if not coeff:
                continue
            sign = 1
            canon = []
            for w in factors:
                red = cyclic_reduce(w, dim)
                if red is None:
                    canon = None
                    break
                canon.append(red[0])
                sign *= red[1]
            if canon is None:
                continue
            sorted_term = self._sort_factors(tuple(canon))
            if sorted_term is None:
                continue
            fs, s = sorted_term
            acc[fs] = acc.get(fs, 0) + sign * s * coeff
        self.terms = {fs: c for fs, c in acc.items() if c}

    def _sort_factors(self, factors):
        pars = [sum(self.dim.parities(w)) % 2 for w in factors]
        items = list(zip(factors, pars))
        sign = 1
        for i in range(1, len(items)):
            j = i
            while j > 0 and _word_key(items[j - 1][0]) > _word_key(items[j][0]):
                swap = -1 if (items[j - 1][1] * items[j][1]) else 1
                sign *= -swap  # wedge swap costs -(-1)^{|g||h|}
                items[j - 1], items[j] = items[j], items[j - 1]
                j -= 1
        for t in range(len(items) - 1):
            if items[t][0] == items[t + 1][0] and items[t][1] == 0:
                return None
        return tuple(w for w, _ in items), sign

    @classmethod
    def wedge(cls, parts, coeff=Fraction(1)) -> "CEChain":
        """Wedge product of CyclicWord chains, expanded multilinearly."""
        parts = list(parts)
        if not parts:
            raise ValueError("empty wedge: use CEChain.one")
        dim = parts[0].dim
        out = cls(dim, {(): coeff})
        for part in parts:
            out = out.wedge_mul(cls(dim, {(w,): c for w, c in part.terms.items()}))
        return out

    @classmethod
    def one(cls, dim: SuperDim, coeff=Fraction(1)) -> "CEChain":
        return cls(dim, {(): coeff})

    def wedge_mul(self, other: "CEChain") -> "CEChain":
        out: dict = {}
        for f1, c1 in self.terms.items():
            for f2, c2 in other.terms.items():
                key = f1 + f2
                out[key] = out.get(key, 0) + c1 * c2
        return CEChain(self.dim, out)

    def exterior_degrees(self):
        return sorted({len(fs) for fs in self.terms})

    def degree_part(self, degree: int) -> "CEChain":
        return CEChain(self.dim,
                       {fs: c for fs, c in self.terms.items() if len(fs) == degree})

    def order_part(self, order: int) -> "CEChain":
        return CEChain(self.dim, {fs: c for fs, c in self.terms.items()
                                  if sum(len(w) for w in fs) == order})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, CEChain) and self.dim == other.dim
                and self.terms == other.terms)

    def __add__(self, other):
        if other == 0:
            return self
        terms = dict(self.terms)
        for fs, c in other.terms.items():
            terms[fs] = terms.get(fs, 0) + c
        return CEChain(self.dim, terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor) -> "CEChain":
        return CEChain(self.dim, {fs: c * factor for fs, c in self.terms.items()})

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "CEChain(0)"
        bits = []
        for fs, c in sorted(self.terms.items(),
                            key=lambda it: (len(it[0]), it[0])):
            mono = " ^ ".join(
                "[" + ".".join(self.dim.letter_name(a) for a in w) + "]"
                for w in fs) or "1"
            bits.append(f"({format_scalar(c)})*{mono}")
        return " + ".join(bits)


def ce_differential(x: CEChain, form=None) -> CEChain:
    """Wedge-complex differential: replace one pair of factors by its
    bracket, summed over pairs with the usual graded signs."""
    dim = x.dim
    out = CEChain(dim)
    for factors, coeff in x.terms.items():
        pars = [sum(dim.parities(w)) % 2 for w in factors]
        prefix = [0]
        for p in pars:
            prefix.append(prefix[-1] + p)
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                eps = (pars[i] * prefix[i] + pars[j] * prefix[j]
                       + pars[i] * pars[j] + i + j + 1)
                br = bracket(CyclicWord.word(dim, factors[i]),
                             CyclicWord.word(dim, factors[j]), form)
                if not br:
                    continue
                rest = tuple(w for t, w in enumerate(factors) if t not in (i, j))
                sign = -1 if eps % 2 else 1
                out = out + CEChain(dim, {
                    (w,) + rest: coeff * c * sign for w, c in br.terms.items()})
    return out


# ----------------------------------------------------------- osp and more

@lru_cache(maxsize=None)
def osp_basis(dim: SuperDim):
    """Quadratic cyclic words u.v with u <= v; odd squares cancel and are
    omitted.  These span the infinitesimal symmetries of the canonical
    inner product."""
    out = []
    for u in range(dim.total):
        for v in range(u, dim.total):
            w = CyclicWord.word(dim, (u, v))
            if w:
                out.append(w)
    return tuple(out)


def osp_act(xi: CyclicWord, x: CEChain, form=None) -> CEChain:
    """Action of a quadratic word on a wedge chain by the bracket,
    extended as a graded derivation."""
    dim = x.dim
    xi_par = {sum(dim.parities(w)) % 2 for w in xi.terms}
    if len(xi_par) > 1:
        raise ValueError("inhomogeneous quadratic word")
    xp = xi_par.pop() if xi_par else 0
    out = CEChain(dim)
    for factors, coeff in x.terms.items():
        pars = [sum(dim.parities(w)) % 2 for w in factors]
        run = 0
        for i in range(len(factors)):
            br = bracket(xi, CyclicWord.word(dim, factors[i]), form)
            if br:
                sign = -1 if (xp * run) % 2 else 1
                rest_pre = factors[:i]
                rest_post = factors[i + 1:]
                out = out + CEChain(dim, {
                    rest_pre + (w,) + rest_post: coeff * c * sign
                    for w, c in br.terms.items()})
            run += pars[i]
    return out


@lru_cache(maxsize=None)
def _cyclic_monomials(dim: SuperDim, rank: int):
    out = []
    for word in itertools.product(range(dim.total), repeat=rank):
        red = cyclic_reduce(word, dim)
        if red is not None and red == (word, 1):
            out.append(word)
    return tuple(out)


def _wedge_monomial_basis(dim: SuperDim, degree: int, order: int):
    """All sorted wedge monomials with `degree` factors of total length
    `order` (no factor shorter than 1)."""
    monos = []
    for rank in range(1, order + 1):
        monos.extend(_cyclic_monomials(dim, rank))
    monos.sort(key=_word_key)
    out = []

    def rec(start, left_deg, left_order, acc):
        if left_deg == 0:
            if left_order == 0:
                out.append(tuple(acc))
            return
        for t in range(start, len(monos)):
            w = monos[t]
            if len(w) > left_order:
                continue
            # equal even factors annihilate
            if acc and acc[-1] == w and sum(dim.parities(w)) % 2 == 0:
                continue
            acc.append(w)
            rec(t, left_deg - 1, left_order - len(w), acc)
            acc.pop()

    rec(0, degree, order, [])
    return out


class CoinvariantCoordinates:
    """Result of reducing a wedge chain modulo the quadratic-word action:
    exact coordinates over an explicit complement basis."""

    __slots__ = ("basis", "coords", "residue")

    def __init__(self, basis, coords, residue):
        self.basis = basis
        self.coords = coords
        self.residue = residue

    def __repr__(self):
        nz = sum(1 for c in self.coords if c)
        return f"CoinvariantCoordinates<{nz} of {len(self.basis)} coordinates>"


def coinvariant_reduce(x: CEChain) -> CoinvariantCoordinates:
    """Reduce a bihomogeneous wedge chain modulo the image of the
    quadratic-word action, by exact elimination.

    The chain must have a single exterior degree and total order.  The
    complement basis is the set of non-pivot wedge monomials after row
    reduction of all quadratic-action images.
    """
    degrees = x.exterior_degrees()
    orders = sorted({sum(len(w) for w in fs) for fs in x.terms})
    if len(degrees) != 1 or len(orders) != 1:
        raise ValueError("chain is not bihomogeneous")
    dim = x.dim
    degree, order = degrees[0], orders[0]
    basis = _wedge_monomial_basis(dim, degree, order)
    index = {fs: i for i, fs in enumerate(basis)}

    rows = []
    for xi in osp_basis(dim):
        for fs in basis:
            img = osp_act(xi, CEChain(dim, {fs: Fraction(1)}))
            if img:
                row = [Fraction(0)] * len(basis)
                for t, c in img.terms.items():
                    row[index[t]] = c
                rows.append(row)
    # row-reduce the span and eliminate pivots from x
    pivots = {}
    for row in rows:
        row = list(row)
        for col, prow in pivots.items():
            if row[col]:
                f = row[col]
                row = [a - f * b for a, b in zip(row, prow)]
        lead = next((c for c, v in enumerate(row) if v), None)
        if lead is None:
            continue
        inv = 1 / row[lead]
        pivots[lead] = [v * inv for v in row]
    vec = [Fraction(0)] * len(basis)
    for fs, c in x.terms.items():
        vec[index[fs]] = c
    for col, prow in pivots.items():
        if vec[col]:
            f = vec[col]
            vec = [a - f * b for a, b in zip(vec, prow)]
    complement = [fs for i, fs in enumerate(basis) if i not in pivots]
    coords = tuple(vec[index[fs]] for fs in complement)
    residue = CEChain(dim, {fs: c for fs, c in zip(complement, coords) if c})
    return CoinvariantCoordinates(tuple(complement), coords, residue)


# ------------------------------------------------------ linear superalgebra

class DarbouxError(ValueError):
    """The inner product cannot be normalized over real surd scalars."""


def darboux_linear(form: SymplecticForm):
    """A parity-preserving basis change phi with phi^T . omega . phi equal
    to the canonical form matrix.

    The even block is normalized by symplectic Gram-Schmidt over the
    rationals; the odd block is diagonalized and scaled by inverse square
    roots, which succeeds exactly when it is positive definite - otherwise
    a DarbouxError reports the obstruction.
    """
    dim = form.dim
    n2, m = 2 * dim.n, dim.m
    omega = [list(r) for r in form.matrix]

    def bil(block_offset, u, v):
        return sum((u[i] * omega[block_offset + i][block_offset + j] * v[j]
                    for i in range(len(u)) for j in range(len(v)) if u[i] and v[j]),
                   Fraction(0))

    # even block: build Darboux pairs
    basis = [[Fraction(1) if i == j else Fraction(0) for j in range(n2)]
             for i in range(n2)]
    ps, qs = [], []
    remaining = list(basis)
    while remaining:
        u = remaining.pop(0)
        w = next((v for v in remaining if bil(0, u, v)), None)
        if w is None:
            raise DarbouxError("even block is degenerate")
        remaining.remove(w)
        scale = bil(0, u, w)
        w = [v / scale for v in w]
        cleaned = []
        for v in remaining:
            cu, cw = bil(0, v, w), bil(0, v, u)
            v = [a - cu * b + cw * c for a, b, c in zip(v, u, w)]
            if any(v):
                cleaned.append(v)
        remaining = cleaned
        ps.append(u)
        qs.append(w)
    even_cols = ps + qs

    # odd block: diagonalize the symmetric pairing, then scale
    basis = [[Fraction(1) if i == j else Fraction(0) for j in range(m)]
             for i in range(m)]
    odd_cols = []
    remaining = list(basis)
    while remaining:
        u = next((v for v in remaining if bil(n2, v, v)), None)
        if u is None:
            pair = next(((a, b) for a in remaining for b in remaining
                         if a is not b and bil(n2, a, b)), None)
            if pair is None:
                raise DarbouxError("odd block is degenerate")
            u = [a + b for a, b in zip(*pair)]
        remaining = [v for v in remaining if v is not u]
        d = bil(n2, u, u)
        if d < 0:
            raise DarbouxError(
                f"odd inner product is not positive definite (diagonal {d})")
        cleaned = []
        for v in remaining:
            f = bil(n2, v, u) / d
            v = [a - f * b for a, b in zip(v, u)]
            if any(v):
                cleaned.append(v)
        remaining = cleaned
        root = Surd.sqrt(d)
        odd_cols.append([a * root.inverse() if a else Fraction(0) for a in u])

    total = dim.total
    phi = [[Fraction(0)] * total for _ in range(total)]
    for col, vec in enumerate(even_cols):
        for row in range(n2):
            phi[row][col] = vec[row]
    for col, vec in enumerate(odd_cols):
        for row in range(m):
            phi[n2 + row][n2 + col] = vec[row]
    check = mat_mul(mat_transpose(phi), mat_mul(omega, phi))
    if check != canonical_form_matrix(dim):
        raise AssertionError("darboux normalization failed to verify")
    return phi


def substitute_letters(obj, matrix):
    """Rewrite letters through a parity-preserving linear map: letter a is
    replaced by sum_b matrix[b][a] . b.  Accepts SuperTensor or CyclicWord."""
    dim = obj.dim
    cols: dict = {}
    for a in range(dim.total):
        support = []
        for b in range(dim.total):
            if matrix[b][a]:
                if dim.parity(a) != dim.parity(b):
                    raise ValueError("substitution does not preserve parity")
                support.append((b, matrix[b][a]))
        cols[a] = support
    out: dict = {}
    for word, coeff in obj.terms.items():
        partial = {(): coeff}
        for a in word:
            nxt = {}
            for prefix, c in partial.items():
                for b, v in cols[a]:
                    key = prefix + (b,)
                    nxt[key] = nxt.get(key, 0) + c * v
            partial = nxt
        for w, c in partial.items():
            out[w] = out.get(w, 0) + c
    if isinstance(obj, SuperTensor):
        return SuperTensor(dim, obj.rank, out)
    return CyclicWord(dim, out)
