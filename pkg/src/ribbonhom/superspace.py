"""Z/2-graded tensor words over the standard symplectic super vector space.

The ambient space C^{2n|m} carries the ordered basis

    p_1, ..., p_n, q_1, ..., q_n, x_1, ..., x_m

with the p's and q's even and the x's odd; letters are integers
0 .. 2n+m-1 in that order.  The canonical even inner product pairs
<p_i, q_i> = 1 = <x_j, x_j> (and <q_i, p_i> = -1), every other basis value
zero.  Tensors are finite linear combinations of words (tuples of letters)
with exact coefficients, and every permutation of tensor slots carries the
Koszul sign: each transposition of two odd letters costs -1.

Permutations are tuples ``perm`` with ``perm[i]`` the new position of the
letter currently in slot i.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .scalars import Surd, format_scalar, mat_inverse, mat_transpose


class SuperDim:
    """Signature (n, m) of the ambient space C^{2n|m}."""

    __slots__ = ("n", "m")

    def __init__(self, n: int, m: int):
        if n < 0 or m < 0:
            raise ValueError("negative signature")
        self.n = n
        self.m = m

    @property
    def total(self) -> int:
        return 2 * self.n + self.m

    def parity(self, letter: int) -> int:
        if not 0 <= letter < self.total:
            raise ValueError(f"letter {letter} outside C^(2*{self.n}|{self.m})")
        return 0 if letter < 2 * self.n else 1

    def parities(self, word) -> tuple[int, ...]:
        return tuple(self.parity(a) for a in word)

    def letter_name(self, letter: int) -> str:
        if letter < self.n:
            return f"p{letter + 1}"
        if letter < 2 * self.n:
            return f"q{letter - self.n + 1}"
        return f"x{letter - 2 * self.n + 1}"

    def letter_index(self, name: str) -> int:
        kind, num = name[0], int(name[1:])
        if kind not in "pqx" or num < 1 or num > (self.m if kind == "x" else self.n):
            raise ValueError(f"no letter {name!r} in C^(2*{self.n}|{self.m})")
        base = {"p": 0, "q": self.n, "x": 2 * self.n}[kind]
        return base + num - 1

    def __eq__(self, other):
        return isinstance(other, SuperDim) and (self.n, self.m) == (other.n, other.m)

    def __hash__(self):
        return hash((self.n, self.m))

    def __repr__(self):
        return f"SuperDim({self.n}, {self.m})"


def canonical_form_matrix(dim: SuperDim):
    """Matrix of the standard even inner product on C^{2n|m}."""
    n, t = dim.n, dim.total
    mat = [[Fraction(0)] * t for _ in range(t)]
    for i in range(n):
        mat[i][n + i] = Fraction(1)
        mat[n + i][i] = Fraction(-1)
    for j in range(2 * n, t):
        mat[j][j] = Fraction(1)
    return mat


class SymplecticForm:
    """An even, super-skew, nondegenerate bilinear form with exact entries.

    "Super-skew" means <b,a> = -(-1)^{|a||b|} <a,b): the even x even block
    is skew-symmetric, the odd x odd block symmetric, and the mixed blocks
    vanish ("even").
    """

    __slots__ = ("dim", "matrix")

    def __init__(self, dim: SuperDim, matrix=None):
        self.dim = dim
        if matrix is None:
            matrix = canonical_form_matrix(dim)
        self.matrix = tuple(tuple(row) for row in matrix)
        self._check()

    def _check(self):
        t = self.dim.total
        if len(self.matrix) != t or any(len(r) != t for r in self.matrix):
            raise ValueError("form matrix has wrong shape")
        for a in range(t):
            for b in range(t):
                pa, pb = self.dim.parity(a), self.dim.parity(b)
                if pa != pb and self.matrix[a][b]:
                    raise ValueError("form is not even: mixed-parity entry")
                expect = -self.matrix[a][b] if (1 - pa * pb) else self.matrix[a][b]
                if self.matrix[b][a] != expect:
                    raise ValueError("form is not super-skew-symmetric")
        try:
            mat_inverse([list(r) for r in self.matrix])
        except ValueError:
            raise ValueError("form is degenerate") from None

    @classmethod
    def canonical(cls, dim: SuperDim) -> "SymplecticForm":
        return cls(dim)

    def value(self, a: int, b: int):
        return self.matrix[a][b]

    @property
    def is_canonical(self) -> bool:
        return self.matrix == tuple(tuple(r) for r in canonical_form_matrix(self.dim))

    def dual_matrix(self):
        """Matrix of the induced pairing on the dual basis: the transpose of
        the inverse.  For the canonical form this is the canonical matrix
        itself, which is what pins the convention."""
        return mat_transpose(mat_inverse([list(r) for r in self.matrix]))

    def __eq__(self, other):
        return (isinstance(other, SymplecticForm)
                and self.dim == other.dim and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.dim, self.matrix))


# ------------------------------------------------------------------ signs

def perm_parity(perm) -> int:
    """Ordinary sign of a permutation tuple (+1 or -1)."""
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def koszul_sign(parities, perm) -> int:
    """Koszul sign of rearranging graded letters by `perm`.

    Every inversion (i < j but perm[i] > perm[j]) of two odd letters
    contributes one factor -1.
    """
    sign = 1
    k = len(perm)
    for i in range(k):
        if not parities[i]:
            continue
        for j in range(i + 1, k):
            if parities[j] and perm[i] > perm[j]:
                sign = -sign
    return sign


def invert_perm(perm):
    out = [0] * len(perm)
    for i, p in enumerate(perm):
        out[p] = i
    return tuple(out)


def compose_perms(outer, inner):
    """Permutation doing `inner` first, then `outer`."""
    return tuple(outer[inner[i]] for i in range(len(inner)))


def cycle_perm(k: int):
    """The rotation z_k sending slot 0 to the end: z.(v0 ... v_{k-1}) =
    +-(v1 ... v_{k-1} v0)."""
    return tuple(k - 1 if i == 0 else i - 1 for i in range(k))


def block_perm_embed(sigma, sizes):
    """Inflate a permutation of blocks to a permutation of slots.

    `sizes[i]` is the length of block i; block i is sent, in one piece, to
    block position sigma[i].

    >>> block_perm_embed((1, 0), (2, 1))
    (1, 2, 0)
    """
    nb = len(sizes)
    new_sizes = [0] * nb
    for i in range(nb):
        new_sizes[sigma[i]] = sizes[i]
    new_offsets = [0] * nb
    run = 0
    for b in range(nb):
        new_offsets[b] = run
        run += new_sizes[b]
    perm = []
    for i in range(nb):
        base = new_offsets[sigma[i]]
        perm.extend(base + s for s in range(sizes[i]))
    return tuple(perm)


# ---------------------------------------------------------------- tensors

class SuperTensor:
    """A finite linear combination of words of fixed length over C^{2n|m}."""

    __slots__ = ("dim", "rank", "terms")

    def __init__(self, dim: SuperDim, rank: int, terms=None):
        self.dim = dim
        self.rank = rank
        self.terms = {}
        for word, coeff in (terms or {}).items():
            if len(word) != rank:
                raise ValueError(f"word {word} has rank != {rank}")
            for a in word:
                dim.parity(a)  # bounds check
            if coeff:
                self.terms[tuple(word)] = self.terms.get(tuple(word), 0) + coeff
        self.terms = {w: c for w, c in self.terms.items() if c}

    @classmethod
    def word(cls, dim: SuperDim, word, coeff=Fraction(1)) -> "SuperTensor":
        return cls(dim, len(word), {tuple(word): coeff})

    @classmethod
    def zero(cls, dim: SuperDim, rank: int) -> "SuperTensor":
        return cls(dim, rank, {})

    def _new(self, terms) -> "SuperTensor":
        t = object.__new__(SuperTensor)
        t.dim = self.dim
        t.rank = self.rank
        t.terms = {w: c for w, c in terms.items() if c}
        return t

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, SuperTensor) and self.dim == other.dim
                and self.rank == other.rank and self.terms == other.terms)

    def __hash__(self):
        return hash((self.dim, self.rank, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        if other == 0:
            return self
        if not isinstance(other, SuperTensor) or other.rank != self.rank \
                or other.dim != self.dim:
            return NotImplemented
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return self._new(terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor) -> "SuperTensor":
        return self._new({w: c * factor for w, c in self.terms.items()})

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def tensor(self, other: "SuperTensor") -> "SuperTensor":
        """Concatenation product (no sign: coefficients are even)."""
        if other.dim != self.dim:
            raise ValueError("tensor factors over different spaces")
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        t = object.__new__(SuperTensor)
        t.dim = self.dim
        t.rank = self.rank + other.rank
        t.terms = {w: c for w, c in out.items() if c}
        return t

    def word_parity(self, word) -> int:
        return sum(self.dim.parities(word)) % 2

    def __repr__(self):
        if not self.terms:
            return f"SuperTensor<0, rank {self.rank}>"
        bits = []
        for w, c in sorted(self.terms.items()):
            mono = ".".join(self.dim.letter_name(a) for a in w) or "1"
            bits.append(f"({format_scalar(c)})*{mono}")
        return " + ".join(bits)


def koszul_apply(perm, t: SuperTensor) -> SuperTensor:
    """Rearrange tensor slots by `perm` with Koszul signs.

    >>> d = SuperDim(0, 2)
    >>> t = SuperTensor.word(d, (0, 1))
    >>> koszul_apply((1, 0), t).terms
    {(1, 0): Fraction(-1, 1)}
    """
    if len(perm) != t.rank:
        raise ValueError("permutation length != tensor rank")
    out = {}
    for word, coeff in t.terms.items():
        parities = t.dim.parities(word)
        sign = koszul_sign(parities, perm)
        new = [0] * t.rank
        for i, a in enumerate(word):
            new[perm[i]] = a
        w = tuple(new)
        out[w] = out.get(w, 0) + sign * coeff
    return SuperTensor(t.dim, t.rank, out)


def cyclic_shift(t: SuperTensor) -> SuperTensor:
    """Apply the rotation z: first letter to the end, with its Koszul sign."""
    out = {}
    for word, coeff in t.terms.items():
        head, rest = word[0], word[1:]
        sign = -1 if t.dim.parity(head) and sum(t.dim.parities(rest)) % 2 else 1
        w = rest + (head,)
        out[w] = out.get(w, 0) + sign * coeff
    return SuperTensor(t.dim, t.rank, out)


def norm(t: SuperTensor) -> SuperTensor:
    """The norm element N.t = sum of all k cyclic rotations of t."""
    total = t
    cur = t
    for _ in range(t.rank - 1):
        cur = cyclic_shift(cur)
        total = total + cur
    return total


def antisymmetrize(t: SuperTensor, sizes) -> SuperTensor:
    """Alternating sum over block permutations of a concatenated tensor.

    `sizes` partitions the slots into consecutive blocks; each block
    permutation sigma acts with ordinary sign sgn(sigma) times the Koszul
    sign of the induced slot rearrangement.
    """
    if sum(sizes) != t.rank:
        raise ValueError("block sizes do not sum to the rank")
    total = SuperTensor.zero(t.dim, t.rank)
    for sigma in itertools.permutations(range(len(sizes))):
        sgn = perm_parity(sigma)
        moved = koszul_apply(block_perm_embed(sigma, sizes), t)
        total = total + moved.scale(sgn)
    return total


if __name__ == "__main__":
    import doctest

    doctest.testmod()
