"""Monomial realizations of symmetric and exterior powers.

Elements are sparse dicts {monomial: coefficient}.  An exterior monomial
is a strictly increasing tuple of basis indices, a symmetric monomial a
sorted tuple with repetitions; no combinatorial prefactor is stored, all
normalizations live in the operations.  Degrees are read off the key
length, so one dict may hold mixed degrees where convenient.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations

from .symplectic import SymplecticSpace, add_into


class SymPower:
    """Sym^r of a symplectic space, on the sorted-multiset basis."""

    def __init__(self, base: SymplecticSpace, degree: int):
        self.base = base
        self.degree = degree
        self.basis = list(combinations_with_replacement(range(base.dim), degree))
        self.index = {m: k for k, m in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)


class ExtPower:
    """Lambda^q of a symplectic space, on the increasing-tuple basis."""

    def __init__(self, base: SymplecticSpace, degree: int):
        self.base = base
        self.degree = degree
        self.basis = list(combinations(range(base.dim), degree))
        self.index = {m: k for k, m in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)


# -- exterior algebra ---------------------------------------------------

def ext_insert(i: int, mono: tuple) -> tuple[int, tuple] | None:
    """Insert index i into an increasing tuple; (sign, tuple) or None."""
    if i in mono:
        return None
    pos = 0
    while pos < len(mono) and mono[pos] < i:
        pos += 1
    sign = -1 if pos % 2 else 1
    return sign, mono[:pos] + (i,) + mono[pos:]


def ext_wedge_vec(v: dict, elem: dict) -> dict:
    """Wedge a vector (degree 1) onto an exterior element."""
    out = {}
    for i, x in v.items():
        for mono, c in elem.items():
            ins = ext_insert(i, mono)
            if ins:
                sign, new = ins
                add_into(out, new, sign * x * c)
    return out


def ext_contract(cov: dict, elem: dict) -> dict:
    """Contract a covector into an exterior element (degree drops by 1)."""
    out = {}
    for mono, c in elem.items():
        for pos, idx in enumerate(mono):
            x = cov.get(idx)
            if x:
                sign = -1 if pos % 2 else 1
                add_into(out, mono[:pos] + mono[pos + 1:], sign * x * c)
    return out


def ext_product(x: dict, y: dict) -> dict:
    """Wedge product of two exterior elements."""
    out = {}
    for mx, cx in x.items():
        for my, cy in y.items():
            merged = _merge_ext(mx, my)
            if merged:
                sign, mono = merged
                add_into(out, mono, sign * cx * cy)
    return out


def _merge_ext(a: tuple, b: tuple) -> tuple[int, tuple] | None:
    if set(a) & set(b):
        return None
    seq = list(a + b)
    # insertion sort, counting transpositions
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(seq)


# -- symmetric algebra --------------------------------------------------

def sym_insert(i: int, mono: tuple) -> tuple:
    pos = 0
    while pos < len(mono) and mono[pos] < i:
        pos += 1
    return mono[:pos] + (i,) + mono[pos:]


def sym_mul_vec(v: dict, elem: dict) -> dict:
    """Symmetric product with a vector."""
    out = {}
    for i, x in v.items():
        for mono, c in elem.items():
            add_into(out, sym_insert(i, mono), x * c)
    return out


def sym_contract(cov: dict, elem: dict) -> dict:
    """Derivation contraction: each slot of the monomial is paired once."""
    out = {}
    for mono, c in elem.items():
        for pos in range(len(mono)):
            x = cov.get(mono[pos])
            if x:
                add_into(out, mono[:pos] + mono[pos + 1:], x * c)
    return out


def sym_contract_circ(cov: dict, elem: dict) -> dict:
    """Normalized contraction: (1/r) times the derivation on degree r."""
    out = {}
    for mono, c in elem.items():
        r = len(mono)
        if r == 0:
            continue
        for pos in range(r):
            x = cov.get(mono[pos])
            if x:
                add_into(out, mono[:pos] + mono[pos + 1:], x * c * Fraction(1, r))
    return out


# -- extended symplectic forms and J ------------------------------------

def gram_det(space: SymplecticSpace, a: tuple, b: tuple):
    if len(a) != len(b):
        raise ValueError("degree mismatch")
    q = len(a)
    if q == 0:
        return Fraction(1)
    total = Fraction(0)
    for perm in permutations(range(q)):
        sign = _perm_sign(perm)
        prod = Fraction(1)
        for k in range(q):
            s = space.sigma_basis(a[k], b[perm[k]])
            if not s:
                prod = Fraction(0)
                break
            prod *= s
        if prod:
            total += sign * prod
    return total


def gram_perm(space: SymplecticSpace, a: tuple, b: tuple):
    if len(a) != len(b):
        raise ValueError("degree mismatch")
    r = len(a)
    if r == 0:
        return Fraction(1)
    total = Fraction(0)
    for perm in permutations(range(r)):
        prod = Fraction(1)
        for k in range(r):
            s = space.sigma_basis(a[k], b[perm[k]])
            if not s:
                prod = Fraction(0)
                break
            prod *= s
        if prod:
            total += prod
    return total


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def extended_sigma_ext(space: SymplecticSpace, x: dict, y: dict):
    """sigma on Lambda^q via the Gram determinant, bilinear."""
    total = Fraction(0)
    for ma, ca in x.items():
        for mb, cb in y.items():
            g = gram_det(space, ma, mb)
            if g:
                total = total + ca * cb * g
    return total


def extended_sigma_sym(space: SymplecticSpace, x: dict, y: dict):
    """sigma on Sym^r via the (unnormalized) Gram permanent."""
    total = Fraction(0)
    for ma, ca in x.items():
        for mb, cb in y.items():
            g = gram_perm(space, ma, mb)
            if g:
                total = total + ca * cb * g
    return total


def _j_images(space: SymplecticSpace, mono: tuple) -> tuple[int, list]:
    sign = 1
    images = []
    for i in mono:
        j, sg = space.j_basis(i)
        sign *= sg
        images.append(j)
    return sign, images


def j_ext(space: SymplecticSpace, elem: dict) -> dict:
    """Factorwise antilinear J on an exterior element."""
    out = {}
    for mono, c in elem.items():
        sign, images = _j_images(space, mono)
        acc = {tuple(): Fraction(sign)}
        # left-insertion: build the product by wedging factors right to left
        for i in reversed(images):
            nxt = {}
            for m, cc in acc.items():
                ins = ext_insert(i, m)
                if ins:
                    sg, new = ins
                    add_into(nxt, new, sg * cc)
            acc = nxt
        cj = c.conjugate()
        for m, cc in acc.items():
            add_into(out, m, cc * cj)
    return out


def j_sym(space: SymplecticSpace, elem: dict) -> dict:
    """Factorwise antilinear J on a symmetric element."""
    out = {}
    for mono, c in elem.items():
        sign, images = _j_images(space, mono)
        add_into(out, tuple(sorted(images)), sign * c.conjugate())
    return out
