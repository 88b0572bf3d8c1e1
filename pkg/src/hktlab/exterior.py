"""Pointwise exterior algebra with the su(2) / sl(2) action on forms.

Elements are sparse dicts {sorted label tuple: coefficient}.  For a frame with
m holomorphic covectors theta_0..theta_{m-1}, labels 0..m-1 are the theta_a and
labels m..2m-1 their conjugates.  Coefficients may be complex numbers or dual
numbers; all maps here are linear or multilinear in the coefficients.

The quaternionic data is a single antilinear structure matrix M (unitary,
M conj(M) = -Id) describing J theta_a.  Everything else - the three Lie-type
operators with eigenvalue sqrt(-1)(p - q) each on its own bidegrees, the
raising/lowering pair, the Casimir and its weight decomposition - is generated
from M:

    cov_I theta_a = -sqrt(-1) theta_a          (pullback along I^{-1})
    cov_J theta_a = -sum_b M_ab conj(theta_b)
    cov_K        = cov_I . cov_J
    L_X          = derivation extension of -cov_X
    R  conj(theta_a) = -sum_b conj(M_ab) theta_b,   R  theta_a = 0
    Rb theta_a       = +sum_b M_ab conj(theta_b),   Rb conj(theta_a) = 0

R and Rb are derivations; H = (p - q) id; [H, R] = 2R, [H, Rb] = -2Rb,
[R, Rb] = H.  The Casimir H^2 + 2(R Rb + Rb R) has eigenvalue w(w + 2) on the
weight-w isotypic part, which is how weight projections are computed (exactly,
via Lagrange interpolation - no eigensolver in the hot path).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .duals import dconj, numeric

Element = dict  # {tuple[int, ...]: coeff}


def sort_sign(labels):
    """Insertion sort; returns (sorted tuple, sign) or (None, 0) on repeats."""
    lst = list(labels)
    sign = 1
    for i in range(1, len(lst)):
        x = lst[i]
        j = i - 1
        while j >= 0 and lst[j] > x:
            lst[j + 1] = lst[j]
            j -= 1
            sign = -sign
        lst[j + 1] = x
        if j >= 0 and lst[j] == x:
            return None, 0
    return tuple(lst), sign


def eadd(a: Element, b: Element) -> Element:
    out = dict(a)
    for k, c in b.items():
        if k in out:
            s = out[k] + c
            if isinstance(s, (int, float, complex)) and s == 0:
                del out[k]
            else:
                out[k] = s
        else:
            out[k] = c
    return out


def escale(a: Element, c) -> Element:
    return {k: v * c for k, v in a.items()}


def esub(a: Element, b: Element) -> Element:
    return eadd(a, escale(b, -1))


def wedge(a: Element, b: Element) -> Element:
    out: Element = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key, sgn = sort_sign(ka + kb)
            if key is None:
                continue
            c = ca * cb * sgn
            if key in out:
                s = out[key] + c
                if isinstance(s, (int, float, complex)) and s == 0:
                    del out[key]
                else:
                    out[key] = s
            else:
                out[key] = c
    return out


def enorm(a: Element) -> float:
    return max((abs(numeric(c)) for c in a.values()), default=0.0)


def apply_derivation(table, el: Element) -> Element:
    """Extend the 1-form map `table` (label -> 1-form dict) as a derivation."""
    out: Element = {}
    for labels, c in el.items():
        for p, lab in enumerate(labels):
            img = table.get(lab)
            if not img:
                continue
            for (new_lab,), c2 in img.items():
                key, sgn = sort_sign(labels[:p] + (new_lab,) + labels[p + 1:])
                if key is None:
                    continue
                coeff = c * c2 * sgn
                if key in out:
                    s = out[key] + coeff
                    if isinstance(s, (int, float, complex)) and s == 0:
                        del out[key]
                    else:
                        out[key] = s
                else:
                    out[key] = coeff
    return out


def apply_multiplicative(table, el: Element) -> Element:
    """Extend the 1-form map `table` multiplicatively over wedge products."""
    out: Element = {}
    for labels, c in el.items():
        term: Element = {(): c}
        for lab in labels:
            term = wedge(term, table.get(lab, {}))
            if not term:
                break
        out = eadd(out, term)
    return out


def compose_tables(outer, inner):
    """Table of (outer . inner) on 1-forms."""
    out = {}
    for lab, img in inner.items():
        acc: Element = {}
        for (mid,), c in img.items():
            for (final,), c2 in outer.get(mid, {}).items():
                acc = eadd(acc, {(final,): c * c2})
        out[lab] = acc
    return out


def standard_m(m: int) -> np.ndarray:
    """Block-diagonal [[0,-1],[1,0]] structure matrix on C^m (m even)."""
    if m % 2:
        raise ValueError("standard structure needs even m")
    blk = np.array([[0.0, -1.0], [1.0, 0.0]], dtype=complex)
    out = np.zeros((m, m), dtype=complex)
    for t in range(m // 2):
        out[2 * t:2 * t + 2, 2 * t:2 * t + 2] = blk
    return out


@dataclass
class StructureContext:
    m: int
    mmat: np.ndarray
    tables: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        M = np.asarray(self.mmat, dtype=complex)
        if M.shape != (self.m, self.m):
            raise ValueError("structure matrix has wrong shape")
        if not np.allclose(M @ M.conj().T, np.eye(self.m), atol=1e-12):
            raise ValueError("structure matrix must be unitary")
        if not np.allclose(M @ M.conj(), -np.eye(self.m), atol=1e-12):
            raise ValueError("structure matrix must satisfy M conj(M) = -Id")
        self.mmat = M
        m = self.m
        cov_i = {}
        cov_j = {}
        rais = {}
        lowr = {}
        for a in range(m):
            cov_i[a] = {(a,): -1j}
            cov_i[m + a] = {(m + a,): 1j}
            cov_j[a] = {(m + b,): -M[a, b] for b in range(m) if M[a, b] != 0}
            cov_j[m + a] = {(b,): -np.conj(M[a, b]) for b in range(m) if M[a, b] != 0}
            rais[m + a] = dict(cov_j[m + a])
            rais[a] = {}
            lowr[a] = {(m + b,): M[a, b] for b in range(m) if M[a, b] != 0}
            lowr[m + a] = {}
        cov_k = compose_tables(cov_i, cov_j)
        neg = lambda t: {lab: escale(img, -1) for lab, img in t.items()}
        self.tables = {
            "cov_I": cov_i, "cov_J": cov_j, "cov_K": cov_k,
            "L_I": neg(cov_i), "L_J": neg(cov_j), "L_K": neg(cov_k),
            "R": rais, "Rb": lowr,
        }

    # ----- basic structure maps -----

    def conj(self, el: Element) -> Element:
        m = self.m
        out: Element = {}
        for labels, c in el.items():
            key, sgn = sort_sign(tuple((l + m) % (2 * m) for l in labels))
            out[key] = dconj(c) * sgn if sgn != 1 else dconj(c)
        return out

    def bidegree_of(self, labels) -> tuple[int, int]:
        p = sum(1 for l in labels if l < self.m)
        return p, len(labels) - p

    def hodge(self, el: Element) -> dict[tuple[int, int], Element]:
        out: dict[tuple[int, int], Element] = {}
        for labels, c in el.items():
            out.setdefault(self.bidegree_of(labels), {})[labels] = c
        return out

    def component(self, el: Element, p: int, q: int) -> Element:
        return {k: c for k, c in el.items() if self.bidegree_of(k) == (p, q)}

    # ----- sl(2) / su(2) operators -----

    def h_op(self, el: Element) -> Element:
        out: Element = {}
        for labels, c in el.items():
            p, q = self.bidegree_of(labels)
            if p != q:
                out[labels] = c * (p - q)
        return out

    def raising(self, el: Element) -> Element:
        return apply_derivation(self.tables["R"], el)

    def lowering(self, el: Element) -> Element:
        return apply_derivation(self.tables["Rb"], el)

    def lie(self, which: str, el: Element) -> Element:
        return apply_derivation(self.tables["L_" + which], el)

    def cov_mult(self, which: str, el: Element) -> Element:
        return apply_multiplicative(self.tables["cov_" + which], el)

    def casimir(self, el: Element) -> Element:
        h2 = self.h_op(self.h_op(el))
        rr = self.raising(self.lowering(el))
        rrb = self.lowering(self.raising(el))
        return eadd(h2, escale(eadd(rr, rrb), 2))

    # ----- weight decomposition -----

    def weight_list(self, k: int) -> list[int]:
        wmax = min(k, 2 * self.m - k)
        if wmax < 0:
            return []
        return list(range(wmax, -1 if wmax % 2 == 0 else 0, -2))

    def weight_project(self, el: Element, w: int) -> Element:
        """Lagrange projector onto the weight-w isotypic part."""
        by_deg: dict[int, Element] = {}
        for labels, c in el.items():
            by_deg.setdefault(len(labels), {})[labels] = c
        out: Element = {}
        for k, sub in by_deg.items():
            ws = self.weight_list(k)
            if w not in ws:
                continue
            acc = sub
            for w2 in ws:
                if w2 == w:
                    continue
                num = esub(self.casimir(acc), escale(acc, w2 * (w2 + 2)))
                acc = escale(num, 1.0 / (w * (w + 2) - w2 * (w2 + 2)))
            out = eadd(out, acc)
        return out

    def positive_part(self, el: Element) -> Element:
        """Top-weight (weight = degree) part; zero when the degree exceeds it."""
        by_deg: dict[int, Element] = {}
        for labels, c in el.items():
            by_deg.setdefault(len(labels), {})[labels] = c
        out: Element = {}
        for k, sub in by_deg.items():
            out = eadd(out, self.weight_project(sub, k))
        return out

    def invariant_part(self, el: Element) -> Element:
        return self.weight_project(el, 0)

    # ----- canonical elements -----

    def omega_hat(self) -> Element:
        """(1/2) sum theta_a ^ conj(theta_a), normalized so R(omega_hat) = Omega."""
        return {(a, self.m + a): 0.5 for a in range(self.m)}

    def omega_canonical(self) -> Element:
        """(1/2) sum (M^H)_ab theta_a ^ theta_b, Gram matrix = Id."""
        MH = self.mmat.conj().T
        out: Element = {}
        for a in range(self.m):
            for b in range(a + 1, self.m):
                c = MH[a, b] - MH[b, a]
                if c != 0:
                    out[(a, b)] = 0.5 * c
        return out

    # ----- bases and matrices -----

    def basis(self, k: int) -> list[tuple[int, ...]]:
        return list(itertools.combinations(range(2 * self.m), k))

    def basis_pq(self, p: int, q: int) -> list[tuple[int, ...]]:
        out = []
        for holo in itertools.combinations(range(self.m), p):
            for anti in itertools.combinations(range(self.m, 2 * self.m), q):
                out.append(holo + anti)
        return out

    def operator_matrix(self, op, basis_in, basis_out) -> np.ndarray:
        index = {mono: i for i, mono in enumerate(basis_out)}
        mat = np.zeros((len(basis_out), len(basis_in)), dtype=complex)
        for col, mono in enumerate(basis_in):
            img = op({mono: 1.0})
            for labels, c in img.items():
                row = index.get(labels)
                if row is None:
                    if abs(numeric(c)) > 1e-13:
                        raise ValueError("image leaves the target basis span")
                    continue
                mat[row, col] = numeric(c)
        return mat


def eval2(el: Element, x, y):
    """Evaluate a 2-form element on tangent vectors given in frame components.

    x, y are length-2m sequences: components along t_a then along conj(t_a).
    """
    acc = 0.0
    for (a, b), c in el.items():
        acc = acc + c * (x[a] * y[b] - x[b] * y[a])
    return acc


def positive_dimension(m: int, p: int) -> int:
    """Predicted dim of the top-weight part of Lambda^p: (p+1) C(m, p)."""
    return (p + 1) * math.comb(m, p)
