#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2017, DIANA-HEP
# All rights reserved.
# 
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
# 
# * Redistributions of source code must retain the above copyright notice, this
#   list of conditions and the following disclaimer.
# 
# * Redistributions in binary form must reproduce the above copyright notice,
#   this list of conditions and the following disclaimer in the documentation
#   and/or other materials provided with the distribution.
# 
# * Neither the name of the copyright holder nor the names of its
#   contributors may be used to endorse or promote products derived from
#   this software without specific prior written permission.
# 
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

import logging
import math

import sympy

import liecohom.exterior
import liecohom.lie
import liecohom.linalg
import liecohom.parametric
import liecohom.util

logger = logging.getLogger(__name__)

__all__ = ["ChainComplexMatrices", "CohomologyTable", "PoincarePolynomial", "FrolicherComparison", "ComplexError", "ParametricInputError", "build_complex", "betti_numbers", "poincare_polynomial", "morse_novikov", "dolbeault", "bott_chern", "aeppli", "frolicher_comparison", "THEORIES"]

THEORIES = ("deRham", "MorseNovikov", "Dolbeault", "BottChern", "Aeppli")

class ComplexError(liecohom.util.InputError):
    """The operator is not a differential: wrong degree, or it does not square to zero."""
    def __init__(self, message, witness=None):
        super(ComplexError, self).__init__(message)
        self.witness = witness

class ParametricInputError(liecohom.util.InputError):
    def __init__(self, parameters):
        super(ParametricInputError, self).__init__("coefficients depend on parameters {0}; specialize them, or pass generic=True (--generic) for the open stratum".format(", ".join(parameters)))
        self.parameters = tuple(parameters)

################################################################ ranks

class _Ranker(object):
    """Exact ranks, over the function field when generic; collects the pivot inequations used."""

    def __init__(self, generic=False):
        self.generic = generic
        self.conditions = None

    def rank(self, matrix):
        if matrix.shape[0] == 0 or matrix.shape[1] == 0:
            return 0
        if liecohom.linalg.has_parameters(matrix):
            if not self.generic:
                names = set()
                for x in matrix.flat:
                    names.update(x.parameters())
                raise ParametricInputError(sorted(names))
            r, conditions = liecohom.parametric.generic_rank(matrix)
            self.conditions = conditions if self.conditions is None else self.conditions.merge(conditions)
            return r
        return liecohom.linalg.rank(matrix)

    def quotient(self, kernel, image, size):
        """dim(ker kernel / im image) for maps out of and into a space of the given size."""
        return size - self.rank(kernel) - self.rank(image)

def _representatives(kernel, image, blades, algebra):
    """Kernel vectors of 'kernel' that are independent modulo the columns of 'image', as forms."""
    if kernel.shape[0] == 0:
        vectors = [[liecohom.linalg.ONE if i == j else liecohom.linalg.ZERO for i in range(len(blades))] for j in range(len(blades))]
    else:
        vectors = liecohom.linalg.nullspace(kernel)
    columns = [list(image[:, j]) for j in range(image.shape[1])]
    columns = [c for c in columns if any(not x.is_zero() for x in c)]
    chosen = liecohom.linalg.extend_basis(columns, vectors)
    return [liecohom.exterior.ExteriorElement(algebra, dict((m, x) for m, x in zip(blades, vectors[k]))) for k in chosen]

################################################################ chain complexes

class ChainComplexMatrices(object):
    """Matrices of a degree +1 differential: mats[j] maps degree j to degree j+1 in the canonical blade bases."""

    def __init__(self, algebra, mats, name="d"):
        self._algebra = algebra
        self._mats = list(mats)
        self._name = name
        n = algebra.n
        if len(self._mats) != n + 1:
            raise liecohom.util.InputError("need {0} matrices for {1} generators, not {2}".format(n + 1, n, len(self._mats)))
        for j, m in enumerate(self._mats):
            if m.shape != (math.comb(n, j + 1), math.comb(n, j)):
                raise liecohom.util.InputError("matrix {0} has shape {1}, not {2}".format(j, m.shape, (math.comb(n, j + 1), math.comb(n, j))))

    @property
    def n(self):
        return self._algebra.n

    @property
    def algebra(self):
        return self._algebra

    @property
    def name(self):
        return self._name

    @property
    def mats(self):
        return list(self._mats)

    def matrix(self, j):
        """The differential out of degree j; empty shapes outside 0..n."""
        n = self._algebra.n
        if j < 0:
            return liecohom.linalg.zeros(math.comb(n, j + 1) if j == -1 else 0, 0)
        if j > n:
            return liecohom.linalg.zeros(0, 0)
        return self._mats[j]

    def has_parameters(self):
        return any(liecohom.linalg.has_parameters(m) for m in self._mats)

    def euler_characteristic(self):
        return sum((-1)**j * math.comb(self._algebra.n, j) for j in range(self._algebra.n + 1))

    def __repr__(self):
        return "<ChainComplexMatrices {0} on {1} generators>".format(self._name, self._algebra.n)

def _operator_matrix(op, algebra, sources, targets, name="d"):
    """Matrix of op restricted to span(sources) → span(targets); op(source) must lie in span(targets)."""
    out = liecohom.linalg.zeros(len(targets), len(sources))
    rows = dict((m, i) for i, m in enumerate(targets))
    for j, mask in enumerate(sources):
        image = op(liecohom.exterior.ExteriorElement._new(algebra, {mask: liecohom.linalg.ONE}))
        for m, x in image.terms.items():
            if m not in rows:
                raise ComplexError("{0}({1}) has a term {2} outside the expected degree".format(name, algebra.blade_str(mask), algebra.blade_str(m)), (mask, m))
            out[rows[m], j] = x
    return out

def build_complex(d, algebra=None, check=True):
    """Differential matrices of d (a Coboundary, TwistedCoboundary or StructureConstants), checking d² = 0."""
    if isinstance(d, liecohom.lie.StructureConstants):
        d = d.coboundary()
    if algebra is None:
        algebra = d.algebra
    name = getattr(d, "name", "d")
    n = algebra.n
    mats = [_operator_matrix(d, algebra, algebra.blades(j), algebra.blades(j + 1), name) for j in range(n + 1)]
    if check:
        for j in range(n - 1):
            product = liecohom.linalg.matmul(mats[j + 1], mats[j])
            if not liecohom.linalg.is_zero_matrix(product):
                raise ComplexError("{0}^2 != 0 from degree {1}".format(name, j), j)
    logger.debug("built complex on %d generators", n)
    return ChainComplexMatrices(algebra, mats, name)

################################################################ tables

class PoincarePolynomial(object):
    def __init__(self, coefficients):
        self._coefficients = [int(c) for c in coefficients]

    @property
    def coefficients(self):
        """Coefficient of x^k at position k."""
        return list(self._coefficients)

    def degree(self):
        for k in range(len(self._coefficients) - 1, -1, -1):
            if self._coefficients[k] != 0:
                return k
        return -1

    def __call__(self, x):
        return sum(c * x**k for k, c in enumerate(self._coefficients))

    def as_poly(self, x=None):
        if x is None:
            x = sympy.Symbol("x")
        return sympy.Poly(list(reversed(self._coefficients)) or [0], x, domain="ZZ")

    def __eq__(self, other):
        if isinstance(other, PoincarePolynomial):
            other = other._coefficients
        if isinstance(other, (list, tuple)):
            a, b = list(self._coefficients), list(other)
            while len(a) > 0 and a[-1] == 0:
                a.pop()
            while len(b) > 0 and b[-1] == 0:
                b.pop()
            return a == b
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(tuple(self._coefficients[:self.degree() + 1]))

    def __repr__(self):
        return "PoincarePolynomial({0})".format(str(self))

    def __str__(self):
        terms = []
        for k in range(len(self._coefficients) - 1, -1, -1):
            c = self._coefficients[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                power = "x" if k == 1 else "x^{0}".format(k)
                body = power if abs(c) == 1 else "{0}*{1}".format(abs(c), power)
            if len(terms) == 0:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append((" - " if c < 0 else " + ") + body)
        return "".join(terms) if len(terms) > 0 else "0"

class CohomologyTable(liecohom.util.JSONable):
    def __init__(self, theory, dims, bigraded=None, representatives=None, conditions=None, flags=()):
        if theory not in THEORIES:
            raise liecohom.util.InputError("theory must be one of {0}, not {1}".format(", ".join(THEORIES), repr(theory)))
        self.theory = theory
        self.dims = dict((int(k), int(v)) for k, v in dims.items())
        self.bigraded = None if bigraded is None else dict(((int(p), int(q)), int(v)) for (p, q), v in bigraded.items())
        self.representatives = representatives
        self.conditions = conditions
        self.flags = tuple(flags)

    def __getitem__(self, k):
        if isinstance(k, tuple):
            if self.bigraded is None:
                raise KeyError("{0} table is not bigraded".format(self.theory))
            return self.bigraded.get(k, 0)
        return self.dims.get(k, 0)

    def totals(self):
        return [self.dims[k] for k in sorted(self.dims)]

    def euler_characteristic(self):
        return sum((-1)**k * v for k, v in self.dims.items())

    def poincare_polynomial(self):
        return poincare_polynomial(self)

    def __eq__(self, other):
        return isinstance(other, CohomologyTable) and self.theory == other.theory and self.dims == other.dims and self.bigraded == other.bigraded

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((CohomologyTable, self.theory, tuple(sorted(self.dims.items()))))

    def __repr__(self):
        return "<CohomologyTable {0} {1}>".format(self.theory, self.totext())

    def totext(self):
        return "{" + ", ".join("{0}: {1}".format(k, self.dims[k]) for k in sorted(self.dims)) + "}"

    def bigraded_text(self):
        if self.bigraded is None:
            return None
        return "{" + ", ".join("({0}, {1}): {2}".format(p, q, self.bigraded[p, q]) for p, q in sorted(self.bigraded)) + "}"

    def tojson(self):
        out = {"theory": self.theory, "dims": dict((str(k), v) for k, v in sorted(self.dims.items()))}
        if self.bigraded is not None:
            out["bigraded"] = dict(("{0},{1}".format(p, q), v) for (p, q), v in sorted(self.bigraded.items()))
        if self.conditions is not None and not self.conditions.is_empty():
            out["conditions"] = self.conditions.tojson()
        if len(self.flags) > 0:
            out["flags"] = list(self.flags)
        if self.representatives is not None:
            out["representatives"] = dict((str(k), [str(x) for x in v]) for k, v in sorted(self.representatives.items()))
        return out

    @staticmethod
    def fromjson(data):
        if not isinstance(data, dict) or "theory" not in data or "dims" not in data:
            raise liecohom.util.InputError("cohomology tables need 'theory' and 'dims', not {0}".format(repr(data)))
        bigraded = None
        if "bigraded" in data:
            bigraded = dict((tuple(int(x) for x in k.split(",")), v) for k, v in data["bigraded"].items())
        return CohomologyTable(data["theory"], data["dims"], bigraded, flags=data.get("flags", ()))

def poincare_polynomial(T):
    if T.bigraded is not None and len(T.dims) == 0:
        raise liecohom.util.InputError("the Poincaré polynomial needs a table graded by a single degree")
    top = max(T.dims) if len(T.dims) > 0 else 0
    return PoincarePolynomial([T.dims.get(k, 0) for k in range(top + 1)])

################################################################ de Rham and Morse-Novikov

def _as_complex(C):
    if isinstance(C, ChainComplexMatrices):
        return C
    return build_complex(C)

def betti_numbers(C, representatives=False, generic=False, theory="deRham"):
    """dims[j] = nullity(mats[j]) - rank(mats[j-1])."""
    C = _as_complex(C)
    ranker = _Ranker(generic)
    n = C.n
    ranks = [ranker.rank(C.matrix(j)) for j in range(n + 1)]
    dims = {}
    for j in range(n + 1):
        dims[j] = math.comb(n, j) - ranks[j] - (ranks[j - 1] if j > 0 else 0)
    reps = None
    if representatives:
        if C.has_parameters():
            raise ParametricInputError(sorted(set(p for m in C.mats for x in m.flat for p in x.parameters())))
        reps = {}
        for j in range(n + 1):
            image = C.matrix(j - 1) if j > 0 else liecohom.linalg.zeros(1, 0)
            reps[j] = _representatives(C.matrix(j), image, C.algebra.blades(j), C.algebra)
    logger.info("%s dims %s", theory, [dims[j] for j in range(n + 1)])
    return CohomologyTable(theory, dims, representatives=reps, conditions=ranker.conditions)

def morse_novikov(S, theta, representatives=False, generic=False):
    """Cohomology of d_θ = d − θ∧·, for a closed 1-form θ."""
    if isinstance(theta, str):
        theta = S.algebra.parse(theta, S.context)
    d = liecohom.lie.TwistedCoboundary(S.coboundary(), theta)
    return betti_numbers(build_complex(d, S.algebra), representatives=representatives, generic=generic, theory="MorseNovikov")

################################################################ bigraded theories

class _Bigrading(object):
    """Blades of the complexified algebra sorted by bidegree; generators below nc are unbarred."""

    def __init__(self, algebra, nc):
        self.algebra = algebra
        self.nc = nc
        self.blades = {}
        unbarred = (1 << nc) - 1
        for k in range(algebra.n + 1):
            for mask in algebra.blades(k):
                p = liecohom.exterior.blade_degree(mask & unbarred)
                self.blades.setdefault((p, k - p), []).append(mask)

    def __call__(self, p, q):
        return self.blades.get((p, q), [])

    def bidegrees(self):
        return [(p, q) for p in range(self.nc + 1) for q in range(self.nc + 1)]

def _bigraded_setup(B):
    delta, deltabar = B.split_operators()
    return B.algebra, B.nc, delta, deltabar, _Bigrading(B.algebra, B.nc)

def _totals(bigraded, nc):
    totals = dict((k, 0) for k in range(2 * nc + 1))
    for (p, q), v in bigraded.items():
        totals[p + q] += v
    return totals

def _conditions(B, ranker):
    base = getattr(B, "conditions", None)
    if ranker.conditions is None:
        return base
    if base is None:
        return ranker.conditions
    return base.merge(ranker.conditions)

def dolbeault(B, representatives=False, generic=False):
    """h^{p,q} = dim ker ∂̄ / im ∂̄ on the bigraded complexified algebra."""
    algebra, nc, delta, deltabar, bigrading = _bigraded_setup(B)
    ranker = _Ranker(generic)
    bigraded = {}
    reps = {} if representatives else None
    for p, q in bigrading.bidegrees():
        here = bigrading(p, q)
        out = _operator_matrix(deltabar, algebra, here, bigrading(p, q + 1), deltabar.name)
        into = _operator_matrix(deltabar, algebra, bigrading(p, q - 1), here, deltabar.name)
        bigraded[p, q] = ranker.quotient(out, into, len(here))
        if representatives:
            reps.setdefault(p + q, []).extend(_representatives(out, into, here, algebra))
    logger.info("Dolbeault h^{p,q} %s", sorted(bigraded.items()))
    return CohomologyTable("Dolbeault", _totals(bigraded, nc), bigraded, reps, _conditions(B, ranker), getattr(B, "flags", ()))

def _delta_deltabar(delta, deltabar, algebra, bigrading, p, q):
    """∂∂̄ from (p,q) to (p+1,q+1)."""
    first = _operator_matrix(deltabar, algebra, bigrading(p, q), bigrading(p, q + 1), deltabar.name)
    second = _operator_matrix(delta, algebra, bigrading(p, q + 1), bigrading(p + 1, q + 1), delta.name)
    return liecohom.linalg.matmul(second, first)

def bott_chern(B, representatives=False, generic=False):
    """dim (ker ∂ ∩ ker ∂̄) / im ∂∂̄ per bidegree."""
    algebra, nc, delta, deltabar, bigrading = _bigraded_setup(B)
    ranker = _Ranker(generic)
    bigraded = {}
    reps = {} if representatives else None
    for p, q in bigrading.bidegrees():
        here = bigrading(p, q)
        kernel = liecohom.linalg.vstack([_operator_matrix(delta, algebra, here, bigrading(p + 1, q), delta.name), _operator_matrix(deltabar, algebra, here, bigrading(p, q + 1), deltabar.name)], len(here))
        image = _delta_deltabar(delta, deltabar, algebra, bigrading, p - 1, q - 1)
        bigraded[p, q] = ranker.quotient(kernel, image, len(here))
        if representatives:
            reps.setdefault(p + q, []).extend(_representatives(kernel, image, here, algebra))
    logger.info("Bott-Chern totals %s", sorted(_totals(bigraded, nc).items()))
    return CohomologyTable("BottChern", _totals(bigraded, nc), bigraded, reps, _conditions(B, ranker), getattr(B, "flags", ()))

def aeppli(B, representatives=False, generic=False):
    """dim ker ∂∂̄ / (im ∂ + im ∂̄) per bidegree."""
    algebra, nc, delta, deltabar, bigrading = _bigraded_setup(B)
    ranker = _Ranker(generic)
    bigraded = {}
    reps = {} if representatives else None
    for p, q in bigrading.bidegrees():
        here = bigrading(p, q)
        kernel = _delta_deltabar(delta, deltabar, algebra, bigrading, p, q)
        image = liecohom.linalg.hstack([_operator_matrix(delta, algebra, bigrading(p - 1, q), here, delta.name), _operator_matrix(deltabar, algebra, bigrading(p, q - 1), here, deltabar.name)], len(here))
        bigraded[p, q] = ranker.quotient(kernel, image, len(here))
        if representatives:
            reps.setdefault(p + q, []).extend(_representatives(kernel, image, here, algebra))
    logger.info("Aeppli totals %s", sorted(_totals(bigraded, nc).items()))
    return CohomologyTable("Aeppli", _totals(bigraded, nc), bigraded, reps, _conditions(B, ranker), getattr(B, "flags", ()))

################################################################ comparisons

class FrolicherComparison(liecohom.util.JSONable):
    """Per degree, b_k against Σ_{p+q=k} h^{p,q}; equality everywhere means degeneration at the first page."""

    def __init__(self, derham, dolbeault):
        self.rows = []
        for k in sorted(set(derham.dims) | set(dolbeault.dims)):
            self.rows.append((k, derham[k], dolbeault[k]))

    @property
    def inequality_holds(self):
        return all(b <= h for k, b, h in self.rows)

    @property
    def degenerates(self):
        return all(b == h for k, b, h in self.rows)

    def __repr__(self):
        return "<FrolicherComparison degenerates={0}>".format(self.degenerates)

    def tojson(self):
        return {"degrees": [{"degree": k, "betti": b, "dolbeault": h, "equal": b == h} for k, b, h in self.rows], "inequality_holds": self.inequality_holds, "degenerates": self.degenerates}

def frolicher_comparison(derham, dolbeault):
    return FrolicherComparison(derham, dolbeault)
