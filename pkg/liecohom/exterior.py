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

import itertools

import numpy

import liecohom.fields
import liecohom.linalg
import liecohom.util

__all__ = ["ExteriorAlgebra", "ExteriorElement", "LinearMorphism", "DimensionError", "blade", "blade_indices", "blade_degree", "wedge_sign", "wedge", "coefficient_of", "interior_product", "hodge_dual", "conjugate_form", "lift_linear_map"]

MAX_GENERATORS = 63

class DimensionError(liecohom.util.InputError):
    pass

################################################################ blades as bitmasks

def blade(*indices):
    mask = 0
    for j in indices:
        if mask & (1 << j):
            raise liecohom.util.InputError("repeated index {0} in blade {1}".format(j, indices))
        mask |= 1 << j
    return mask

def blade_indices(mask):
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)

def blade_degree(mask):
    return bin(mask).count("1")

def wedge_sign(a, b):
    """Sign of e_a ∧ e_b relative to the ascending blade a|b (a and b disjoint)."""
    count = 0
    for j in blade_indices(b):
        count += blade_degree(a >> (j + 1))
    return -1 if count % 2 else 1

################################################################ algebra

class ExteriorAlgebra(object):
    def __init__(self, n, names=None):
        if not isinstance(n, int) or n < 0 or n > MAX_GENERATORS:
            raise DimensionError("generator count must be an integer in 0..{0}, not {1}".format(MAX_GENERATORS, repr(n)))
        if names is None:
            names = ["e{0}".format(j) for j in range(n)]
        names = tuple(names)
        if len(names) != n or len(set(names)) != n:
            raise DimensionError("need {0} distinct generator names, not {1}".format(n, repr(names)))
        self._n = n
        self._names = names
        self._blades = {}
        self._positions = {}

    @property
    def n(self):
        return self._n

    @property
    def names(self):
        return self._names

    def __repr__(self):
        if self._names == tuple("e{0}".format(j) for j in range(self._n)):
            return "ExteriorAlgebra({0})".format(self._n)
        return "ExteriorAlgebra({0}, {1})".format(self._n, repr(list(self._names)))

    def __eq__(self, other):
        return isinstance(other, ExteriorAlgebra) and self._n == other._n and self._names == other._names

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((ExteriorAlgebra, self._n, self._names))

    def blades(self, k):
        """Degree-k masks in the canonical order: ascending index tuples, lexicographically."""
        if k not in self._blades:
            if k < 0 or k > self._n:
                self._blades[k] = []
            else:
                self._blades[k] = [blade(*c) for c in itertools.combinations(range(self._n), k)]
        return self._blades[k]

    def position(self, mask):
        k = blade_degree(mask)
        if k not in self._positions:
            self._positions[k] = dict((m, i) for i, m in enumerate(self.blades(k)))
        return self._positions[k][mask]

    def dimension(self, k):
        return len(self.blades(k))

    def basis(self, k):
        return [ExteriorElement._new(self, {m: liecohom.fields.Scalar.ONE}) for m in self.blades(k)]

    def gens(self):
        return self.basis(1)

    def gen(self, j):
        if not 0 <= j < self._n:
            raise DimensionError("generator index {0} out of range for {1} generators".format(j, self._n))
        return ExteriorElement._new(self, {1 << j: liecohom.fields.Scalar.ONE})

    def zero(self):
        return ExteriorElement._new(self, {})

    def one(self):
        return ExteriorElement._new(self, {0: liecohom.fields.Scalar.ONE})

    def scalar(self, x):
        return ExteriorElement(self, {0: x})

    def volume(self):
        return ExteriorElement._new(self, {(1 << self._n) - 1: liecohom.fields.Scalar.ONE})

    def element(self, terms, context=None):
        """Builds a form from {mask or index tuple: coefficient}."""
        out = {}
        for key, value in dict(terms).items():
            if isinstance(key, tuple):
                mask = blade(*key)
                sign = 1
                for x in range(len(key)):
                    for y in range(x + 1, len(key)):
                        if key[x] > key[y]:
                            sign = -sign
            else:
                mask, sign = key, 1
            value = liecohom.fields.Scalar.coerce(value, context)
            out[mask] = out.get(mask, liecohom.fields.Scalar.ZERO) + (value if sign > 0 else -value)
        return ExteriorElement(self, out)

    def blade_str(self, mask):
        if mask == 0:
            return "1"
        return "^".join(self._names[j] for j in blade_indices(mask))

    def parse(self, text, context=liecohom.fields.EMPTY):
        """Reads forms such as 2*e0^e1 - r1*e3 (^ is the wedge between forms, a power otherwise)."""
        atoms = dict((name, self.gen(j)) for j, name in enumerate(self._names))
        out = liecohom.fields.parse_expression(text, context, atoms=atoms, caret=_caret)
        if isinstance(out, liecohom.fields.Scalar):
            out = self.scalar(out)
        return out

def _caret(left, right):
    if isinstance(left, ExteriorElement) or isinstance(right, ExteriorElement):
        if isinstance(left, liecohom.fields.Scalar) or isinstance(right, liecohom.fields.Scalar):
            raise liecohom.util.InputError("'^' between a scalar and a form is ambiguous; use '*'")
        return left.wedge(right)
    return left ** right

################################################################ elements

class ExteriorElement(liecohom.util.JSONable):
    __slots__ = ("_algebra", "_terms")

    def __init__(self, algebra, terms=None):
        if isinstance(algebra, int):
            algebra = ExteriorAlgebra(algebra)
        if not isinstance(algebra, ExteriorAlgebra):
            raise TypeError("algebra must be an ExteriorAlgebra, not {0}".format(repr(algebra)))
        self._algebra = algebra
        self._terms = {}
        limit = 1 << algebra.n
        for mask, value in (terms or {}).items():
            if not isinstance(mask, int) or mask < 0 or mask >= limit:
                raise DimensionError("blade mask {0} out of range for {1} generators".format(repr(mask), algebra.n))
            value = liecohom.fields.Scalar.coerce(value)
            if not value.is_zero():
                self._terms[mask] = value

    @classmethod
    def _new(cls, algebra, terms):
        out = object.__new__(cls)
        out._algebra = algebra
        out._terms = terms
        return out

    @property
    def algebra(self):
        return self._algebra

    @property
    def n(self):
        return self._algebra.n

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in display order: higher degree first, then the canonical blade order."""
        return sorted(self._terms.items(), key=lambda mt: (-blade_degree(mt[0]), blade_indices(mt[0])))

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return len(self._terms) == 0

    def __bool__(self):
        return len(self._terms) != 0

    __nonzero__ = __bool__

    def degrees(self):
        return sorted(set(blade_degree(m) for m in self._terms))

    def degree(self):
        """The degree of a nonzero homogeneous form, otherwise None."""
        degrees = self.degrees()
        if len(degrees) == 1:
            return degrees[0]
        return None

    def is_homogeneous(self, k):
        return all(blade_degree(m) == k for m in self._terms)

    def homogeneous_component(self, k):
        return ExteriorElement._new(self._algebra, dict((m, x) for m, x in self._terms.items() if blade_degree(m) == k))

    def parameters(self):
        names = []
        for x in self._terms.values():
            for name in x.parameters():
                if name not in names:
                    names.append(name)
        return tuple(names)

    def _check(self, other):
        if not isinstance(other, ExteriorElement):
            raise TypeError("expected an ExteriorElement, not {0}".format(repr(other)))
        if other._algebra.n != self._algebra.n:
            raise DimensionError("forms on {0} and {1} generators cannot be combined".format(self._algebra.n, other._algebra.n))

    ################################################################ linear structure

    def __add__(self, other):
        if isinstance(other, (int, liecohom.fields.Scalar)) and not isinstance(other, bool):
            other = self._algebra.scalar(other)
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for m, x in other._terms.items():
            if m in terms:
                y = terms[m] + x
                if y.is_zero():
                    del terms[m]
                else:
                    terms[m] = y
            else:
                terms[m] = x
        return ExteriorElement._new(self._algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return ExteriorElement._new(self._algebra, dict((m, -x) for m, x in self._terms.items()))

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, (int, liecohom.fields.Scalar)) and not isinstance(other, bool):
            other = self._algebra.scalar(other)
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, factor):
        factor = liecohom.fields.Scalar.coerce(factor)
        if factor.is_zero():
            return self._algebra.zero()
        terms = {}
        for m, x in self._terms.items():
            y = x * factor
            if not y.is_zero():
                terms[m] = y
        return ExteriorElement._new(self._algebra, terms)

    def __mul__(self, other):
        if isinstance(other, ExteriorElement):
            return self.wedge(other)
        if isinstance(other, numpy.ndarray):
            return NotImplemented
        try:
            factor = liecohom.fields.Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(factor)

    def __rmul__(self, other):
        if isinstance(other, numpy.ndarray):
            return NotImplemented
        try:
            factor = liecohom.fields.Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(factor)

    def __truediv__(self, other):
        return self.scale(liecohom.fields.Scalar.ONE / liecohom.fields.Scalar.coerce(other))

    __div__ = __truediv__

    def __xor__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self.wedge(other)

    def wedge(self, other):
        self._check(other)
        terms = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                if a & b:
                    continue
                m = a | b
                z = x * y
                if wedge_sign(a, b) < 0:
                    z = -z
                if m in terms:
                    z = terms[m] + z
                if z.is_zero():
                    terms.pop(m, None)
                else:
                    terms[m] = z
        return ExteriorElement._new(self._algebra, terms)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = self._algebra.one()
        for i in range(k):
            out = out.wedge(self)
        return out

    def __eq__(self, other):
        if isinstance(other, (int, liecohom.fields.Scalar)) and not isinstance(other, bool):
            other = self._algebra.scalar(other)
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        if other._algebra.n != self._algebra.n or set(self._terms) != set(other._terms):
            return False
        return all(self._terms[m] == other._terms[m] for m in self._terms)

    def __ne__(self, other):
        out = self.__eq__(other)
        if out is NotImplemented:
            return out
        return not out

    def __hash__(self):
        return hash((self._algebra.n, frozenset(self._terms)))

    ################################################################ contractions and duals

    def coefficient_of(self, b):
        if isinstance(b, ExteriorElement):
            if len(b._terms) != 1:
                raise liecohom.util.InputError("coefficient_of needs a single blade, not {0}".format(str(b)))
            b = list(b._terms)[0]
        elif isinstance(b, tuple):
            b = blade(*b)
        return self._terms.get(b, liecohom.fields.Scalar.ZERO)

    def interior_product(self, x):
        """Contraction by x, making the generators orthonormal: ι(e_X) e_A = ± e_(A∖X)."""
        self._check(x)
        terms = {}
        for a, s in self._terms.items():
            for b, t in x._terms.items():
                if a & b != b:
                    continue
                rest = a & ~b
                z = s * t
                if wedge_sign(b, rest) < 0:
                    z = -z
                z = terms.get(rest, liecohom.fields.Scalar.ZERO) + z
                if z.is_zero():
                    terms.pop(rest, None)
                else:
                    terms[rest] = z
        return ExteriorElement._new(self._algebra, terms)

    def hodge_dual(self):
        full = (1 << self._algebra.n) - 1
        terms = {}
        for m, x in self._terms.items():
            complement = full & ~m
            terms[complement] = x if wedge_sign(m, complement) > 0 else -x
        return ExteriorElement._new(self._algebra, terms)

    def conjugate(self):
        return ExteriorElement._new(self._algebra, dict((m, x.conjugate()) for m, x in self._terms.items()))

    def map_coefficients(self, function):
        terms = {}
        for m, x in self._terms.items():
            y = function(x)
            if not y.is_zero():
                terms[m] = y
        return ExteriorElement._new(self._algebra, terms)

    def substitute(self, assignment):
        return self.map_coefficients(lambda x: x.substitute(assignment))

    def compact(self):
        return self.map_coefficients(lambda x: x.compact())

    def relabel(self, algebra):
        """The same coefficients on another algebra with the same generator count."""
        if algebra.n != self._algebra.n:
            raise DimensionError("cannot relabel {0} generators as {1}".format(self._algebra.n, algebra.n))
        return ExteriorElement._new(algebra, dict(self._terms))

    ################################################################ rendering

    def __str__(self):
        if len(self._terms) == 0:
            return "0"
        out = []
        for m, x in self.items():
            b = self._algebra.blade_str(m)
            text = str(x)
            negative = False
            if text.startswith("-"):
                flipped = str(-x)
                if " " not in flipped:
                    negative, text = True, flipped
            if m == 0:
                term = text
            elif text == "1":
                term = b
            elif " " in text:
                term = "(" + text + ")*" + b
            else:
                term = text + "*" + b
            if len(out) == 0:
                out.append(("-" if negative else "") + term)
            else:
                out.append((" - " if negative else " + ") + term)
        return "".join(out)

    def __repr__(self):
        return "<ExteriorElement {0}>".format(str(self))

    def tojson(self):
        return [{"blade": list(blade_indices(m)), "coeff": str(x)} for m, x in sorted(self._terms.items(), key=lambda mt: (blade_degree(mt[0]), blade_indices(mt[0])))]

    @staticmethod
    def fromjson(data, algebra, context=liecohom.fields.EMPTY):
        if not isinstance(data, list):
            raise liecohom.util.InputError("forms are JSON lists of terms, not {0}".format(repr(data)))
        terms = {}
        for term in data:
            if not isinstance(term, dict) or "blade" not in term or "coeff" not in term:
                raise liecohom.util.InputError("form terms need 'blade' and 'coeff', not {0}".format(repr(term)))
            indices = tuple(liecohom.util.jsonindex(j, "blade index") for j in term["blade"])
            for j in indices:
                if not 0 <= j < algebra.n:
                    raise DimensionError("blade index {0} out of range for {1} generators".format(j, algebra.n))
            terms[indices] = liecohom.fields.Scalar.coerce(str(term["coeff"]), context)
        return algebra.element(terms)

################################################################ module-level operations

def wedge(a, b):
    return a.wedge(b)

def coefficient_of(a, b):
    return a.coefficient_of(b)

def interior_product(a, x):
    return a.interior_product(x)

def hodge_dual(a):
    return a.hodge_dual()

def conjugate_form(a):
    return a.conjugate()

################################################################ morphisms

class LinearMorphism(object):
    """Algebra morphism induced by a matrix on generators: Φ(e_j) = Σ_k mat[k][j] e_k."""

    def __init__(self, source, target, matrix, context=None):
        if isinstance(source, int):
            source = ExteriorAlgebra(source)
        if isinstance(target, int):
            target = ExteriorAlgebra(target)
        matrix = liecohom.linalg.asmatrix(matrix, context)
        if matrix.shape != (target.n, source.n):
            raise DimensionError("a morphism from {0} to {1} generators needs a {1}x{0} matrix, not {2}".format(source.n, target.n, "x".join(str(x) for x in matrix.shape)))
        self._source = source
        self._target = target
        self._matrix = matrix
        self._images = {0: target.one()}
        for j in range(source.n):
            self._images[1 << j] = ExteriorElement(target, dict((1 << k, matrix[k, j]) for k in range(target.n)))

    @property
    def source(self):
        return self._source

    @property
    def target(self):
        return self._target

    @property
    def matrix(self):
        return self._matrix.copy()

    def __repr__(self):
        return "<LinearMorphism {0} -> {1}>".format(repr(self._source), repr(self._target))

    def image(self, mask):
        if mask not in self._images:
            indices = blade_indices(mask)
            head = 1 << indices[0]
            self._images[mask] = self._images[head].wedge(self.image(mask & ~head))
        return self._images[mask]

    def __call__(self, element):
        if not isinstance(element, ExteriorElement):
            raise TypeError("morphisms apply to ExteriorElements, not {0}".format(repr(element)))
        if element.n != self._source.n:
            raise DimensionError("morphism from {0} generators applied to a form on {1}".format(self._source.n, element.n))
        out = self._target.zero()
        for m, x in element._terms.items():
            out = out + self.image(m).scale(x)
        return out

    def compose(self, other):
        """self ∘ other."""
        if other.target.n != self._source.n:
            raise DimensionError("cannot compose morphisms through {0} and {1} generators".format(other.target.n, self._source.n))
        return LinearMorphism(other.source, self._target, liecohom.linalg.matmul(self._matrix, other._matrix))

    def determinant(self):
        return liecohom.linalg.determinant(self._matrix)

def lift_linear_map(mat, algebra=None, context=None):
    matrix = liecohom.linalg.asmatrix(mat, context)
    if matrix.shape[0] != matrix.shape[1]:
        raise DimensionError("lift_linear_map needs a square matrix, not {0}".format("x".join(str(x) for x in matrix.shape)))
    if algebra is None:
        algebra = ExteriorAlgebra(matrix.shape[0])
    elif algebra.n != matrix.shape[0]:
        raise DimensionError("a {0}x{0} matrix does not act on {1} generators".format(matrix.shape[0], algebra.n))
    return LinearMorphism(algebra, algebra, matrix)
