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

"""Almost-complex structures, (1,0)-coframes and structure equations in the (φ, φ̄) basis."""

import json
import logging

import liecohom.cohomology
import liecohom.exterior
import liecohom.fields
import liecohom.lie
import liecohom.linalg
import liecohom.parametric
import liecohom.util

logger = logging.getLogger(__name__)

__all__ = ["AlmostComplexStructure", "ComplexCoframe", "BigradedStructure", "IntegrabilityError", "coframe_from_j", "default_coframe_choice", "transport_structure_equations", "untransport", "integrability_check", "split_operators", "complexified_algebra"]

class IntegrabilityError(liecohom.cohomology.ComplexError):
    pass

def complexified_algebra(nc):
    names = ["phi{0}".format(j) for j in range(nc)] + ["barphi{0}".format(j) for j in range(nc)]
    return liecohom.exterior.ExteriorAlgebra(2 * nc, names)

################################################################ J

class AlmostComplexStructure(object):
    """J acting on 1-forms by J(e_j) = Σ_k mat[k][j] e_k, with J² = −id."""

    def __init__(self, mat, context=None):
        matrix = liecohom.linalg.asmatrix(mat, context)
        n = matrix.shape[0]
        if matrix.shape != (n, n):
            raise liecohom.exterior.DimensionError("an almost-complex structure needs a square matrix, not {0}".format(matrix.shape))
        if n % 2 != 0:
            raise liecohom.exterior.DimensionError("almost-complex structures need even dimension, not {0}".format(n))
        square = liecohom.linalg.matmul(matrix, matrix)
        for i in range(n):
            for j in range(n):
                expected = -1 if i == j else 0
                if square[i, j] != expected:
                    raise liecohom.util.InputError("J^2 != -id: entry ({0}, {1}) of J^2 is {2}".format(i, j, str(square[i, j])))
        self._matrix = matrix
        self._lift = None

    @property
    def n(self):
        return self._matrix.shape[0]

    @property
    def matrix(self):
        return self._matrix.copy()

    def lift(self, algebra=None):
        if self._lift is None or (algebra is not None and algebra != self._lift.source):
            self._lift = liecohom.exterior.lift_linear_map(self._matrix, algebra)
        return self._lift

    def __call__(self, form):
        return self.lift(form.algebra)(form)

    def __repr__(self):
        return "<AlmostComplexStructure on {0} generators>".format(self.n)

    def tojson(self):
        return [[str(x) for x in row] for row in self._matrix]

################################################################ coframes

class ComplexCoframe(object):
    """φʲ = e^{chosen[j]} − i·J(e^{chosen[j]}) and the change of basis to the complexified algebra."""

    def __init__(self, J, chosen, algebra=None):
        if algebra is None:
            algebra = liecohom.exterior.ExteriorAlgebra(J.n)
        chosen = tuple(int(j) for j in chosen)
        nc = J.n // 2
        if len(chosen) != nc:
            raise liecohom.util.InputError("a coframe of {0} generators needs {1} chosen indices, not {2}".format(J.n, nc, len(chosen)))
        for j in chosen:
            if not 0 <= j < J.n:
                raise liecohom.exterior.DimensionError("generator {0} out of range for {1} generators".format(j, J.n))
        self._J = J
        self._chosen = chosen
        self._real = algebra
        self._phi = [algebra.gen(j) - J(algebra.gen(j)).scale(liecohom.fields.Scalar.I) for j in chosen]
        for j, phi in enumerate(self._phi):
            if J(phi) != phi.scale(liecohom.fields.Scalar.I):
                raise AssertionError("phi{0} is not an i-eigenvector of J".format(j))
        self._complex = complexified_algebra(nc)
        columns = self._phi + [phi.conjugate() for phi in self._phi]
        P = liecohom.linalg.zeros(J.n, J.n)
        for c, phi in enumerate(columns):
            for mask, x in phi.terms.items():
                P[algebra.position(mask), c] = x
        if liecohom.linalg.determinant(P).is_zero():
            raise liecohom.cohomology.ComplexError("generators {0} give dependent (1,0)-forms; choose different generators".format(", ".join(str(j) for j in chosen)), chosen)
        self._P = P
        self._to_real = liecohom.exterior.LinearMorphism(self._complex, algebra, P)
        self._to_complex = liecohom.exterior.LinearMorphism(algebra, self._complex, liecohom.linalg.inverse(P))

    @property
    def nc(self):
        return len(self._chosen)

    @property
    def chosen(self):
        return self._chosen

    @property
    def phi(self):
        return list(self._phi)

    @property
    def J(self):
        return self._J

    @property
    def real_algebra(self):
        return self._real

    @property
    def complex_algebra(self):
        return self._complex

    def to_real(self, form):
        """Rewrites a form in φ, φ̄ in terms of the real generators."""
        return self._to_real(form)

    def to_complex(self, form):
        return self._to_complex(form)

    def __repr__(self):
        return "<ComplexCoframe chosen={0}>".format(list(self._chosen))

def default_coframe_choice(J):
    """Smallest-index generators whose (1,0)-forms and conjugates stay independent."""
    algebra = liecohom.exterior.ExteriorAlgebra(J.n)
    vectors = []
    chosen = []
    for j in range(J.n):
        phi = algebra.gen(j) - J(algebra.gen(j)).scale(liecohom.fields.Scalar.I)
        trial = [[phi.coefficient_of(1 << k) for k in range(J.n)], [phi.conjugate().coefficient_of(1 << k) for k in range(J.n)]]
        if len(liecohom.linalg.extend_basis(vectors, trial)) == 2:
            vectors.extend(trial)
            chosen.append(j)
        if len(chosen) == J.n // 2:
            break
    return tuple(chosen)

def coframe_from_j(J, chosen=None):
    if not isinstance(J, AlmostComplexStructure):
        J = AlmostComplexStructure(J)
    if chosen is None:
        chosen = default_coframe_choice(J)
    return ComplexCoframe(J, chosen)

################################################################ bigraded structures

class BigradedStructure(liecohom.util.JSONable):
    """d on the complexified algebra phi0.., barphi0.., with bidegrees (1,0) and (0,1) on the generators."""

    def __init__(self, nc, images, context=None, flags=(), coframe=None, inequations=()):
        self._algebra = complexified_algebra(nc)
        images = [form.relabel(self._algebra) for form in images]
        if len(images) != 2 * nc:
            raise liecohom.exterior.DimensionError("need {0} generator images, not {1}".format(2 * nc, len(images)))
        if context is None:
            context = liecohom.fields.EMPTY
            for form in images:
                for x in form.terms.values():
                    context = context.union(x.context)
        self._nc = nc
        self._d = liecohom.lie.Coboundary(self._algebra, images, "d")
        self._context = context
        self._flags = tuple(flags)
        self._inequations = tuple(liecohom.fields.Scalar.coerce(x, context) for x in inequations)
        self._coframe = coframe
        self._split = None
        swap = liecohom.linalg.zeros(2 * nc, 2 * nc)
        for j in range(nc):
            swap[nc + j, j] = liecohom.linalg.ONE
            swap[j, nc + j] = liecohom.linalg.ONE
        self._swap = liecohom.exterior.LinearMorphism(self._algebra, self._algebra, swap)

    @staticmethod
    def from_equations(nc, unbarred, context=None, flags=(), coframe=None, inequations=()):
        """Builds the structure from dφʲ only; d of the conjugates follows by conjugation."""
        algebra = complexified_algebra(nc)
        unbarred = [form.relabel(algebra) for form in unbarred]
        out = BigradedStructure(nc, unbarred + [algebra.zero()] * nc, context, flags, coframe, inequations)
        barred = [out.bar(form) for form in unbarred]
        return BigradedStructure(nc, unbarred + barred, context, flags, coframe, inequations)

    @property
    def nc(self):
        return self._nc

    @property
    def algebra(self):
        return self._algebra

    @property
    def d(self):
        return self._d

    @property
    def context(self):
        return self._context

    @property
    def flags(self):
        return self._flags

    @property
    def inequations(self):
        return self._inequations

    @property
    def conditions(self):
        if len(self._flags) == 0 and len(self._inequations) == 0:
            return None
        return liecohom.parametric.ConditionSet(self._context, (), self._inequations, self._flags)

    @property
    def coframe(self):
        return self._coframe

    def images(self):
        return self._d.images()

    def image(self, j):
        return self._d.image(j)

    def __repr__(self):
        return "<BigradedStructure nc={0}{1}>".format(self._nc, "" if len(self._flags) == 0 else " " + ", ".join(self._flags))

    def __str__(self):
        return "\n".join("d({0}) = {1}".format(self._algebra.names[j], str(self._d.image(j))) for j in range(self._nc))

    def has_parameters(self):
        return any(len(form.parameters()) > 0 for form in self._d.images())

    def bidegree(self, mask):
        unbarred = mask & ((1 << self._nc) - 1)
        p = liecohom.exterior.blade_degree(unbarred)
        return p, liecohom.exterior.blade_degree(mask) - p

    def component(self, form, p, q):
        return liecohom.exterior.ExteriorElement._new(self._algebra, dict((m, x) for m, x in form.terms.items() if self.bidegree(m) == (p, q)))

    def bar(self, form):
        """Conjugation of the complexified algebra: conjugate coefficients and exchange φʲ with φ̄ʲ."""
        return self._swap(form.relabel(self._algebra).conjugate())

    def specialize(self, assignment):
        images = [form.substitute(assignment) for form in self._d.images()]
        inequations = []
        for x in self._inequations:
            value = x.substitute(assignment)
            if not value:
                raise liecohom.util.InputError("specialization {0} makes {1} vanish".format(assignment, str(x)))
            if not value.is_constant():
                inequations.append(value)
        return BigradedStructure(self._nc, images, None, self._flags, self._coframe, inequations)

    def integrability(self):
        return integrability_check(self)

    def split_operators(self):
        """(∂, ∂̄) with d = ∂ + ∂̄; checks ∂² = ∂̄² = ∂∂̄ + ∂̄∂ = 0."""
        if self._split is None:
            verdict = integrability_check(self)
            if not verdict:
                raise IntegrabilityError("not integrable: {0}".format(verdict.message), verdict.witness)
            nc = self._nc
            delta = []
            deltabar = []
            for j in range(2 * nc):
                image = self._d.image(j)
                if j < nc:
                    delta.append(self.component(image, 2, 0))
                    deltabar.append(self.component(image, 1, 1))
                else:
                    delta.append(self.component(image, 1, 1))
                    deltabar.append(self.component(image, 0, 2))
            delta = liecohom.lie.Coboundary(self._algebra, delta, "del")
            deltabar = liecohom.lie.Coboundary(self._algebra, deltabar, "delbar")
            for verdict in (delta.squares_to_zero(), deltabar.squares_to_zero(), delta.anticommutes_with(deltabar)):
                if not verdict:
                    raise IntegrabilityError("operator identity fails: {0}".format(verdict.message), verdict.witness)
            logger.debug("split d into del and delbar on %d generators", 2 * nc)
            self._split = (delta, deltabar)
        return self._split

    ################################################################ JSON

    def tojson(self):
        d = []
        for j in range(2 * self._nc):
            terms = []
            for mask, x in sorted(self._d.image(j).terms.items()):
                indices = [self._algebra.names[k] for k in range(2 * self._nc) if mask & (1 << k)]
                terms.append([str(x)] + indices)
            if len(terms) > 0:
                d.append([self._algebra.names[j], terms])
        out = {"generators": self._nc, "d": d}
        if len(self._context) > 0:
            out["params"] = list(self._context.names)
        if len(self._inequations) > 0:
            out["neq"] = [str(x) for x in self._inequations]
        if len(self._flags) > 0:
            out["flags"] = list(self._flags)
        return out

    @staticmethod
    def fromjson(doc):
        if isinstance(doc, str):
            try:
                doc = json.loads(doc)
            except ValueError as err:
                raise liecohom.util.InputError("complex structure equations are not valid JSON: {0}".format(err))
        if not isinstance(doc, dict) or "generators" not in doc or "d" not in doc:
            raise liecohom.util.InputError("complex structure equations need 'generators' and 'd', not {0}".format(repr(doc)))
        nc = doc["generators"]
        if not isinstance(nc, int) or isinstance(nc, bool) or nc < 1:
            raise liecohom.util.InputError("'generators' must be a positive integer, not {0}".format(repr(nc)))
        context = liecohom.fields.ParameterContext(doc.get("params", []))
        flags = doc.get("flags", [])
        if not isinstance(flags, list) or not all(isinstance(f, str) for f in flags):
            raise liecohom.util.InputError("'flags' must be a list of strings, not {0}".format(repr(flags)))
        neq = doc.get("neq", [])
        if not isinstance(neq, list) or not all(isinstance(x, str) for x in neq):
            raise liecohom.util.InputError("'neq' must be a list of expressions, not {0}".format(repr(neq)))
        inequations = [liecohom.fields.Scalar.coerce(x, context) for x in neq]
        algebra = complexified_algebra(nc)
        index = dict((name, j) for j, name in enumerate(algebra.names))
        images = [None] * (2 * nc)
        for entry in doc["d"]:
            if not isinstance(entry, list) or len(entry) != 2 or entry[0] not in index or not isinstance(entry[1], list):
                raise liecohom.util.InputError("entries of 'd' are [generator, terms], not {0}".format(repr(entry)))
            terms = {}
            for term in entry[1]:
                if not isinstance(term, list) or len(term) != 3 or term[1] not in index or term[2] not in index:
                    raise liecohom.util.InputError("terms are [coefficient, generator, generator], not {0}".format(repr(term)))
                key = (index[term[1]], index[term[2]])
                terms[key] = terms.get(key, liecohom.fields.Scalar.ZERO) + liecohom.fields.Scalar.coerce(str(term[0]), context)
            j = index[entry[0]]
            if images[j] is not None:
                raise liecohom.util.InputError("{0} is given twice".format(entry[0]))
            images[j] = algebra.element(terms)
        out = BigradedStructure(nc, [x if x is not None else algebra.zero() for x in images], context, flags, None, inequations)
        for j in range(nc):
            if images[j] is None and images[nc + j] is not None:
                images[j] = out.bar(images[nc + j])
            elif images[nc + j] is None and images[j] is not None:
                images[nc + j] = out.bar(images[j])
        return BigradedStructure(nc, [x if x is not None else algebra.zero() for x in images], context, flags, None, inequations)

################################################################ operations

def transport_structure_equations(S, coframe):
    """d(φʲ) and d(φ̄ʲ) written in the φ/φ̄ blade basis."""
    if S.n != coframe.J.n:
        raise liecohom.exterior.DimensionError("structure on {0} generators, coframe on {1}".format(S.n, coframe.J.n))
    d = S.coboundary()
    images = []
    for j in range(S.n):
        real = coframe.to_real(coframe.complex_algebra.gen(j))
        images.append(coframe.to_complex(d(real)))
    return BigradedStructure(S.n // 2, images, S.context, (), coframe)

def untransport(B, coframe=None):
    """Real structure constants whose transport is B."""
    if coframe is None:
        coframe = B.coframe
    if coframe is None:
        raise liecohom.util.InputError("this structure was given directly in the (phi, barphi) basis; no real coframe to return to")
    images = []
    for k in range(coframe.real_algebra.n):
        x = coframe.to_complex(coframe.real_algebra.gen(k))
        images.append(coframe.to_real(B.d(x)))
    for m, form in enumerate(images):
        if any(not x.is_real() for x in form.terms.values()):
            raise liecohom.cohomology.ComplexError("d(e{0}) = {1} is not real".format(m, str(form)), m)
    return liecohom.lie.StructureConstants.from_images(images, B.context)

def integrability_check(B):
    """True iff no d(φʲ) has a (0,2)-component (equivalently no d(φ̄ʲ) has a (2,0)-component)."""
    for j in range(B.nc):
        part = B.component(B.d.image(j), 0, 2)
        if part:
            return liecohom.util.Verdict(False, (j, part), "d({0}) has (0,2)-part {1}".format(B.algebra.names[j], str(part)))
        part = B.component(B.d.image(B.nc + j), 2, 0)
        if part:
            return liecohom.util.Verdict(False, (B.nc + j, part), "d({0}) has (2,0)-part {1}".format(B.algebra.names[B.nc + j], str(part)))
    return liecohom.util.Verdict(True)

def split_operators(B):
    return B.split_operators()
