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

import json
import logging

import liecohom.exterior
import liecohom.fields
import liecohom.util

logger = logging.getLogger(__name__)

__all__ = ["StructureConstants", "Coboundary", "TwistedCoboundary", "JacobiError", "TwistedCoboundaryError", "parse_salamon", "parse_json", "coboundary", "apply", "jacobi_check", "unimodularity_check", "twisted_coboundary"]

FIELDS = ("QQ", "QQ_i", "params")

class JacobiError(liecohom.util.InputError):
    def __init__(self, message, witness=None):
        super(JacobiError, self).__init__(message)
        self.witness = witness

class TwistedCoboundaryError(liecohom.util.InputError):
    def __init__(self, message, witness=None):
        super(TwistedCoboundaryError, self).__init__(message)
        self.witness = witness

################################################################ structure constants

class StructureConstants(liecohom.util.JSONable):
    """A Lie algebra in the dual picture: d e^m = Σ_{j<k} c^m_{jk} e^j ∧ e^k."""

    def __init__(self, n, coeffs=None, context=None):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0 or n > liecohom.exterior.MAX_GENERATORS:
            raise liecohom.exterior.DimensionError("dimension must be an integer in 0..{0}, not {1}".format(liecohom.exterior.MAX_GENERATORS, repr(n)))
        if context is None:
            context = liecohom.fields.EMPTY
        elif not isinstance(context, liecohom.fields.ParameterContext):
            context = liecohom.fields.ParameterContext(context)
        self._n = n
        self._coeffs = {}
        for key, value in (coeffs or {}).items():
            try:
                m, j, k = key
            except (TypeError, ValueError):
                raise liecohom.util.InputError("structure constant keys are (m, j, k), not {0}".format(repr(key)))
            for x in (m, j, k):
                if not isinstance(x, int) or not 0 <= x < n:
                    raise liecohom.exterior.DimensionError("index {0} out of range 0..{1} in key {2}".format(repr(x), n - 1, repr(key)))
            if not j < k:
                raise liecohom.util.InputError("structure constant keys need j < k, not {0}".format(repr(key)))
            value = liecohom.fields.Scalar.coerce(value, context)
            if not value.is_zero():
                self._coeffs[m, j, k] = value
                context = context.union(value.context)
        self._context = context
        self._algebra = liecohom.exterior.ExteriorAlgebra(n)
        self._images = None

    @property
    def n(self):
        return self._n

    @property
    def coeffs(self):
        return dict(self._coeffs)

    @property
    def context(self):
        return self._context

    @property
    def algebra(self):
        return self._algebra

    def has_parameters(self):
        return any(not x.is_constant() for x in self._coeffs.values())

    def has_imaginary(self):
        return any(not x.is_real() for x in self._coeffs.values())

    def images(self):
        if self._images is None:
            terms = [{} for m in range(self._n)]
            for (m, j, k), x in self._coeffs.items():
                terms[m][liecohom.exterior.blade(j, k)] = x
            self._images = [liecohom.exterior.ExteriorElement(self._algebra, t) for t in terms]
        return list(self._images)

    def image(self, m):
        return self.images()[m]

    def coboundary(self):
        return Coboundary(self._algebra, self.images())

    def specialize(self, assignment):
        return StructureConstants(self._n, dict((key, x.substitute(assignment)) for key, x in self._coeffs.items()))

    def __eq__(self, other):
        if not isinstance(other, StructureConstants) or other._n != self._n or set(other._coeffs) != set(self._coeffs):
            return False
        return all(self._coeffs[key] == other._coeffs[key] for key in self._coeffs)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((StructureConstants, self._n, frozenset(self._coeffs)))

    def __repr__(self):
        return "StructureConstants({0}, {1} nonzero)".format(self._n, len(self._coeffs))

    def __str__(self):
        try:
            return self.render_salamon()
        except liecohom.util.InputError:
            return "[" + ", ".join(str(x) for x in self.images()) + "]"

    ################################################################ constructors

    @staticmethod
    def from_images(images, context=None):
        images = list(images)
        n = len(images)
        coeffs = {}
        for m, form in enumerate(images):
            if form.n != n:
                raise liecohom.exterior.DimensionError("image of e{0} lives on {1} generators, not {2}".format(m, form.n, n))
            if not form.is_homogeneous(2):
                raise liecohom.util.InputError("d e{0} must be a 2-form, not {1}".format(m, str(form)))
            for mask, x in form.terms.items():
                j, k = liecohom.exterior.blade_indices(mask)
                coeffs[m, j, k] = x
        return StructureConstants(n, coeffs, context)

    @staticmethod
    def from_sage(n, dictionary, context=None):
        """Inverts {(J, K): Σ c_M e_M}, meaning c_M contributes to d e^M on e^J ∧ e^K."""
        coeffs = {}
        for key, value in dictionary.items():
            try:
                J, K = key
            except (TypeError, ValueError):
                raise liecohom.util.InputError("dictionary keys are pairs (J, K), not {0}".format(repr(key)))
            if J == K:
                raise liecohom.util.InputError("dictionary key {0} repeats a generator".format(repr(key)))
            sign = 1 if J < K else -1
            j, k = min(J, K), max(J, K)
            if isinstance(value, liecohom.exterior.ExteriorElement):
                if not value.is_homogeneous(1):
                    raise liecohom.util.InputError("dictionary values must be 1-forms, not {0}".format(str(value)))
                value = dict((liecohom.exterior.blade_indices(mask)[0], x) for mask, x in value.terms.items())
            for M, c in dict(value).items():
                if not isinstance(M, int) or not 0 <= M < n:
                    raise liecohom.exterior.DimensionError("generator {0} out of range for dimension {1}".format(repr(M), n))
                for x in (j, k):
                    if not 0 <= x < n:
                        raise liecohom.exterior.DimensionError("generator {0} out of range for dimension {1}".format(x, n))
                c = liecohom.fields.Scalar.coerce(c, context)
                if sign < 0:
                    c = -c
                coeffs[M, j, k] = coeffs.get((M, j, k), liecohom.fields.Scalar.ZERO) + c
        return StructureConstants(n, coeffs, context)

    ################################################################ formats

    def render_salamon(self):
        if self._n > 9:
            raise liecohom.util.InputError("Salamon notation needs dimension at most 9, not {0}".format(self._n))
        entries = []
        for m in range(self._n):
            terms = sorted((j, k, x) for (mm, j, k), x in self._coeffs.items() if mm == m)
            if len(terms) == 0:
                entries.append("0")
                continue
            out = ""
            for j, k, x in terms:
                if not x.is_constant() or not x.is_real() or x.as_fraction().denominator != 1:
                    raise liecohom.util.InputError("Salamon notation needs integer coefficients, not {0}".format(str(x)))
                c = x.as_fraction().numerator
                sign = "-" if c < 0 else ("+" if out else "")
                c = abs(c)
                out += "{0}{1}{2}{3}".format(sign, "" if c == 1 else "{0}*".format(c), j + 1, k + 1)
            entries.append(out)
        return "(" + ",".join(entries) + ")"

    def tojson(self):
        if self.has_parameters():
            field = "params"
        elif self.has_imaginary():
            field = "QQ_i"
        else:
            field = "QQ"
        d = []
        for m in range(self._n):
            terms = sorted((j, k, x) for (mm, j, k), x in self._coeffs.items() if mm == m)
            if len(terms) > 0:
                d.append(["e{0}".format(m), [[str(x), j, k] for j, k, x in terms]])
        out = {"dim": self._n, "field": field, "d": d}
        if len(self._context) > 0:
            out["params"] = list(self._context.names)
        return out

    @staticmethod
    def fromjson(doc):
        return parse_json(doc)

################################################################ parsers

def parse_salamon(text, n=None):
    """Reads (0,0,0,0,0,12) style notation; indices are 1-based digits, an optional integer prefix "2*15" scales a term."""
    if not isinstance(text, str):
        raise TypeError("Salamon notation is a string, not {0}".format(repr(text)))
    pos = [0]

    def skip():
        while pos[0] < len(text) and text[pos[0]].isspace():
            pos[0] += 1

    def peek():
        skip()
        return text[pos[0]] if pos[0] < len(text) else ""

    def expect(c):
        if peek() != c:
            raise liecohom.util.ParseError("expected {0}".format(repr(c)), text, pos[0])
        pos[0] += 1

    entries = []
    expect("(")
    while True:
        terms = {}
        start = pos[0]
        skip()
        if peek() == "0" and (pos[0] + 1 >= len(text) or not text[pos[0] + 1].isdigit()):
            pos[0] += 1
        else:
            first = True
            while True:
                sign = 1
                c = peek()
                if c in ("+", "-"):
                    if first and c == "+":
                        raise liecohom.util.ParseError("entries cannot start with '+'", text, pos[0])
                    sign = -1 if c == "-" else 1
                    pos[0] += 1
                elif not first:
                    break
                skip()
                termstart = pos[0]
                digits = ""
                while pos[0] < len(text) and text[pos[0]].isdigit():
                    digits += text[pos[0]]
                    pos[0] += 1
                coefficient = 1
                if peek() == "*":
                    if digits == "":
                        raise liecohom.util.ParseError("missing coefficient before '*'", text, pos[0])
                    coefficient = int(digits)
                    pos[0] += 1
                    skip()
                    termstart = pos[0]
                    digits = ""
                    while pos[0] < len(text) and text[pos[0]].isdigit():
                        digits += text[pos[0]]
                        pos[0] += 1
                if len(digits) != 2:
                    raise liecohom.util.ParseError("malformed term, expected two index digits", text, termstart)
                j, k = int(digits[0]), int(digits[1])
                for offset, x in ((0, j), (1, k)):
                    if n is not None and not 1 <= x <= n or x == 0:
                        raise liecohom.util.ParseError("index {0} out of range 1..{1}".format(x, n if n is not None else 9), text, termstart + offset)
                if j == k:
                    raise liecohom.util.ParseError("malformed term {0}: repeated index".format(digits), text, termstart)
                pair = (min(j, k) - 1, max(j, k) - 1)
                if pair in terms:
                    raise liecohom.util.ParseError("duplicate pair {0}".format(digits), text, termstart)
                if j > k:
                    sign = -sign
                terms[pair] = sign * coefficient
                first = False
        if pos[0] == start:
            raise liecohom.util.ParseError("empty entry", text, pos[0])
        entries.append(terms)
        c = peek()
        if c == ",":
            pos[0] += 1
        elif c == ")":
            pos[0] += 1
            break
        else:
            raise liecohom.util.ParseError("expected ',' or ')'", text, pos[0])
    if peek() != "":
        raise liecohom.util.ParseError("trailing text", text, pos[0])
    if n is None:
        n = len(entries)
        for terms in entries:
            for j, k in terms:
                if k >= n:
                    raise liecohom.util.ParseError("index {0} out of range 1..{1}".format(k + 1, n), text, 0)
    if len(entries) != n:
        raise liecohom.util.ParseError("expected {0} entries, found {1}".format(n, len(entries)), text, len(text) - 1)
    coeffs = {}
    for m, terms in enumerate(entries):
        for (j, k), c in terms.items():
            coeffs[m, j, k] = c
    return StructureConstants(n, coeffs)

def _generator_index(value, n):
    if isinstance(value, str) and value.startswith("e") and value[1:].isdigit():
        value = value[1:]
    m = liecohom.util.jsonindex(value, "generator")
    if not 0 <= m < n:
        raise liecohom.exterior.DimensionError("generator {0} out of range for dimension {1}".format(repr(value), n))
    return m

def parse_json(doc):
    """Reads {"dim": 6, "field": "QQ", "params": [...], "d": [["e5", [["1", 0, 1]]]]}."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except ValueError as err:
            raise liecohom.util.InputError("not valid JSON: {0}".format(err))
    if not isinstance(doc, dict):
        raise liecohom.util.InputError("a structure document is a JSON object, not {0}".format(type(doc).__name__))
    unknown = set(doc) - set(["dim", "field", "params", "d", "name"])
    if len(unknown) > 0:
        raise liecohom.util.InputError("unknown keys {0} in structure document".format(", ".join(sorted(unknown))))
    if "dim" not in doc or "d" not in doc:
        raise liecohom.util.InputError("structure documents need 'dim' and 'd'")
    n = liecohom.util.jsonindex(doc["dim"], "dim")
    if n < 0 or n > liecohom.exterior.MAX_GENERATORS:
        raise liecohom.exterior.DimensionError("dimension must be in 0..{0}, not {1}".format(liecohom.exterior.MAX_GENERATORS, n))
    params = doc.get("params", [])
    if not isinstance(params, list):
        raise liecohom.util.InputError("'params' must be a list of names, not {0}".format(repr(params)))
    context = liecohom.fields.ParameterContext(params)
    field = doc.get("field", "params" if len(params) > 0 else "QQ")
    if field not in FIELDS:
        raise liecohom.util.InputError("'field' must be one of {0}, not {1}".format(", ".join(FIELDS), repr(field)))
    if field != "params" and len(params) > 0:
        raise liecohom.util.InputError("parameters are only allowed with field 'params'")
    if not isinstance(doc["d"], list):
        raise liecohom.util.InputError("'d' must be a list of [generator, terms] pairs")
    coeffs = {}
    seen = set()
    for entry in doc["d"]:
        if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[1], list):
            raise liecohom.util.InputError("entries of 'd' are [generator, [[coeff, j, k], ...]], not {0}".format(repr(entry)))
        m = _generator_index(entry[0], n)
        if m in seen:
            raise liecohom.util.InputError("generator e{0} appears twice in 'd'".format(m))
        seen.add(m)
        for term in entry[1]:
            if not isinstance(term, list) or len(term) != 3:
                raise liecohom.util.InputError("terms are [coeff, j, k], not {0}".format(repr(term)))
            c = liecohom.fields.Scalar.coerce(str(term[0]), context)
            j, k = _generator_index(term[1], n), _generator_index(term[2], n)
            if j == k:
                raise liecohom.util.InputError("term {0} repeats a generator".format(repr(term)))
            if field == "QQ" and not c.is_real():
                raise liecohom.util.InputError("coefficient {0} is not rational; declare field 'QQ_i'".format(str(c)))
            if j > k:
                j, k, c = k, j, -c
            coeffs[m, j, k] = coeffs.get((m, j, k), liecohom.fields.Scalar.ZERO) + c
    return StructureConstants(n, coeffs, context)

################################################################ coboundaries

class Coboundary(object):
    """Antiderivation of degree +1 determined by its values on generators."""

    def __init__(self, algebra, images, name="d"):
        images = list(images)
        if len(images) != algebra.n:
            raise liecohom.exterior.DimensionError("need {0} generator images, not {1}".format(algebra.n, len(images)))
        for j, form in enumerate(images):
            if not isinstance(form, liecohom.exterior.ExteriorElement):
                raise TypeError("generator images are ExteriorElements, not {0}".format(repr(form)))
            if form.n != algebra.n:
                raise liecohom.exterior.DimensionError("image of generator {0} lives on {1} generators, not {2}".format(j, form.n, algebra.n))
            if not form.is_homogeneous(2):
                raise liecohom.util.InputError("image of generator {0} must be a 2-form, not {1}".format(j, str(form)))
        self._algebra = algebra
        self._images = [form.relabel(algebra) for form in images]
        self._name = name
        self._cache = {0: algebra.zero()}
        for j, form in enumerate(self._images):
            self._cache[1 << j] = form

    @property
    def algebra(self):
        return self._algebra

    @property
    def name(self):
        return self._name

    def images(self):
        return list(self._images)

    def image(self, j):
        return self._images[j]

    def __repr__(self):
        return "<Coboundary {0} on {1}>".format(self._name, repr(self._algebra))

    def blade_image(self, mask):
        if mask not in self._cache:
            head = liecohom.exterior.blade_indices(mask)[0]
            rest = mask & ~(1 << head)
            e = self._algebra.gen(head)
            tail = liecohom.exterior.ExteriorElement._new(self._algebra, {rest: liecohom.fields.Scalar.ONE})
            self._cache[mask] = self._images[head].wedge(tail) - e.wedge(self.blade_image(rest))
        return self._cache[mask]

    def __call__(self, a):
        if not isinstance(a, liecohom.exterior.ExteriorElement):
            raise TypeError("{0} applies to ExteriorElements, not {1}".format(self._name, repr(a)))
        if a.n != self._algebra.n:
            raise liecohom.exterior.DimensionError("{0} on {1} generators applied to a form on {2}".format(self._name, self._algebra.n, a.n))
        out = self._algebra.zero()
        for mask, x in a.terms.items():
            image = self.blade_image(mask)
            if image:
                out = out + image.scale(x)
        return out

    apply = __call__

    def __add__(self, other):
        if not isinstance(other, Coboundary):
            return NotImplemented
        return Coboundary(self._algebra, [a + b for a, b in zip(self._images, other._images)], "{0} + {1}".format(self._name, other._name))

    def squares_to_zero(self):
        for j, form in enumerate(self._images):
            dd = self(form)
            if dd:
                return liecohom.util.Verdict(False, (j, dd), "{0}({0}({1})) = {2}".format(self._name, self._algebra.names[j], str(dd)))
        return liecohom.util.Verdict(True)

    def anticommutes_with(self, other):
        """Checks self∘other + other∘self = 0; a derivation, so generators suffice."""
        for j in range(self._algebra.n):
            g = self._algebra.gen(j)
            total = self(other(g)) + other(self(g))
            if total:
                return liecohom.util.Verdict(False, (j, total), "({0}{1} + {1}{0})({2}) = {3}".format(self._name, other._name, self._algebra.names[j], str(total)))
        return liecohom.util.Verdict(True)

class TwistedCoboundary(object):
    """a ↦ d(a) − θ ∧ a for a closed 1-form θ."""

    def __init__(self, base, theta):
        if not isinstance(base, Coboundary):
            raise TypeError("base must be a Coboundary, not {0}".format(repr(base)))
        if not isinstance(theta, liecohom.exterior.ExteriorElement):
            raise TypeError("theta must be an ExteriorElement, not {0}".format(repr(theta)))
        if theta.n != base.algebra.n:
            raise liecohom.exterior.DimensionError("theta lives on {0} generators, the algebra on {1}".format(theta.n, base.algebra.n))
        if not theta.is_homogeneous(1):
            raise TwistedCoboundaryError("theta must be a 1-form, not {0}".format(str(theta)))
        dtheta = base(theta)
        if dtheta:
            raise TwistedCoboundaryError("theta is not closed: d({0}) = {1}".format(str(theta), str(dtheta)), dtheta)
        self._base = base
        self._theta = theta.relabel(base.algebra)

    @property
    def base(self):
        return self._base

    @property
    def theta(self):
        return self._theta

    @property
    def algebra(self):
        return self._base.algebra

    def __repr__(self):
        return "<TwistedCoboundary theta={0}>".format(str(self._theta))

    def __call__(self, a):
        return self._base(a) - self._theta.wedge(a)

    apply = __call__

################################################################ module-level operations

def coboundary(S):
    return S.coboundary()

def apply(d, a):
    return d(a)

def twisted_coboundary(d, theta):
    return TwistedCoboundary(d, theta)

def jacobi_check(S):
    d = S.coboundary()
    for m in range(S.n):
        dd = d(S.image(m))
        if dd:
            logger.debug("Jacobi fails at generator %d", m)
            return liecohom.util.Verdict(False, (m, dd), "d(d(e{0})) = {1}".format(m, str(dd)))
    return liecohom.util.Verdict(True)

def unimodularity_check(S):
    verdict = jacobi_check(S)
    if not verdict:
        raise JacobiError("not a Lie algebra: {0}".format(verdict.message), verdict.witness)
    d = S.coboundary()
    for mask in S.algebra.blades(S.n - 1):
        image = d.blade_image(mask)
        if image:
            return liecohom.util.Verdict(False, (mask, image), "d({0}) = {1}".format(S.algebra.blade_str(mask), str(image)))
    return liecohom.util.Verdict(True)
