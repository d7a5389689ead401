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

import fractions
import math
import numbers
import re

import sympy
from sympy.polys.domains import QQ
from sympy.polys.fields import FracField
from sympy.polys.orderings import grevlex

import liecohom.util

__all__ = ["ParameterContext", "Parameter", "Scalar", "EMPTY", "ScalarDivisionError", "SubstitutionError", "parse_expression", "render_polynomial"]

class ScalarDivisionError(liecohom.util.ComputationError, ZeroDivisionError):
    pass

class SubstitutionError(liecohom.util.ComputationError, ZeroDivisionError):
    def __init__(self, message, parameters=()):
        super(SubstitutionError, self).__init__(message)
        self.parameters = tuple(parameters)

################################################################ parameters

_identifier = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_reserved = ("i", "I")

class Parameter(object):
    def __init__(self, name, index):
        self.name = name
        self.index = index

    def __repr__(self):
        return "Parameter({0}, {1})".format(repr(self.name), self.index)

    def __str__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Parameter) and self.name == other.name and self.index == other.index

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((Parameter, self.name, self.index))

class ParameterContext(object):
    """Ordered, immutable set of real parameter names; the variables of ℚ(i)(params)."""

    def __init__(self, names=()):
        if isinstance(names, ParameterContext):
            names = names.names
        elif isinstance(names, str):
            names = [x.strip() for x in names.split(",") if x.strip() != ""]
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or _identifier.match(name) is None:
                raise liecohom.util.InputError("parameter names must be identifiers, not {0}".format(repr(name)))
            if name in _reserved:
                raise liecohom.util.InputError("{0} is reserved for the imaginary unit".format(repr(name)))
        if len(set(names)) != len(names):
            raise liecohom.util.InputError("duplicate parameter names in {0}".format(repr(names)))
        self._names = names
        self._index = dict((n, i) for i, n in enumerate(names))
        self._field = None

    @property
    def names(self):
        return self._names

    def __len__(self):
        return len(self._names)

    def __iter__(self):
        return iter(self._names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise liecohom.util.InputError("parameter {0} is not declared in {1}".format(repr(name), repr(self)))

    def parameter(self, name):
        return Parameter(name, self.index(name))

    @property
    def parameters(self):
        return [Parameter(n, i) for i, n in enumerate(self._names)]

    def __repr__(self):
        return "ParameterContext({0})".format(repr(list(self._names)))

    def __eq__(self, other):
        return self is other or (isinstance(other, ParameterContext) and self._names == other._names)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((ParameterContext, self._names))

    def union(self, other):
        if not isinstance(other, ParameterContext):
            other = ParameterContext(other)
        extra = [n for n in other._names if n not in self._index]
        if len(extra) == 0:
            return self
        if len(self._names) == 0:
            return other
        return ParameterContext(self._names + tuple(extra))

    def extend(self, names):
        return self.union(ParameterContext([n for n in names if n not in self._index]))

    def restrict(self, names):
        keep = set(names)
        return ParameterContext([n for n in self._names if n in keep])

    @property
    def field(self):
        if len(self._names) == 0:
            raise TypeError("the empty context has no rational function field; its scalars are plain QQ elements")
        if self._field is None:
            self._field = FracField(tuple(sympy.Symbol(n) for n in self._names), QQ, grevlex)
        return self._field

    @property
    def ring(self):
        return self.field.ring

    @property
    def zero(self):
        if len(self._names) == 0:
            return QQ.zero
        return self.field.zero

    @property
    def one(self):
        if len(self._names) == 0:
            return QQ.one
        return self.field.one

EMPTY = ParameterContext(())

################################################################ conversions between contexts

def _toqq(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars: {0}".format(repr(x)))
    if isinstance(x, QQ.dtype):
        return x
    if isinstance(x, numbers.Integral):
        return QQ(int(x))
    if isinstance(x, fractions.Fraction):
        return QQ(x.numerator, x.denominator)
    if isinstance(x, numbers.Rational):
        return QQ(int(x.numerator), int(x.denominator))
    raise TypeError("cannot interpret {0} as an exact rational".format(repr(x)))

def _ground(poly):
    return poly.get(poly.ring.zero_monom, QQ.zero)

def _remap(poly, source, target, ring=None):
    if ring is None:
        ring = target.ring
    positions = [target._index.get(n) for n in source.names]
    out = {}
    for monom, coeff in poly.items():
        m = [0] * len(target)
        for k, e in enumerate(monom):
            if e:
                if positions[k] is None:
                    raise AssertionError("parameter {0} has no place in {1}".format(source.names[k], repr(target)))
                m[positions[k]] = e
        out[tuple(m)] = coeff
    return ring.from_dict(out)

def natural_key(name):
    """Sort key putting r2 before r10 and a03 before a10."""
    return tuple((0, int(part)) if part.isdigit() else (1, part) for part in re.split(r"(\d+)", name) if part != "")

def _embed(value, source, target):
    if source == target:
        return value
    if len(target) == 0:
        if not (value.numer.is_ground and value.denom.is_ground):
            raise AssertionError("nonconstant value cannot move to the empty context")
        return _ground(value.numer) / _ground(value.denom)
    field = target.field
    if len(source) == 0:
        return field.new(field.ring.ground_new(value))
    return field.new(_remap(value.numer, source, target), _remap(value.denom, source, target))

def _is_ground(value):
    return isinstance(value, QQ.dtype) or (value.numer.is_ground and value.denom.is_ground)

def _constant(value):
    if isinstance(value, QQ.dtype):
        return value
    return _ground(value.numer) / _ground(value.denom)

################################################################ scalars

class Scalar(object):
    """Exact element of ℚ(i)(params): a real and an imaginary part, parameters real."""

    __slots__ = ("_context", "_re", "_im")

    def __init__(self, re=0, im=0, context=None):
        if context is None:
            context = EMPTY
        self._context = context
        self._re = self._part(re)
        self._im = self._part(im)

    def _part(self, x):
        if len(self._context) > 0 and isinstance(x, self._context.field.dtype):
            return x
        q = _toqq(x)
        if len(self._context) == 0:
            return q
        return _embed(q, EMPTY, self._context)

    @classmethod
    def _new(cls, context, re, im):
        out = object.__new__(cls)
        out._context = context
        out._re = re
        out._im = im
        return out

    @staticmethod
    def rational(numerator, denominator=1):
        if denominator == 0:
            raise ScalarDivisionError("rational with zero denominator")
        return Scalar._new(EMPTY, QQ(int(numerator), int(denominator)), QQ.zero)

    @staticmethod
    def gaussian(re, im):
        return Scalar._new(EMPTY, _toqq(re), _toqq(im))

    @staticmethod
    def parameter(context, name):
        if not isinstance(context, ParameterContext):
            context = ParameterContext(context)
        k = context.index(name)
        field = context.field
        return Scalar._new(context, field.gens[k], field.zero)

    @staticmethod
    def from_polynomial(poly, context, im=None):
        field = context.field
        re = field.new(_remap(poly, ParameterContext([str(s) for s in poly.ring.symbols]), context))
        if im is None:
            return Scalar._new(context, re, field.zero)
        return Scalar._new(context, re, field.new(_remap(im, ParameterContext([str(s) for s in im.ring.symbols]), context)))

    @staticmethod
    def coerce(x, context=None):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, Parameter):
            raise TypeError("a bare Parameter needs its context; use Scalar.parameter(context, name)")
        if isinstance(x, str):
            return parse_expression(x, context if context is not None else EMPTY)
        return Scalar._new(EMPTY, _toqq(x), QQ.zero)

    ################################################################ structure

    @property
    def context(self):
        return self._context

    @property
    def kind(self):
        if len(self._context) == 0 or (_is_ground(self._re) and _is_ground(self._im)):
            return "rational" if not self._im else "gaussian"
        elif self._re.denom.is_ground and self._im.denom.is_ground:
            return "polynomial"
        else:
            return "rational_function"

    def is_zero(self):
        return not self._re and not self._im

    def __bool__(self):
        return not self.is_zero()

    __nonzero__ = __bool__

    def is_real(self):
        return not self._im

    def is_constant(self):
        return len(self._context) == 0 or (_is_ground(self._re) and _is_ground(self._im))

    def is_polynomial(self):
        return self.kind != "rational_function"

    def parameters(self):
        if len(self._context) == 0:
            return ()
        used = set()
        for part in (self._re, self._im):
            for poly in (part.numer, part.denom):
                for monom in poly.monoms():
                    used.update(k for k, e in enumerate(monom) if e)
        return tuple(n for k, n in enumerate(self._context.names) if k in used)

    def to(self, context):
        """Re-express over a context containing every parameter this scalar uses."""
        if context == self._context:
            return self
        missing = [n for n in self.parameters() if n not in context]
        if len(missing) > 0:
            raise liecohom.util.InputError("parameters {0} are not declared in {1}".format(", ".join(missing), repr(context)))
        return Scalar._new(context, _embed(self._re, self._context, context), _embed(self._im, self._context, context))

    def compact(self):
        used = self.parameters()
        if len(used) == len(self._context):
            return self
        return self.to(ParameterContext(used))

    def canonical(self):
        """Same value over its own parameters in natural order, so rendering does not depend on history."""
        used = sorted(self.parameters(), key=natural_key)
        if tuple(used) == self._context.names:
            return self
        if len(used) == 0:
            return self.to(EMPTY)
        return self.to(ParameterContext(used))

    def to_polynomial(self, ring):
        """The real polynomial this scalar is, as an element of a sympy PolyRing over QQ."""
        if not self.is_real() or not self.is_polynomial():
            raise liecohom.util.InputError("not a real polynomial: {0}".format(str(self)))
        if len(self._context) == 0:
            return ring.ground_new(self._re)
        target = ParameterContext([str(x) for x in ring.symbols])
        missing = [n for n in self.parameters() if n not in target]
        if len(missing) > 0:
            raise liecohom.util.InputError("variables {0} are not among {1}".format(", ".join(missing), ", ".join(target.names)))
        numer = _remap(self._re.numer, self._context, target, ring)
        return numer.quo_ground(_ground(self._re.denom))

    def real_part(self):
        return Scalar._new(self._context, self._re, self._context.zero)

    def imag_part(self):
        return Scalar._new(self._context, self._im, self._context.zero)

    def as_fraction(self):
        """The exact value of a constant real scalar as fractions.Fraction."""
        if not self.is_constant() or not self.is_real():
            raise TypeError("not a rational constant: {0}".format(str(self)))
        q = _constant(self._re)
        return fractions.Fraction(int(QQ.numer(q)), int(QQ.denom(q)))

    def parts(self):
        """(re, im) numerator/denominator polynomial pairs over the context ring."""
        if len(self._context) == 0:
            raise TypeError("constant scalars have no polynomial parts")
        return (self._re.numer, self._re.denom), (self._im.numer, self._im.denom)

    def numerators(self):
        """Nonzero numerators of the real and imaginary parts; their common zeros are the zeros of the scalar."""
        if len(self._context) == 0:
            return [p for p in (self._re, self._im) if p]
        return [p.numer for p in (self._re, self._im) if p]

    def denominators(self):
        if len(self._context) == 0:
            return []
        return [p.denom for p in (self._re, self._im) if p and not p.denom.is_ground]

    ################################################################ arithmetic

    def _unify(self, other):
        if self._context == other._context:
            return self._context, self, other
        context = self._context.union(other._context)
        return context, self.to(context), other.to(context)

    def __add__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        context, a, b = self._unify(other)
        return Scalar._new(context, a._re + b._re, a._im + b._im)

    def __radd__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        return other.__add__(self)

    def __sub__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        context, a, b = self._unify(other)
        return Scalar._new(context, a._re - b._re, a._im - b._im)

    def __rsub__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        return Scalar._new(self._context, -self._re, -self._im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        context, a, b = self._unify(other)
        if not a._im and not b._im:
            return Scalar._new(context, a._re * b._re, context.zero)
        return Scalar._new(context, a._re * b._re - a._im * b._im, a._re * b._im + a._im * b._re)

    def __rmul__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        return other.__mul__(self)

    def __truediv__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ScalarDivisionError("division by zero: {0} / 0".format(str(self)))
        context, a, b = self._unify(other)
        if not b._im:
            return Scalar._new(context, a._re / b._re, a._im / b._re)
        norm = b._re * b._re + b._im * b._im
        return Scalar._new(context, (a._re * b._re + a._im * b._im) / norm, (a._im * b._re - a._re * b._im) / norm)

    def __rtruediv__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __pow__(self, exponent):
        if isinstance(exponent, Scalar):
            if not exponent.is_constant() or not exponent.is_real() or exponent.as_fraction().denominator != 1:
                raise liecohom.util.InputError("exponents must be integers, not {0}".format(str(exponent)))
            exponent = exponent.as_fraction().numerator
        if not isinstance(exponent, numbers.Integral) or isinstance(exponent, bool):
            return NotImplemented
        exponent = int(exponent)
        base = self
        if exponent < 0:
            base = Scalar._new(self._context, self._context.one, self._context.zero) / self
            exponent = -exponent
        out = Scalar._new(self._context, self._context.one, self._context.zero)
        while exponent:
            if exponent & 1:
                out = out * base
            exponent >>= 1
            if exponent:
                base = base * base
        return out

    def conjugate(self):
        if not self._im:
            return self
        return Scalar._new(self._context, self._re, -self._im)

    def norm(self):
        """z times its conjugate; real."""
        return Scalar._new(self._context, self._re * self._re + self._im * self._im, self._context.zero)

    def diff(self, name):
        if name not in self._context:
            return Scalar._new(self._context, self._context.zero, self._context.zero)
        field = self._context.field
        x = field.ring.gens[self._context.index(name)]
        def d(part):
            if not part:
                return part
            n, m = part.numer, part.denom
            return field.new(n.diff(x) * m - n * m.diff(x), m * m)
        return Scalar._new(self._context, d(self._re), d(self._im))

    def __eq__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        if self._context == other._context:
            return not (self._re - other._re) and not (self._im - other._im)
        context, a, b = self._unify(other)
        return not (a._re - b._re) and not (a._im - b._im)

    def __ne__(self, other):
        out = self.__eq__(other)
        if out is NotImplemented:
            return out
        return not out

    def __hash__(self):
        if self.is_constant():
            return hash((_constant(self._re), _constant(self._im)))
        return hash(frozenset(self.parameters()))

    ################################################################ substitution

    def substitute(self, assignment):
        """Evaluate parameters; values may be Scalars (possibly parametric) or numbers."""
        assignment = _assignment(assignment)
        used = self.parameters()
        relevant = dict((n, v) for n, v in assignment.items() if n in used)
        if len(relevant) == 0:
            return self.compact()
        for name, value in relevant.items():
            cyclic = [x for x in value.parameters() if x in assignment]
            if len(cyclic) > 0:
                raise liecohom.util.InputError("substitution for {0} refers to substituted parameter(s) {1}".format(name, ", ".join(cyclic)))
        rest = ParameterContext([n for n in self._context.names if n not in relevant])
        powers = {}
        def value(k, e):
            if (k, e) not in powers:
                name = self._context.names[k]
                if name in relevant:
                    powers[k, e] = relevant[name] ** e
                else:
                    powers[k, e] = Scalar.parameter(rest, name) ** e
            return powers[k, e]
        def evaluate(poly):
            total = Scalar._new(EMPTY, QQ.zero, QQ.zero)
            for monom, coeff in poly.terms():
                term = Scalar._new(EMPTY, coeff, QQ.zero)
                for k, e in enumerate(monom):
                    if e:
                        term = term * value(k, e)
                total = total + term
            return total
        def part(frac):
            if not frac:
                return Scalar._new(EMPTY, QQ.zero, QQ.zero)
            denominator = evaluate(frac.denom)
            if denominator.is_zero():
                names = [n for k, n in enumerate(self._context.names) if n in relevant and frac.denom.degree(k) > 0]
                raise SubstitutionError("substituting {0} makes the denominator {1} vanish".format(", ".join("{0} = {1}".format(n, str(relevant[n])) for n in names), render_polynomial(frac.denom, self._context.names)), names)
            return evaluate(frac.numer) / denominator
        out = part(self._re) + part(self._im) * Scalar.I
        return out.compact()

    ################################################################ rendering

    def __repr__(self):
        return "Scalar({0})".format(repr(str(self)))

    def __str__(self):
        if len(self._context) == 0 or self.is_constant():
            a, b = _constant(self._re), _constant(self._im)
            if a and b:
                return _gaussian_str(a, b)
            return _terms_str([((), a, b)], ())
        canonical = self.canonical()
        if canonical is not self:
            return str(canonical)
        names = self._context.names
        ring = self._context.ring
        (n1, d1), (n2, d2) = self.parts()
        if not self._im:
            denominator, numerators = d1, [(n1, 0)]
        elif not self._re:
            denominator, numerators = d2, [(n2, 1)]
        else:
            g = d1.gcd(d2)
            denominator = d1 * d2.exquo(g)
            numerators = [(n1 * denominator.exquo(d1), 0), (n2 * denominator.exquo(d2), 1)]
        coeffs = list(denominator.values())
        for poly, _ in numerators:
            coeffs.extend(poly.values())
        scale = 1
        for c in coeffs:
            d = int(QQ.denom(c))
            scale = scale * d // math.gcd(scale, d)
        content = 0
        for c in coeffs:
            content = math.gcd(content, abs(int(QQ.numer(c * scale))))
        factor = QQ(scale, content)
        if denominator.LC < 0:
            factor = -factor
        denominator = denominator.mul_ground(factor)
        merged = {}
        for poly, slot in numerators:
            for monom, c in poly.items():
                pair = merged.setdefault(monom, [QQ.zero, QQ.zero])
                pair[slot] = c * factor
        if denominator.is_ground:
            c = _ground(denominator)
            for pair in merged.values():
                pair[0] = pair[0] / c
                pair[1] = pair[1] / c
            monoms = sorted(merged, key=ring.order, reverse=True)
            return _terms_str([(m, merged[m][0], merged[m][1]) for m in monoms], names)
        monoms = sorted(merged, key=ring.order, reverse=True)
        numerator = _terms_str([(m, merged[m][0], merged[m][1]) for m in monoms], names)
        if len(monoms) > 1 or (len(monoms) == 1 and merged[monoms[0]][0] and merged[monoms[0]][1]):
            numerator = "(" + numerator + ")"
        denominator_str = render_polynomial(denominator, names)
        if len(denominator) > 1 or denominator.LC != 1:
            denominator_str = "(" + denominator_str + ")"
        return numerator + "/" + denominator_str

    def tojson(self):
        return str(self)

def _operand(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        return None
    if isinstance(x, (numbers.Integral, fractions.Fraction, QQ.dtype)):
        return Scalar._new(EMPTY, _toqq(x), QQ.zero)
    return None

def _assignment(assignment):
    out = {}
    for name, value in dict(assignment).items():
        if isinstance(name, Parameter):
            name = name.name
        if isinstance(value, str):
            value = parse_expression(value, EMPTY)
        out[name] = Scalar.coerce(value)
    return out

Scalar.I = Scalar._new(EMPTY, QQ.zero, QQ.one)
Scalar.ZERO = Scalar._new(EMPTY, QQ.zero, QQ.zero)
Scalar.ONE = Scalar._new(EMPTY, QQ.one, QQ.zero)

################################################################ rendering helpers

def _qq_str(q):
    n, d = int(QQ.numer(q)), int(QQ.denom(q))
    if d == 1:
        return str(n)
    return "{0}/{1}".format(n, d)

def _gaussian_str(a, b):
    if b < 0:
        sign, b = " - ", -b
    else:
        sign = " + "
    imag = "i" if b == 1 else _qq_str(b) + "*i"
    if not a:
        return ("-" if sign == " - " else "") + imag
    return _qq_str(a) + sign + imag

def _monomial_str(monom, names):
    factors = []
    for name, e in zip(names, monom):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append("{0}^{1}".format(name, e))
    return "*".join(factors)

def _terms_str(terms, names):
    out = []
    for monom, a, b in terms:
        if not a and not b:
            continue
        mono = _monomial_str(monom, names)
        if not b:
            negative = a < 0
            magnitude = -a if negative else a
            coeff = "" if magnitude == 1 and mono else _qq_str(magnitude)
        elif not a:
            negative = b < 0
            magnitude = -b if negative else b
            coeff = "i" if magnitude == 1 else _qq_str(magnitude) + "*i"
        else:
            negative = False
            coeff = "(" + _gaussian_str(a, b) + ")"
        if coeff and mono:
            body = coeff + "*" + mono
        else:
            body = coeff or mono
        if len(out) == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    if len(out) == 0:
        return "0"
    return "".join(out)

def render_polynomial(poly, names=None):
    """Renders a sympy PolyElement over QQ in ring order: a21^2 + a31*sigma2 - a20."""
    if names is None:
        names = [str(x) for x in poly.ring.symbols]
    return _terms_str([(m, c, QQ.zero) for m, c in poly.terms()], names)

################################################################ parsing

_token = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")

def _tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        m = _token.match(text, position)
        if m is None:
            start = position + len(text[position:]) - len(text[position:].lstrip())
            raise liecohom.util.ParseError("unexpected character {0}".format(repr(text[start])), text, start)
        start = m.start(m.lastindex)
        kind = {1: "number", 2: "name", 3: "op"}[m.lastindex]
        value = m.group(m.lastindex)
        if value == "**":
            value = "^"
        tokens.append((kind, value, start))
        position = m.end()
    tokens.append(("end", None, len(text)))
    return tokens

def _power(base, exponent):
    return base ** exponent

class _ExpressionParser(object):
    def __init__(self, text, context, atoms, caret):
        self.text = text
        self.context = context
        self.atoms = atoms
        self.caret = caret
        self.tokens = _tokenize(text)
        self.position = 0

    def peek(self):
        return self.tokens[self.position]

    def take(self):
        token = self.tokens[self.position]
        self.position += 1
        return token

    def fail(self, message, token=None):
        if token is None:
            token = self.peek()
        raise liecohom.util.ParseError(message, self.text, token[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        out = self.expression()
        if self.peek()[0] != "end":
            self.fail("unexpected {0}".format(repr(self.peek()[1])))
        return out

    def expression(self):
        out = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            right = self.term()
            out = out + right if op == "+" else out - right
        return out

    def term(self):
        out = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            token = self.take()
            right = self.unary()
            if token[1] == "*":
                out = out * right
            else:
                try:
                    out = out / right
                except ScalarDivisionError:
                    raise liecohom.util.ParseError("division by zero", self.text, token[2])
                except TypeError:
                    raise liecohom.util.ParseError("cannot divide by {0}".format(str(right)), self.text, token[2])
        return out

    def unary(self):
        token = self.peek()
        if token[0] == "op" and token[1] in ("+", "-"):
            self.take()
            out = self.unary()
            return -out if token[1] == "-" else out
        return self.power()

    def power(self):
        out = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            token = self.take()
            right = self.unary()
            try:
                out = self.caret(out, right)
            except (liecohom.util.InputError, TypeError, ScalarDivisionError) as err:
                raise liecohom.util.ParseError(str(err), self.text, token[2])
        return out

    def atom(self):
        token = self.take()
        kind, value, start = token
        if kind == "number":
            return Scalar._new(EMPTY, QQ(int(value)), QQ.zero)
        elif kind == "name":
            if value in self.atoms:
                return self.atoms[value]
            if value in _reserved:
                return Scalar.I
            if value in self.context:
                return Scalar.parameter(self.context, value)
            raise liecohom.util.ParseError("undeclared name {0}".format(repr(value)), self.text, start)
        elif value == "(":
            out = self.expression()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return out
        else:
            self.fail("unexpected {0}".format(repr(value) if value is not None else "end of input"), token)

def parse_expression(text, context=EMPTY, atoms=None, caret=None):
    """Parses integers, p/q, i, declared parameter names, + - * / ^ and parentheses."""
    if not isinstance(text, str):
        raise TypeError("expressions are strings, not {0}".format(repr(text)))
    if not isinstance(context, ParameterContext):
        context = ParameterContext(context)
    return _ExpressionParser(text, context, atoms or {}, caret or _power).parse()
