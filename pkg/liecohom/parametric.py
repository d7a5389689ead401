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

"""Linear algebra over ℚ(i)(params): condition sets, rank stratification and case-splitting solves."""

import itertools
import logging
import math

import numpy

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

import liecohom.exterior
import liecohom.fields
import liecohom.groebner
import liecohom.linalg
import liecohom.util

logger = logging.getLogger(__name__)

__all__ = ["ConditionSet", "RankStratification", "Branch", "DroppedBranch", "CaseSplitSolution", "Namer", "parametric_rank", "generic_rank", "elimination_rank", "parametric_solve_linear", "linear_system", "solve_form_equations", "generic_form", "simplify_form", "FREE_VARIABLE_PREFIX"]

FREE_VARIABLE_PREFIX = "r"

ZERO = liecohom.fields.Scalar.ZERO

################################################################ normalized polynomials

def _normalize(poly):
    """Squarefree part with integer content removed and a positive leading coefficient."""
    if not poly:
        return poly
    if poly.is_ground:
        return poly.ring.one
    poly = poly.sqf_part()
    scale = 1
    for c in poly.coeffs():
        d = int(QQ.denom(c))
        scale = scale * d // math.gcd(scale, d)
    content = 0
    for c in poly.coeffs():
        content = math.gcd(content, abs(int(QQ.numer(c * scale))))
    factor = QQ(scale, content)
    if poly.LC < 0:
        factor = -factor
    return poly.mul_ground(factor)

def _poly_context(poly):
    names = [str(s) for s in poly.ring.symbols]
    used = set()
    for monom in poly.monoms():
        used.update(k for k, e in enumerate(monom) if e)
    return liecohom.fields.ParameterContext([n for k, n in enumerate(names) if k in used])

class ConditionSet(liecohom.util.JSONable):
    """Polynomial equations (= 0) and inequations (≠ 0) in real parameters, plus opaque flags such as 'B > 1'."""

    def __init__(self, context=liecohom.fields.EMPTY, equations=(), inequations=(), flags=()):
        if not isinstance(context, liecohom.fields.ParameterContext):
            context = liecohom.fields.ParameterContext(context)
        equations = [self._coerce(x, context) for x in equations]
        inequations = [self._coerce(x, context) for x in inequations]
        for x in equations + inequations:
            if isinstance(x, liecohom.fields.Scalar):
                context = context.union(x.context)
            else:
                context = context.union(_poly_context(x))
        self._context = context
        self._order = liecohom.groebner.MonomialOrder(context)
        self._flags = tuple(str(f) for f in flags)
        self._reason = None
        self._basis = None

        self._equations = []
        for x in equations:
            for p in self._numerators(x):
                self._add(self._equations, _normalize(p))
        for p in self._equations:
            if p.is_ground:
                self._reason = "the equation {0} == 0 has no solution".format(self.render(p))
        if len(self._equations) > 0 and self._reason is None:
            self._basis = liecohom.groebner.Ideal(self._equations, self._order).reduced().generators
            if any(g.is_ground for g in self._basis):
                self._reason = "the equations {0} have no common zero".format(", ".join(self.render(p) + " == 0" for p in self._equations))
        self._variables = set()
        for p in self._equations:
            for monom in p.monoms():
                self._variables.update(self._context.names[k] for k, e in enumerate(monom) if e)

        self._inequations = []
        self._factors = set()
        for x in inequations:
            p = self._norm_numerator(x)
            original = p
            if self._basis is not None:
                p = p.rem(self._basis)
            if not p:
                if self._reason is None:
                    self._reason = "{0} != 0 contradicts the equations".format(self.render(_normalize(original)) if original else "0")
                continue
            if p.is_ground:
                continue
            p = _normalize(p)
            if self._add(self._inequations, p):
                coeff, factors = p.factor_list()
                for f, k in factors:
                    if not f.is_ground:
                        self._factors.add(_normalize(f))

    @staticmethod
    def _coerce(x, context):
        if isinstance(x, (liecohom.fields.Scalar, PolyElement)):
            return x
        if isinstance(x, str):
            return liecohom.fields.parse_expression(x, context)
        return liecohom.fields.Scalar.coerce(x)

    @staticmethod
    def _add(polys, p):
        if not p or any(p == q for q in polys):
            return False
        polys.append(p)
        return True

    def _numerators(self, x):
        if isinstance(x, PolyElement):
            return [self._order.convert(x)]
        if x.is_zero():
            return []
        if len(x.context) == 0:
            return [self._order.ring.ground_new(q) for q in x.numerators()]
        return [self._order.convert(p) for p in x.numerators()]

    def _norm_numerator(self, x):
        if isinstance(x, PolyElement):
            return self._order.convert(x)
        if x.is_zero():
            return self._order.ring.zero
        if x.is_real():
            return self._numerators(x)[0]
        return self._numerators(x.norm())[0]

    ################################################################ access

    @property
    def context(self):
        return self._context

    @property
    def order(self):
        return self._order

    @property
    def equations(self):
        return list(self._equations)

    @property
    def inequations(self):
        return list(self._inequations)

    @property
    def flags(self):
        return self._flags

    @property
    def inconsistent(self):
        """None when consistent at the polynomial-identity level, otherwise the reason."""
        return self._reason

    def is_consistent(self):
        return self._reason is None

    def is_empty(self):
        return len(self._equations) == 0 and len(self._inequations) == 0 and len(self._flags) == 0

    def has_equations(self):
        return len(self._equations) > 0

    def with_equations(self, equations):
        context = self._context
        for x in equations:
            if isinstance(x, liecohom.fields.Scalar):
                context = context.union(x.context)
        return ConditionSet(context, self._equations + list(equations), self._inequations, self._flags)

    def with_inequations(self, inequations):
        context = self._context
        for x in inequations:
            if isinstance(x, liecohom.fields.Scalar):
                context = context.union(x.context)
        return ConditionSet(context, self._equations, self._inequations + list(inequations), self._flags)

    def extended(self, context):
        return ConditionSet(self._context.union(context), self._equations, self._inequations, self._flags)

    def _covers(self, x):
        return all(n in self._context for n in x.parameters())

    def with_flags(self, flags):
        return ConditionSet(self._context, self._equations, self._inequations, self._flags + tuple(flags))

    def merge(self, other):
        return ConditionSet(self._context.union(other._context), self._equations + other._equations, self._inequations + other._inequations, self._flags + tuple(f for f in other._flags if f not in self._flags))

    ################################################################ deciding

    def normalized(self, x):
        """The normalized polynomials whose common zeros are the zeros of x."""
        return [_normalize(p) for p in self._numerators(x if isinstance(x, PolyElement) else liecohom.fields.Scalar.coerce(x)) if p]

    def reduce(self, poly):
        poly = self._order.convert(poly)
        if self._basis is None:
            return poly
        return poly.rem(self._basis)

    def reduce_scalar(self, x):
        """x with its numerators reduced modulo the equations; denominators are nonzero on the branch."""
        if self._basis is None or x.is_constant() or len(self._variables.intersection(x.parameters())) == 0:
            return x
        if not self._covers(x):
            return self.extended(x.context).reduce_scalar(x)
        x = x.to(x.context.union(self._context))
        context = x.context
        out = ZERO
        for part, unit in ((x.real_part(), liecohom.fields.Scalar.ONE), (x.imag_part(), liecohom.fields.Scalar.I)):
            if part.is_zero():
                continue
            (numer, denom), _ = part.parts()
            reduced = self.reduce(numer)
            if not reduced:
                continue
            value = liecohom.fields.Scalar.from_polynomial(reduced, context) / liecohom.fields.Scalar.from_polynomial(denom, context)
            out = out + value * unit
        return out.compact()

    def is_zero(self, x):
        x = liecohom.fields.Scalar.coerce(x)
        if x.is_zero():
            return True
        if not self._covers(x):
            return self.extended(x.context).is_zero(x)
        if x.is_constant() or self._basis is None:
            return False
        return all(not self.reduce(p) for p in self._numerators(x))

    def known_nonzero(self, x):
        x = liecohom.fields.Scalar.coerce(x)
        if x.is_zero():
            return False
        if x.is_constant():
            return True
        if not self._covers(x):
            return self.extended(x.context).known_nonzero(x)
        p = self.reduce(self._norm_numerator(x))
        if not p:
            return False
        if p.is_ground:
            return True
        coeff, factors = p.factor_list()
        return all(f.is_ground or _normalize(f) in self._factors for f, k in factors)

    def satisfied_by(self, point):
        """Whether equations vanish and inequations do not at a point {name: value}; flags are not evaluated."""
        missing = [n for n in self._context.names if n not in point and any(self._uses(p, n) for p in self._equations + self._inequations)]
        if len(missing) > 0:
            raise liecohom.util.InputError("point assigns no value to {0}".format(", ".join(missing)))
        for p in self._equations:
            if not self._evaluate(p, point).is_zero():
                return False
        for p in self._inequations:
            if self._evaluate(p, point).is_zero():
                return False
        return True

    def _uses(self, p, name):
        k = self._context.index(name)
        return p.degree(k) > 0

    def _evaluate(self, p, point):
        return liecohom.fields.Scalar.from_polynomial(p, self._context).substitute(point)

    ################################################################ rendering

    def render(self, p):
        if p.is_ground:
            return str(liecohom.fields.Scalar.coerce(p.LC if p else 0))
        return str(liecohom.fields.Scalar.from_polynomial(p, self._context))

    def conditions(self):
        return [self.render(p) + " == 0" for p in self._equations] + [self.render(p) + " != 0" for p in self._inequations] + list(self._flags)

    def __str__(self):
        return "[[" + ", ".join(self.conditions()) + "]]"

    def __repr__(self):
        return "<ConditionSet {0}>".format(str(self))

    def tojson(self):
        return {"eq": [self.render(p) for p in self._equations], "neq": [self.render(p) for p in self._inequations], "flags": list(self._flags)}

    def _key(self):
        return (frozenset(self.render(p) for p in self._equations), frozenset(self.render(p) for p in self._inequations), frozenset(self._flags))

    def __eq__(self, other):
        return isinstance(other, ConditionSet) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((ConditionSet, self._key()))

################################################################ rank by minors

class RankStratification(liecohom.util.JSONable):
    """For each rank value, the condition set on which it is attained, or None if it never is."""

    def __init__(self, strata):
        self._strata = dict(strata)

    def __getitem__(self, rank):
        return self._strata[rank]

    def __iter__(self):
        return iter(sorted(self._strata))

    def __len__(self):
        return len(self._strata)

    def items(self):
        return [(r, self._strata[r]) for r in sorted(self._strata)]

    def possible(self):
        return [r for r, cs in self.items() if cs is not None]

    def rank_at(self, point):
        for r, cs in self.items():
            if cs is not None and cs.satisfied_by(point):
                return r
        raise AssertionError("no stratum contains {0}".format(point))

    def __str__(self):
        return "{" + ", ".join("{0}: {1}".format(r, "impossible" if cs is None else str(cs)) for r, cs in self.items()) + "}"

    def __repr__(self):
        return "<RankStratification {0}>".format(str(self))

    def tojson(self):
        return dict((str(r), "impossible" if cs is None else cs.tojson()) for r, cs in self.items())

def _context_of(matrix, params):
    context = liecohom.fields.ParameterContext(params) if params is not None else liecohom.fields.EMPTY
    for x in matrix.flat:
        context = context.union(x.context)
    return context

def parametric_rank(M, params=None):
    """Rank r holds exactly where all (r+1)-minors vanish and some r-minor does not."""
    M = liecohom.linalg.asmatrix(M, liecohom.fields.ParameterContext(params) if params is not None else None)
    if not liecohom.linalg.has_parameters(M):
        return liecohom.linalg.rank(M)
    context = _context_of(M, params)
    m, n = M.shape
    top = min(m, n)
    minors = {}
    def of_size(k):
        if k not in minors:
            minors[k] = []
            for rows in itertools.combinations(range(m), k):
                for cols in itertools.combinations(range(n), k):
                    minors[k].append(liecohom.linalg.determinant(M[numpy.ix_(rows, cols)]))
        return minors[k]
    strata = {}
    for r in range(top + 1):
        equations = of_size(r + 1) if r < top else []
        inequations = []
        if r > 0:
            total = ZERO
            for x in of_size(r):
                total = total + x.norm()
            inequations.append(total)
        cs = ConditionSet(context, equations, inequations)
        strata[r] = cs if cs.is_consistent() else None
        logger.debug("rank %d: %s", r, "impossible" if strata[r] is None else str(cs))
    return RankStratification(strata)

def generic_rank(M, params=None):
    """Rank over the function field and the pivot inequations describing where it holds."""
    M = liecohom.linalg.asmatrix(M, liecohom.fields.ParameterContext(params) if params is not None else None)
    context = _context_of(M, params)
    m, n = M.shape
    rows = [list(row) for row in M]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        candidates = [i for i in range(r, m) if not rows[i][c].is_zero()]
        if len(candidates) == 0:
            continue
        constant = [i for i in candidates if rows[i][c].is_constant()]
        i = constant[0] if len(constant) > 0 else candidates[0]
        rows[r], rows[i] = rows[i], rows[r]
        p = rows[r][c]
        if not p.is_constant():
            pivots.append(p)
        for k in range(r + 1, m):
            a = rows[k][c]
            if not a.is_zero():
                factor = a / p
                rows[k] = [x - factor * y for x, y in zip(rows[k], rows[r])]
        r += 1
    inequations = []
    for p in pivots:
        inequations.append(p)
        for q in p.denominators():
            inequations.append(liecohom.fields.Scalar.from_polynomial(q, p.context))
    return r, ConditionSet(context, (), inequations)

def elimination_rank(M, params=None, conditions=None):
    """(conditions, rank) per leaf of the pivot tree."""
    M = liecohom.linalg.asmatrix(M, liecohom.fields.ParameterContext(params) if params is not None else None)
    unknowns = ["x{0}".format(j) for j in range(M.shape[1])]
    solution = parametric_solve_linear(M, None, unknowns, params=params, conditions=conditions)
    return [(branch.conditions, branch.rank) for branch in solution]

################################################################ solving with case splits

class Namer(object):
    """Hands out r1, r2, ... skipping reserved names by appending underscores."""

    def __init__(self, prefix=FREE_VARIABLE_PREFIX, start=1, reserved=()):
        self.prefix = prefix
        self.counter = start
        self.reserved = set(reserved)

    def reserve(self, names):
        self.reserved.update(names)

    def fresh(self):
        name = "{0}{1}".format(self.prefix, self.counter)
        self.counter += 1
        while name in self.reserved:
            name += "_"
        self.reserved.add(name)
        return name

    def copy(self):
        return Namer(self.prefix, self.counter, self.reserved)

    def __repr__(self):
        return "<Namer next {0}{1}>".format(self.prefix, self.counter)

class Branch(liecohom.util.JSONable):
    def __init__(self, conditions, solution, free, path, substitutions, rank):
        self.conditions = conditions
        self.solution = solution
        self.free = tuple(free)
        self.path = tuple(path)
        self.substitutions = dict(substitutions)
        self.rank = rank

    def assignment(self):
        out = dict(self.substitutions)
        out.update(self.solution)
        return out

    def evaluate(self, x):
        """A Scalar or form with the unknowns replaced by this branch's solution."""
        return simplify_form(x, self)

    def __repr__(self):
        return "<Branch {0} {1}>".format(list(self.path), str(self.conditions))

    def __str__(self):
        return "{" + ", ".join("{0}: {1}".format(u, str(v)) for u, v in self.solution.items()) + "}"

    def tojson(self):
        return {"path": list(self.path), "conditions": self.conditions.tojson(), "solution": dict((u, str(v)) for u, v in self.solution.items()), "free": list(self.free), "substitutions": dict((k, str(v)) for k, v in sorted(self.substitutions.items())), "rank": self.rank}

class DroppedBranch(liecohom.util.JSONable):
    def __init__(self, conditions, path, reason):
        self.conditions = conditions
        self.path = tuple(path)
        self.reason = reason

    def __repr__(self):
        return "<DroppedBranch {0}: {1}>".format(list(self.path), self.reason)

    def tojson(self):
        return {"path": list(self.path), "conditions": self.conditions.tojson(), "reason": self.reason}

class CaseSplitSolution(liecohom.util.JSONable):
    def __init__(self, unknowns, branches, dropped):
        self.unknowns = tuple(unknowns)
        self.branches = sorted(branches, key=lambda b: b.path)
        self.dropped = sorted(dropped, key=lambda b: b.path)

    def __iter__(self):
        return iter(self.branches)

    def __len__(self):
        return len(self.branches)

    def __getitem__(self, i):
        return self.branches[i]

    def single(self):
        if len(self.branches) != 1:
            raise liecohom.util.InputError("expected a single branch, found {0}".format(len(self.branches)))
        return self.branches[0]

    def __repr__(self):
        return "<CaseSplitSolution {0} branches, {1} dropped>".format(len(self.branches), len(self.dropped))

    def tojson(self):
        return {"unknowns": list(self.unknowns), "branches": [b.tojson() for b in self.branches], "dropped": [b.tojson() for b in self.dropped]}

def _classify(x, conditions):
    """0 for constants, 1 for entries known nonzero, 2 for entries that need a case split, None for zeros."""
    if x.is_zero():
        return None
    if x.is_constant():
        return 0
    if conditions.is_zero(x):
        return None
    if conditions.known_nonzero(x):
        return 1
    return 2

def _linear_substitution(conditions, x):
    """A parameter occurring linearly with a constant coefficient in an equation for x, solved for."""
    context = conditions.context
    ring = conditions.order.ring
    for p in conditions.normalized(x):
        for k, name in enumerate(context.names):
            if p.degree(k) != 1:
                continue
            gen = ring.gens[k]
            coeff = p.diff(gen)
            if not coeff.is_ground:
                continue
            c = coeff.LC
            rest = p - gen.mul_ground(c)
            value = liecohom.fields.Scalar.from_polynomial(rest, context) / liecohom.fields.Scalar.coerce(-c) if rest else ZERO
            return name, value.compact()
    return None

class _PivotTree(object):
    def __init__(self, unknowns, namer):
        self.unknowns = unknowns
        self.n = len(unknowns)
        self.namer = namer
        self.namers = []
        self.branches = []
        self.dropped = []

    def explore(self, rows, r, c, pivots, conditions, substitutions, path):
        m, n = len(rows), self.n
        while c <= n:
            best = None
            for i in range(r, m):
                kind = _classify(rows[i][c], conditions)
                if kind is not None and (best is None or kind < best[0]):
                    best = (kind, i)
                    if kind == 0:
                        break
            if best is None:
                c += 1
                continue
            kind, i = best
            if kind == 2:
                self.fork(rows, r, c, pivots, conditions, substitutions, path, rows[i][c])
                return
            if c == n:
                self.dropped.append(DroppedBranch(conditions, path, "inconsistent: 0 == {0}".format(str(rows[i][c]))))
                return
            rows = self.pivot(rows, r, i, c, conditions)
            pivots = pivots + [(r, c)]
            r += 1
            c += 1
        self.leaf(rows, pivots, conditions, substitutions, path)

    def fork(self, rows, r, c, pivots, conditions, substitutions, path, x):
        logger.debug("fork on %s at column %d, path %s", str(x), c, list(path))
        nonzero = conditions.with_inequations([x])
        if nonzero.is_consistent():
            self.explore(rows, r, c, pivots, nonzero, substitutions, path + (0,))
        else:
            self.dropped.append(DroppedBranch(nonzero, path + (0,), nonzero.inconsistent))
        zero = conditions.with_equations([x])
        if zero.is_consistent():
            rows, substitutions = self.impose(rows, substitutions, zero, x)
            self.explore(rows, r, c, pivots, zero, substitutions, path + (1,))
        else:
            self.dropped.append(DroppedBranch(zero, path + (1,), zero.inconsistent))

    def impose(self, rows, substitutions, conditions, x):
        found = _linear_substitution(conditions, x)
        if found is not None:
            name, value = found
            assignment = {name: value}
            rows = [[y.substitute(assignment) for y in row] for row in rows]
            substitutions = dict((k, v.substitute(assignment)) for k, v in substitutions.items())
            substitutions[name] = value
        rows = [[conditions.reduce_scalar(y) for y in row] for row in rows]
        return rows, substitutions

    def pivot(self, rows, r, i, c, conditions):
        rows = list(rows)
        rows[r], rows[i] = rows[i], rows[r]
        p = rows[r][c]
        head = [conditions.reduce_scalar(y / p) for y in rows[r]]
        out = []
        for k, row in enumerate(rows):
            if k == r:
                out.append(head)
                continue
            a = row[c]
            if a.is_zero():
                out.append(row)
                continue
            new = [conditions.reduce_scalar(y - a * h) for y, h in zip(row, head)]
            new[c] = ZERO
            out.append(new)
        return out

    def leaf(self, rows, pivots, conditions, substitutions, path):
        n = self.n
        pivot_rows = dict((c, r) for r, c in pivots)
        free = [c for c in range(n) if c not in pivot_rows]
        namer = self.namer.copy()
        names = {}
        for c in reversed(free):
            names[c] = namer.fresh()
        self.namers.append(namer)
        introduced = [names[c] for c in reversed(free)]
        context = liecohom.fields.ParameterContext(introduced)
        values = dict((c, liecohom.fields.Scalar.parameter(context, names[c])) for c in free)
        solution = {}
        for c, unknown in enumerate(self.unknowns):
            if c in values:
                solution[unknown] = values[c]
            else:
                row = rows[pivot_rows[c]]
                value = row[n]
                for f in free:
                    if not row[f].is_zero():
                        value = value - row[f] * values[f]
                solution[unknown] = conditions.reduce_scalar(value).compact()
        logger.debug("leaf %s: rank %d, free %s", list(path), len(pivots), ", ".join(introduced))
        self.branches.append(Branch(conditions, solution, introduced, path, substitutions, len(pivots)))

def parametric_solve_linear(A, b=None, unknowns=None, params=None, conditions=None, namer=None):
    """Gaussian elimination where parameter-dependent pivots fork into pivot ≠ 0 and pivot = 0 branches."""
    A = liecohom.linalg.asmatrix(A, liecohom.fields.ParameterContext(params) if params is not None else None, cols=None if len(A) > 0 else len(unknowns or ()))
    m, n = A.shape
    if unknowns is None:
        unknowns = ["x{0}".format(j) for j in range(n)]
    unknowns = list(unknowns)
    if len(unknowns) != n:
        raise liecohom.util.InputError("{0} unknowns for a system in {1} columns".format(len(unknowns), n))
    if b is None:
        b = [ZERO] * m
    b = [liecohom.fields.Scalar.coerce(x, liecohom.fields.ParameterContext(params) if params is not None else None) for x in b]
    if len(b) != m:
        raise liecohom.util.InputError("right-hand side has {0} entries for {1} equations".format(len(b), m))
    context = _context_of(A, params)
    for x in b:
        context = context.union(x.context)
    if conditions is None:
        conditions = ConditionSet(context)
    if namer is None:
        namer = Namer()
    namer.reserve(context.names)
    namer.reserve(unknowns)
    rows = [list(A[i]) + [b[i]] for i in range(m)]
    tree = _PivotTree(unknowns, namer)
    tree.explore(rows, 0, 0, [], conditions, {}, ())
    if len(tree.namers) > 0:
        namer.counter = max(x.counter for x in tree.namers)
        for x in tree.namers:
            namer.reserve(x.reserved)
    logger.debug("solved %dx%d system: %d branches, %d dropped", m, n, len(tree.branches), len(tree.dropped))
    return CaseSplitSolution(unknowns, tree.branches, tree.dropped)

################################################################ forms with unknown coefficients

def generic_form(algebra, degree, prefix, context=liecohom.fields.EMPTY):
    """A degree-k form with one unknown per blade (theta0, omega01, ...), its unknown names and their context."""
    separator = "_" if algebra.n > 10 else ""
    names = []
    for mask in algebra.blades(degree):
        names.append(prefix + separator.join(str(j) for j in liecohom.exterior.blade_indices(mask)))
    context = liecohom.fields.ParameterContext(context).union(liecohom.fields.ParameterContext(names))
    terms = dict((mask, liecohom.fields.Scalar.parameter(context, name)) for mask, name in zip(algebra.blades(degree), names))
    return liecohom.exterior.ExteriorElement(algebra, terms), names, context

def linear_system(expressions, unknowns):
    """Coefficient matrix and right-hand side of expressions that are affine in the unknowns."""
    A = []
    b = []
    zero = dict((u, 0) for u in unknowns)
    for x in expressions:
        row = []
        for u in unknowns:
            a = x.diff(u).compact()
            bad = [p for p in a.parameters() if p in zero]
            if len(bad) > 0:
                raise liecohom.util.InputError("expression {0} is not linear in {1}".format(str(x), ", ".join(bad)))
            row.append(a)
        A.append(row)
        b.append(-x.substitute(zero))
    return A, b

def solve_form_equations(forms, unknowns, params=None, conditions=None, namer=None):
    """Solves 'every coefficient of every form vanishes' for the unknowns."""
    expressions = []
    for form in forms:
        for mask, x in form.items():
            expressions.append(x)
    A, b = linear_system(expressions, unknowns)
    if len(A) == 0:
        A = liecohom.linalg.zeros(0, len(unknowns))
    return parametric_solve_linear(A, b, unknowns, params=params, conditions=conditions, namer=namer)

def simplify_form(phi, rules=None):
    """Substitutes rules (a dict or a Branch) into every coefficient and canonicalizes the rest."""
    if rules is None or (isinstance(rules, dict) and len(rules) == 0):
        return phi.compact()
    if isinstance(rules, Branch):
        rules = rules.assignment()
    return phi.substitute(rules)
