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

import sympy
from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.orderings import grlex
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing

import liecohom.fields
import liecohom.util

logger = logging.getLogger(__name__)

__all__ = ["MonomialOrder", "Ideal", "GroebnerBudgetExceeded", "normal_form", "buchberger", "reduce_basis", "ideal_membership", "is_groebner", "spoly", "DEFAULT_PAIR_BUDGET"]

DEFAULT_PAIR_BUDGET = 200000

ORDERS = {"degrevlex": grevlex, "lex": lex, "deglex": grlex}

class GroebnerBudgetExceeded(liecohom.util.ComputationError):
    pass

################################################################ orders and rings

class MonomialOrder(object):
    """A monomial order on named variables; the first variable is the largest."""

    def __init__(self, variables, kind="degrevlex"):
        if isinstance(variables, liecohom.fields.ParameterContext):
            variables = variables.names
        elif isinstance(variables, str):
            variables = [x.strip() for x in variables.split(",") if x.strip() != ""]
        variables = tuple(variables)
        liecohom.fields.ParameterContext(variables)    # validates the names
        if kind not in ORDERS:
            raise liecohom.util.InputError("monomial order must be one of {0}, not {1}".format(", ".join(sorted(ORDERS)), repr(kind)))
        self._variables = variables
        self._kind = kind
        self._ring = PolyRing(tuple(sympy.Symbol(v) for v in variables), QQ, ORDERS[kind]) if len(variables) > 0 else PolyRing((sympy.Symbol("unit_"),), QQ, ORDERS[kind])

    @property
    def variables(self):
        return self._variables

    @property
    def kind(self):
        return self._kind

    @property
    def ring(self):
        return self._ring

    def key(self, monom):
        return self._ring.order(monom)

    def __repr__(self):
        return "MonomialOrder({0}, {1})".format(repr(list(self._variables)), repr(self._kind))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._variables == other._variables and self._kind == other._kind

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((MonomialOrder, self._variables, self._kind))

    def convert(self, f):
        """Polynomial of this order's ring from a PolyElement, a real polynomial Scalar, a string or an integer."""
        if isinstance(f, PolyElement):
            if f.ring == self._ring:
                return f
            names = [str(x) for x in f.ring.symbols]
            missing = [n for n, e in zip(names, _used(f)) if e and n not in self._variables]
            if len(missing) > 0:
                raise liecohom.util.InputError("variables {0} are not in {1}".format(", ".join(missing), repr(self)))
            positions = [self._variables.index(n) if n in self._variables else None for n in names]
            out = {}
            for monom, coeff in f.items():
                m = [0] * len(self._variables)
                for k, e in enumerate(monom):
                    if e:
                        m[positions[k]] = e
                out[tuple(m)] = coeff
            return self._ring.from_dict(out)
        if isinstance(f, str):
            f = liecohom.fields.parse_expression(f, liecohom.fields.ParameterContext(self._variables))
        f = liecohom.fields.Scalar.coerce(f)
        return f.to_polynomial(self._ring)

    def render(self, f):
        return liecohom.fields.render_polynomial(f, list(self._variables))

def _used(f):
    used = [0] * f.ring.ngens
    for monom in f.monoms():
        for k, e in enumerate(monom):
            if e:
                used[k] = 1
    return used

################################################################ division

def spoly(p1, p2):
    ring = p1.ring
    lcm = ring.monomial_lcm(p1.LM, p2.LM)
    s1 = p1.mul_term((ring.monomial_div(lcm, p1.LM), QQ.one / p1.LC))
    s2 = p2.mul_term((ring.monomial_div(lcm, p2.LM), QQ.one / p2.LC))
    return s1 - s2

def normal_form(f, G, order=None):
    if isinstance(G, Ideal):
        order = G.order
        G = G.generators
    if order is None:
        if len(G) == 0:
            if isinstance(f, PolyElement):
                return f
            raise liecohom.util.InputError("normal_form needs an order when G is empty")
        order = _order_of(G[0])
    f = order.convert(f)
    G = [order.convert(g) for g in G]
    G = [g for g in G if g]
    if len(G) == 0:
        return f
    return f.rem(G)

def _order_of(g):
    kind = [k for k, v in ORDERS.items() if v == g.ring.order][0]
    return MonomialOrder([str(x) for x in g.ring.symbols], kind)

################################################################ ideals

class Ideal(liecohom.util.JSONable):
    def __init__(self, generators, order):
        if not isinstance(order, MonomialOrder):
            raise TypeError("order must be a MonomialOrder, not {0}".format(repr(order)))
        self._order = order
        self._generators = [g for g in (order.convert(f) for f in generators) if g]
        self._groebner = False
        self._reduced = False
        self._cache = {}

    @property
    def order(self):
        return self._order

    @property
    def ring(self):
        return self._order.ring

    @property
    def generators(self):
        return list(self._generators)

    def __len__(self):
        return len(self._generators)

    def __iter__(self):
        return iter(self._generators)

    def __getitem__(self, i):
        return self._generators[i]

    def __repr__(self):
        return "<Ideal with {0} generators, {1}>".format(len(self._generators), self._order.kind)

    def __str__(self):
        return "[" + ", ".join(self._order.render(g) for g in self._generators) + "]"

    def tojson(self):
        return [self._order.render(g) for g in self._generators]

    def groebner_basis(self, budget=None):
        if self._groebner:
            return self
        if "groebner" not in self._cache:
            self._cache["groebner"] = buchberger(self, budget)
        return self._cache["groebner"]

    def reduced(self, budget=None):
        if self._reduced:
            return self
        if "reduced" not in self._cache:
            self._cache["reduced"] = reduce_basis(self.groebner_basis(budget))
        return self._cache["reduced"]

    def normal_form(self, f, budget=None):
        return normal_form(f, self.groebner_basis(budget))

    def contains(self, f, budget=None):
        return not self.normal_form(f, budget)

    def is_unit(self, budget=None):
        return any(g.is_ground for g in self.reduced(budget))

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other._order != self._order:
            return False
        return [dict(g) for g in self.reduced()] == [dict(g) for g in other.reduced()]

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((Ideal, self._order, len(self.reduced())))

################################################################ Buchberger

def buchberger(I, budget=None):
    """Gröbner basis by Buchberger's algorithm with the Gebauer-Möller pair criteria and normal selection."""
    if budget is None:
        budget = DEFAULT_PAIR_BUDGET
    ring = I.ring
    order = ring.order
    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm

    # interreduce the input first
    f1 = [g.monic() for g in I.generators]
    while True:
        f = f1
        f1 = []
        for i, p in enumerate(f):
            others = f1 + f[i + 1:]
            r = p.rem(others) if len(others) > 0 else p
            if r:
                f1.append(r.monic())
        if f == f1:
            break

    polys = list(f1)
    index = {}
    for i, p in enumerate(polys):
        index[p] = i

    def update(G, B, ih):
        h = polys[ih]
        mh = h.LM

        # new pairs (h, g): first criterion (coprime leading monomials) and chain criterion
        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = polys[ig].LM
            lcm = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                return monomial_div(lcm, monomial_lcm(mh, polys[ip].LM))

            if monomial_mul(mh, mg) == lcm or (not any(lcm_divides(ip) for ip in C) and not any(lcm_divides(p[1]) for p in D)):
                D.add((ih, ig))

        E = set()
        for ih, ig in D:
            mg = polys[ig].LM
            if monomial_mul(mh, mg) != monomial_lcm(mh, mg):
                E.add((ih, ig))

        # old pairs survive unless h cuts their chain
        B_new = set()
        for ig1, ig2 in B:
            mg1 = polys[ig1].LM
            mg2 = polys[ig2].LM
            lcm = monomial_lcm(mg1, mg2)
            if not monomial_div(lcm, mh) or monomial_lcm(mg1, mh) == lcm or monomial_lcm(mg2, mh) == lcm:
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = set(ig for ig in G if not monomial_div(polys[ig].LM, mh))
        G_new.add(ih)
        return G_new, B_new

    def normal(g, J):
        h = g.rem([polys[j] for j in J])
        if not h:
            return None
        h = h.monic()
        if h not in index:
            index[h] = len(polys)
            polys.append(h)
        return index[h]

    G = set()
    pairs = set()
    F = set(range(len(polys)))
    while F:
        ih = min(F, key=lambda i: order(polys[i].LM))
        F.remove(ih)
        G, pairs = update(G, pairs, ih)

    count = 0
    zeros = 0
    while pairs:
        count += 1
        if count > budget:
            raise GroebnerBudgetExceeded("Buchberger pair budget of {0} exhausted with {1} pairs pending".format(budget, len(pairs)))
        ig1, ig2 = min(pairs, key=lambda p: (order(monomial_lcm(polys[p[0]].LM, polys[p[1]].LM)), p))
        pairs.remove((ig1, ig2))
        s = spoly(polys[ig1], polys[ig2])
        ih = normal(s, sorted(G, key=lambda g: order(polys[g].LM)))
        if ih is None:
            zeros += 1
        else:
            G, pairs = update(G, pairs, ih)

    logger.debug("buchberger: %d pairs, %d reduced to zero, %d basis elements", count, zeros, len(G))
    out = Ideal([], I.order)
    out._generators = sorted((polys[ig] for ig in G), key=lambda p: order(p.LM), reverse=True)
    out._groebner = True
    return out

def reduce_basis(G):
    """The unique reduced Gröbner basis: monic, minimal, each element reduced by the rest."""
    if not G._groebner:
        G = buchberger(G)
    ring = G.ring
    order = ring.order
    minimal = []
    for p in sorted((g.monic() for g in G.generators), key=lambda g: order(g.LM)):
        if not any(ring.monomial_div(p.LM, q.LM) is not None for q in minimal):
            minimal.append(p)
    reduced = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = p.rem(others) if len(others) > 0 else p
        reduced.append(r.monic())
    out = Ideal([], G.order)
    out._generators = sorted(reduced, key=lambda p: order(p.LM), reverse=True)
    out._groebner = True
    out._reduced = True
    return out

def is_groebner(G):
    polys = [g for g in (G.generators if isinstance(G, Ideal) else G) if g]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if spoly(polys[i], polys[j]).rem(polys):
                return False
    return True

def ideal_membership(f, I, budget=None):
    return I.contains(f, budget)
