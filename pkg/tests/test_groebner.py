#!/usr/bin/env python

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

import random
import unittest

from liecohom.groebner import *
from liecohom.util import InputError

class TestGroebner(unittest.TestCase):
    def runTest(self):
        pass

    def test_orders(self):
        order = MonomialOrder(["x", "y"], "degrevlex")
        x2, xy, y3 = (order.convert(s) for s in ("x^2", "x*y", "y^3"))
        self.assertTrue(order.key(y3.LM) > order.key(x2.LM))
        self.assertTrue(order.key(x2.LM) > order.key(xy.LM))
        lex = MonomialOrder("x, y", "lex")
        self.assertTrue(lex.key(lex.convert("x").LM) > lex.key(lex.convert("y^3").LM))
        self.assertRaises(InputError, lambda: MonomialOrder(["x"], "weird"))
        self.assertRaises(InputError, lambda: order.convert("z"))

    def test_normal_form(self):
        order = MonomialOrder(["x", "y"], "lex")
        self.assertEqual(normal_form("x^2*y - 1", ["x*y - 1", "x"], order), order.convert("-1"))
        g = order.convert("x*y - 1")
        self.assertFalse(normal_form(g, [g], order))
        f = normal_form("x^3 + y^2", ["x*y - 1", "x^2 - y"], order)
        self.assertEqual(normal_form(f, ["x*y - 1", "x^2 - y"], order), f)

    def test_trivial_bases(self):
        order = MonomialOrder(["x", "y"])
        self.assertEqual(Ideal(["x"], order).reduced().tojson(), ["x"])
        self.assertEqual(sorted(Ideal(["x", "x + y"], order).reduced().tojson()), ["x", "y"])
        self.assertEqual(Ideal([], order).reduced().tojson(), [])

    def test_s_polynomial_cascade(self):
        order = MonomialOrder(["x", "y"])
        I = Ideal(["x^2 + y^2", "x*y"], order)
        G = I.reduced()
        self.assertEqual(set(G.tojson()), set(["x^2 + y^2", "x*y", "y^3"]))
        self.assertTrue(is_groebner(G))
        self.assertFalse(is_groebner(I))
        self.assertTrue(I.contains("y^3"))
        self.assertFalse(I.contains("y^2"))

    def test_reduced_is_idempotent(self):
        order = MonomialOrder(["x", "y", "z"])
        G = Ideal(["x*y - z", "y*z - x", "x*z - y"], order).reduced()
        self.assertEqual(reduce_basis(G).tojson(), G.tojson())
        for g in G:
            self.assertEqual(g.LC, 1)

    def test_membership(self):
        order = MonomialOrder(["x"])
        self.assertFalse(ideal_membership("1", Ideal(["x"], order)))
        self.assertTrue(ideal_membership("x^5 - x", Ideal(["x^2 - 1"], order)))
        self.assertTrue(Ideal(["x", "x - 1"], order).is_unit())
        order = MonomialOrder(["x", "y", "z"])
        g, k = order.convert("x^2 - y*z"), order.convert("y^2 + z - 1")
        f, h = order.convert("x*z + 3"), order.convert("z^3 - x*y")
        self.assertTrue(ideal_membership(f * g + h * k, Ideal([g, k], order)))

    def test_budget(self):
        order = MonomialOrder(["x", "y"])
        I = Ideal(["x^2 + y^2", "x*y"], order)
        self.assertRaises(GroebnerBudgetExceeded, lambda: buchberger(I, budget=1))

    def test_shuffle_invariance(self):
        rng = random.Random(31415)
        names = ["w", "x", "y", "z"]
        for trial in range(20):
            variables = names[:rng.randint(2, 4)]
            order = MonomialOrder(variables)
            gens = []
            for i in range(rng.randint(2, 3)):
                terms = []
                for j in range(rng.randint(2, 3)):
                    a, b = rng.choice(variables), rng.choice(variables + ["1"])
                    terms.append("{0}*{1}*{2}".format(rng.randint(-3, 3) or 1, a, b))
                terms.append(str(rng.randint(-2, 2)))
                gens.append(" + ".join(terms))
            expected = Ideal(gens, order).reduced()
            shuffled = list(gens)
            rng.shuffle(shuffled)
            self.assertEqual(Ideal(shuffled, order).reduced().tojson(), expected.tojson())
            for g in gens:
                self.assertTrue(expected.contains(g))
            for g in expected:
                self.assertFalse(normal_form(g, Ideal(gens, order).groebner_basis()))
            self.assertTrue(is_groebner(expected))
