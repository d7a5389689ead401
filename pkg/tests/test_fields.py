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

import fractions
import unittest

from liecohom.fields import *
from liecohom.fields import natural_key
from liecohom.util import InputError
from liecohom.util import ParseError

class TestFields(unittest.TestCase):
    def runTest(self):
        pass

    def test_rational_arithmetic(self):
        a = Scalar.rational(1, 2)
        b = Scalar.rational(1, 3)
        self.assertEqual(a + b, Scalar.rational(5, 6))
        self.assertEqual(str(a + b), "5/6")
        self.assertEqual(a * b, Scalar.rational(1, 6))
        self.assertEqual(a / b, Scalar.rational(3, 2))
        self.assertEqual(a - 1, Scalar.rational(-1, 2))
        self.assertEqual((a + b).as_fraction(), fractions.Fraction(5, 6))
        self.assertEqual(b ** -2, Scalar.coerce(9))

    def test_gaussian(self):
        z = Scalar.gaussian(2, -3)
        self.assertEqual(str(z), "2 - 3*i")
        self.assertEqual(str(Scalar.I), "i")
        self.assertEqual(Scalar.I * Scalar.I, Scalar.coerce(-1))
        self.assertEqual(z.conjugate(), Scalar.gaussian(2, 3))
        self.assertEqual(z * z.conjugate(), Scalar.coerce(13))
        self.assertEqual(z.norm(), Scalar.coerce(13))
        self.assertEqual(z.kind, "gaussian")
        self.assertFalse(z.is_real())
        self.assertEqual(Scalar.coerce(1) / Scalar.I, -Scalar.I)

    def test_division_by_zero(self):
        self.assertRaises(ScalarDivisionError, lambda: Scalar.ONE / Scalar.ZERO)
        self.assertRaises(ScalarDivisionError, lambda: Scalar.rational(1, 0))
        self.assertRaises(ParseError, lambda: parse_expression("1/0"))
        self.assertRaises(ParseError, lambda: parse_expression("1/(2 - 2)"))

    def test_parameters(self):
        ctx = ParameterContext(["a", "b"])
        a = Scalar.parameter(ctx, "a")
        b = Scalar.parameter(ctx, "b")
        x = a * b + 1
        self.assertEqual(x.parameters(), ("a", "b"))
        self.assertEqual(x.kind, "polynomial")
        self.assertFalse(x.is_constant())
        self.assertEqual((a / b).kind, "rational_function")
        self.assertEqual(((a * a - b * b) / (a - b)), a + b)
        self.assertEqual((a - a).kind, "rational")
        self.assertTrue((a - a).is_zero())

    def test_context(self):
        self.assertRaises(InputError, lambda: ParameterContext(["a", "a"]))
        self.assertRaises(InputError, lambda: ParameterContext(["i"]))
        self.assertRaises(InputError, lambda: ParameterContext(["1x"]))
        ctx = ParameterContext("a, b")
        self.assertEqual(ctx.names, ("a", "b"))
        self.assertEqual(ctx.union(ParameterContext(["b", "c"])).names, ("a", "b", "c"))
        self.assertTrue("a" in ctx)
        self.assertFalse("c" in ctx)

    def test_substitute(self):
        ctx = ParameterContext(["a", "b"])
        x = parse_expression("a^2 + 3*a*b - 1", ctx)
        self.assertEqual(x.substitute({"a": 2, "b": 1}), Scalar.coerce(9))
        partial = x.substitute({"a": 1})
        self.assertEqual(partial.parameters(), ("b",))
        self.assertEqual(partial.substitute({"b": 2}), Scalar.coerce(6))
        y = parse_expression("1/(a - b)", ctx)
        self.assertRaises(SubstitutionError, lambda: y.substitute({"a": 1, "b": 1}))
        self.assertEqual(y.substitute({"a": 3, "b": 1}), Scalar.rational(1, 2))

    def test_substitute_parametric(self):
        ctx = ParameterContext(["a", "t"])
        x = parse_expression("a^2", ctx)
        t = Scalar.parameter(ParameterContext(["t"]), "t")
        self.assertEqual(x.substitute({"a": t + 1}), parse_expression("t^2 + 2*t + 1", ParameterContext(["t"])))

    def test_parse(self):
        ctx = ParameterContext(["r4", "r5"])
        x = parse_expression("r4/r5^2", ctx)
        self.assertEqual(str(x), "r4/r5^2")
        self.assertEqual(parse_expression("2*(3 - i)"), Scalar.gaussian(6, -2))
        self.assertEqual(parse_expression("-1/2"), Scalar.rational(-1, 2))
        self.assertEqual(parse_expression("2**3"), Scalar.coerce(8))
        self.assertRaises(ParseError, lambda: parse_expression("r6", ctx))
        self.assertRaises(ParseError, lambda: parse_expression("2 +"))
        self.assertRaises(ParseError, lambda: parse_expression("(1"))
        self.assertRaises(ParseError, lambda: parse_expression(""))
        self.assertRaises(ParseError, lambda: parse_expression("2 $ 3"))

    def test_canonical_rendering(self):
        ctx1 = ParameterContext(["b", "a"])
        ctx2 = ParameterContext(["a", "b"])
        x = parse_expression("a + b", ctx1)
        y = parse_expression("b + a", ctx2)
        self.assertEqual(x, y)
        self.assertEqual(str(x), str(y))
        self.assertEqual(hash(x), hash(y))

    def test_diff(self):
        ctx = ParameterContext(["a", "b"])
        x = parse_expression("a^3*b + b", ctx)
        self.assertEqual(x.diff("a"), parse_expression("3*a^2*b", ctx))
        self.assertTrue(x.diff("c").is_zero())

    def test_natural_key(self):
        names = ["r10", "r2", "a10", "a03", "r1"]
        self.assertEqual(sorted(names, key=natural_key), ["a03", "a10", "r1", "r2", "r10"])
