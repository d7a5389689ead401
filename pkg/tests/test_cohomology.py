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

import unittest

from liecohom import linalg
from liecohom.catalog import find_entry
from liecohom.catalog import load_catalog
from liecohom.cohomology import *
from liecohom.lie import StructureConstants
from liecohom.lie import TwistedCoboundary
from liecohom.lie import parse_salamon
from liecohom.util import InputError

class TestCohomology(unittest.TestCase):
    def runTest(self):
        pass

    def test_heisenberg(self):
        T = betti_numbers(parse_salamon("(0,0,12)"))
        self.assertEqual(T.theory, "deRham")
        self.assertEqual(T.totals(), [1, 2, 2, 1])
        self.assertEqual(T[1], 2)
        self.assertEqual(T[7], 0)
        self.assertEqual(T.totext(), "{0: 1, 1: 2, 2: 2, 3: 1}")
        self.assertIsNone(T.bigraded)
        self.assertRaises(KeyError, lambda: T[1, 0])

    def test_h8(self):
        T = betti_numbers(find_entry("h8").structure)
        self.assertEqual(T.totals(), [1, 5, 11, 14, 11, 5, 1])

    def test_nilpotent_table(self):
        for entry in load_catalog():
            if "deRham" not in entry.expected:
                continue
            T = betti_numbers(entry.structure)
            totals = T.totals()
            self.assertEqual(totals, entry.expected["deRham"]["value"], entry.name)
            self.assertEqual(totals, list(reversed(totals)), entry.name)
            self.assertEqual(T.euler_characteristic(), 0, entry.name)

    def test_not_unimodular(self):
        # r4 breaks Poincare duality
        self.assertEqual(betti_numbers(find_entry("r4").structure).totals(), [1, 1, 0, 0, 0])

    def test_poincare_polynomial(self):
        p = poincare_polynomial(betti_numbers(find_entry("6g_1").structure))
        self.assertEqual(str(p), "x^6 + 6*x^5 + 15*x^4 + 20*x^3 + 15*x^2 + 6*x + 1")
        self.assertEqual(p, [1, 6, 15, 20, 15, 6, 1])
        self.assertEqual(p, [1, 6, 15, 20, 15, 6, 1, 0, 0])
        self.assertEqual(p(1), 64)
        self.assertEqual(p(-1), 0)
        self.assertEqual(p.degree(), 6)

        p = betti_numbers(find_entry("g_{6.N16}").structure).poincare_polynomial()
        self.assertEqual(p.coefficients, [1, 3, 4, 4, 4, 3, 1])
        self.assertEqual(str(p), "x^6 + 3*x^5 + 4*x^4 + 4*x^3 + 4*x^2 + 3*x + 1")

        self.assertEqual(str(PoincarePolynomial([0, -2, 1])), "x^2 - 2*x")
        self.assertEqual(str(PoincarePolynomial([])), "0")
        self.assertNotEqual(PoincarePolynomial([1, 1]), PoincarePolynomial([1, 2]))

    def test_representatives(self):
        S = parse_salamon("(0,0,12)")
        T = betti_numbers(S, representatives=True)
        d = S.coboundary()
        for k in range(4):
            self.assertEqual(len(T.representatives[k]), T[k])
            for form in T.representatives[k]:
                self.assertFalse(d(form))
        self.assertEqual([str(x) for x in T.representatives[0]], ["1"])
        self.assertEqual(sorted(str(x) for x in T.representatives[1]), ["e0", "e1"])

    def test_morse_novikov(self):
        S = parse_salamon("(0,0,12)")
        self.assertEqual(morse_novikov(S, "e0").totals(), [0, 0, 0, 0])
        self.assertEqual(morse_novikov(S, "0").totals(), betti_numbers(S).totals())

        r4 = find_entry("r4").structure
        T = morse_novikov(r4, "-2*e3", representatives=True)
        self.assertEqual(T.theory, "MorseNovikov")
        self.assertEqual(T.totals(), [0, 0, 1, 1, 0])
        self.assertEqual(T.euler_characteristic(), 0)
        dtheta = TwistedCoboundary(r4.coboundary(), r4.algebra.parse("-2*e3"))
        for form in T.representatives[2] + T.representatives[3]:
            self.assertFalse(dtheta(form))

    def test_parametric(self):
        S = StructureConstants(3, {(2, 0, 1): "a"}, ["a"])
        self.assertRaises(ParametricInputError, lambda: betti_numbers(S))
        try:
            betti_numbers(S)
        except ParametricInputError as err:
            self.assertEqual(err.parameters, ("a",))
        T = betti_numbers(S, generic=True)
        self.assertEqual(T.totals(), [1, 2, 2, 1])
        self.assertTrue(T.conditions.satisfied_by({"a": 1}))
        self.assertFalse(T.conditions.satisfied_by({"a": 0}))
        self.assertEqual(betti_numbers(S.specialize({"a": 0})).totals(), [1, 3, 3, 1])
        self.assertRaises(ParametricInputError, lambda: betti_numbers(S, representatives=True, generic=True))

    def test_not_a_complex(self):
        S = StructureConstants(4, {(0, 1, 2): 1, (1, 0, 3): 1})
        self.assertRaises(ComplexError, lambda: build_complex(S))
        self.assertRaises(ComplexError, lambda: betti_numbers(S))
        C = build_complex(S, check=False)
        self.assertEqual(C.n, 4)

    def test_chain_complex(self):
        C = build_complex(parse_salamon("(0,0,12)"))
        self.assertEqual(C.euler_characteristic(), 0)
        self.assertEqual(C.matrix(0).shape, (3, 1))
        self.assertEqual(C.matrix(1).shape, (3, 3))
        self.assertEqual(C.matrix(3).shape, (0, 1))
        self.assertTrue(linalg.is_zero_matrix(linalg.matmul(C.matrix(2), C.matrix(1))))
        self.assertRaises(InputError, lambda: ChainComplexMatrices(C.algebra, C.mats[:3]))
        self.assertRaises(InputError, lambda: ChainComplexMatrices(C.algebra, [C.mats[1]] * 4))

    def test_table_json(self):
        T = betti_numbers(find_entry("h8").structure)
        data = T.tojson()
        self.assertEqual(data["theory"], "deRham")
        self.assertEqual(data["dims"]["3"], 14)
        self.assertEqual(CohomologyTable.fromjson(data), T)
        self.assertRaises(InputError, lambda: CohomologyTable.fromjson({"dims": {}}))
        self.assertRaises(InputError, lambda: CohomologyTable("Hodge", {}))
