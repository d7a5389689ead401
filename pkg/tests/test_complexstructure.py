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

from liecohom.catalog import H8_J
from liecohom.catalog import STANDARD_J
from liecohom.catalog import find_entry
from liecohom.cohomology import *
from liecohom.complexstructure import *
from liecohom.exterior import DimensionError
from liecohom.fields import Scalar
from liecohom.lie import StructureConstants
from liecohom.util import InputError

def h8_structure():
    entry = find_entry("h8")
    return entry.complex_structure.bigraded(entry.structure)[0]

class TestComplexStructure(unittest.TestCase):
    def runTest(self):
        pass

    def test_almost_complex(self):
        J = AlmostComplexStructure(STANDARD_J)
        self.assertEqual(J.n, 6)
        self.assertRaises(InputError, lambda: AlmostComplexStructure([[1, 0], [0, 1]]))
        self.assertRaises(DimensionError, lambda: AlmostComplexStructure([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]))
        x = J(J.lift().source.gen(0))
        self.assertEqual(str(x), "e1")

    def test_coframe(self):
        J = AlmostComplexStructure(H8_J)
        self.assertEqual(default_coframe_choice(J), (0, 1, 4))
        frame = coframe_from_j(J, (1, 2, 4))
        self.assertEqual(frame.nc, 3)
        self.assertEqual(str(frame.phi[0]), "e1 - i*e3")
        for j in range(6):
            e = frame.real_algebra.gen(j)
            self.assertEqual(frame.to_real(frame.to_complex(e)), e)
        self.assertRaises(ComplexError, lambda: coframe_from_j(J, (0, 2, 4)))
        self.assertRaises(InputError, lambda: coframe_from_j(J, (0, 1)))
        self.assertRaises(DimensionError, lambda: coframe_from_j(J, (0, 1, 9)))

    def test_transport(self):
        S = StructureConstants.from_sage(6, {(2, 3): {0: -1}})
        B = transport_structure_equations(S, coframe_from_j(STANDARD_J, (0, 2, 4)))
        expected = B.algebra.element({(1, 4): Scalar.gaussian(0, fractions.Fraction(1, 2))})
        self.assertEqual(B.image(0), expected)
        self.assertEqual(B.image(3), B.bar(expected))
        self.assertFalse(B.image(1))
        self.assertTrue(B.integrability())
        self.assertEqual(untransport(B), S)
        self.assertRaises(InputError, lambda: untransport(BigradedStructure.fromjson(B.tojson())))

    def test_h8_standard_j(self):
        entry = find_entry("h8std")
        self.assertEqual(entry.name, "h_8^{std}")
        B, = entry.complex_structure.bigraded(entry.structure)
        self.assertEqual(B.coframe.chosen, (0, 2, 4))
        self.assertEqual(B.image(0), B.algebra.element({(1, 4): Scalar.gaussian(0, fractions.Fraction(1, 2))}))
        self.assertTrue(B.integrability())
        self.assertEqual(dolbeault(B).totals(), entry.expected["Dolbeault"]["value"])
        self.assertEqual(bott_chern(B).totals(), [1, 4, 10, 16, 14, 6, 1])
        self.assertEqual(aeppli(B).totals(), [1, 6, 14, 16, 10, 4, 1])

    def test_not_integrable(self):
        algebra = complexified_algebra(2)
        B = BigradedStructure.from_equations(2, [algebra.parse("barphi0^barphi1"), algebra.zero()])
        verdict = integrability_check(B)
        self.assertFalse(verdict)
        self.assertEqual(verdict.message, "d(phi0) has (0,2)-part barphi0^barphi1")
        self.assertEqual(verdict.witness[0], 0)
        self.assertRaises(IntegrabilityError, lambda: B.split_operators())
        self.assertRaises(IntegrabilityError, lambda: dolbeault(B))
        self.assertRaises(ComplexError, lambda: bott_chern(B))

    def test_split_operators(self):
        B = h8_structure()
        delta, deltabar = split_operators(B)
        self.assertTrue(delta.squares_to_zero())
        self.assertTrue(deltabar.squares_to_zero())
        self.assertTrue(delta.anticommutes_with(deltabar))
        for k in range(B.algebra.n + 1):
            for mask in B.algebra.blades(k):
                x = B.algebra.element({mask: 1})
                self.assertEqual(delta(x) + deltabar(x), B.d(x))
                p, q = B.bidegree(mask)
                self.assertEqual(B.component(delta(x), p + 1, q), delta(x))
                self.assertEqual(B.component(deltabar(x), p, q + 1), deltabar(x))

    def test_h8(self):
        entry = find_entry("h8")
        B = h8_structure()
        D = dolbeault(B)
        BC = bott_chern(B)
        A = aeppli(B)
        self.assertEqual(D.totals(), entry.expected["Dolbeault"]["value"])
        self.assertEqual(BC.totals(), entry.expected["BottChern"]["value"])
        self.assertEqual(A.totals(), entry.expected["Aeppli"]["value"])
        self.assertEqual(BC.theory, "BottChern")
        for p in range(4):
            for q in range(4):
                self.assertEqual(D[p, q], D[3 - p, 3 - q])
                self.assertEqual(BC[p, q], A[3 - p, 3 - q])
                self.assertEqual(BC[p, q], BC[q, p])
        self.assertEqual(D[0, 0], 1)
        self.assertEqual(BC[3, 3], 1)

        derham = betti_numbers(entry.structure)
        for k in range(7):
            self.assertTrue(BC[k] + A[k] >= 2 * derham[k])

        comparison = frolicher_comparison(derham, D)
        self.assertTrue(comparison.inequality_holds)
        self.assertTrue(comparison.degenerates)
        self.assertEqual(comparison.tojson()["degrees"][1], {"degree": 1, "betti": 5, "dolbeault": 5, "equal": True})

    def test_representatives(self):
        B = h8_structure()
        D = dolbeault(B, representatives=True)
        _, deltabar = B.split_operators()
        for k in range(7):
            self.assertEqual(len(D.representatives[k]), D[k])
            for form in D.representatives[k]:
                self.assertFalse(deltabar(form))

    def test_h11(self):
        entry = find_entry("h11")
        betti = betti_numbers(entry.structure).totals()
        self.assertEqual(betti, find_entry("g_{6.N6}").expected["deRham"]["value"])
        self.assertEqual(entry.complex_structure.case_names, ["B > 1", "B < 1"])
        self.assertEqual(len(entry.complex_structure.bigraded(entry.structure)), 2)
        for case, point in (("B > 1", 2), ("B < 1", fractions.Fraction(1, 2))):
            B, = entry.complex_structure.bigraded(entry.structure, case)
            self.assertTrue(B.integrability())
            self.assertRaises(ParametricInputError, lambda: dolbeault(B))
            generic = dolbeault(B, generic=True)
            self.assertEqual(generic.totals(), entry.expected["Dolbeault"]["value"])
            self.assertEqual(generic.totals(), [1, 3, 6, 8, 6, 3, 1])
            for k, (h, b) in enumerate(zip(generic.totals(), betti)):
                self.assertTrue(h >= b, "Frolicher bound fails in degree {0}".format(k))
            self.assertIn(case, generic.flags)
            if generic.conditions is None or generic.conditions.satisfied_by({"B": point}):
                self.assertEqual(dolbeault(B.specialize({"B": point})).totals(), generic.totals())
        self.assertRaises(InputError, lambda: entry.complex_structure.bigraded(entry.structure, "B = 1"))

    def test_h11_conditions(self):
        entry = find_entry("h11")
        B, = entry.complex_structure.bigraded(entry.structure, "B < 1")
        self.assertEqual(B.flags, ("B < 1",))
        self.assertEqual([str(x) for x in B.inequations], ["B"])
        conditions = B.conditions
        self.assertEqual(conditions.conditions(), ["B != 0", "B < 1"])
        self.assertTrue(conditions.known_nonzero(Scalar.coerce("B", B.context)))
        self.assertFalse(conditions.satisfied_by({"B": 0}))
        self.assertTrue(conditions.satisfied_by({"B": fractions.Fraction(1, 2)}))
        generic = dolbeault(B, generic=True)
        self.assertIn("B", generic.conditions.tojson()["neq"])
        self.assertEqual(B.specialize({"B": 2}).inequations, ())
        self.assertRaises(InputError, lambda: B.specialize({"B": 0}))

    def test_json(self):
        B = find_entry("h11").complex_structure.bigraded(find_entry("h11").structure, "B > 1")[0]
        data = B.tojson()
        self.assertEqual(data["generators"], 3)
        self.assertEqual(data["params"], ["B"])
        self.assertEqual(data["flags"], ["B > 1"])
        self.assertEqual(data["neq"], ["B"])
        again = BigradedStructure.fromjson(data)
        self.assertEqual(again.images(), B.images())
        self.assertRaises(InputError, lambda: BigradedStructure.fromjson({"d": []}))
        self.assertRaises(InputError, lambda: BigradedStructure.fromjson({"generators": 0, "d": []}))
        self.assertRaises(InputError, lambda: BigradedStructure.fromjson({"generators": 1, "d": [["phi7", []]]}))
        self.assertRaises(InputError, lambda: BigradedStructure.fromjson({"generators": 1, "d": [["phi0", []], ["phi0", []]]}))
        self.assertRaises(InputError, lambda: BigradedStructure.fromjson("{not json"))
        self.assertRaises(InputError, lambda: BigradedStructure.fromjson({"generators": 1, "neq": "B", "d": []}))
