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

from liecohom.catalog import CatalogEntry
from liecohom.catalog import R4_NORMALIZATION
from liecohom.catalog import find_entry
from liecohom.exterior import DimensionError
from liecohom.fields import ParameterContext
from liecohom.lcs import *
from liecohom.lie import StructureConstants
from liecohom.lie import parse_salamon

def r4():
    return find_entry("r4").structure

def r4_families():
    families = lcs_families(r4())
    degenerate = [f for c, f in families if f.degenerate]
    nondegenerate = [f for c, f in families if not f.degenerate]
    return degenerate, nondegenerate

def r4_pairwise():
    S = r4()
    context = ParameterContext(["sigma"])
    theta = S.algebra.parse("-2*e3", context)
    omega = S.algebra.parse("e0^e3 + sigma*e1^e2", context)
    return EquivalenceProblem.pairwise(S, theta, omega, "sigma")

class TestLcs(unittest.TestCase):
    def runTest(self):
        pass

    def test_closed_one_forms(self):
        solution = closed_one_forms(r4())
        branch = solution.single()
        self.assertEqual(branch.free, ("r1",))
        self.assertEqual(str(branch.solution["theta3"]), "r1")
        self.assertEqual(str(branch.solution["theta0"]), "0")

    def test_families(self):
        degenerate, nondegenerate = r4_families()
        self.assertEqual(len(degenerate), 1)
        self.assertEqual(len(nondegenerate), 1)

        family = degenerate[0]
        self.assertEqual(str(family.theta), "r1*e3")
        self.assertFalse(family.conditions.satisfied_by({"r1": -2}))
        self.assertTrue(family.conditions.satisfied_by({"r1": 0}))
        self.assertFalse(family.verify())

        family = nondegenerate[0]
        self.assertEqual(str(family.theta), "-2*e3")
        self.assertEqual(str(family.omega), "r5*e0^e3 + r4*e1^e2 + r3*e1^e3 + r2*e2^e3")
        self.assertFalse(family.symplectic)
        self.assertEqual(family.volume.substitute({"r4": 1, "r5": 1}), 2)
        self.assertEqual(family.volume.substitute({"r4": 3, "r5": 5}), 30)
        self.assertTrue(family.verify())
        self.assertTrue(family.conditions.known_nonzero(family.volume))
        self.assertEqual(family.tojson()["theta"], "-2*e3")

        point = family.specialize({"r2": 0, "r3": 0, "r4": 1, "r5": 1})
        self.assertEqual(str(point.omega), "e0^e3 + e1^e2")
        self.assertTrue(point.verify())

    def test_symplectic(self):
        self.assertTrue(all(f.degenerate for c, f in symplectic_families(r4())))
        families = symplectic_families(parse_salamon("(0,0,12,0)"))
        self.assertTrue(any(not f.degenerate for c, f in families))
        for c, f in families:
            self.assertTrue(f.symplectic)

    def test_odd_dimension(self):
        self.assertRaises(DimensionError, lambda: lcs_families(parse_salamon("(0,0,12)")))
        self.assertRaises(DimensionError, lambda: symplectic_families(parse_salamon("(0,0,12)")))

    def test_normalization(self):
        degenerate, nondegenerate = r4_families()
        family = nondegenerate[0]
        normal = apply_normalization(family, R4_NORMALIZATION)
        self.assertEqual(str(normal.theta), "-2*e3")
        self.assertEqual(str(normal.omega), "e0^e3 + r4/r5^2*e1^e2")
        self.assertEqual(len(normal.normalizations), 1)
        self.assertTrue(normal.verify())

        same = apply_normalization(family, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        self.assertEqual(same.omega, family.omega)

        swap = [[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]]
        self.assertRaises(NormalizationError, lambda: apply_normalization(family, swap))
        unknown = [["1/r2", 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        self.assertRaises(NormalizationError, lambda: apply_normalization(family, unknown))
        self.assertRaises(DimensionError, lambda: apply_normalization(family, [[1, 0], [0, 1]]))

    def test_automorphism_ideal(self):
        P = r4_pairwise()
        self.assertEqual(P.parameters, ["sigma1", "sigma2"])
        self.assertEqual(len(P.variables), 18)
        self.assertEqual(P.variables[:2], ("a00", "a01"))
        generators = automorphism_ideal(P)
        self.assertEqual(len(generators), 24 + 4 + 6)

        S = StructureConstants(2)
        omega = S.algebra.parse("e0^e1")
        Q = EquivalenceProblem(S, S.algebra.zero(), omega, omega)
        generators = automorphism_ideal(Q)
        self.assertEqual(len(generators), 5)
        for g in generators:
            self.assertEqual(g(1, 0, 0, 1), 0)

    def test_equivalence(self):
        P = r4_pairwise()
        verdict = are_equivalent(P)
        self.assertTrue(verdict)
        self.assertEqual(verdict.status, "inequivalent")
        self.assertEqual(verdict.tojson()["witness"], "sigma1 - sigma2")
        self.assertIn("sigma1 - sigma2", verdict.basis.tojson())
        for f in ("a00 - 1", "a33 - 1", "a01", "a02", "a03"):
            self.assertTrue(verdict.basis.contains(f), f)
        # the pair criteria discard every S-pair of this ideal
        self.assertEqual(are_equivalent(P, 0).status, "inequivalent")

    def test_undecided(self):
        S = StructureConstants(2)
        omega = S.algebra.parse("e0^e1")
        verdict = are_equivalent(EquivalenceProblem(S, S.algebra.zero(), omega, omega))
        self.assertFalse(verdict)
        self.assertEqual(verdict.status, "undecided")
        self.assertNotIn("witness", verdict.tojson())

    def test_report(self):
        report = classify_report(find_entry("r4"))
        self.assertEqual(report["algebra"], "r_4")
        self.assertTrue(report["unimodular"].startswith("false"))
        self.assertEqual(len(report["families"]), 1)
        self.assertEqual(len(report["degenerate"]), 1)
        self.assertEqual(report["symplectic"], [])
        self.assertEqual(report["families"][0]["omega"], "r5*e0^e3 + r4*e1^e2 + r3*e1^e3 + r2*e2^e3")
        self.assertEqual(len(report["normalized"]), 1)
        self.assertEqual(report["normalized"][0]["omega"], "e0^e3 + r4/r5^2*e1^e2")
        self.assertEqual(report["normalized"][0]["theta"], "-2*e3")
        self.assertEqual(report["equivalence"]["status"], "inequivalent")
        self.assertEqual(report["equivalence"]["witness"], "sigma1 - sigma2")

    def test_report_symplectic(self):
        report = classify_report(CatalogEntry("h_3+R", parse_salamon("(0,0,12,0)", 4)))
        self.assertTrue(report["unimodular"].startswith("true"))
        self.assertEqual(report["normalized"], [])
        self.assertNotIn("equivalence", report)
        self.assertTrue(len(report["symplectic"]) >= 1)
        for family in report["symplectic"]:
            self.assertEqual(family["theta"], "0")
            self.assertFalse(family["degenerate"])
            self.assertNotEqual(family["volume"], "0")

        symplectic = [f for c, f in lcs_families(parse_salamon("(0,0,12,0)", 4)) if f.symplectic and not f.degenerate]
        self.assertTrue(len(symplectic) >= 1)
        for family in symplectic:
            self.assertTrue(family.verify())
