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

import io
import json
import os
import shutil
import tempfile
import unittest
from unittest import mock

from liecohom.cli import attach_values
from liecohom.cli import main

def run(*argv):
    with mock.patch("sys.stdout", new_callable=io.StringIO) as out, mock.patch("sys.stderr", new_callable=io.StringIO) as err:
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()

class TestCommandLine(unittest.TestCase):
    def runTest(self):
        pass

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def write(self, name, doc):
        path = os.path.join(self.directory, name)
        with open(path, "w") as file:
            json.dump(doc, file)
        return path

    def test_betti(self):
        code, out, err = run("betti", "g_{3.1}+3g_1", "--format", "json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["theory"], "deRham")
        self.assertEqual([data["dims"][str(k)] for k in range(7)], [1, 5, 11, 14, 11, 5, 1])

        code, out, err = run("betti", "(0,0,12)")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "{0: 1, 1: 2, 2: 2, 3: 1}")

    def test_unimodular(self):
        code, out, err = run("unimodular", "r_4")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "false; witness d(e0^e1^e2) = 3*e0^e1^e2^e3")
        code, out, err = run("jacobi", "(0,0,12)", "--format", "json")
        self.assertEqual(json.loads(out), {"jacobi": True, "witness": None})

    def test_input_errors(self):
        code, out, err = run("betti", "no-such-algebra")
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith("error: unknown algebra"))
        code, out, err = run("betti", "(0,0,1)")
        self.assertEqual(code, 2)
        code, out, err = run("dolbeault", "h11", "--case", "B = 1")
        self.assertEqual(code, 2)
        code, out, err = run()
        self.assertEqual(code, 2)

    def test_catalog(self):
        code, out, err = run("catalog", "list")
        self.assertEqual(code, 0)
        self.assertEqual(len(out.strip().splitlines()), 29)
        self.assertIn("g_{3.1}+3g_1 (h8, h_8)", out)
        code, out, err = run("catalog", "show", "r4", "--format", "json")
        self.assertEqual(json.loads(out)["name"], "r_4")
        code, out, err = run("catalog", "show")
        self.assertEqual(code, 2)

    def test_poincare(self):
        code, out, err = run("poincare", "6g_1")
        self.assertEqual(out.strip(), "x^6 + 6*x^5 + 15*x^4 + 20*x^3 + 15*x^2 + 6*x + 1")
        code, out, err = run("poincare", "--all", "--jobs", "2", "--format", "json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(len(data), 29)
        self.assertEqual(data["g_{6.N16}"], "x^6 + 3*x^5 + 4*x^4 + 4*x^3 + 4*x^2 + 3*x + 1")

    def test_novikov(self):
        code, out, err = run("novikov", "r4", "--theta", "-2*e3", "--format", "json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual([data["dims"][str(k)] for k in range(5)], [0, 0, 1, 1, 0])

        code, again, err = run("novikov", "r4", "--theta=-2*e3", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(again), data)

    def test_attach_values(self):
        self.assertEqual(attach_values(["novikov", "r4", "--theta", "-2*e3", "-v"]), ["novikov", "r4", "--theta=-2*e3", "-v"])
        self.assertEqual(attach_values(["novikov", "r4", "--theta", "e3"]), ["novikov", "r4", "--theta", "e3"])
        self.assertEqual(attach_values(["novikov", "r4", "--theta", "--format", "json"]), ["novikov", "r4", "--theta", "--format", "json"])
        self.assertEqual(attach_values(["novikov", "r4", "--theta", "-v"]), ["novikov", "r4", "--theta", "-v"])

    def test_bigraded(self):
        code, out, err = run("bott-chern", "h8", "--format", "json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual([data["dims"][str(k)] for k in range(7)], [1, 4, 10, 16, 14, 6, 1])
        self.assertEqual(data["bigraded"]["0,0"], 1)

        code, out, err = run("dolbeault", "h8std", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual([json.loads(out)["dims"][str(k)] for k in range(7)], [1, 5, 11, 14, 11, 5, 1])

        code, out, err = run("frolicher", "h8")
        self.assertEqual(out.strip(), "degenerates at the first page: true")

        code, out, err = run("dolbeault", "h11", "--case", "B > 1")
        self.assertEqual(code, 2)
        code, out, err = run("dolbeault", "h11", "--case", "B > 1", "--generic", "--format", "json")
        self.assertEqual(code, 0)
        self.assertIn("B > 1", json.loads(out)["flags"])

    def test_json_files(self):
        path = self.write("heisenberg.json", {"dim": 3, "params": ["a"], "d": [["e2", [["a", 0, 1]]]]})
        code, out, err = run("betti", path)
        self.assertEqual(code, 2)
        self.assertIn("--generic", err)
        code, out, err = run("betti", path, "--generic", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["dims"], {"0": 1, "1": 2, "2": 2, "3": 1})

        path = self.write("broken.json", {"dim": 3})
        code, out, err = run("betti", path)
        self.assertEqual(code, 2)

    def test_groebner(self):
        path = self.write("ideal.json", {"variables": ["x", "y"], "order": "degrevlex", "generators": ["x^2 + y^2", "x*y"], "membership": ["y^3", "x"]})
        code, out, err = run("groebner", "--ideal", path, "--format", "json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(set(data["basis"]), set(["x^2 + y^2", "x*y", "y^3"]))
        self.assertEqual(data["membership"], {"y^3": True, "x": False})

        code, out, err = run("groebner", "--ideal", path, "--pair-budget", "1")
        self.assertEqual(code, 1)
        self.assertTrue(err.startswith("computation failed"))

        code, out, err = run("groebner", "--ideal", self.write("bad.json", {"generators": []}))
        self.assertEqual(code, 2)
