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

"""Built-in Lie algebras: the six-dimensional nilpotent table, h8 with the standard J, r_4 and the h_11 complex family."""

import difflib
import logging

import liecohom.complexstructure
import liecohom.lie
import liecohom.linalg
import liecohom.util

logger = logging.getLogger(__name__)

__all__ = ["CatalogEntry", "ComplexStructureData", "UnknownAlgebraError", "load_catalog", "find_entry", "compute_all", "DEFAULT_THREADS"]

DEFAULT_THREADS = 4

class UnknownAlgebraError(liecohom.util.InputError):
    pass

################################################################ data

# {(J, K): {M: c}} means c contributes to d e^M on e^J ^ e^K (negated when J > K)

NILPOTENT_6 = [
    ("g_{6.N2}", {(0, 4): {1: 1}, (0, 5): {2: 1}, (0, 2): {3: 1}, (0, 3): {4: 1}}, [1, 2, 3, 4, 3, 2, 1]),
    ("g_{6.N19}", {(5, 2): {1: 1}, (0, 4): {1: 1}, (0, 5): {2: 1, 3: -1}, (0, 2): {3: 1}, (0, 3): {4: 1}}, [1, 2, 3, 4, 3, 2, 1]),
    ("g_{6.N11}", {(5, 2): {1: 1}, (0, 5): {2: 1, 3: -1}, (0, 2): {3: 1}, (0, 3): {4: 1}}, [1, 2, 4, 6, 4, 2, 1]),
    ("g_{6.N18}^{1}", {(2, 4): {0: 1, 1: 1}, (0, 2): {1: 1}, (0, 4): {3: 1}, (4, 3): {5: 1}, (1, 2): {5: 1}}, [1, 2, 4, 6, 4, 2, 1]),
    ("g_{6.N18}^{-1}", {(4, 2): {0: 1, 1: 1}, (2, 0): {1: 1}, (4, 0): {3: 1}, (4, 3): {5: 1}, (2, 1): {5: 1}}, [1, 2, 4, 6, 4, 2, 1]),
    ("g_{6.N20}", {(5, 3): {1: 1}, (0, 4): {1: 1}, (0, 5): {2: 2}, (0, 2): {3: "1/2"}, (0, 3): {4: 1}, (5, 2): {4: "1/2"}}, [1, 2, 3, 4, 3, 2, 1]),
    ("g_{6.N6}", {(0, 2): {1: 1}, (5, 3): {1: "1/2"}, (0, 5): {2: 1}, (0, 3): {4: "1/2"}}, [1, 3, 6, 8, 6, 3, 1]),
    ("g_{6.N7}", {(0, 3): {1: 1}, (2, 0): {3: 1}, (2, 4): {5: 1}}, [1, 3, 6, 8, 6, 3, 1]),
    ("g_{6.N1}", {(0, 3): {1: 1}, (0, 2): {3: 1}, (0, 4): {5: 1}}, [1, 3, 6, 8, 6, 3, 1]),
    ("g_{6.N3}", {(0, 4): {1: 1}, (0, 2): {3: 1}, (2, 4): {5: 1}}, [1, 3, 8, 12, 8, 3, 1]),
    ("g_{6.N17}", {(0, 4): {3: 1}, (2, 1): {3: 1}, (0, 5): {4: 1}, (0, 2): {5: 1}}, [1, 3, 5, 6, 5, 3, 1]),
    ("g_{6.N15}", {(0, 4): {3: 1}, (2, 1): {3: 1}, (2, 5): {3: 1}, (0, 5): {4: 1}, (0, 2): {5: 1}}, [1, 3, 5, 6, 5, 3, 1]),
    ("g_{5.6}+g_1", {(0, 4): {3: 1}, (2, 5): {3: 1}, (0, 5): {4: 1}, (0, 2): {5: 1}}, [1, 3, 5, 6, 5, 3, 1]),
    ("g_{5.2}+g_1", {(0, 4): {3: 1}, (0, 5): {4: 1}, (0, 2): {5: 1}}, [1, 3, 5, 6, 5, 3, 1]),
    ("g_{6.N9}", {(0, 5): {1: 1}, (0, 4): {3: 1}, (5, 2): {3: 1}, (0, 2): {5: 1}}, [1, 3, 5, 6, 5, 3, 1]),
    ("g_{6.N8}", {(4, 3): {1: 1}, (4, 2): {1: 1}, (0, 4): {2: 1}, (0, 2): {5: 1}}, [1, 3, 5, 6, 5, 3, 1]),
    ("g_{6.N16}", {(0, 3): {1: 1}, (2, 5): {1: 1}, (0, 5): {3: 1}, (2, 4): {3: 1}, (0, 4): {5: 1}}, [1, 3, 4, 4, 4, 3, 1]),
    ("g_{6.N10}", {(0, 5): {1: 1}, (2, 4): {1: "1/2"}, (0, 4): {3: 1}, (5, 2): {3: "1/2"}, (0, 2): {5: "1/2"}}, [1, 3, 5, 6, 5, 3, 1]),
    ("g_{4.1}+2g_1", {(0, 3): {1: 1}, (0, 2): {3: 1}}, [1, 4, 7, 8, 7, 4, 1]),
    ("g_{5.5}+g_1", {(0, 4): {3: 1}, (2, 5): {3: 1}, (0, 2): {5: 1}}, [1, 4, 7, 8, 7, 4, 1]),
    ("g_{6.N4}", {(0, 4): {3: 1}, (2, 1): {3: 1}, (0, 2): {5: 1}}, [1, 4, 8, 10, 8, 4, 1]),
    ("2g_{3.1}", {(0, 4): {1: 1}, (2, 5): {3: 1}}, [1, 4, 8, 10, 8, 4, 1]),
    ("g_{5.1}+g_1", {(0, 4): {1: 1}, (0, 2): {3: 1}}, [1, 4, 9, 12, 9, 4, 1]),
    ("g_{6.N5}", {(0, 5): {1: 1}, (2, 4): {1: 1}, (0, 4): {3: 1}, (5, 2): {3: 1}}, [1, 4, 8, 10, 8, 4, 1]),
    ("g_{3.1}+3g_1", {(0, 2): {1: 1}}, [1, 5, 11, 14, 11, 5, 1]),
    ("6g_1", {}, [1, 6, 15, 20, 15, 6, 1]),
    ]

ALIASES = {
    "g_{3.1}+3g_1": ["h8", "h_8"],
    }

# J on 1-forms, J(e_j) = sum_k J[k][j] e_k, with phi0 = e1 - i e3, phi1 = e2 - i e0, phi2 = e4 - i e5
H8_J = [[0, 0, 1, 0, 0, 0],
        [0, 0, 0, -1, 0, 0],
        [-1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 1, 0]]

# the standard J, J(e_{2k}) = e_{2k+1}, used with h8 presented as d e0 = -e2^e3 and phi0 = e0 - i e1, phi1 = e2 - i e3, phi2 = e4 - i e5
STANDARD_J = [[0, -1, 0, 0, 0, 0],
              [1, 0, 0, 0, 0, 0],
              [0, 0, 0, -1, 0, 0],
              [0, 0, 1, 0, 0, 0],
              [0, 0, 0, 0, 0, -1],
              [0, 0, 0, 0, 1, 0]]

def _h11_case(flag, c):
    return {"generators": 3,
            "params": ["B"],
            "neq": ["B"],
            "flags": [flag],
            "d": [["phi1", [["1", "phi0", "barphi0"]]],
                  ["phi2", [["1", "phi0", "phi1"], ["B", "phi0", "barphi1"], [c, "phi1", "barphi0"]]]]}

H11_CASES = [("B > 1", _h11_case("B > 1", "B - 1")),
             ("B < 1", _h11_case("B < 1", "1 - B"))]

R4_NORMALIZATION = [["1/r5", "0", "0", "0"],
                    ["0", "1/r5", "0", "0"],
                    ["0", "0", "1/r5", "0"],
                    ["0", "r2/r4", "-r3/r4", "1"]]

################################################################ entries

class ComplexStructureData(object):
    """A complex structure either as a real J with a coframe choice or as (phi, barphi) equations per case."""

    def __init__(self, J=None, chosen=None, cases=None):
        if (J is None) == (cases is None):
            raise TypeError("give either J or cases")
        self.J = J
        self.chosen = chosen
        self.cases = list(cases) if cases is not None else None

    @property
    def case_names(self):
        return [name for name, doc in self.cases] if self.cases is not None else []

    def bigraded(self, structure, case=None):
        """The BigradedStructure for one case (all cases when case is None)."""
        if self.J is not None:
            if case is not None:
                raise liecohom.util.InputError("this complex structure has no cases; got {0}".format(repr(case)))
            return [liecohom.complexstructure.transport_structure_equations(structure, liecohom.complexstructure.coframe_from_j(self.J, self.chosen))]
        selected = [doc for name, doc in self.cases if case is None or name == case]
        if len(selected) == 0:
            raise liecohom.util.InputError("case must be one of {0}, not {1}".format(", ".join(repr(n) for n in self.case_names), repr(case)))
        return [liecohom.complexstructure.BigradedStructure.fromjson(doc) for doc in selected]

    def tojson(self):
        if self.J is not None:
            return {"J": [[str(x) for x in row] for row in liecohom.linalg.asmatrix(self.J)], "chosen": list(self.chosen) if self.chosen is not None else None}
        return {"cases": dict(self.cases)}

class CatalogEntry(liecohom.util.JSONable):
    def __init__(self, name, structure, aliases=(), expected=None, complex_structure=None, lcs=None):
        self.name = name
        self.structure = structure
        self.aliases = tuple(aliases)
        self.expected = dict(expected or {})
        self.complex_structure = complex_structure
        self.lcs = lcs

    def names(self):
        return (self.name,) + self.aliases

    def __repr__(self):
        return "<CatalogEntry {0}>".format(self.name)

    def tojson(self):
        out = {"name": self.name, "aliases": list(self.aliases), "structure": self.structure.tojson(), "expected": self.expected}
        try:
            out["salamon"] = self.structure.render_salamon()
        except liecohom.util.InputError:
            pass
        if self.complex_structure is not None:
            out["complex_structure"] = self.complex_structure.tojson()
        return out

def _expected(value, provenance):
    return {"value": value, "provenance": provenance}

def _build():
    out = []
    for name, dictionary, betti in NILPOTENT_6:
        expected = {"deRham": _expected(betti, "nilpotent Poincare sweep")}
        complex_structure = None
        if name == "g_{3.1}+3g_1":
            expected["Dolbeault"] = _expected([1, 5, 11, 14, 11, 5, 1], "Dolbeault of h8")
            expected["BottChern"] = _expected([1, 4, 10, 16, 14, 6, 1], "Bott-Chern of h8")
            expected["Aeppli"] = _expected([1, 6, 14, 16, 10, 4, 1], "Aeppli of h8")
            complex_structure = ComplexStructureData(J=H8_J, chosen=(1, 2, 4))
        expected["unimodular"] = _expected(True, "nilpotent")
        out.append(CatalogEntry(name, liecohom.lie.StructureConstants.from_sage(6, dictionary), ALIASES.get(name, ()), expected, complex_structure))

    h8 = [entry for entry in out if entry.name == "g_{3.1}+3g_1"][0]
    out.append(CatalogEntry("h_8^{std}", liecohom.lie.StructureConstants.from_sage(6, {(2, 3): {0: -1}}), ("h8std",), dict(h8.expected),
                            ComplexStructureData(J=STANDARD_J, chosen=(0, 2, 4))))

    r4 = liecohom.lie.parse_salamon("(14+24,24+34,34,0)", 4)
    out.append(CatalogEntry("r_4", r4, ("r4",),
                            {"unimodular": _expected(False, "d(e0^e1^e2) = 3*e0^e1^e2^e3"),
                             "lcs": _expected({"theta": "-2*e3", "omega": "e0^e3 + sigma*e1^e2", "inequivalent": "sigma1 - sigma2"}, "lcs classification of r4")},
                            lcs={"normalizations": [R4_NORMALIZATION],
                                 "family": {"theta": "-2*e3", "omega": "e0^e3 + sigma*e1^e2", "parameter": "sigma"}}))

    h11 = liecohom.lie.parse_salamon("(0,0,0,12,13,14+23)", 6)
    out.append(CatalogEntry("h_{11}", h11, ("h11",),
                            {"Dolbeault": _expected([1, 3, 6, 8, 6, 3, 1], "generic B, both cases; equals the Betti numbers of g_{6.N6}"),
                             "unimodular": _expected(True, "nilpotent")},
                            ComplexStructureData(cases=H11_CASES)))
    return out

_catalog = None

def load_catalog():
    """Every entry, Jacobi-checked; built once."""
    global _catalog
    if _catalog is None:
        entries = _build()
        for entry in entries:
            verdict = liecohom.lie.jacobi_check(entry.structure)
            if not verdict:
                raise liecohom.lie.JacobiError("catalog entry {0} is not a Lie algebra: {1}".format(entry.name, verdict.message), verdict.witness)
        logger.debug("loaded %d catalog entries", len(entries))
        _catalog = entries
    return list(_catalog)

def find_entry(name):
    entries = load_catalog()
    for entry in entries:
        if name in entry.names():
            return entry
    folded = name.replace(" ", "").lower()
    for entry in entries:
        if folded in [x.replace(" ", "").lower() for x in entry.names()]:
            return entry
    known = [x for entry in entries for x in entry.names()]
    close = difflib.get_close_matches(name, known, n=3)
    raise UnknownAlgebraError("unknown algebra {0}{1}".format(repr(name), "; did you mean {0}?".format(", ".join(close)) if len(close) > 0 else ""))

def compute_all(function, entries=None, executor=None):
    """[(entry, function(entry))] in input order; any submit-style executor, synchronous by default."""
    if entries is None:
        entries = load_catalog()
    if executor is None:
        executor = liecohom.util.SingleThreadExecutor()
    futures = [(entry, executor.submit(function, entry)) for entry in entries]
    return [(entry, future.result()) for entry, future in futures]
