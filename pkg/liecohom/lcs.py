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

"""Locally conformally symplectic structures: Lee forms, parametric families, normalization and equivalence."""

import logging

import liecohom.exterior
import liecohom.fields
import liecohom.groebner
import liecohom.lie
import liecohom.linalg
import liecohom.parametric
import liecohom.util

logger = logging.getLogger(__name__)

__all__ = ["LcsStructure", "EquivalenceProblem", "EquivalenceVerdict", "NormalizationError", "closed_one_forms", "lcs_families", "symplectic_families", "apply_normalization", "automorphism_ideal", "are_equivalent", "classify_report"]

class NormalizationError(liecohom.util.InputError):
    def __init__(self, message, witness=None):
        super(NormalizationError, self).__init__(message)
        self.witness = witness

def _require_lie(S):
    if not isinstance(S, liecohom.lie.StructureConstants):
        raise TypeError("expected StructureConstants, not {0}".format(repr(S)))
    verdict = liecohom.lie.jacobi_check(S)
    if not verdict:
        raise liecohom.lie.JacobiError("not a Lie algebra: {0}".format(verdict.message), verdict.witness)

def _form_context(*forms):
    context = liecohom.fields.EMPTY
    for form in forms:
        for x in form.terms.values():
            context = context.union(x.context)
    return context

################################################################ structures

class LcsStructure(liecohom.util.JSONable):
    """θ closed, dΩ = θ∧Ω, and Ω^{n/2} nonzero on the branch described by conditions."""

    def __init__(self, structure, theta, omega, conditions=None, degenerate=False, normalizations=()):
        self._structure = structure
        self._theta = theta.compact()
        self._omega = omega.compact()
        if conditions is None:
            conditions = liecohom.parametric.ConditionSet(_form_context(theta, omega))
        self._conditions = conditions
        self._degenerate = degenerate
        self._normalizations = tuple(normalizations)
        self._volume = None

    @property
    def structure(self):
        return self._structure

    @property
    def theta(self):
        return self._theta

    @property
    def omega(self):
        return self._omega

    @property
    def conditions(self):
        return self._conditions

    @property
    def degenerate(self):
        return self._degenerate

    @property
    def symplectic(self):
        return not self._theta

    @property
    def normalizations(self):
        return self._normalizations

    @property
    def volume(self):
        """Coefficient of the volume blade in Ω^{n/2}."""
        if self._volume is None:
            algebra = self._structure.algebra
            top = self._omega ** (algebra.n // 2)
            self._volume = top.coefficient_of(algebra.volume()).compact()
        return self._volume

    def parameters(self):
        names = set(self._theta.parameters()).union(self._omega.parameters())
        return tuple(n for n in _form_context(self._theta, self._omega).names if n in names)

    def verify(self):
        d = self._structure.coboundary()
        for name, form in (("d(theta)", d(self._theta)), ("d(Omega) - theta^Omega", d(self._omega) - self._theta.wedge(self._omega))):
            for mask, x in form.terms.items():
                if not self._conditions.is_zero(x):
                    return liecohom.util.Verdict(False, (name, mask, x), "{0} has coefficient {1} on {2}".format(name, str(x), self._structure.algebra.blade_str(mask)))
        if not self._conditions.known_nonzero(self.volume):
            return liecohom.util.Verdict(False, self.volume, "Omega^{0} has volume coefficient {1}, not known to be nonzero".format(self._structure.n // 2, str(self.volume)))
        return liecohom.util.Verdict(True)

    def specialize(self, assignment):
        return LcsStructure(self._structure, self._theta.substitute(assignment), self._omega.substitute(assignment), None, self._degenerate, self._normalizations)

    def __repr__(self):
        return "<LcsStructure theta={0} Omega={1}{2}>".format(str(self._theta), str(self._omega), " degenerate" if self._degenerate else "")

    def __str__(self):
        out = "theta = {0}\nOmega = {1}".format(str(self._theta), str(self._omega))
        if self._degenerate:
            return out + "\ndegenerate: Omega^{0} = 0".format(self._structure.n // 2)
        return out + "\nsuch that {0} != 0".format(str(self.volume))

    def tojson(self):
        out = {"theta": str(self._theta), "omega": str(self._omega), "conditions": self._conditions.tojson(), "degenerate": self._degenerate}
        if not self._degenerate:
            out["volume"] = str(self.volume)
        if len(self._normalizations) > 0:
            out["normalizations"] = [[[str(x) for x in row] for row in mat] for mat in self._normalizations]
        return out

################################################################ pipeline

def closed_one_forms(S, namer=None):
    """The generic closed 1-form: dθ = 0 solved in θ0..θ{n-1}."""
    _require_lie(S)
    theta, unknowns, context = liecohom.parametric.generic_form(S.algebra, 1, "theta")
    d = S.coboundary()
    solution = liecohom.parametric.solve_form_equations([d(theta)], unknowns, namer=namer)
    logger.debug("closed 1-forms on %d generators: %s", S.n, "; ".join(str(b) for b in solution))
    return solution

def _families(S, theta, conditions, namer, twisted):
    omega, unknowns, context = liecohom.parametric.generic_form(S.algebra, 2, "omega")
    if twisted:
        equation = liecohom.lie.TwistedCoboundary(S.coboundary(), theta)(omega)
    else:
        equation = S.coboundary()(omega)
    params = [n for n in theta.parameters()]
    solution = liecohom.parametric.solve_form_equations([equation], unknowns, params=params, conditions=conditions, namer=namer)
    out = []
    for branch in solution:
        Omega = liecohom.parametric.simplify_form(omega, branch)
        lee = liecohom.parametric.simplify_form(theta, branch.substitutions) if len(branch.substitutions) > 0 else theta
        family = LcsStructure(S, lee, Omega, branch.conditions)
        volume = family.volume
        if branch.conditions.is_zero(volume):
            logger.info("branch %s is degenerate", str(branch.conditions))
            out.append((branch.conditions, LcsStructure(S, lee, Omega, branch.conditions, True)))
            continue
        nondegenerate = branch.conditions.with_inequations([volume])
        if not nondegenerate.is_consistent():
            out.append((branch.conditions, LcsStructure(S, lee, Omega, branch.conditions, True)))
            continue
        out.append((branch.conditions, LcsStructure(S, lee, Omega, nondegenerate)))
    return out

def lcs_families(S, namer=None):
    """Per Lee-form branch, the solutions of d_θΩ = 0 with their nondegeneracy condition."""
    _require_lie(S)
    if S.n % 2 != 0:
        raise liecohom.exterior.DimensionError("lcs structures need even dimension, not {0}".format(S.n))
    if namer is None:
        namer = liecohom.parametric.Namer()
    closed = closed_one_forms(S, namer)
    generic, _, _ = liecohom.parametric.generic_form(S.algebra, 1, "theta")
    out = []
    for branch in closed:
        theta = liecohom.parametric.simplify_form(generic, branch)
        out.extend(_families(S, theta, branch.conditions, namer, True))
    logger.info("%d lcs branches, %d degenerate", len(out), sum(1 for c, f in out if f.degenerate))
    return out

def symplectic_families(S, namer=None):
    """The θ = 0 case: closed 2-forms with their nondegeneracy condition."""
    _require_lie(S)
    if S.n % 2 != 0:
        raise liecohom.exterior.DimensionError("symplectic structures need even dimension, not {0}".format(S.n))
    if namer is None:
        namer = liecohom.parametric.Namer()
    return _families(S, S.algebra.zero(), None, namer, False)

def apply_normalization(family, mat):
    """Transports (θ, Ω) by the automorphism lifted from mat; mat may refer to the family's parameters."""
    S = family.structure
    context = _form_context(family.theta, family.omega).union(family.conditions.context)
    matrix = liecohom.linalg.asmatrix(mat, context)
    if matrix.shape != (S.n, S.n):
        raise liecohom.exterior.DimensionError("normalization of {0} generators needs a {0}x{0} matrix, not {1}".format(S.n, matrix.shape))
    conditions = family.conditions
    for x in matrix.flat:
        for q in (x.denominators() if not x.is_constant() else []):
            denominator = liecohom.fields.Scalar.from_polynomial(q, x.context)
            if not conditions.known_nonzero(denominator):
                raise NormalizationError("matrix entry {0} has denominator {1}, not known to be nonzero".format(str(x), str(denominator)), x)
    phi = liecohom.exterior.LinearMorphism(S.algebra, S.algebra, matrix)
    d = S.coboundary()
    for j in range(S.n):
        e = S.algebra.gen(j)
        difference = d(phi(e)) - phi(d(e))
        for mask, x in sorted(difference.terms.items()):
            if not conditions.is_zero(x):
                raise NormalizationError("not an automorphism: d(Phi(e{0})) - Phi(d(e{0})) has coefficient {1} on {2}".format(j, str(x), S.algebra.blade_str(mask)), (j, mask, x))
    det = phi.determinant()
    if not conditions.known_nonzero(det):
        raise NormalizationError("determinant {0} is not known to be nonzero".format(str(det)), det)
    logger.debug("normalization with determinant %s", str(det))
    return LcsStructure(S, phi(family.theta), phi(family.omega), conditions, family.degenerate, family.normalizations + (matrix,))

################################################################ equivalence

class EquivalenceProblem(object):
    """Is there an automorphism Ψ with Ψθ = θ and ΨΩ1 = Ω2? Unknowns a_jk, Ψ(e_j) = Σ_k a_kj e_k."""

    def __init__(self, structure, theta, omega1, omega2, assumptions=None, prefix="a"):
        self.structure = structure
        self.theta = theta
        self.omega1 = omega1
        self.omega2 = omega2
        n = structure.n
        separator = "_" if n > 10 else ""
        self.unknowns = ["{0}{1}{2}{3}".format(prefix, j, separator, k) for j in range(n) for k in range(n)]
        family = list(_form_context(theta, omega1, omega2).names)
        clash = [name for name in family if name in self.unknowns]
        if len(clash) > 0:
            raise liecohom.util.InputError("family parameters {0} clash with morphism unknowns".format(", ".join(clash)))
        self.parameters = family
        if assumptions is None:
            assumptions = liecohom.parametric.ConditionSet(liecohom.fields.ParameterContext(family))
        self.assumptions = assumptions
        self.order = liecohom.groebner.MonomialOrder(self.unknowns + family)

    @staticmethod
    def pairwise(structure, theta, omega, parameter, suffixes=("1", "2")):
        """Ω with parameter σ against itself with σ renamed σ1, σ2, assuming σ1, σ2 and σ1 − σ2 nonzero."""
        names = [parameter + s for s in suffixes]
        context = liecohom.fields.ParameterContext(names)
        s1, s2 = (liecohom.fields.Scalar.parameter(context, x) for x in names)
        omega1 = omega.substitute({parameter: s1})
        omega2 = omega.substitute({parameter: s2})
        assumptions = liecohom.parametric.ConditionSet(context, (), [s1, s2, s1 - s2])
        return EquivalenceProblem(structure, theta, omega1, omega2, assumptions)

    @property
    def variables(self):
        return self.order.variables

    def morphism(self):
        context = liecohom.fields.ParameterContext(self.unknowns)
        n = self.structure.n
        matrix = liecohom.linalg.zeros(n, n)
        for j in range(n):
            for k in range(n):
                matrix[j, k] = liecohom.fields.Scalar.parameter(context, self.unknowns[j * n + k])
        return liecohom.exterior.LinearMorphism(self.structure.algebra, self.structure.algebra, matrix)

    def __repr__(self):
        return "<EquivalenceProblem in {0} variables>".format(len(self.order.variables))

def automorphism_ideal(P):
    """Coefficients of d∘Ψ − Ψ∘d on generators, of Ψθ − θ and of ΨΩ1 − Ω2, as polynomials (zeros kept)."""
    algebra = P.structure.algebra
    psi = P.morphism()
    d = P.structure.coboundary()
    out = []
    for j in range(algebra.n):
        e = algebra.gen(j)
        difference = d(psi(e)) - psi(d(e))
        out.extend(difference.coefficient_of(mask) for mask in algebra.blades(2))
    difference = psi(P.theta) - P.theta
    out.extend(difference.coefficient_of(mask) for mask in algebra.blades(1))
    difference = psi(P.omega1) - P.omega2
    out.extend(difference.coefficient_of(mask) for mask in algebra.blades(2))
    logger.debug("automorphism ideal: %d generators, %d nonzero", len(out), sum(1 for x in out if x))
    return [P.order.convert(x) for x in out]

class EquivalenceVerdict(liecohom.util.JSONable):
    INEQUIVALENT = "inequivalent"
    UNDECIDED = "undecided"

    def __init__(self, status, basis, witness=None):
        self.status = status
        self.basis = basis
        self.witness = witness

    def __bool__(self):
        return self.status == self.INEQUIVALENT

    __nonzero__ = __bool__

    def __repr__(self):
        return "<EquivalenceVerdict {0}>".format(self.status)

    def __str__(self):
        if self.status == self.INEQUIVALENT:
            return "inequivalent; witness {0} in the ideal".format(self.basis.order.render(self.witness))
        return "undecided; reduced basis {0}".format(str(self.basis))

    def tojson(self):
        out = {"status": self.status, "basis": self.basis.tojson()}
        if self.witness is not None:
            out["witness"] = self.basis.order.render(self.witness)
        return out

def are_equivalent(P, budget=liecohom.groebner.DEFAULT_PAIR_BUDGET):
    """Inequivalent when the ideal holds a nonzero polynomial in the family parameters alone; otherwise undecided."""
    basis = liecohom.groebner.Ideal(automorphism_ideal(P), P.order).reduced(budget)
    unknowns = set(range(len(P.unknowns)))
    for g in basis:
        if g.is_ground:
            return EquivalenceVerdict(EquivalenceVerdict.INEQUIVALENT, basis, g)
        used = set(k for monom in g.monoms() for k, e in enumerate(monom) if e)
        if len(used.intersection(unknowns)) > 0:
            continue
        value = liecohom.fields.Scalar.from_polynomial(g, liecohom.fields.ParameterContext(P.order.variables)).compact()
        if P.assumptions.known_nonzero(value):
            logger.info("inequivalent: %s lies in the ideal", P.order.render(g))
            return EquivalenceVerdict(EquivalenceVerdict.INEQUIVALENT, basis, g)
    return EquivalenceVerdict(EquivalenceVerdict.UNDECIDED, basis)

################################################################ report

def classify_report(entry, budget=liecohom.groebner.DEFAULT_PAIR_BUDGET):
    """The full pipeline on a catalog entry, as JSON-ready data."""
    S = entry.structure
    closed = closed_one_forms(S, liecohom.parametric.Namer())
    out = {"algebra": entry.name, "closed_one_forms": closed.tojson()}
    out["unimodular"] = str(liecohom.lie.unimodularity_check(S))
    families = []
    degenerate = []
    symplectic = []
    # own Namer: catalog normalizations refer to the family parameters as lcs_families names them
    for conditions, family in lcs_families(S, liecohom.parametric.Namer()):
        if family.degenerate:
            degenerate.append(family.tojson())
        elif family.symplectic:
            symplectic.append(family.tojson())
        else:
            families.append(family)
    normalized = []
    data = entry.lcs or {}
    for mat in data.get("normalizations", []):
        applied = 0
        for family in families:
            try:
                normalized.append(apply_normalization(family, mat).tojson())
                applied += 1
            except (liecohom.util.InputError, liecohom.util.ComputationError) as err:
                logger.debug("normalization does not apply to %s: %s", repr(family), err)
        if applied == 0:
            logger.warning("%s: catalog normalization %s applies to none of %d families", entry.name, mat, len(families))
    out["families"] = [f.tojson() for f in families]
    out["degenerate"] = degenerate
    out["symplectic"] = symplectic
    out["normalized"] = normalized
    if "family" in data:
        family = data["family"]
        context = liecohom.fields.ParameterContext([family["parameter"]])
        theta = S.algebra.parse(family["theta"], context)
        omega = S.algebra.parse(family["omega"], context)
        problem = EquivalenceProblem.pairwise(S, theta, omega, family["parameter"])
        verdict = are_equivalent(problem, budget)
        out["equivalence"] = {"theta": str(theta), "omega": str(omega), "parameter": family["parameter"], "assumptions": problem.assumptions.tojson()}
        out["equivalence"].update(verdict.tojson())
    return out
