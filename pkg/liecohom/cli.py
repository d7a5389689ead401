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

"""Command-line front end: liecohom <command> [options]; exit 0 on success, 1 on computation errors, 2 on input errors."""

import argparse
import json
import logging
import os.path
import sys
from concurrent.futures import ThreadPoolExecutor

import liecohom.catalog
import liecohom.cohomology
import liecohom.complexstructure
import liecohom.fields
import liecohom.groebner
import liecohom.lcs
import liecohom.lie
import liecohom.util
import liecohom.version

logger = logging.getLogger(__name__)

FIELDS = {"QQ": "QQ", "QQi": "QQ_i"}

################################################################ inputs

def _read_json(path):
    try:
        with open(path) as file:
            return json.load(file)
    except IOError as err:
        raise liecohom.util.InputError("cannot read {0}: {1}".format(path, err.strerror))
    except ValueError as err:
        raise liecohom.util.InputError("{0} is not valid JSON: {1}".format(path, err))

def _declared(args):
    if args.params is None:
        return []
    return [x.strip() for x in args.params.split(",") if x.strip() != ""]

def load_algebra(text, args):
    """A catalog name or alias, a Salamon string such as (0,0,0,0,0,12), or a JSON file."""
    if os.path.isfile(text):
        doc = _read_json(text)
        if isinstance(doc, dict):
            declared = _declared(args)
            if len(declared) > 0:
                doc = dict(doc)
                doc["params"] = list(doc.get("params", [])) + [x for x in declared if x not in doc.get("params", [])]
            if args.field is not None and "field" not in doc:
                doc = dict(doc)
                doc["field"] = "params" if len(doc.get("params", [])) > 0 else FIELDS[args.field]
        S = liecohom.lie.parse_json(doc)
    elif text.strip().startswith("("):
        S = liecohom.lie.parse_salamon(text)
    else:
        S = liecohom.catalog.find_entry(text).structure
    if args.field == "QQ" and S.has_imaginary():
        raise liecohom.util.InputError("--field QQ but the structure has Gaussian coefficients")
    return S

def _require_lie(S):
    verdict = liecohom.lie.jacobi_check(S)
    if not verdict:
        raise liecohom.lie.JacobiError("not a Lie algebra: {0}".format(verdict.message), verdict.witness)
    return S

def _specialization(args):
    out = {}
    for item in args.at or []:
        if "=" not in item:
            raise liecohom.util.InputError("--at takes NAME=VALUE, not {0}".format(repr(item)))
        name, value = item.split("=", 1)
        out[name.strip()] = liecohom.fields.parse_expression(value.strip())
    return out

def load_bigraded(args):
    """Bigraded structures named by --complex-structure (catalog name or file) or by the positional algebra."""
    source = args.complex_structure if args.complex_structure is not None else args.algebra
    if source is None:
        raise liecohom.util.InputError("give an algebra or --complex-structure FILE|NAME")
    if os.path.isfile(source):
        doc = _read_json(source)
        if isinstance(doc, dict) and "J" in doc:
            if args.algebra is None:
                raise liecohom.util.InputError("a J matrix needs the algebra it acts on")
            S = _require_lie(load_algebra(args.algebra, args))
            structures = [liecohom.complexstructure.transport_structure_equations(S, liecohom.complexstructure.coframe_from_j(doc["J"], doc.get("chosen")))]
        else:
            structures = [liecohom.complexstructure.BigradedStructure.fromjson(doc)]
            if args.case is not None and args.case not in structures[0].flags:
                raise liecohom.util.InputError("--case {0} does not match the flags {1}".format(repr(args.case), list(structures[0].flags)))
    else:
        entry = liecohom.catalog.find_entry(source)
        if entry.complex_structure is None:
            raise liecohom.util.InputError("catalog entry {0} has no complex structure".format(entry.name))
        structures = entry.complex_structure.bigraded(entry.structure, args.case)
    assignment = _specialization(args)
    if len(assignment) > 0:
        structures = [B.specialize(assignment) for B in structures]
    return structures

################################################################ output

def _emit(args, data, text):
    if args.format == "json":
        sys.stdout.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text + "\n")

def _table_text(table):
    out = table.totext()
    if table.bigraded is not None:
        out += "\n" + table.bigraded_text()
    if table.conditions is not None and not table.conditions.is_empty():
        out += "\nwhere " + str(table.conditions)
    elif len(table.flags) > 0:
        out += "\nwhere [[" + ", ".join(table.flags) + "]]"
    if table.representatives is not None:
        for k in sorted(table.representatives):
            out += "\n{0}: {1}".format(k, ", ".join(str(x) for x in table.representatives[k]))
    return out

################################################################ commands

def cmd_catalog(args):
    if args.action == "list":
        entries = sorted(liecohom.catalog.load_catalog(), key=lambda e: e.name)
        _emit(args, [{"name": e.name, "aliases": list(e.aliases)} for e in entries], "\n".join(e.name + ("" if len(e.aliases) == 0 else " ({0})".format(", ".join(e.aliases))) for e in entries))
    else:
        if args.name is None:
            raise liecohom.util.InputError("catalog show needs a NAME")
        entry = liecohom.catalog.find_entry(args.name)
        data = entry.tojson()
        text = "{0}\n{1}".format(entry.name, str(entry.structure))
        _emit(args, data, text)
    return 0

def cmd_jacobi(args):
    verdict = liecohom.lie.jacobi_check(load_algebra(args.algebra, args))
    _emit(args, {"jacobi": bool(verdict), "witness": verdict.message}, str(verdict))
    return 0

def cmd_betti(args):
    table = liecohom.cohomology.betti_numbers(_require_lie(load_algebra(args.algebra, args)), representatives=args.representatives, generic=args.generic)
    _emit(args, table.tojson(), _table_text(table))
    return 0

def _poincare(entry):
    return liecohom.cohomology.poincare_polynomial(liecohom.cohomology.betti_numbers(entry.structure))

def cmd_poincare(args):
    if args.all:
        entries = sorted(liecohom.catalog.load_catalog(), key=lambda e: e.name)
        if args.jobs > 1:
            executor = ThreadPoolExecutor(max_workers=args.jobs)
        else:
            executor = liecohom.util.SingleThreadExecutor()
        try:
            results = liecohom.catalog.compute_all(_poincare, entries, executor)
        finally:
            executor.shutdown()
        _emit(args, dict((e.name, str(p)) for e, p in results), "\n".join("{0} :\n\t{1}".format(e.name, str(p)) for e, p in results))
        return 0
    if args.algebra is None:
        raise liecohom.util.InputError("poincare needs an algebra or --all")
    polynomial = liecohom.cohomology.poincare_polynomial(liecohom.cohomology.betti_numbers(_require_lie(load_algebra(args.algebra, args)), generic=args.generic))
    _emit(args, {"poincare": str(polynomial), "coefficients": polynomial.coefficients}, str(polynomial))
    return 0

def cmd_novikov(args):
    S = _require_lie(load_algebra(args.algebra, args))
    context = S.context.union(liecohom.fields.ParameterContext(_declared(args)))
    theta = S.algebra.parse(args.theta, context)
    table = liecohom.cohomology.morse_novikov(S, theta, representatives=args.representatives, generic=args.generic)
    _emit(args, table.tojson(), _table_text(table))
    return 0

def _bigraded_command(function):
    def command(args):
        tables = [function(B, representatives=args.representatives, generic=args.generic) for B in load_bigraded(args)]
        if len(tables) == 1:
            _emit(args, tables[0].tojson(), _table_text(tables[0]))
        else:
            _emit(args, [t.tojson() for t in tables], "\n\n".join(_table_text(t) for t in tables))
        return 0
    return command

cmd_dolbeault = _bigraded_command(liecohom.cohomology.dolbeault)
cmd_bott_chern = _bigraded_command(liecohom.cohomology.bott_chern)
cmd_aeppli = _bigraded_command(liecohom.cohomology.aeppli)

def cmd_frolicher(args):
    if args.algebra is None:
        raise liecohom.util.InputError("frolicher needs the algebra for its de Rham side")
    S = _require_lie(load_algebra(args.algebra, args))
    derham = liecohom.cohomology.betti_numbers(S)
    out = []
    for B in load_bigraded(args):
        comparison = liecohom.cohomology.frolicher_comparison(derham, liecohom.cohomology.dolbeault(B, generic=args.generic))
        out.append(comparison)
    _emit(args, [c.tojson() for c in out] if len(out) > 1 else out[0].tojson(), "\n".join("degenerates at the first page: {0}".format("true" if c.degenerates else "false") for c in out))
    return 0

def cmd_unimodular(args):
    verdict = liecohom.lie.unimodularity_check(load_algebra(args.algebra, args))
    _emit(args, {"unimodular": bool(verdict), "witness": verdict.message}, str(verdict))
    return 0

def _lcs_text(report):
    lines = ["{0}: {1}".format(report["algebra"], "unimodular" if report["unimodular"] == "true" else "not unimodular")]
    for branch in report["closed_one_forms"]["branches"]:
        lines.append("closed 1-forms: {0}".format(", ".join("{0} = {1}".format(k, v) for k, v in sorted(branch["solution"].items()))))
    for family in report["degenerate"]:
        lines.append("degenerate: theta = {0}, Omega = {1} on {2}".format(family["theta"], family["omega"], family["conditions"]))
    for key in ("families", "symplectic", "normalized"):
        for family in report[key]:
            lines.append("{0}: theta = {1}, Omega = {2} such that {3} != 0".format(key, family["theta"], family["omega"], family["volume"]))
    if "equivalence" in report:
        eq = report["equivalence"]
        lines.append("equivalence of Omega = {0}: {1}{2}".format(eq["omega"], eq["status"], "" if "witness" not in eq else "; witness " + eq["witness"]))
    return "\n".join(lines)

def cmd_lcs(args):
    entry = liecohom.catalog.find_entry(args.name)
    report = liecohom.lcs.classify_report(entry, args.pair_budget)
    _emit(args, report, _lcs_text(report))
    return 0

def cmd_groebner(args):
    doc = _read_json(args.ideal)
    if not isinstance(doc, dict) or "variables" not in doc or "generators" not in doc:
        raise liecohom.util.InputError("ideal files need 'variables' and 'generators', not {0}".format(repr(doc)))
    order = liecohom.groebner.MonomialOrder(doc["variables"], doc.get("order", "degrevlex"))
    ideal = liecohom.groebner.Ideal(doc["generators"], order)
    basis = ideal.reduced(args.pair_budget)
    membership = [(f, basis.contains(f)) for f in doc.get("membership", [])]
    data = {"variables": list(order.variables), "order": order.kind, "basis": basis.tojson()}
    text = str(basis)
    if len(membership) > 0:
        data["membership"] = dict((f, m) for f, m in membership)
        text += "\n" + "\n".join("{0}: {1}".format(f, "true" if m else "false") for f, m in membership)
    _emit(args, data, text)
    return 0

################################################################ parser

def parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="text", help="output format (default: text)")
    common.add_argument("--field", choices=sorted(FIELDS), default=None, help="coefficient field of JSON input")
    common.add_argument("--params", default=None, help="comma-separated parameter names")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr (-vv for debug)")
    common.add_argument("--pair-budget", type=int, default=liecohom.groebner.DEFAULT_PAIR_BUDGET, help="Groebner pair budget (default: {0})".format(liecohom.groebner.DEFAULT_PAIR_BUDGET))

    top = argparse.ArgumentParser(prog="liecohom", description="Cohomology of Lie algebras and lcs classification in exact arithmetic.")
    top.add_argument("--version", action="version", version="%(prog)s " + liecohom.version.__version__)
    commands = top.add_subparsers(dest="command")

    p = commands.add_parser("catalog", parents=[common], help="list or show built-in algebras")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(run=cmd_catalog)

    p = commands.add_parser("jacobi", parents=[common], help="check d^2 = 0")
    p.add_argument("algebra")
    p.set_defaults(run=cmd_jacobi)

    def cohomology_options(p, algebra_optional=False):
        p.add_argument("algebra", nargs="?" if algebra_optional else None)
        p.add_argument("--generic", action="store_true", help="rank over the function field of the parameters")
        p.add_argument("--representatives", action="store_true", help="attach class representatives")

    p = commands.add_parser("betti", parents=[common], help="de Rham cohomology")
    cohomology_options(p)
    p.set_defaults(run=cmd_betti)

    p = commands.add_parser("poincare", parents=[common], help="Poincare polynomial")
    p.add_argument("algebra", nargs="?")
    p.add_argument("--all", action="store_true", help="every catalog entry")
    p.add_argument("--jobs", type=int, default=liecohom.catalog.DEFAULT_THREADS, help="threads for --all (default: {0})".format(liecohom.catalog.DEFAULT_THREADS))
    p.add_argument("--generic", action="store_true")
    p.set_defaults(run=cmd_poincare)

    p = commands.add_parser("novikov", parents=[common], help="Morse-Novikov cohomology")
    cohomology_options(p)
    p.add_argument("--theta", required=True, help="closed 1-form, e.g. -2*e3 (a leading minus is allowed)")
    p.set_defaults(run=cmd_novikov)

    for name, run, what in (("dolbeault", cmd_dolbeault, "Dolbeault"), ("bott-chern", cmd_bott_chern, "Bott-Chern"), ("aeppli", cmd_aeppli, "Aeppli"), ("frolicher", cmd_frolicher, "Frolicher comparison for")):
        p = commands.add_parser(name, parents=[common], help="{0} cohomology".format(what))
        cohomology_options(p, algebra_optional=True)
        p.add_argument("--complex-structure", default=None, help="catalog name or JSON file")
        p.add_argument("--case", default=None, help="parameter-family case, e.g. 'B > 1'")
        p.add_argument("--at", action="append", help="specialize a parameter, NAME=VALUE")
        p.set_defaults(run=run)

    p = commands.add_parser("unimodular", parents=[common], help="check d on (n-1)-forms vanishes")
    p.add_argument("algebra")
    p.set_defaults(run=cmd_unimodular)

    p = commands.add_parser("lcs", parents=[common], help="lcs classification")
    p.add_argument("action", choices=["classify"])
    p.add_argument("name")
    p.set_defaults(run=cmd_lcs)

    p = commands.add_parser("groebner", parents=[common], help="reduced Groebner basis and membership")
    p.add_argument("--ideal", required=True, help="JSON file with variables, order, generators, membership")
    p.set_defaults(run=cmd_groebner)

    return top

# options whose values may start with a minus sign, as in --theta -2*e3
VALUE_OPTIONS = ("--theta", "--at")

def attach_values(argv):
    """Rewrites "--theta -2*e3" as "--theta=-2*e3" so argparse does not read the value as an option."""
    out = []
    argv = list(argv)
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--") and argv[i + 1].lstrip("-v") != "" and argv[i + 1] != "-h":
            out.append("{0}={1}".format(token, argv[i + 1]))
            i += 2
        else:
            out.append(token)
            i += 1
    return out

def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    args = parser().parse_args(attach_values(argv))
    verbose = getattr(args, "verbose", 0)
    level = logging.WARNING if verbose == 0 else (logging.INFO if verbose == 1 else logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "run", None) is None:
        parser().print_usage(sys.stderr)
        return 2
    try:
        return args.run(args)
    except liecohom.util.InputError as err:
        sys.stderr.write("error: {0}\n".format(err))
        return 2
    except liecohom.util.ComputationError as err:
        sys.stderr.write("computation failed: {0}\n".format(err))
        return 1

if __name__ == "__main__":
    sys.exit(main())
