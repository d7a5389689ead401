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

from liecohom.version import __version__

from liecohom.util import InputError
from liecohom.util import ComputationError
from liecohom.util import Verdict

from liecohom.fields import ParameterContext
from liecohom.fields import Scalar
from liecohom.fields import parse_expression

from liecohom.exterior import ExteriorAlgebra
from liecohom.exterior import ExteriorElement
from liecohom.exterior import LinearMorphism
from liecohom.exterior import blade
from liecohom.exterior import lift_linear_map

from liecohom.lie import StructureConstants
from liecohom.lie import JacobiError
from liecohom.lie import parse_salamon
from liecohom.lie import parse_json
from liecohom.lie import jacobi_check
from liecohom.lie import unimodularity_check

from liecohom.parametric import ConditionSet
from liecohom.parametric import Namer
from liecohom.parametric import parametric_rank
from liecohom.parametric import generic_rank
from liecohom.parametric import parametric_solve_linear

from liecohom.groebner import MonomialOrder
from liecohom.groebner import Ideal
from liecohom.groebner import GroebnerBudgetExceeded

from liecohom.cohomology import CohomologyTable
from liecohom.cohomology import betti_numbers
from liecohom.cohomology import morse_novikov
from liecohom.cohomology import dolbeault
from liecohom.cohomology import bott_chern
from liecohom.cohomology import aeppli
from liecohom.cohomology import poincare_polynomial

from liecohom.complexstructure import AlmostComplexStructure
from liecohom.complexstructure import BigradedStructure
from liecohom.complexstructure import coframe_from_j
from liecohom.complexstructure import transport_structure_equations

from liecohom.lcs import LcsStructure
from liecohom.lcs import EquivalenceProblem
from liecohom.lcs import lcs_families
from liecohom.lcs import apply_normalization
from liecohom.lcs import are_equivalent

from liecohom.catalog import load_catalog
from liecohom.catalog import find_entry
