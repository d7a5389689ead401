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

"""Exact linear algebra over Scalars, stored in numpy object arrays."""

import logging

import numpy

import liecohom.fields
import liecohom.util

logger = logging.getLogger(__name__)

ZERO = liecohom.fields.Scalar.ZERO
ONE = liecohom.fields.Scalar.ONE

def zeros(rows, cols):
    out = numpy.empty((rows, cols), dtype=object)
    out.fill(ZERO)
    return out

def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out

def asmatrix(data, context=None, cols=None):
    """Coerces nested sequences (or an array) of numbers, strings or Scalars to an object matrix."""
    if isinstance(data, numpy.ndarray) and data.dtype == object and data.ndim == 2:
        rows = [list(row) for row in data]
        cols = data.shape[1]
    else:
        rows = [list(row) for row in data]
    if cols is None:
        cols = len(rows[0]) if len(rows) > 0 else 0
    out = numpy.empty((len(rows), cols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != cols:
            raise liecohom.util.InputError("matrix rows must all have length {0}, not {1}".format(cols, len(row)))
        for j, x in enumerate(row):
            out[i, j] = liecohom.fields.Scalar.coerce(x, context)
    return out

def has_parameters(matrix):
    return any(not x.is_constant() for x in matrix.flat)

def is_zero_matrix(matrix):
    return all(x.is_zero() for x in matrix.flat)

def matmul(a, b):
    if a.shape[1] != b.shape[0]:
        raise liecohom.util.InputError("cannot multiply {0} by {1} matrices".format(a.shape, b.shape))
    out = zeros(a.shape[0], b.shape[1])
    for i in range(a.shape[0]):
        for k in range(a.shape[1]):
            x = a[i, k]
            if x.is_zero():
                continue
            for j in range(b.shape[1]):
                y = b[k, j]
                if not y.is_zero():
                    out[i, j] = out[i, j] + x * y
    return out

def vstack(matrices, cols):
    matrices = [m for m in matrices if m.shape[0] > 0]
    if len(matrices) == 0:
        return zeros(0, cols)
    return numpy.vstack(matrices)

def hstack(matrices, rows):
    matrices = [m for m in matrices if m.shape[1] > 0]
    if len(matrices) == 0:
        return zeros(rows, 0)
    return numpy.hstack(matrices)

################################################################ elimination

def rank(matrix):
    """Fraction-free (Bareiss) elimination with column skipping."""
    m, n = matrix.shape
    rows = [list(row) for row in matrix]
    r = 0
    previous = ONE
    for c in range(n):
        if r == m:
            break
        pivot = None
        for i in range(r, m):
            if not rows[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, m):
            a = rows[i][c]
            row = rows[i]
            for j in range(c + 1, n):
                if a.is_zero():
                    row[j] = (p * row[j]) / previous
                else:
                    row[j] = (p * row[j] - a * rows[r][j]) / previous
            row[c] = ZERO
        previous = p
        r += 1
    return r

def nullity(matrix):
    return matrix.shape[1] - rank(matrix)

def determinant(matrix):
    m, n = matrix.shape
    if m != n:
        raise liecohom.util.InputError("determinant of a non-square {0} matrix".format(matrix.shape))
    if n == 0:
        return ONE
    rows = [list(row) for row in matrix]
    sign = 1
    previous = ONE
    for c in range(n - 1):
        pivot = None
        for i in range(c, n):
            if not rows[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            return ZERO
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        p = rows[c][c]
        for i in range(c + 1, n):
            a = rows[i][c]
            for j in range(c + 1, n):
                rows[i][j] = (p * rows[i][j] - a * rows[c][j]) / previous
            rows[i][c] = ZERO
        previous = p
    out = rows[n - 1][n - 1]
    return out if sign > 0 else -out

def rref(matrix):
    """Reduced row echelon form and pivot columns (Gauss-Jordan over the Scalar field)."""
    m, n = matrix.shape
    rows = [list(row) for row in matrix]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = None
        for i in range(r, m):
            if not rows[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(m):
            if i != r and not rows[i][c].is_zero():
                a = rows[i][c]
                rows[i] = [x - a * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    out = zeros(m, n)
    for i in range(m):
        for j in range(n):
            out[i, j] = rows[i][j]
    return out, pivots

def nullspace(matrix):
    """Basis of the kernel as a list of column vectors (lists of Scalars)."""
    m, n = matrix.shape
    reduced, pivots = rref(matrix)
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        vector = [ZERO] * n
        vector[f] = ONE
        for i, c in enumerate(pivots):
            vector[c] = -reduced[i, f]
        out.append(vector)
    return out

def inverse(matrix):
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise liecohom.util.InputError("inverse of a non-square {0} matrix".format(matrix.shape))
    reduced, pivots = rref(numpy.hstack([matrix, identity(n)]))
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise liecohom.util.ComputationError("matrix is singular")
    return reduced[:, n:]

def extend_basis(base, candidates):
    """Indices of candidates (column vectors) that enlarge the span of base, chosen greedily."""
    columns = [list(v) for v in base]
    current = len(columns) and rank(_columns(columns))
    chosen = []
    for k, v in enumerate(candidates):
        trial = columns + [list(v)]
        r = rank(_columns(trial))
        if r > current:
            columns = trial
            current = r
            chosen.append(k)
    return chosen

def _columns(vectors):
    out = zeros(len(vectors[0]), len(vectors))
    for j, v in enumerate(vectors):
        for i, x in enumerate(v):
            out[i, j] = x
    return out
