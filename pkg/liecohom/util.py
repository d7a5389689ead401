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

import json

################################################################ errors

class InputError(ValueError):
    """Malformed or inconsistent user input (command-line exit code 2)."""

class ComputationError(ArithmeticError):
    """A well-posed computation could not be completed (command-line exit code 1)."""

class ParseError(InputError):
    def __init__(self, message, text=None, position=None):
        if position is not None:
            message = "{0} at position {1}".format(message, position)
            if text is not None:
                message = "{0}\n    {1}\n    {2}^".format(message, text, " " * position)
        super(ParseError, self).__init__(message)
        self.text = text
        self.position = position

################################################################ verdicts

class Verdict(object):
    """Outcome of a check: truthy when the property holds, otherwise carries a witness."""

    def __init__(self, ok, witness=None, message=None):
        self.ok = bool(ok)
        self.witness = witness
        self.message = message

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__

    def __repr__(self):
        if self.ok:
            return "Verdict(True)"
        else:
            return "Verdict(False, {0})".format(repr(self.witness))

    def __str__(self):
        if self.ok:
            return "true"
        elif self.message is not None:
            return "false; witness {0}".format(self.message)
        else:
            return "false; witness {0}".format(self.witness)

################################################################ executors

class SingleThreadExecutor(object):
    """Runs submitted work immediately; same interface as concurrent.futures executors."""

    class PseudoFuture(object):
        def __init__(self, result=None, exception=None):
            self._result = result
            self._exception = exception
        def result(self, timeout=None):
            if self._exception is not None:
                raise self._exception
            return self._result
        def done(self):
            return True
        def exception(self, timeout=None):
            return self._exception

    def submit(self, fcn, *args, **kwargs):
        args = tuple(x.result() if isinstance(x, self.PseudoFuture) else x for x in args)
        kwargs = dict((n, x.result() if isinstance(x, self.PseudoFuture) else x) for n, x in kwargs.items())
        try:
            return self.PseudoFuture(fcn(*args, **kwargs))
        except Exception as err:
            return self.PseudoFuture(exception=err)

    def shutdown(self, wait=True):
        pass

################################################################ JSON

class JSONable(object):
    def tojson(self):
        raise NotImplementedError

    def tojsonstring(self, **kwds):
        kwds.setdefault("sort_keys", True)
        return json.dumps(self.tojson(), **kwds)

    def tojsonfile(self, file, **kwds):
        kwds.setdefault("sort_keys", True)
        json.dump(self.tojson(), file, **kwds)

    @classmethod
    def fromjsonstring(cls, data):
        return cls.fromjson(json.loads(data))

    @classmethod
    def fromjsonfile(cls, file, **kwds):
        return cls.fromjson(json.load(file, **kwds))

def jsonindex(value, what="index"):
    """Accepts an integer or a decimal string (the catalog files write both)."""
    if isinstance(value, bool):
        raise InputError("{0} must be an integer, not {1}".format(what, repr(value)))
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("-").isdigit():
        return int(value.strip())
    raise InputError("{0} must be an integer, not {1}".format(what, repr(value)))
