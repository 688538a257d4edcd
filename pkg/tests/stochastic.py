# -*- coding: utf-8 -*-

# Copyright (c) 2024 The weingarten authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#    http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os


class StochasticError(Exception):
    def __init__(self, seed, exctype, excvalue):
        self.seed = seed
        self.exctype = exctype
        self.excvalue = excvalue
    def __str__(self):
        if hasattr(self.exctype, '__name__'):
            typename = self.exctype.__name__
        else:
            typename = repr(self.exctype)
        return '[seed %s]\n%s: %s' % (self.seed.hex(), typename,
            self.excvalue)

def seed_int(seed):
    """32-bit integer seed from the bytes handed to a stochastic test."""
    return int.from_bytes(seed[:4], 'little')

def stochastic(max_runs, min_passes):
    assert 0 < max_runs
    assert min_passes <= max_runs
    def wrap(f):
        def f_(seed=None):
            if seed is not None:
                return f(seed)
            npasses = 0
            last_seed = None
            last_exc = None
            for _i in range(max_runs):
                seed = os.urandom(32)
                try:
                    value = f(seed)
                except Exception as e:
                    last_seed = seed
                    last_exc = e
                else:
                    npasses += 1
                    if min_passes <= npasses:
                        return value
            raise StochasticError(last_seed, type(last_exc), last_exc) \
                .with_traceback(last_exc.__traceback__)
        f_.__name__ = f.__name__
        return f_
    return wrap
