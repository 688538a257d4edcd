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

import json
import math

from math import log

import numpy as np

from scipy.special import comb


def gen_rng(seed=None):
    if seed is None:
        seed = np.random.randint(low=1, high=2**31)
    return np.random.RandomState(seed)

def split_rngs(rng, N):
    """Derive N independent generators from rng by drawing sub-seeds."""
    seeds = rng.randint(low=1, high=2**32-1, size=N)
    return [gen_rng(s) for s in seeds]

def merged(*dicts):
    result = {}
    for d in dicts:
        result.update(d)
    return result

def log_linspace(a, b, n):
    """linspace from a to b with n entries over log scale."""
    return np.exp(np.linspace(log(a), log(b), n))

def nCk(n, k):
    """Binomial coefficient as an exact integer, 0 outside 0 <= k <= n."""
    return int(comb(n, k, exact=True))

def finite_or_none(x):
    """JSON-safe float: non-finite values become None."""
    x = float(x)
    return x if math.isfinite(x) else None

def jsonable(obj):
    """Recursively convert numpy scalars and arrays into JSON-safe values."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return finite_or_none(obj)
    return obj

def dump_json(obj, path):
    with open(path, 'w') as f:
        json.dump(jsonable(obj), f, indent=2, sort_keys=True)
        f.write('\n')
