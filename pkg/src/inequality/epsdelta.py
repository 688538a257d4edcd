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

"""Find delta in (0, 4 eps) with f(x) = x - (1-eps)(1-e^{-x})(x+delta) > 0
for all x > 0."""

import logging

import numpy as np

from scipy.optimize import minimize_scalar

from weingarten.utils.errors import PreconditionError
from weingarten.utils.general import log_linspace


logger = logging.getLogger(__name__)

GRID = log_linspace(1e-6, 1e2, 4001)


def f(x, epsilon, delta):
    x = np.asarray(x, dtype=float)
    return x + (1 - epsilon) * np.expm1(-x) * (x + delta)

def _ratio(x, epsilon, delta):
    # f(x) / x, positive exactly where f is.
    return 1 + (1 - epsilon) * np.expm1(-x) * (1 + delta / x)

def min_ratio(epsilon, delta):
    """min over x in [1e-6, 1e2] of f(x)/x: log-grid sampling plus a
    bounded refinement between the neighbours of the sampled minimizer."""
    values = _ratio(GRID, epsilon, delta)
    i = int(np.argmin(values))
    lo, hi = GRID[max(i-1, 0)], GRID[min(i+1, len(GRID)-1)]
    best = float(values[i])
    if lo < hi:
        res = minimize_scalar(lambda x: _ratio(x, epsilon, delta),
            bounds=(lo, hi), method='bounded',
            options={'xatol': 1e-12 * hi})
        best = min(best, float(res.fun))
    return best

def min_f(epsilon, delta):
    """min over the log grid of f, with the same local refinement."""
    values = f(GRID, epsilon, delta)
    i = int(np.argmin(values))
    lo, hi = GRID[max(i-1, 0)], GRID[min(i+1, len(GRID)-1)]
    res = minimize_scalar(lambda x: float(f(x, epsilon, delta)),
        bounds=(lo, hi), method='bounded', options={'xatol': 1e-12 * hi})
    return min(float(values[i]), float(res.fun))

def epsilon_delta_search(epsilon, iters=60):
    """Largest delta in (0, 4 eps), to bisection accuracy, with f > 0.

    Returns (delta, min_f).
    """
    if not 0 < epsilon < 1:
        raise PreconditionError('epsilon must lie in (0, 1): %s.'
            % (epsilon,))
    lo, hi = 0., 4. * epsilon
    for _ in range(iters):
        mid = .5 * (lo + hi)
        if not lo < mid < hi:
            break
        if min_ratio(epsilon, mid) > 0:
            lo = mid
        else:
            hi = mid
    assert 0 < lo < 4 * epsilon
    value = min_f(epsilon, lo)
    logger.debug('epsilon_delta_search: eps=%g delta=%.6g min_f=%.3e',
        epsilon, lo, value)
    return lo, value
