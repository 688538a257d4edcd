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

import numpy as np

from weingarten.utils.errors import InputError
from weingarten.utils.errors import ShapeError


def validate_symmetric(S, rtol=1e-12):
    """Return S as a float array after checking it is square and symmetric.

    Leading axes are treated as a batch; the tolerance is relative to the
    Frobenius norm of each matrix.
    """
    S = np.asarray(S, dtype=float)
    if S.ndim < 2 or S.shape[-1] != S.shape[-2]:
        raise ShapeError('Expected square matrices, got shape %s.'
            % (S.shape,))
    if not np.all(np.isfinite(S)):
        raise ShapeError('Matrix has non-finite entries.')
    asym = np.sqrt(np.sum((S - np.swapaxes(S, -1, -2))**2, axis=(-1, -2)))
    scale = np.sqrt(np.sum(S**2, axis=(-1, -2)))
    if np.any(asym > rtol * scale):
        raise ShapeError('Matrix is not symmetric within %g.' % (rtol,))
    return S

def validate_finite(values, what):
    """Raise InputError naming the first non-finite entry of values."""
    values = np.asarray(values, dtype=float)
    bad = np.flatnonzero(~np.isfinite(values.ravel()))
    if len(bad):
        raise InputError('Non-finite %s at row %d.' % (what, bad[0]))
    return values

def validate_annulus(annulus):
    if len(annulus) != 2:
        raise InputError('Annulus needs two radii: %s.' % (annulus,))
    r1, r2 = float(annulus[0]), float(annulus[1])
    if not (np.isfinite(r1) and np.isfinite(r2) and r1 < r2):
        raise InputError('Annulus requires r1 < r2: %s.' % (annulus,))
    return (r1, r2)

def validate_orders(n, k, strict_cone=False):
    """Check 1 <= k <= n <= 8 and optionally n < 2k."""
    if not 1 <= n <= 8:
        raise InputError('Dimension n must lie in [1, 8]: %d.' % (n,))
    if not 1 <= k <= n:
        raise InputError('Order k must satisfy 1 <= k <= n: %d.' % (k,))
    if strict_cone and not n < 2*k:
        raise InputError('Require n < 2k, got n=%d k=%d.' % (n, k))
    return True
