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

"""Elementary symmetric functions and the Garding cone.

Every function takes a CurvatureVector or an array whose last axis holds the
curvatures; leading axes are a batch and are preserved in the output.
"""

import numpy as np

from weingarten.symfunc.curvature import ConeMembership
from weingarten.symfunc.curvature import as_values
from weingarten.utils.errors import DomainError
from weingarten.utils.general import nCk


def elementary(values, kmax):
    """Return [sigma_0, ..., sigma_kmax] along a new last axis.

    One pass of the recurrence e_m <- e_m + x e_{m-1} per entry, O(n kmax).
    """
    values = np.asarray(values, dtype=float)
    n = values.shape[-1]
    e = np.zeros(values.shape[:-1] + (kmax + 1,))
    e[..., 0] = 1.
    for i in range(n):
        x = values[..., i]
        for m in range(min(i + 1, kmax), 0, -1):
            e[..., m] += x * e[..., m-1]
    return e

def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x

def _check_order(k, n):
    if not 1 <= k <= n:
        raise DomainError('Order k=%d outside [1, %d].' % (k, n))

def sigma(k, kappa, strict=False):
    """k-th elementary symmetric function; sigma_0 = 1.

    For k > n the value is 0 unless strict, in which case DomainError.
    """
    values = as_values(kappa)
    n = values.shape[-1]
    if k < 0 or (strict and k > n):
        raise DomainError('Order k=%d outside [0, %d].' % (k, n))
    if k > n:
        return _scalar(np.zeros(values.shape[:-1]))
    return _scalar(elementary(values, k)[..., k])

def sigma_deleted(k, kappa, drop):
    """sigma_k of kappa with the entries at indices `drop` removed."""
    values = np.delete(as_values(kappa), drop, axis=-1)
    if k < 0 or k > values.shape[-1]:
        return _scalar(np.zeros(values.shape[:-1]))
    return _scalar(elementary(values, k)[..., k])

def sigma_gradient(k, kappa):
    """d sigma_k / d kappa_i = sigma_{k-1}(kappa | i)."""
    values = as_values(kappa)
    n = values.shape[-1]
    _check_order(k, n)
    grad = np.empty(values.shape)
    for i in range(n):
        grad[..., i] = sigma_deleted(k-1, values, i)
    return grad

def sigma_hessian(k, kappa):
    """d^2 sigma_k / d kappa_i d kappa_j = sigma_{k-2}(kappa | ij), zero
    diagonal."""
    values = as_values(kappa)
    n = values.shape[-1]
    _check_order(k, n)
    hess = np.zeros(values.shape + (n,))
    if k < 2:
        return hess
    for i in range(n):
        for j in range(i+1, n):
            hess[..., i, j] = hess[..., j, i] = \
                sigma_deleted(k-2, values, [i, j])
    return hess

def cone_margin(k, kappa):
    """min_{m <= k} sigma_m / C(n, m); positive exactly on Gamma_k."""
    values = as_values(kappa)
    n = values.shape[-1]
    _check_order(k, n)
    e = elementary(values, k)
    binom = np.array([nCk(n, m) for m in range(1, k+1)], dtype=float)
    return _scalar(np.min(e[..., 1:] / binom, axis=-1))

def cone_test(k, kappa):
    margin = cone_margin(k, kappa)
    in_cone = margin > 0
    in_cone = bool(in_cone) if np.ndim(in_cone) == 0 else in_cone
    return ConeMembership(in_cone=in_cone, margin=margin, k=k)
