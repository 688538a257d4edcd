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

from weingarten.symfunc.curvature import CurvatureVector
from weingarten.symfunc.eigen import sorted_eigh
from weingarten.symfunc.sigma import elementary
from weingarten.utils.errors import DomainError
from weingarten.utils.validation import validate_symmetric


def sigma_of_shape(k, S):
    """sigma_k of the eigenvalues of symmetric S.

    Returns (value, CurvatureVector) for one matrix; for a stack of matrices
    returns (values, sorted eigenvalue array).
    """
    S = validate_symmetric(S)
    n = S.shape[-1]
    if not 0 <= k <= n:
        raise DomainError('Order k=%d outside [0, %d].' % (k, n))
    w, _V = sorted_eigh(S)
    value = elementary(w, k)[..., k]
    if S.ndim == 2:
        return float(value), CurvatureVector(w)
    return value, w

def newton_tensor(S, k, kappa):
    """T_{k-1}(S) = sum_j (-1)^j sigma_{k-1-j} S^j, the derivative of
    sigma_k(S) in the sense d sigma_k = tr(T dS).

    kappa holds the eigenvalues of S (any order); S may be nonsymmetric.
    """
    S = np.asarray(S, dtype=float)
    n = S.shape[-1]
    e = elementary(kappa, k-1)
    power = np.broadcast_to(np.eye(n), S.shape).copy()
    T = e[..., k-1, None, None] * power
    for j in range(1, k):
        power = np.matmul(power, S)
        T += (-1)**j * e[..., k-1-j, None, None] * power
    return T
