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

"""The large-kappa_1 pairwise inequality

    2 kappa_i (1 - e^{kappa_j - kappa_i}) / (kappa_i - kappa_j) sigma_k^jj
        >= sigma_k^jj + (kappa_i + kappa_j) sigma_k^{ii,jj}

which holds once kappa_1 is large enough; the threshold is not explicit,
so only the slack is reported.
"""

import math

import numpy as np

from weingarten.symfunc.curvature import CurvatureVector
from weingarten.symfunc.curvature import as_values
from weingarten.symfunc.sigma import cone_margin
from weingarten.symfunc.sigma import sigma
from weingarten.symfunc.sigma import sigma_deleted
from weingarten.utils.errors import DegeneratePairError
from weingarten.utils.errors import PreconditionError


def expm1_ratio(x):
    """(1 - e^{-x}) / x, with its Taylor series for |x| < 1e-4."""
    x = float(x)
    if abs(x) < 1e-4:
        return 1. - x / 2. + x * x / 6. - x**3 / 24.
    return -math.expm1(-x) / x

def pairwise_lemma_check(kappa, k, i, j, N0=None):
    """(holds, slack) of the pairwise inequality for indices i, j (0-based,
    in descending order of kappa)."""
    values = as_values(kappa)
    n = len(values)
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise PreconditionError('Need distinct indices in [0, %d): %s, %s.'
            % (n, i, j))
    if not cone_margin(k, values) > 0:
        raise PreconditionError('Curvature is not in Gamma_%d.' % (k,))
    if N0 is not None and not sigma(k, values) >= N0 > 0:
        raise PreconditionError('Require sigma_k >= N0 > 0.')
    kappa1 = values[0]
    if values[i] < kappa1 - math.sqrt(kappa1) / n:
        raise PreconditionError('kappa_i=%g is below kappa_1 - sqrt(kappa_1)/n.'
            % (values[i],))
    if values[i] == values[j]:
        raise DegeneratePairError('kappa_i = kappa_j = %g.' % (values[i],))
    gap = values[i] - values[j]
    grad_j = sigma_deleted(k-1, values, j)
    hess_ij = sigma_deleted(k-2, values, [i, j])
    lhs = 2 * values[i] * expm1_ratio(gap) * grad_j
    rhs = grad_j + (values[i] + values[j]) * hess_ij
    slack = float(lhs - rhs)
    return slack >= 0, slack

def pairwise_sweep(kappa, k, i, j, kappa1_values=(10., 1e2, 1e3)):
    """Slack at the shape of kappa rescaled so that kappa_1 takes each value.

    Returns [(kappa_1, slack)] and whether the slack is nondecreasing.
    """
    values = as_values(kappa)
    rows = []
    for target in kappa1_values:
        scaled = CurvatureVector(values * (target / values[0]))
        rows.append((float(target), pairwise_lemma_check(scaled, k, i, j)[1]))
    slacks = [s for _, s in rows]
    nondecreasing = all(a <= b for a, b in zip(slacks, slacks[1:]))
    return rows, nondecreasing
