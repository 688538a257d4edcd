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

"""Rejection sampler for the Garding cone under curvature constraints."""

import logging

import numpy as np

from weingarten.symfunc.curvature import CurvatureVector
from weingarten.symfunc.curvature import sort_descending
from weingarten.symfunc.sigma import cone_margin
from weingarten.symfunc.sigma import elementary
from weingarten.utils.errors import PreconditionError
from weingarten.utils.errors import SamplingError
from weingarten.utils.general import gen_rng


logger = logging.getLogger(__name__)

MAX_DRAWS = 10**5


def sample_cone(k, n, rng=None, N0=None, N1=None, B=0.):
    """Draw one kappa in Gamma_k with N0 <= sigma_k <= N1 and kappa_1 >= B."""
    kappas = sample_cone_batch(k, n, 1, rng=rng, N0=N0, N1=N1, B=B)
    return CurvatureVector(kappas[0])

def sample_cone_batch(k, n, size, rng=None, N0=None, N1=None, B=0.,
        max_draws=MAX_DRAWS, chunk=512):
    """Draw `size` sorted curvature vectors in Gamma_k, shape (size, n).

    Candidates mix positive vectors with log-uniform entries and the same
    vectors with their smallest entries pushed negative, part way towards
    the cone boundary. When [N0, N1] is given each candidate is rescaled so
    sigma_k lands uniformly in the range; candidates with kappa_1 < B are
    rejected.
    """
    if rng is None:
        rng = gen_rng()
    if not 1 <= k <= n:
        raise PreconditionError('Order k=%d outside [1, %d].' % (k, n))
    if (N0 is None) != (N1 is None):
        raise PreconditionError('Specify both N0 and N1, or neither.')
    if N0 is not None and not 0 < N0 <= N1:
        raise PreconditionError('Require 0 < N0 <= N1: %s, %s.' % (N0, N1))
    if B < 0:
        raise PreconditionError('Require B >= 0: %s.' % (B,))

    accepted = []
    draws = 0
    total = 0
    while total < size:
        if draws >= max_draws:
            raise SamplingError('Accepted %d of %d cone samples in %d draws.'
                % (total, size, draws))
        m = min(chunk, max_draws - draws)
        draws += m
        kappa = _candidates(k, n, m, rng)
        if N0 is not None:
            target = rng.uniform(N0, N1, size=m)
            sk = elementary(kappa, k)[:, k]
            kappa = kappa * ((target / sk) ** (1. / k))[:, None]
        keep = (cone_margin(k, kappa) > 0) & (kappa[:, 0] >= B)
        if N0 is not None:
            sk = elementary(kappa, k)[:, k]
            keep &= (N0 <= sk) & (sk <= N1)
        accepted.append(kappa[keep])
        total += int(np.sum(keep))
    logger.debug('sample_cone: %d accepted from %d draws (n=%d, k=%d)',
        total, draws, n, k)
    return np.concatenate(accepted)[:size]

def _candidates(k, n, m, rng):
    positive = sort_descending(10. ** rng.uniform(-3., 0., size=(m, n)))
    if k == n:
        return positive
    # Push the last `neg` entries negative by a fraction of the largest
    # admissible multiple found by bisection.
    push = rng.rand(m) < .5
    neg = rng.randint(1, n - k + 1, size=m)
    tail = np.arange(n)[None, :] >= (n - neg)[:, None]
    tail &= push[:, None]

    def pushed(s):
        return np.where(tail, -s[:, None] * positive, positive)

    lo, hi = np.zeros(m), np.ones(m)
    for _ in range(60):
        inside = cone_margin(k, pushed(hi)) > 0
        if not np.any(inside):
            break
        hi = np.where(inside, 2. * hi, hi)
    for _ in range(50):
        mid = .5 * (lo + hi)
        inside = cone_margin(k, pushed(mid)) > 0
        lo = np.where(inside, mid, lo)
        hi = np.where(inside, hi, mid)
    gap = 10. ** rng.uniform(-6., 0., size=m)
    return sort_descending(pushed(lo * (1. - gap)))
