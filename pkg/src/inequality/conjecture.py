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

"""The quadratic form of the curvature inequality conjecture.

For kappa in Gamma_k and xi in R^n the form is

    kappa_1 (K (sum_j sigma_k^jj xi_j)^2 - sum_{p != q} sigma_k^{pp,qq}
        xi_p xi_q) - sigma_k^11 xi_1^2 + sum_{j > 1} a_j xi_j^2,

    a_j = sigma_k^jj + (kappa_1 + kappa_j) sigma_k^{11,jj},

and the conjecture asks for K, B such that it is nonnegative whenever
N0 <= sigma_k <= N1 and kappa_1 >= B. It is known for k >= n - 2.
"""

import logging

from collections import namedtuple

import numpy as np

from weingarten.symfunc.curvature import CurvatureVector
from weingarten.symfunc.curvature import as_values
from weingarten.symfunc.curvature import sort_descending
from weingarten.symfunc.eigen import jacobi_eigh
from weingarten.symfunc.sampling import sample_cone_batch
from weingarten.symfunc.sigma import cone_margin
from weingarten.symfunc.sigma import elementary
from weingarten.symfunc.sigma import sigma_gradient
from weingarten.symfunc.sigma import sigma_hessian
from weingarten.utils.errors import PreconditionError
from weingarten.utils.errors import SamplingError
from weingarten.utils.general import gen_rng
from weingarten.utils.general import split_rngs
from weingarten.utils.parallel_map import parallel_map


logger = logging.getLogger(__name__)

# Eigenvalues above this are numerically nonnegative.
ZERO_TOL = -1e-8

FormReport = namedtuple('FormReport',
    ['min_eigenvalue', 'worst_kappa', 'samples_tested', 'refinement_steps',
     'holds', 'proven_regime'])


class ConjectureInstance(object):
    """Constants (K, B, N0, N1) of one conjecture instance in dimension n."""

    def __init__(self, n, k, K, B, N0, N1):
        if not 1 <= k <= n:
            raise PreconditionError('Order k=%d outside [1, %d].' % (k, n))
        if not n < 2 * k:
            raise PreconditionError('Require n < 2k, got n=%d k=%d.'
                % (n, k))
        if not (K > 0 and B > 0):
            raise PreconditionError('Require K > 0 and B > 0: %s, %s.'
                % (K, B))
        if not 0 < N0 <= N1:
            raise PreconditionError('Require 0 < N0 <= N1: %s, %s.'
                % (N0, N1))
        self.n, self.k = int(n), int(k)
        self.K, self.B = float(K), float(B)
        self.N0, self.N1 = float(N0), float(N1)

    @property
    def proven_regime(self):
        return self.k >= self.n - 2

    def admissible(self, kappa, rtol=1e-12):
        """Mask of rows of sorted kappa meeting every constraint."""
        kappa = np.asarray(kappa, dtype=float)
        sk = elementary(kappa, self.k)[..., self.k]
        return (cone_margin(self.k, kappa) > 0) \
            & (sk >= self.N0 * (1 - rtol)) & (sk <= self.N1 * (1 + rtol)) \
            & (kappa[..., 0] >= self.B * (1 - rtol))

    def to_dict(self):
        return {'n': self.n, 'k': self.k, 'K': self.K, 'B': self.B,
            'N0': self.N0, 'N1': self.N1}


def conjecture_form_matrix(kappa, k, K):
    """Symmetric M with xi^T M xi equal to the conjecture's form.

    M = kappa_1 (K g g^T - H) + diag(-sigma_k^11, a_2, ..., a_n), with g the
    gradient and H the zero-diagonal Hessian of sigma_k. Accepts a stack of
    sorted vectors.
    """
    values = as_values(kappa)
    if np.any(np.ravel(cone_margin(k, values)) <= 0):
        raise PreconditionError('Curvature is not in Gamma_%d.' % (k,))
    if np.any(np.ravel(values[..., 0]) <= 0):
        raise PreconditionError('Require kappa_1 > 0.')
    return _form_matrix(values, k, K)

def _form_matrix(values, k, K):
    g = sigma_gradient(k, values)
    H = sigma_hessian(k, values)
    kappa1 = values[..., :1, None]
    M = kappa1 * (K * g[..., :, None] * g[..., None, :] - H)
    diag = g + (values[..., :1] + values) * H[..., 0, :]
    diag[..., 0] = -g[..., 0]
    n = values.shape[-1]
    M[..., np.arange(n), np.arange(n)] += diag
    return M

def conjecture_form_value(kappa, k, K, xi):
    """The scalar form evaluated term by term at xi."""
    values = as_values(kappa)
    xi = np.asarray(xi, dtype=float)
    n = len(values)
    g = sigma_gradient(k, values)
    H = sigma_hessian(k, values)
    cross = sum(H[p, q] * xi[p] * xi[q]
        for p in range(n) for q in range(n) if p != q)
    value = values[0] * (K * np.dot(g, xi)**2 - cross) - g[0] * xi[0]**2
    for j in range(1, n):
        a_j = g[j] + (values[0] + values[j]) * H[0, j]
        value += a_j * xi[j]**2
    return float(value)

def min_form_eigenvalue(kappa, k, K):
    """Smallest eigenvalue of the form matrix, batched."""
    w, _V, _sweeps = jacobi_eigh(_form_matrix(as_values(kappa), k, K))
    return np.min(w, axis=-1)

def _project(instance, kappa):
    """Sort, rescale sigma_k into [N0, N1]; return (kappa, admissible)."""
    kappa = sort_descending(kappa)
    k = instance.k
    sk = elementary(kappa, k)[:, k]
    positive = sk > 0
    target = np.clip(sk, instance.N0, instance.N1)
    scale = np.where(positive, (target / np.where(positive, sk, 1.))
        ** (1. / k), 1.)
    kappa = kappa * scale[:, None]
    return kappa, positive & instance.admissible(kappa)

def refine(instance, kappa, rounds=40, step0=.5):
    """Coordinate descent on lambda_min with per-start shrinking steps.

    Each round tries kappa_j +/- step * max(|kappa_j|, 1e-3 kappa_1) for
    every j, keeping a move when it stays admissible and lowers lambda_min;
    starts with no accepted move in a round halve their step.
    Returns (kappa, lambda_min, accepted moves).
    """
    k, K = instance.k, instance.K
    kappa = np.array(kappa, dtype=float)
    best = min_form_eigenvalue(kappa, k, K)
    step = np.full(len(kappa), step0)
    moves = 0
    n = kappa.shape[1]
    for _ in range(rounds):
        improved = np.zeros(len(kappa), dtype=bool)
        for j in range(n):
            for sign in (1., -1.):
                size = np.maximum(np.abs(kappa[:, j]), 1e-3 * kappa[:, 0])
                trial = kappa.copy()
                trial[:, j] += sign * step * size
                trial, ok = _project(instance, trial)
                value = np.full(len(kappa), np.inf)
                if np.any(ok):
                    value[ok] = min_form_eigenvalue(trial[ok], k, K)
                better = ok & (value < best)
                kappa[better] = trial[better]
                best[better] = value[better]
                improved |= better
                moves += int(np.sum(better))
        step = np.where(improved, step, step / 2)
    return kappa, best, moves

def _search_chunk(task):
    instance, size, rng, rounds = task
    try:
        starts = sample_cone_batch(instance.k, instance.n, size, rng=rng,
            N0=instance.N0, N1=instance.N1, B=instance.B)
    except SamplingError as e:
        raise PreconditionError('Constraints look infeasible: %s' % (e,))
    kappa, values, moves = refine(instance, starts, rounds=rounds)
    i = int(np.argmin(values))
    return float(values[i]), kappa[i].tolist(), len(starts), moves

def conjecture_search(instance, budget, rng=None, rounds=40, chunk=256,
        parallelism=1):
    """Multistart search for the most negative lambda_min(M(kappa, K)).

    Starts are split into fixed chunks, each with its own sub-seed drawn
    from rng, so the report does not depend on parallelism.
    """
    if rng is None:
        rng = gen_rng()
    if budget < 1:
        raise PreconditionError('Budget must be positive: %s.' % (budget,))
    sizes = [chunk] * (budget // chunk)
    if budget % chunk:
        sizes.append(budget % chunk)
    rngs = split_rngs(rng, len(sizes))
    tasks = [(instance, s, r, rounds) for s, r in zip(sizes, rngs)]
    logger.info('conjecture_search: n=%d k=%d K=%g B=%g, %d starts in %d '
        'chunks', instance.n, instance.k, instance.K, instance.B, budget,
        len(tasks))
    if parallelism == 1:
        results = [_search_chunk(t) for t in tasks]
    else:
        results = parallel_map(_search_chunk, tasks, parallelism=parallelism)
    value, witness, _count, _moves = min(results, key=lambda x: x[0])
    witness = CurvatureVector(witness)
    assert instance.admissible(witness.values[None, :])[0], witness
    return FormReport(
        min_eigenvalue=value,
        worst_kappa=witness,
        samples_tested=sum(x[2] for x in results),
        refinement_steps=sum(x[3] for x in results),
        holds=value >= ZERO_TOL,
        proven_regime=instance.proven_regime,
    )
