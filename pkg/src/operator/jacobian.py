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

"""Sparse Jacobian of the discrete curvature operator.

The residual at node u depends on r(u) directly and on the difference
quotients p = grad r, Q = Hess r. Its partials with respect to (r, p, Q)
come from the chain rule through the Newton tensor,

    d sigma_k(S) = tr(T_{k-1}(S) dS),    S = g^-1 h,
    dS = g^-1 (dh - dg S),

and are then spread over the 3^n stencil box with the difference weights.
"""

import itertools
import logging

from collections import namedtuple

import numpy as np
import scipy.sparse

from weingarten.geometry.grid import graph_derivatives
from weingarten.operator.residual import residual
from weingarten.symfunc.shape import newton_tensor
from weingarten.utils.config import check_env_debug


logger = logging.getLogger(__name__)

Linearization = namedtuple('Linearization', ['dr', 'dp', 'dQ'])


def linearize(result, config):
    """Partials of the residual at every node from a ResidualResult.

    dr has shape (size,), dp (size, n); dQ (size, n, n) holds dF/dQ_pp on
    the diagonal and, off the diagonal, the derivative along Q_pq = Q_qp
    moved together.
    """
    jets = result.jets
    M, n = jets.grad.shape
    eye = np.eye(n)
    l0 = jets.lam[:, None, None]
    l1 = jets.lam_prime[:, None, None]
    l2 = jets.lam_second[:, None, None]
    v = jets.v[:, None, None]
    p = jets.grad
    pp = p[:, :, None] * p[:, None, :]
    S = jets.raw_shape()
    T = newton_tensor(S, config.k, jets.kappa)

    def directional(dr, dp, dQ):
        dr = dr[:, None, None]
        dpp = dp[:, :, None] * p[:, None, :] + p[:, :, None] * dp[:, None, :]
        dv = (l0 * l1 * dr + np.sum(p * dp, axis=1)[:, None, None]) / v
        dg = 2 * l0 * l1 * dr * eye + dpp
        dM = -l1 * dr * jets.hess - l0 * dQ + 2 * l2 * dr * pp \
            + 2 * l1 * dpp + (2 * l0 * l1**2 + l0**2 * l2) * dr * eye
        dh = dM / v - jets.h * dv / v
        dS = np.matmul(jets.g_inv, dh - np.matmul(dg, S))
        dsigma = np.einsum('mab,mba->m', T, dS)
        return dsigma - result.psi_dr * dr[:, 0, 0]

    zero_r, zero_p, zero_Q = np.zeros(M), np.zeros((M, n)), np.zeros((M, n, n))
    dr = directional(np.ones(M), zero_p, zero_Q)
    dp = np.empty((M, n))
    dQ = np.empty((M, n, n))
    for a in range(n):
        unit = zero_p.copy()
        unit[:, a] = 1.
        dp[:, a] = directional(zero_r, unit, zero_Q)
        for b in range(a, n):
            unit = zero_Q.copy()
            unit[:, a, b] = unit[:, b, a] = 1.
            dQ[:, a, b] = dQ[:, b, a] = directional(zero_r, zero_p, unit)
    return Linearization(dr=dr, dp=dp, dQ=dQ)

def stencil_weights(linearization, grid):
    """{offset: weight array} composing the partials with the stencils."""
    n, h = grid.n, grid.h
    lin = linearization
    center = tuple([0] * n)
    weights = {center: lin.dr.copy()}
    for a in range(n):
        weights[center] -= 2 * lin.dQ[:, a, a] / h**2
        for step in (1, -1):
            weights[grid.unit(a, step)] = \
                step * lin.dp[:, a] / (2 * h) + lin.dQ[:, a, a] / h**2
        for b in range(a+1, n):
            for sa, sb in itertools.product((1, -1), repeat=2):
                offset = [0] * n
                offset[a], offset[b] = sa, sb
                weights[tuple(offset)] = sa * sb * lin.dQ[:, a, b] / (4 * h**2)
    return weights

def assemble(weights, grid):
    rows, cols, vals = [], [], []
    nodes = np.arange(grid.size)
    for offset in sorted(weights):
        rows.append(nodes)
        cols.append(grid.neighbor_index(offset))
        vals.append(weights[offset])
    J = scipy.sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(grid.size, grid.size))
    return J.tocsr()

def jacobian(field, config, spec, profile, result=None):
    """CSR Jacobian of the residual at field.

    Analytic by default; finite-difference assembly when WEINGARTENDEBUG is
    set. Raises AdmissibilityError on an inadmissible field.
    """
    if check_env_debug():
        return jacobian_fd(field, config, spec, profile)
    if result is None:
        result = residual(field, config, spec, profile)
    weights = stencil_weights(linearize(result, config), field.grid)
    return assemble(weights, field.grid)

def jacobian_triplets(J):
    """(row, col, value) arrays of a sparse matrix, sorted by row then col."""
    J = scipy.sparse.csr_matrix(J)
    J.sort_indices()
    coo = J.tocoo()
    return coo.row, coo.col, coo.data

def stencil_period(N):
    """Smallest divisor m >= 3 of N, so nodes congruent mod m never share a
    3-point neighborhood on the periodic grid."""
    return next(m for m in range(3, N + 1) if N % m == 0)

def jacobian_fd(field, config, spec, profile, eps=1e-7):
    """Jacobian by central differences of the residual, one colour class
    of nodes perturbed at a time."""
    grid = field.grid
    m = stencil_period(grid.N)
    index = np.indices(grid.shape).reshape((grid.n, -1)).T
    box = list(itertools.product((-1, 0, 1), repeat=grid.n))
    neighbors = {o: grid.neighbor_index(o) for o in box}
    rows, cols, vals = [], [], []
    logger.debug('jacobian_fd: %d colours', m**grid.n)
    for colour in itertools.product(range(m), repeat=grid.n):
        mask = np.all(index % m == np.array(colour), axis=1)
        bump = eps * mask.reshape(grid.shape)
        plus = residual(field.with_values(field.r + bump), config, spec,
            profile).values
        minus = residual(field.with_values(field.r - bump), config, spec,
            profile).values
        diff = (plus - minus) / (2 * eps)
        cols_colour = np.flatnonzero(mask)
        for o in box:
            # Node j perturbed influences the rows at j - o.
            row = neighbors[tuple(-x for x in o)][cols_colour]
            rows.append(row)
            cols.append(cols_colour)
            vals.append(diff[row])
    J = scipy.sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(grid.size, grid.size))
    return J.tocsr()

def jacobian_vector(field, config, spec, profile, w, result=None):
    """J w via the analytic partials, without assembling J."""
    if result is None:
        result = residual(field, config, spec, profile)
    w = np.asarray(w, dtype=float).reshape(field.grid.shape)
    lin = linearize(result, config)
    d = graph_derivatives(field.with_values(w))
    # Off-diagonal dQ entries are derivatives along Q_ab = Q_ba together.
    full = np.einsum('mab,mab->m', lin.dQ, d.hess)
    diag = np.einsum('maa,maa->m', lin.dQ, d.hess)
    return lin.dr * w.ravel() + np.sum(lin.dp * d.grad, axis=1) \
        + .5 * (full + diag)
