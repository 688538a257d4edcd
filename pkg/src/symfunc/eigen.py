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

import warnings

import numpy as np


def jacobi_eigh(A, rtol=1e-13, max_sweeps=50):
    """Eigen-decomposition of real symmetric matrices by cyclic Jacobi.

    A has shape (..., n, n). Returns (w, V, sweeps) with A = V diag(w) V^T,
    eigenvalues in diagonal order (unsorted). A matrix stops rotating once
    its off-diagonal Frobenius norm is at most rtol times its norm, so each
    result is independent of the rest of the batch.
    """
    A = np.array(A, dtype=float)
    batch, n = A.shape[:-2], A.shape[-1]
    A = A.reshape((-1, n, n))
    V = np.tile(np.eye(n), (A.shape[0], 1, 1))
    thresh = rtol * np.sqrt(np.sum(A**2, axis=(1, 2)))
    offdiag = ~np.eye(n, dtype=bool)
    pairs = [(p, q) for p in range(n) for q in range(p+1, n)]

    sweeps = 0
    while True:
        active = np.sqrt(np.sum(A[:, offdiag]**2, axis=1)) > thresh
        if not np.any(active):
            break
        if sweeps == max_sweeps:
            warnings.warn('Jacobi eigensolver stopped after %d sweeps on %d '
                'unconverged matrices.' % (max_sweeps, np.sum(active)))
            break
        sweeps += 1
        for p, q in pairs:
            apq = A[:, p, q]
            rotate = active & (apq != 0)
            if not np.any(rotate):
                continue
            theta = (A[:, q, q] - A[:, p, p]) / (2. * np.where(rotate, apq, 1.))
            sgn = np.where(theta >= 0, 1., -1.)
            with np.errstate(over='ignore'):
                t = sgn / (np.abs(theta) + np.sqrt(theta**2 + 1.))
            t = np.where(rotate, t, 0.)
            c = (1. / np.sqrt(t**2 + 1.))[:, None]
            s = t[:, None] * c
            _rotate_columns(A, p, q, c, s)
            _rotate_columns(V, p, q, c, s)
            Ap, Aq = A[:, p, :].copy(), A[:, q, :].copy()
            A[:, p, :] = c*Ap - s*Aq
            A[:, q, :] = s*Ap + c*Aq
            A[rotate, p, q] = A[rotate, q, p] = 0.

    w = np.diagonal(A, axis1=1, axis2=2).copy()
    return w.reshape(batch + (n,)), V.reshape(batch + (n, n)), sweeps

def _rotate_columns(X, p, q, c, s):
    Xp, Xq = X[:, :, p].copy(), X[:, :, q].copy()
    X[:, :, p] = c*Xp - s*Xq
    X[:, :, q] = s*Xp + c*Xq

def sorted_eigh(A, rtol=1e-13, max_sweeps=50):
    """Jacobi eigenpairs sorted by descending eigenvalue (stable on ties)."""
    w, V, _sweeps = jacobi_eigh(A, rtol=rtol, max_sweeps=max_sweeps)
    order = np.argsort(-w, axis=-1, kind='stable')
    w = np.take_along_axis(w, order, axis=-1)
    V = np.take_along_axis(V, order[..., None, :], axis=-1)
    return w, V

def inverse_sqrt(G):
    """Principal G^{-1/2} of symmetric positive definite matrices."""
    w, V, _sweeps = jacobi_eigh(G)
    assert np.all(w > 0), 'Matrix is not positive definite.'
    return np.einsum('...ij,...j,...kj->...ik', V, 1./np.sqrt(w), V)
