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

"""Surface Laplacian and the first order support-function identities."""

import numpy as np

from weingarten.symfunc.sigma import elementary


def laplace_beltrami(f, jets):
    """Discrete (1/sqrt g) d_i (sqrt g g^ij d_j f) on the grid of jets.

    Diagonal terms use face-averaged coefficients in conservative form,
    mixed terms centered differences of nodal fluxes. Returns grid shape.
    """
    grid = jets.field.grid
    n, h = grid.n, grid.h
    f = np.reshape(np.asarray(f, dtype=float), grid.shape)
    sqrtg = (jets.lam**(n - 1) * jets.v).reshape(grid.shape)
    coeff = (jets.lam**(n - 1) * jets.v)[:, None, None] * jets.g_inv
    div = np.zeros(grid.shape)
    for i in range(n):
        ei, mi = grid.unit(i), grid.unit(i, -1)
        cii = coeff[:, i, i].reshape(grid.shape)
        face = .5 * (cii + grid.shift(cii, ei))
        flux = face * (grid.shift(f, ei) - f) / h
        div += (flux - grid.shift(flux, mi)) / h
        for j in range(n):
            if j == i:
                continue
            cij = coeff[:, i, j].reshape(grid.shape)
            flux = cij * (grid.shift(f, grid.unit(j))
                - grid.shift(f, grid.unit(j, -1))) / (2 * h)
            div += (grid.shift(flux, ei) - grid.shift(flux, mi)) / (2 * h)
    return div / sqrtg

def trace_identity_rhs(jets):
    """n lambda' - tau sigma_1, in the expanded form

        (1/v^2) [lambda (tr Q - p^T Q p / v^2)
                 + lambda' |p|^2 (n - 1 + |p|^2 / v^2)]

    which vanishes identically when p = Q = 0.
    """
    n = jets.grad.shape[1]
    p, Q, v2 = jets.grad, jets.hess, jets.v**2
    p2 = np.sum(p**2, axis=1)
    trQ = np.trace(Q, axis1=1, axis2=2)
    pQp = np.einsum('mi,mij,mj->m', p, Q, p)
    rhs = (jets.lam * (trQ - pQp / v2)
        + jets.lam_prime * p2 * (n - 1 + p2 / v2)) / v2
    return rhs.reshape(jets.field.grid.shape)

def trace_identity_rhs_direct(jets):
    """n lambda' - tau sigma_1(kappa) from the computed curvatures."""
    n = jets.grad.shape[1]
    sigma1 = elementary(jets.kappa, 1)[:, 1]
    rhs = n * jets.lam_prime - jets.tau * sigma1
    return rhs.reshape(jets.field.grid.shape)

def lambda_identity_error(profile, jets):
    """max |Delta_Sigma Lambda(r) - (n lambda' - tau sigma_1)|."""
    Lambda = profile.Lambda(jets.field.flat())
    lhs = laplace_beltrami(Lambda, jets)
    return float(np.max(np.abs(lhs - trace_identity_rhs(jets))))

def tau_gradient_identity_error(jets):
    """max |d_i tau - h_ij g^jl lambda r_l| with central differences of tau."""
    grid = jets.field.grid
    tau = jets.tau.reshape(grid.shape)
    rhs = np.einsum('mij,mjl,ml->mi', jets.h, jets.g_inv,
        jets.lam[:, None] * jets.grad)
    error = 0.
    for i in range(grid.n):
        dtau = (grid.shift(tau, grid.unit(i))
            - grid.shift(tau, grid.unit(i, -1))) / (2 * grid.h)
        error = max(error, float(np.max(np.abs(dtau.ravel() - rhs[:, i]))))
    return error
