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

"""Induced geometry of a radial graph, evaluated at every grid node.

For Sigma = {(r(u), u)} with p = grad r and Q = Hess r on the flat torus:

    g = lambda^2 I + p p^T,     v = sqrt(lambda^2 + |p|^2),
    g^-1 = (I - p p^T / v^2) / lambda^2,
    h = (-lambda Q + 2 lambda' p p^T + lambda^2 lambda' I) / v,
    tau = lambda^2 / v,         nu_radial = lambda / v,

with the outward normal, so slices r = c have kappa_i = zeta(c) > 0.
"""

from collections import namedtuple

import numpy as np

from weingarten.geometry.grid import graph_derivatives
from weingarten.symfunc.curvature import CurvatureVector
from weingarten.symfunc.eigen import inverse_sqrt
from weingarten.symfunc.eigen import sorted_eigh


HypersurfaceJet = namedtuple('HypersurfaceJet',
    ['grad_r', 'hess_r', 'v', 'g', 'g_inv', 'h', 'shape', 'kappa', 'tau',
     'nu_radial'])


class JetField(object):
    """Per-node geometry of a field; arrays are indexed by flat node."""

    def __init__(self, field, lam, lam_prime, lam_second, grad, hess):
        n = field.grid.n
        eye = np.eye(n)
        pp = grad[:, :, None] * grad[:, None, :]
        lam2 = lam**2
        self.field = field
        self.grad = grad
        self.hess = hess
        self.lam = lam
        self.lam_prime = lam_prime
        self.lam_second = lam_second
        self.zeta = lam_prime / lam
        self.v = np.sqrt(lam2 + np.sum(grad**2, axis=1))
        self.g = lam2[:, None, None] * eye + pp
        self.g_inv = (eye - pp / self.v[:, None, None]**2) \
            / lam2[:, None, None]
        self.h = (-lam[:, None, None] * hess
            + 2 * lam_prime[:, None, None] * pp
            + (lam2 * lam_prime)[:, None, None] * eye) / self.v[:, None, None]
        self.tau = lam2 / self.v
        self.nu_radial = lam / self.v
        root = inverse_sqrt(self.g)
        shape = np.matmul(root, np.matmul(self.h, root))
        self.shape = .5 * (shape + np.swapaxes(shape, 1, 2))
        self.kappa, _V = sorted_eigh(self.shape)

    @property
    def size(self):
        return len(self.v)

    def raw_shape(self):
        """g^-1 h, similar to the symmetrized operator."""
        return np.matmul(self.g_inv, self.h)

    def node(self, i):
        return HypersurfaceJet(
            grad_r=self.grad[i],
            hess_r=self.hess[i],
            v=float(self.v[i]),
            g=self.g[i],
            g_inv=self.g_inv[i],
            h=self.h[i],
            shape=self.shape[i],
            kappa=CurvatureVector(self.kappa[i]),
            tau=float(self.tau[i]),
            nu_radial=float(self.nu_radial[i]),
        )


def jet_sweep(profile, field, derivatives=None):
    """JetField for every node of field under the warp profile."""
    if derivatives is None:
        derivatives = graph_derivatives(field)
    lam, lam_prime, lam_second = profile.derivatives(field.flat())
    return JetField(field, lam, lam_prime, lam_second,
        derivatives.grad, derivatives.hess)

def hypersurface_jet(profile, field, node, derivatives=None):
    """HypersurfaceJet at one node, given as a flat index or index tuple."""
    if derivatives is None:
        derivatives = graph_derivatives(field)
    if isinstance(node, tuple):
        node = int(np.ravel_multi_index(node, field.grid.shape))
    index = slice(node, node + 1)
    lam, lam_prime, lam_second = profile.derivatives(field.flat()[index])
    jets = JetField(field, lam, lam_prime, lam_second,
        derivatives.grad[index], derivatives.hess[index])
    return jets.node(0)

def principal_curvatures(jet):
    """Principal curvatures of a HypersurfaceJet, sorted descending."""
    return jet.kappa if isinstance(jet.kappa, CurvatureVector) \
        else CurvatureVector(jet.kappa)
