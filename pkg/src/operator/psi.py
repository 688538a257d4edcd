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

"""Right-hand sides psi(r, u) of the curvature equation.

Presets depend on the radius and the base point only; the normal enters
the interface through `jet` but no preset reads it.
"""

from collections import namedtuple

import numpy as np

from weingarten.utils.config import psi_class
from weingarten.utils.errors import InterpolationError
from weingarten.utils.errors import PreconditionError
from weingarten.utils.general import nCk
from weingarten.utils.validation import validate_annulus


PsiValues = namedtuple('PsiValues', ['value', 'd_dr', 'd_du'])


class PsiSpec(object):
    kind = None

    def __init__(self, k, n, annulus):
        self.k = int(k)
        self.n = int(n)
        self.annulus = validate_annulus(annulus)
        self.r_mid = .5 * (self.annulus[0] + self.annulus[1])
        self.binom = nCk(self.n, self.k)

    def evaluate(self, profile, r, u, jet=None):
        raise NotImplementedError

    def to_dict(self):
        return {'kind': self.kind}


class RadialBetaPsi(PsiSpec):
    """psi = C(n,k) zeta(r)^k beta(r), beta(r) = exp(s_beta (r_mid - r))."""

    kind = 'radial-beta'

    def __init__(self, k, n, annulus, s_beta=2.5):
        super(RadialBetaPsi, self).__init__(k, n, annulus)
        if not s_beta > 0:
            raise PreconditionError('s_beta must be positive: %s.' % (s_beta,))
        self.s_beta = float(s_beta)

    def beta(self, r):
        return np.exp(self.s_beta * (self.r_mid - r))

    def _radial(self, profile, r):
        lam, dlam, ddlam = profile.derivatives(r)
        zeta = dlam / lam
        dzeta = (ddlam * lam - dlam**2) / lam**2
        beta = self.beta(r)
        k = self.k
        value = self.binom * zeta**k * beta
        d_dr = self.binom * beta * (k * zeta**(k-1) * dzeta
            - self.s_beta * zeta**k)
        return value, d_dr

    def evaluate(self, profile, r, u, jet=None):
        r = np.asarray(r, dtype=float)
        value, d_dr = self._radial(profile, r)
        return PsiValues(value=value, d_dr=d_dr,
            d_du=np.zeros(np.shape(r) + (self.n,)))

    def to_dict(self):
        return {'kind': self.kind, 's_beta': self.s_beta}


class AngularPsi(RadialBetaPsi):
    """Radial-beta times (1 + eps_psi prod_i cos u_i)."""

    kind = 'angular'

    def __init__(self, k, n, annulus, s_beta=2.5, eps_psi=0.05):
        super(AngularPsi, self).__init__(k, n, annulus, s_beta=s_beta)
        if not 0 <= eps_psi < 1:
            raise PreconditionError('eps_psi must lie in [0, 1): %s.'
                % (eps_psi,))
        self.eps_psi = float(eps_psi)

    def angular(self, u):
        u = np.asarray(u, dtype=float)
        return np.prod(np.cos(u), axis=-1)

    def evaluate(self, profile, r, u, jet=None):
        r = np.asarray(r, dtype=float)
        u = np.asarray(u, dtype=float)
        radial, d_radial = self._radial(profile, r)
        factor = 1. + self.eps_psi * self.angular(u)
        d_du = np.empty(np.shape(u))
        for i in range(self.n):
            others = np.prod(np.cos(np.delete(u, i, axis=-1)), axis=-1)
            d_du[..., i] = -self.eps_psi * np.sin(u[..., i]) * others
        return PsiValues(value=radial * factor, d_dr=d_radial * factor,
            d_du=radial[..., None] * d_du)

    def to_dict(self):
        return {'kind': self.kind, 's_beta': self.s_beta,
            'eps_psi': self.eps_psi}


class TabulatedPsi(PsiSpec):
    """Grid function of u only, read at nodes; zero declared partials."""

    kind = 'tabulated'

    def __init__(self, k, n, annulus, grid, table):
        super(TabulatedPsi, self).__init__(k, n, annulus)
        table = np.array(table, dtype=float)
        if table.size != grid.size:
            raise PreconditionError('Table has %d values for %d nodes.'
                % (table.size, grid.size))
        if not np.all(table > 0):
            raise PreconditionError('Tabulated psi must be positive.')
        self.grid = grid
        self.table = table.reshape(grid.shape)

    def lookup(self, u):
        u = np.asarray(u, dtype=float)
        position = u / self.grid.h
        index = np.rint(position)
        if np.any(np.abs(position - index) > 1e-9):
            raise InterpolationError('Tabulated psi queried off-grid.')
        index = index.astype(int) % self.grid.N
        return self.table[tuple(np.moveaxis(index, -1, 0))]

    def evaluate(self, profile, r, u, jet=None):
        value = self.lookup(u)
        return PsiValues(value=value, d_dr=np.zeros(np.shape(value)),
            d_du=np.zeros(np.shape(value) + (self.n,)))

    def to_dict(self):
        return {'kind': self.kind, 'N': self.grid.N}


def psi_eval(spec, profile, r, u, jet=None):
    """(value, d_dr, d_du) of psi at radii r and base points u."""
    return spec.evaluate(profile, r, u, jet=jet)

def make_psi(kind, k, n, annulus, **params):
    """Construct a right-hand side preset by name."""
    return psi_class(kind)(k, n, annulus, **params)
