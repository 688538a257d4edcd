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

"""The homotopy psi_t = t psi + (1 - t) phi(r) C(n,k) zeta(r)^k."""

import numpy as np

from weingarten.utils.errors import PreconditionError
from weingarten.utils.general import nCk
from weingarten.utils.validation import validate_annulus


class HomotopyConfig(object):
    """Homotopy parameter t with deformation phi(r) = exp(s_phi (r_mid - r)).

    phi is positive, decreasing, and equals 1 at r_mid, so it is >= 1
    below the annulus and <= 1 above it.
    """

    def __init__(self, t, k, n, annulus, phi_slope=1.):
        if not 0 <= t <= 1:
            raise PreconditionError('Homotopy parameter outside [0, 1]: %s.'
                % (t,))
        if not phi_slope > 0:
            raise PreconditionError('phi_slope must be positive: %s.'
                % (phi_slope,))
        self.t = float(t)
        self.k = int(k)
        self.n = int(n)
        self.annulus = validate_annulus(annulus)
        self.phi_slope = float(phi_slope)
        self.r_mid = .5 * (self.annulus[0] + self.annulus[1])
        self.binom = nCk(self.n, self.k)

    def at(self, t):
        return HomotopyConfig(t, self.k, self.n, self.annulus, self.phi_slope)

    @property
    def r0(self):
        """Root of phi(r) = 1."""
        return self.r_mid

    def phi(self, r):
        return np.exp(self.phi_slope * (self.r_mid - np.asarray(r)))

    def phi_prime(self, r):
        return -self.phi_slope * self.phi(r)

    def phi_conditions(self, r):
        """Slack of the deformation conditions over radii r.

        (a) phi > 0, (b) phi >= 1 for r <= r_1, (c) phi <= 1 for r >= r_2,
        (d) phi' < 0.
        """
        r = np.asarray(r, dtype=float)
        r1, r2 = self.annulus
        phi = self.phi(r)
        below, above = r <= r1, r >= r2
        return {
            'phi_a': float(np.min(phi)),
            'phi_b': float(np.min(phi[below] - 1.)) if np.any(below)
                else np.inf,
            'phi_c': float(np.min(1. - phi[above])) if np.any(above)
                else np.inf,
            'phi_d': float(np.min(-self.phi_prime(r))),
        }

    def to_dict(self):
        return {'t': self.t, 'k': self.k, 'n': self.n,
            'annulus': list(self.annulus), 'phi_slope': self.phi_slope}


def psi_tilde(config, spec, profile, r, u, jet=None):
    """(value, d_dr) of the homotopy right-hand side at t = config.t."""
    r = np.asarray(r, dtype=float)
    lam, dlam, ddlam = profile.derivatives(r)
    k = config.k
    zeta = dlam / lam
    dzeta = (ddlam * lam - dlam**2) / lam**2
    phi, dphi = config.phi(r), config.phi_prime(r)
    model = config.binom * phi * zeta**k
    dmodel = config.binom * (dphi * zeta**k + phi * k * zeta**(k-1) * dzeta)
    t = config.t
    if t == 0:
        return model, dmodel
    psi = spec.evaluate(profile, r, u, jet=jet)
    if t == 1:
        return psi.value, psi.d_dr
    return t * psi.value + (1 - t) * model, t * psi.d_dr + (1 - t) * dmodel
