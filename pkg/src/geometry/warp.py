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

"""Warp functions lambda(r) of the ambient metric dr^2 + lambda(r)^2 g'."""

import math

from collections import namedtuple

import numpy as np

from numpy.polynomial import polynomial as P
from scipy.integrate import quad

from weingarten.utils.config import warp_class
from weingarten.utils.errors import DomainError
from weingarten.utils.validation import validate_annulus


WarpValues = namedtuple('WarpValues',
    ['lam', 'lam_prime', 'zeta', 'Lambda', 'lam_second'])

SCAN_POINTS = 10**4


class WarpProfile(object):
    """Base class for warp functions.

    Subclasses provide `_derivatives(r)` returning (lambda, lambda',
    lambda'') and `_primitive(r)` returning an antiderivative of lambda.
    Lambda is measured from r_ref = r_1.
    """

    kind = None
    domain = (0., np.inf)

    def __init__(self, annulus, params=None):
        self.annulus = validate_annulus(annulus)
        self.params = dict(params or {})
        self.r_ref = self.annulus[0]
        lo, hi = self.domain
        r1, r2 = self.annulus
        if not (lo < r1 and r2 < hi):
            raise DomainError('Annulus [%g, %g] not inside the %s domain '
                '(%g, %g).' % (r1, r2, self.kind, lo, hi))
        self._check_monotone()

    def _check_monotone(self):
        r = np.linspace(self.annulus[0], self.annulus[1], SCAN_POINTS)
        lam, dlam, _ = self._derivatives(r)
        if np.any(lam <= 0) or np.any(dlam <= 0):
            bad = r[np.argmax((lam <= 0) | (dlam <= 0))]
            raise DomainError('%s warp needs lambda > 0 and lambda\' > 0 on '
                'the annulus; fails at r=%g.' % (self.kind, bad))

    def check_domain(self, r):
        r = np.asarray(r, dtype=float)
        lo, hi = self.domain
        if not np.all((lo < r) & (r < hi)):
            bad = np.ravel(r)[np.argmax(np.ravel(~((lo < r) & (r < hi))))]
            raise DomainError('Radius %g outside the %s domain (%g, %g).'
                % (bad, self.kind, lo, hi))
        return r

    def derivatives(self, r):
        """(lambda, lambda', lambda'') at r."""
        return self._derivatives(self.check_domain(r))

    def Lambda(self, r):
        r = self.check_domain(r)
        return self._primitive(r) - self._primitive(self.r_ref)

    def to_dict(self):
        return {'kind': self.kind, 'params': self.params}

    def __repr__(self):
        return '%s(annulus=%s)' % (type(self).__name__, list(self.annulus))


class EuclideanWarp(WarpProfile):
    kind = 'euclidean'

    def _derivatives(self, r):
        return r, np.ones_like(r), np.zeros_like(r)

    def _primitive(self, r):
        return .5 * np.square(r)


class HyperbolicWarp(WarpProfile):
    kind = 'hyperbolic'

    def _derivatives(self, r):
        s = np.sinh(r)
        return s, np.cosh(r), s

    def _primitive(self, r):
        return np.cosh(r)


class SphericalCapWarp(WarpProfile):
    kind = 'spherical-cap'
    domain = (0., math.pi)

    def __init__(self, annulus, params=None):
        annulus = validate_annulus(annulus)
        if not annulus[1] < math.pi / 2:
            raise DomainError('Spherical cap needs r2 < pi/2, got %g.'
                % (annulus[1],))
        super(SphericalCapWarp, self).__init__(annulus, params)

    def _derivatives(self, r):
        s = np.sin(r)
        return s, np.cos(r), -s

    def _primitive(self, r):
        return -np.cos(r)


class PolynomialWarp(WarpProfile):
    """lambda(r) = sum_j c_j r^j, Lambda by adaptive quadrature.

    params: `coefficients` (ascending powers) and optional `domain`.
    """
    kind = 'custom-polynomial'

    def __init__(self, annulus, params=None):
        params = dict(params or {})
        if 'coefficients' not in params:
            raise DomainError('Polynomial warp needs `coefficients`.')
        self.coefficients = np.asarray(params['coefficients'], dtype=float)
        if self.coefficients.ndim != 1 or len(self.coefficients) == 0 \
                or not np.all(np.isfinite(self.coefficients)):
            raise DomainError('Bad polynomial coefficients: %s.'
                % (params['coefficients'],))
        self.domain = tuple(float(x) for x in params.get('domain',
            (0., np.inf)))
        self.c1 = P.polyder(self.coefficients)
        self.c2 = P.polyder(self.coefficients, 2)
        super(PolynomialWarp, self).__init__(annulus, params)

    def _derivatives(self, r):
        return (P.polyval(r, self.coefficients), P.polyval(r, self.c1),
            P.polyval(r, self.c2))

    def _primitive(self, r):
        def integral(x):
            value, _err = quad(lambda s: P.polyval(s, self.coefficients),
                self.r_ref, x, epsabs=1e-13, epsrel=1e-12, limit=200)
            return value
        return np.vectorize(integral, otypes=[float])(r)

    def Lambda(self, r):
        return self._primitive(self.check_domain(r))

    def to_dict(self):
        return {'kind': self.kind,
            'params': {'coefficients': self.coefficients.tolist(),
                'domain': list(self.domain)}}


def warp_eval(profile, r):
    """(lambda, lambda', zeta, Lambda, lambda'') at r (scalar or array)."""
    lam, dlam, ddlam = profile.derivatives(r)
    values = WarpValues(lam=lam, lam_prime=dlam, zeta=dlam / lam,
        Lambda=profile.Lambda(r), lam_second=ddlam)
    if np.ndim(r) == 0:
        return WarpValues(*[float(x) for x in values])
    return values

def make_warp(kind, annulus, params=None):
    """Construct a warp preset by name (see utils.config.warp_class_lookup)."""
    return warp_class(kind)(annulus, params)
