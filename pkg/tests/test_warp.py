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

import math

import numpy as np
import pytest

from weingarten.geometry.warp import EuclideanWarp
from weingarten.geometry.warp import HyperbolicWarp
from weingarten.geometry.warp import PolynomialWarp
from weingarten.geometry.warp import SphericalCapWarp
from weingarten.geometry.warp import make_warp
from weingarten.geometry.warp import warp_eval
from weingarten.utils.config import all_warps
from weingarten.utils.errors import DomainError
from weingarten.utils.errors import InputError


def test_presets():
    r = np.linspace(1., 3., 7)
    lam, dlam, ddlam = EuclideanWarp([1., 3.]).derivatives(r)
    assert np.all(lam == r) and np.all(dlam == 1.) and np.all(ddlam == 0.)
    lam, dlam, ddlam = HyperbolicWarp([1., 3.]).derivatives(r)
    assert np.allclose(lam, np.sinh(r)) and np.allclose(dlam, np.cosh(r))
    assert np.allclose(ddlam, np.sinh(r))
    r = np.linspace(.2, 1.2, 7)
    lam, dlam, ddlam = SphericalCapWarp([.2, 1.2]).derivatives(r)
    assert np.allclose(lam, np.sin(r)) and np.allclose(dlam, np.cos(r))
    assert np.allclose(ddlam, -np.sin(r))

def test_Lambda_from_inner_radius():
    assert EuclideanWarp([1., 3.]).Lambda(2.) == 1.5
    assert abs(HyperbolicWarp([1., 3.]).Lambda(2.)
        - (math.cosh(2.) - math.cosh(1.))) < 1e-14
    assert abs(SphericalCapWarp([.2, 1.2]).Lambda(1.)
        - (math.cos(.2) - math.cos(1.))) < 1e-15
    poly = PolynomialWarp([1., 3.], {'coefficients': [0., 1.]})
    assert abs(poly.Lambda(2.) - 1.5) < 1e-12
    assert poly.Lambda(1.) == 0.

def test_polynomial_matches_preset():
    poly = PolynomialWarp([1., 3.], {'coefficients': [0., 1., .5]})
    r = np.array([1.5, 2.5])
    lam, dlam, ddlam = poly.derivatives(r)
    assert np.allclose(lam, r + .5 * r**2)
    assert np.allclose(dlam, 1. + r)
    assert np.allclose(ddlam, 1.)
    expected = .5 * (r**2 - 1) + (r**3 - 1) / 6.
    assert np.allclose(poly.Lambda(r), expected, rtol=1e-12)

def test_warp_eval():
    values = warp_eval(HyperbolicWarp([1., 3.]), 2.)
    assert isinstance(values.lam, float)
    assert abs(values.zeta - math.cosh(2.) / math.sinh(2.)) < 1e-15
    values = warp_eval(EuclideanWarp([1., 3.]), np.array([1., 2.]))
    assert np.allclose(values.zeta, [1., .5])

def test_domain_errors():
    with pytest.raises(DomainError):
        SphericalCapWarp([.5, 1.6])
    with pytest.raises(DomainError):
        HyperbolicWarp([-1., 1.])
    with pytest.raises(DomainError):
        PolynomialWarp([1., 2.], {'coefficients': [3., -1.]})
    with pytest.raises(DomainError):
        PolynomialWarp([1., 2.], {})
    with pytest.raises(DomainError):
        EuclideanWarp([1., 3.]).derivatives(-1.)
    with pytest.raises(InputError):
        EuclideanWarp([3., 1.])

def test_make_warp():
    assert all_warps() == ['custom-polynomial', 'euclidean', 'hyperbolic',
        'spherical-cap']
    assert isinstance(make_warp('hyperbolic', [1., 2.]), HyperbolicWarp)
    assert make_warp('euclidean', [1., 3.]).to_dict() == \
        {'kind': 'euclidean', 'params': {}}
    with pytest.raises(ValueError):
        make_warp('conical', [1., 2.])
