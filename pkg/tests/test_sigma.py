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

import numpy as np
import pytest

import hypothesis.strategies as st

from hypothesis import given
from hypothesis import settings

from weingarten.symfunc.curvature import CurvatureVector
from weingarten.symfunc.lemmas import identity_errors
from weingarten.symfunc.sampling import sample_cone_batch
from weingarten.symfunc.sigma import cone_margin
from weingarten.symfunc.sigma import cone_test
from weingarten.symfunc.sigma import elementary
from weingarten.symfunc.sigma import sigma
from weingarten.symfunc.sigma import sigma_deleted
from weingarten.symfunc.sigma import sigma_gradient
from weingarten.symfunc.sigma import sigma_hessian
from weingarten.utils.errors import DomainError
from weingarten.utils.errors import ShapeError
from weingarten.utils.general import gen_rng
from weingarten.utils.general import nCk


# Entries bounded away from zero so that the |kappa| scale never vanishes.
curvatures = st.lists(
    st.tuples(st.floats(1e-2, 1e1), st.booleans()),
    min_size=1, max_size=8,
).map(lambda xs: [x if positive else -x for x, positive in xs])


def test_sigma_small():
    kappa = CurvatureVector([1., 2., 3.])
    assert sigma(0, kappa) == 1.
    assert sigma(1, kappa) == 6.
    assert sigma(2, kappa) == 11.
    assert sigma(3, kappa) == 6.
    assert sigma(4, kappa) == 0.
    with pytest.raises(DomainError):
        sigma(4, kappa, strict=True)
    with pytest.raises(DomainError):
        sigma(-1, kappa)

def test_sigma_batch_shape():
    values = np.arange(15.).reshape((5, 3))
    assert np.shape(sigma(2, values)) == (5,)
    assert np.allclose(sigma(1, values), np.sum(values, axis=1))
    e = elementary(values, 3)
    assert e.shape == (5, 4)
    assert np.all(e[:, 0] == 1.)
    assert np.allclose(e[:, 3], np.prod(values, axis=1))

def test_sigma_deleted():
    kappa = [4., 3., 2., 1.]
    assert sigma_deleted(1, kappa, 0) == 6.
    assert sigma_deleted(2, kappa, [0, 1]) == 2.
    assert sigma_deleted(0, kappa, [1, 2]) == 1.
    assert sigma_deleted(3, kappa, [1, 2]) == 0.

def test_sigma_gradient_finite_difference():
    rng = np.random.RandomState(1)
    kappa = rng.uniform(-1, 2, size=5)
    for k in range(1, 6):
        grad = sigma_gradient(k, kappa)
        for i in range(5):
            step = np.zeros(5)
            step[i] = 1e-6
            fd = (sigma(k, kappa + step) - sigma(k, kappa - step)) / 2e-6
            assert abs(fd - grad[i]) < 1e-7

def test_sigma_hessian():
    kappa = [3., 2., 1., -.5]
    H = sigma_hessian(3, kappa)
    assert np.allclose(H, H.T)
    assert np.all(np.diag(H) == 0)
    assert H[0, 1] == sigma_deleted(1, kappa, [0, 1])
    assert np.all(sigma_hessian(1, kappa) == 0)
    with pytest.raises(DomainError):
        sigma_hessian(5, kappa)

def test_cone_margin():
    assert cone_margin(3, [1., 1., 1.]) == 1.
    assert cone_margin(1, [2., -1.]) == .5
    assert cone_margin(2, [2., -1.]) < 0
    membership = cone_test(2, [2., -1.])
    assert not membership.in_cone
    assert membership.k == 2
    batch = cone_test(1, [[1., 1.], [-1., -1.]])
    assert batch.in_cone.tolist() == [True, False]

def test_curvature_vector_sorting():
    kappa = CurvatureVector([1., 3., 2.])
    assert kappa.to_list() == [3., 2., 1.]
    assert kappa.order.tolist() == [1, 2, 0]
    assert kappa.kappa1 == 3.
    assert len(kappa) == kappa.n == 3
    ties = CurvatureVector([1., 1., 0.])
    assert ties.order.tolist() == [0, 1, 2]
    with pytest.raises(ValueError):
        kappa.values[0] = 7.
    with pytest.raises(DomainError):
        CurvatureVector([1., np.nan])
    with pytest.raises(ShapeError):
        CurvatureVector([[1., 2.]])
    with pytest.raises(ShapeError):
        CurvatureVector([])

@given(curvatures, st.data())
@settings(max_examples=300, deadline=None)
def test_euler_and_count_identities(kappa, data):
    k = data.draw(st.integers(1, len(kappa)))
    errors = identity_errors(k, np.array([kappa]))
    assert errors['euler'] < 1e-12
    assert errors['count'] < 1e-12

@given(curvatures)
@settings(max_examples=200, deadline=None)
def test_sigma_symmetric_under_permutation(kappa):
    values = np.array(kappa)
    reverse = values[::-1]
    for k in range(len(values) + 1):
        scale = elementary(np.abs(values), k)[k]
        assert abs(sigma(k, values) - sigma(k, reverse)) <= 1e-12 * scale

@given(curvatures)
@settings(max_examples=200, deadline=None)
def test_maclaurin_inequality(kappa):
    # (sigma_k / C(n,k))^(1/k) <= (sigma_l / C(n,l))^(1/l) on Gamma_k, l < k.
    n = len(kappa)
    e = elementary(kappa, n)
    means = [e[m] / nCk(n, m) for m in range(n+1)]
    top = max(abs(x) for x in kappa)
    for k in range(2, n+1):
        # Stay clear of the boundary, where round-off dominates.
        if not all(means[m] > 1e-6 * top**m for m in range(1, k+1)):
            continue
        for l in range(1, k):
            assert means[k]**(1. / k) <= means[l]**(1. / l) * (1 + 1e-10)

def test_sigma_hessian_finite_difference():
    rng = np.random.RandomState(2)
    kappa = rng.uniform(-1, 2, size=5)
    for k in range(2, 6):
        H = sigma_hessian(k, kappa)
        for i in range(5):
            step = np.zeros(5)
            step[i] = 1e-6
            fd = (sigma_gradient(k, kappa + step)
                - sigma_gradient(k, kappa - step)) / 2e-6
            assert np.max(np.abs(fd - H[:, i])) < 1e-7

def test_sigma_gradient_positive_in_cone():
    rng = gen_rng(3)
    for k, n in [(1, 3), (2, 2), (2, 3), (3, 4), (3, 5)]:
        kappas = sample_cone_batch(k, n, 200, rng=rng)
        assert np.all(cone_margin(k, kappas) > 0)
        assert np.all(sigma_gradient(k, kappas) > 0)
