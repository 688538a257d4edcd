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

from weingarten.symfunc.eigen import inverse_sqrt
from weingarten.symfunc.eigen import jacobi_eigh
from weingarten.symfunc.eigen import sorted_eigh
from weingarten.symfunc.shape import newton_tensor
from weingarten.symfunc.shape import sigma_of_shape
from weingarten.utils.errors import DomainError
from weingarten.utils.errors import ShapeError
from weingarten.utils.general import gen_rng


def random_symmetric(rng, n, size=None):
    shape = (n, n) if size is None else (size, n, n)
    A = rng.normal(size=shape)
    return .5 * (A + np.swapaxes(A, -1, -2))

def test_jacobi_reconstructs():
    rng = gen_rng(2)
    for n in range(1, 9):
        A = random_symmetric(rng, n)
        w, V, _sweeps = jacobi_eigh(A)
        assert np.allclose(V.dot(np.diag(w)).dot(V.T), A, atol=1e-12)
        assert np.allclose(V.T.dot(V), np.eye(n), atol=1e-12)
        assert np.allclose(np.sort(w), np.linalg.eigvalsh(A), atol=1e-12)

def test_jacobi_diagonal_needs_no_sweeps():
    w, V, sweeps = jacobi_eigh(np.diag([3., -1., 2.]))
    assert sweeps == 0
    assert w.tolist() == [3., -1., 2.]
    assert np.all(V == np.eye(3))

def test_jacobi_batch_independent():
    rng = gen_rng(3)
    batch = random_symmetric(rng, 4, size=6)
    batch[2] = np.diag([1., 2., 3., 4.])
    w, V, _sweeps = jacobi_eigh(batch)
    for i in range(6):
        wi, Vi, _ = jacobi_eigh(batch[i])
        assert np.array_equal(w[i], wi)
        assert np.array_equal(V[i], Vi)

def test_jacobi_sweep_cap_warns():
    A = random_symmetric(gen_rng(4), 5)
    with pytest.warns(UserWarning):
        jacobi_eigh(A, max_sweeps=0)

def test_sorted_eigh_descending():
    A = random_symmetric(gen_rng(5), 6, size=3)
    w, V = sorted_eigh(A)
    assert np.all(np.diff(w, axis=-1) <= 0)
    for i in range(3):
        assert np.allclose(A[i].dot(V[i]), V[i] * w[i], atol=1e-12)

def test_inverse_sqrt():
    rng = gen_rng(6)
    B = rng.normal(size=(4, 3, 3))
    G = np.matmul(B, np.swapaxes(B, 1, 2)) + np.eye(3)
    X = inverse_sqrt(G)
    assert np.allclose(np.matmul(X, np.matmul(G, X)), np.eye(3), atol=1e-11)
    assert np.allclose(X, np.swapaxes(X, 1, 2))

def test_sigma_of_shape():
    value, kappa = sigma_of_shape(2, np.diag([1., 2., 3.]))
    assert value == 11.
    assert kappa.to_list() == [3., 2., 1.]
    # Invariant under orthogonal conjugation.
    theta = .3
    R = np.array([[np.cos(theta), -np.sin(theta), 0.],
        [np.sin(theta), np.cos(theta), 0.], [0., 0., 1.]])
    value, _kappa = sigma_of_shape(2, R.dot(np.diag([1., 2., 3.])).dot(R.T))
    assert abs(value - 11.) < 1e-12
    values, w = sigma_of_shape(1, np.stack([np.eye(2), 2 * np.eye(2)]))
    assert np.allclose(values, [2., 4.])
    assert w.shape == (2, 2)

def test_sigma_of_shape_errors():
    with pytest.raises(ShapeError):
        sigma_of_shape(1, [[1., 2.], [0., 1.]])
    with pytest.raises(DomainError):
        sigma_of_shape(3, np.eye(2))

def test_newton_tensor_is_derivative():
    rng = gen_rng(7)
    for k in range(1, 5):
        S = random_symmetric(rng, 4)
        dS = random_symmetric(rng, 4)
        kappa = np.linalg.eigvalsh(S)
        T = newton_tensor(S, k, kappa)
        eps = 1e-6
        fd = (sigma_of_shape(k, S + eps * dS)[0]
            - sigma_of_shape(k, S - eps * dS)[0]) / (2 * eps)
        assert abs(np.trace(T.dot(dS)) - fd) < 1e-6

def test_newton_tensor_nonsymmetric():
    # Similar to a symmetric matrix, as g^-1 h is.
    rng = gen_rng(8)
    D = np.diag([2., 1., -.5])
    P = np.eye(3) + .3 * rng.normal(size=(3, 3))
    S = np.linalg.solve(P, D).dot(P)
    T = newton_tensor(S, 2, np.diag(D))
    expected = np.linalg.solve(P, np.diag([.5, 1.5, 3.])).dot(P)
    assert np.allclose(T, expected, atol=1e-12)
