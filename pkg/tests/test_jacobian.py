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

from weingarten.geometry.grid import BaseGrid
from weingarten.geometry.grid import RadialGraphField
from weingarten.geometry.warp import make_warp
from weingarten.operator.homotopy import HomotopyConfig
from weingarten.operator.jacobian import jacobian
from weingarten.operator.jacobian import jacobian_fd
from weingarten.operator.jacobian import jacobian_triplets
from weingarten.operator.jacobian import jacobian_vector
from weingarten.operator.jacobian import stencil_period
from weingarten.operator.psi import make_psi
from weingarten.operator.residual import residual
from weingarten.utils.general import gen_rng

from stochastic import seed_int
from stochastic import stochastic


def random_field(grid, rng, amplitude=.04):
    """r_mid plus a few random low Fourier modes; admissible for (2, 2)."""
    u = grid.coordinates()
    r = np.full(grid.shape, 2.)
    for _ in range(4):
        m = rng.randint(-2, 3, size=grid.n)
        phase = rng.uniform(0, 2 * np.pi)
        r += amplitude * rng.uniform(-1, 1) \
            * np.cos(sum(mi * ui for mi, ui in zip(m, u)) + phase)
    return RadialGraphField(grid, r, [1., 3.])

def problem(n=2, k=2, warp='euclidean', t=.7):
    profile = make_warp(warp, [1., 3.])
    spec = make_psi('angular', k, n, [1., 3.])
    return profile, spec, HomotopyConfig(t, k, n, [1., 3.])

def jvp_errors(count, rng, N=32, warp='euclidean'):
    grid = BaseGrid(2, N)
    profile, spec, config = problem(warp=warp)
    errors = []
    for _ in range(count):
        field = random_field(grid, rng)
        w = rng.normal(size=grid.size)
        Jw = jacobian_vector(field, config, spec, profile, w)
        eps = 1e-6
        plus = residual(field.with_values(field.r + eps * w.reshape(
            grid.shape)), config, spec, profile).values
        minus = residual(field.with_values(field.r - eps * w.reshape(
            grid.shape)), config, spec, profile).values
        fd = (plus - minus) / (2 * eps)
        errors.append(np.max(np.abs(Jw - fd)) / np.max(np.abs(fd)))
    return errors

@stochastic(max_runs=2, min_passes=1)
def test_jvp_matches_finite_differences(seed):
    rng = gen_rng(seed_int(seed))
    assert max(jvp_errors(3, rng)) < 1e-5
    assert max(jvp_errors(2, rng, N=16, warp='hyperbolic')) < 1e-5

def test_jvp_matches_finite_differences__ci_():
    assert max(jvp_errors(20, gen_rng(31))) < 1e-5

def test_assembled_matches_jvp():
    rng = gen_rng(32)
    for n, k in [(1, 1), (2, 2), (3, 2)]:
        grid = BaseGrid(n, 8 if n == 3 else 16)
        profile, spec, config = problem(n=n, k=k, warp='hyperbolic')
        field = random_field(grid, rng, amplitude=.02)
        J = jacobian(field, config, spec, profile)
        w = rng.normal(size=grid.size)
        Jw = jacobian_vector(field, config, spec, profile, w)
        assert np.allclose(J.dot(w), Jw, rtol=1e-10, atol=1e-10)

def test_sparsity_pattern():
    grid = BaseGrid(2, 16)
    profile, spec, config = problem()
    J = jacobian(random_field(grid, gen_rng(33)), config, spec, profile)
    assert J.shape == (256, 256)
    assert J.getnnz(axis=1).max() <= 9
    rows, cols, vals = jacobian_triplets(J)
    order = np.lexsort((cols, rows))
    assert np.array_equal(order, np.arange(len(rows)))
    # Every entry couples a node to its 3 x 3 neighbourhood.
    a = np.array(np.unravel_index(rows, grid.shape))
    b = np.array(np.unravel_index(cols, grid.shape))
    gap = np.abs((a - b + 8) % 16 - 8)
    assert np.all(gap <= 1)

def test_stencil_period():
    assert stencil_period(8) == 4
    assert stencil_period(10) == 5
    assert stencil_period(24) == 3
    assert stencil_period(32) == 4
    assert stencil_period(14) == 7

def test_colored_finite_difference_jacobian(monkeypatch):
    rng = gen_rng(34)
    for n, N in [(1, 16), (2, 10), (3, 8)]:
        grid = BaseGrid(n, N)
        profile, spec, config = problem(n=n, k=min(n, 2))
        field = random_field(grid, rng, amplitude=.02)
        analytic = jacobian(field, config, spec, profile).toarray()
        fd = jacobian_fd(field, config, spec, profile).toarray()
        assert np.max(np.abs(fd - analytic)) < 1e-5 * np.max(np.abs(analytic))
        monkeypatch.setenv('WEINGARTENDEBUG', '1')
        debug = jacobian(field, config, spec, profile).toarray()
        monkeypatch.delenv('WEINGARTENDEBUG')
        assert np.array_equal(debug, fd)

def test_slice_jacobian_is_circulant():
    # On r = r_mid at t = 0 every row is a periodic shift of every other.
    grid = BaseGrid(2, 8)
    profile, spec, config = problem(t=0.)
    field = RadialGraphField.constant(grid, 2., [1., 3.])
    J = jacobian(field, config, spec, profile).toarray()
    scale = np.max(np.abs(J))
    assert scale > 0
    for offset in [(1, 0), (0, 1), (3, 5)]:
        p = grid.neighbor_index(offset)
        assert np.max(np.abs(J[p][:, p] - J)) <= 1e-12 * scale
