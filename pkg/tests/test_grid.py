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

from weingarten.geometry.grid import BaseGrid
from weingarten.geometry.grid import RadialGraphField
from weingarten.geometry.grid import graph_derivatives
from weingarten.utils.errors import ShapeError


def test_grid_validation():
    for n, N in [(0, 8), (4, 8), (2, 6), (2, 9)]:
        with pytest.raises(ShapeError):
            BaseGrid(n, N)
    grid = BaseGrid(2, 8)
    assert grid.shape == (8, 8)
    assert grid.size == 64
    assert grid.h == 2 * math.pi / 8
    assert grid == BaseGrid(2, 8) and grid != BaseGrid(2, 16)
    assert grid.refine(4) == BaseGrid(2, 32)

def test_points_lexicographic():
    grid = BaseGrid(2, 8)
    points = grid.points()
    assert points.shape == (64, 2)
    assert points[0].tolist() == [0., 0.]
    assert points[1].tolist() == [0., grid.h]
    assert points[8].tolist() == [grid.h, 0.]

def test_neighbor_index_periodic():
    grid = BaseGrid(2, 8)
    index = grid.neighbor_index((1, 0)).reshape(grid.shape)
    assert index[0, 0] == 8
    assert index[7, 3] == 3
    index = grid.neighbor_index((0, -1)).reshape(grid.shape)
    assert index[2, 0] == 2 * 8 + 7

def test_field_construction():
    grid = BaseGrid(1, 8)
    with pytest.raises(ShapeError):
        RadialGraphField(grid, np.ones(7), [1., 3.])
    field = RadialGraphField.from_function(grid, lambda u: 2 + .5 * np.cos(u),
        [1., 3.])
    assert field.barrier_slack() == (.5, .5)
    assert field.within_barrier()
    assert not RadialGraphField.constant(grid, 3., [1., 3.]).within_barrier()
    assert RadialGraphField.constant(BaseGrid(2, 8), 2., [1., 3.]).r.shape \
        == (8, 8)

def test_derivatives_of_cosine_exact():
    # Central differences of cos u are -sin(u) sin(h)/h and
    # cos(u) (2 cos h - 2)/h^2 exactly.
    grid = BaseGrid(1, 16)
    u = grid.axis()
    field = RadialGraphField(grid, 2 + np.cos(u), [1., 3.])
    d = graph_derivatives(field)
    h = grid.h
    assert np.allclose(d.grad[:, 0], -np.sin(u) * np.sin(h) / h, atol=1e-14)
    assert np.allclose(d.hess[:, 0, 0], np.cos(u) * (2 * np.cos(h) - 2) / h**2,
        atol=1e-12)

def test_derivatives_second_order():
    def errors(N):
        grid = BaseGrid(2, N)
        u1, u2 = grid.coordinates()
        field = RadialGraphField(grid, 2 + .3 * np.sin(u1) * np.cos(u2),
            [1., 3.])
        d = graph_derivatives(field)
        grad = np.stack([.3 * np.cos(u1) * np.cos(u2),
            -.3 * np.sin(u1) * np.sin(u2)], axis=-1).reshape((-1, 2))
        mixed = (-.3 * np.cos(u1) * np.sin(u2)).ravel()
        return np.max(np.abs(d.grad - grad)), \
            np.max(np.abs(d.hess[:, 0, 1] - mixed))
    coarse, fine = errors(16), errors(32)
    for a, b in zip(coarse, fine):
        assert 1.8 < math.log(a / b, 2) < 2.2

def test_hessian_symmetric_and_constant():
    grid = BaseGrid(3, 8)
    u1, u2, u3 = grid.coordinates()
    field = RadialGraphField(grid, 2 + .1 * np.sin(u1 + 2 * u2) * np.cos(u3),
        [1., 3.])
    d = graph_derivatives(field)
    assert d.grad.shape == (512, 3)
    assert np.array_equal(d.hess, np.swapaxes(d.hess, 1, 2))
    d = graph_derivatives(RadialGraphField.constant(grid, 2., [1., 3.]))
    assert np.all(d.grad == 0) and np.all(d.hess == 0)
