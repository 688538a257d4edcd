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

"""Periodic grids on the flat torus and radial graphs over them."""

import math

from collections import namedtuple

import numpy as np

from weingarten.utils.errors import ShapeError
from weingarten.utils.validation import validate_annulus


GraphDerivatives = namedtuple('GraphDerivatives', ['grad', 'hess'])


class BaseGrid(object):
    """Uniform grid of N points per axis on [0, 2 pi)^n, periodic."""

    def __init__(self, n, N):
        if n not in (1, 2, 3):
            raise ShapeError('Grid dimension must be 1, 2 or 3: %s.' % (n,))
        if N < 8 or N % 2:
            raise ShapeError('Need an even number N >= 8 of points per '
                'axis: %s.' % (N,))
        self.n = int(n)
        self.N = int(N)
        self.h = 2 * math.pi / self.N

    @property
    def shape(self):
        return (self.N,) * self.n

    @property
    def size(self):
        return self.N ** self.n

    def axis(self):
        return self.h * np.arange(self.N)

    def coordinates(self):
        """Node coordinates as a list of n arrays of grid shape."""
        return np.meshgrid(*([self.axis()] * self.n), indexing='ij')

    def points(self):
        """Node coordinates in lexicographic order, shape (size, n)."""
        return np.stack([u.ravel() for u in self.coordinates()], axis=-1)

    def shift(self, f, offset):
        """f evaluated at u + offset*h (periodic), offset a length-n tuple."""
        return np.roll(f, tuple(-o for o in offset), axis=tuple(range(self.n)))

    def neighbor_index(self, offset):
        """Flat index of the node at u + offset*h for every node u."""
        index = np.arange(self.size).reshape(self.shape)
        return self.shift(index, offset).ravel()

    def unit(self, i, step=1):
        offset = [0] * self.n
        offset[i] = step
        return tuple(offset)

    def refine(self, factor):
        return BaseGrid(self.n, self.N * factor)

    def __eq__(self, other):
        return isinstance(other, BaseGrid) \
            and (self.n, self.N) == (other.n, other.N)

    __hash__ = None

    def __repr__(self):
        return 'BaseGrid(n=%d, N=%d)' % (self.n, self.N)

    def to_dict(self):
        return {'n': self.n, 'N': self.N, 'h': self.h}


class RadialGraphField(object):
    """Radial values r(u) of a graph over a BaseGrid.

    The barrier r_1 < r < r_2 is monitored, not enforced, at construction.
    """

    def __init__(self, grid, r, annulus):
        r = np.array(r, dtype=float)
        if r.size != grid.size:
            raise ShapeError('Field has %d values, grid has %d nodes.'
                % (r.size, grid.size))
        self.grid = grid
        self.r = r.reshape(grid.shape)
        self.annulus = validate_annulus(annulus)

    @classmethod
    def constant(cls, grid, value, annulus):
        return cls(grid, np.full(grid.shape, float(value)), annulus)

    @classmethod
    def from_function(cls, grid, f, annulus):
        """Field r = f(u_1, ..., u_n) sampled at the nodes."""
        r = f(*grid.coordinates())
        return cls(grid, np.broadcast_to(r, grid.shape), annulus)

    def flat(self):
        return self.r.ravel()

    def with_values(self, r):
        return RadialGraphField(self.grid, r, self.annulus)

    def barrier_slack(self):
        """(min r - r_1, r_2 - max r); both positive inside the barrier."""
        r1, r2 = self.annulus
        return float(np.min(self.r) - r1), float(r2 - np.max(self.r))

    def within_barrier(self):
        return min(self.barrier_slack()) > 0


def graph_derivatives(field):
    """Second order periodic differences of r at every node.

    grad has shape (size, n); hess has shape (size, n, n) and is symmetric
    by construction (one cross stencil per unordered pair).
    """
    grid, r = field.grid, field.r
    n, h = grid.n, grid.h
    grad = np.empty((grid.size, n))
    hess = np.empty((grid.size, n, n))
    for i in range(n):
        fwd = grid.shift(r, grid.unit(i))
        bwd = grid.shift(r, grid.unit(i, -1))
        grad[:, i] = ((fwd - bwd) / (2 * h)).ravel()
        hess[:, i, i] = ((fwd - 2 * r + bwd) / h**2).ravel()
        for j in range(i+1, n):
            cross = 0.
            for si in (1, -1):
                for sj in (1, -1):
                    offset = [0] * n
                    offset[i], offset[j] = si, sj
                    cross = cross + si * sj * grid.shift(r, offset)
            hess[:, i, j] = hess[:, j, i] = (cross / (4 * h**2)).ravel()
    return GraphDerivatives(grad=grad, hess=hess)
