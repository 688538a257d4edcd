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

from collections import namedtuple

import numpy as np

from weingarten.utils.errors import DomainError
from weingarten.utils.errors import ShapeError


ConeMembership = namedtuple('ConeMembership', ['in_cone', 'margin', 'k'])


class CurvatureVector(object):
    """Principal curvatures kappa_1 >= ... >= kappa_n.

    Construction sorts the input descending with ties broken by original
    index; `order` records the permutation applied.
    """

    def __init__(self, values):
        values = np.array(values, dtype=float)
        if values.ndim != 1 or len(values) < 1:
            raise ShapeError('Curvatures must be a nonempty vector: %s.'
                % (values.shape,))
        if not np.all(np.isfinite(values)):
            raise DomainError('Curvatures must be finite: %s.' % (values,))
        self.order = np.argsort(-values, kind='stable')
        self.values = values[self.order]
        self.values.flags.writeable = False

    @property
    def n(self):
        return len(self.values)

    @property
    def kappa1(self):
        return float(self.values[0])

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return float(self.values[i])

    def __iter__(self):
        return iter(self.values.tolist())

    def __eq__(self, other):
        return isinstance(other, CurvatureVector) \
            and np.array_equal(self.values, other.values)

    __hash__ = None

    def __repr__(self):
        return 'CurvatureVector(%s)' % (self.values.tolist(),)

    def to_list(self):
        return self.values.tolist()


def as_values(kappa):
    """Underlying float array of a CurvatureVector or array-like."""
    if isinstance(kappa, CurvatureVector):
        return kappa.values
    return np.asarray(kappa, dtype=float)

def sort_descending(values):
    """Stable descending sort along the last axis."""
    values = np.asarray(values, dtype=float)
    order = np.argsort(-values, axis=-1, kind='stable')
    return np.take_along_axis(values, order, axis=-1)
