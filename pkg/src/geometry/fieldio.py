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

"""CSV dump of a field with its geometry, one row per node."""

import numpy as np
import pandas as pd

from weingarten.symfunc.sigma import cone_margin
from weingarten.symfunc.sigma import elementary


def field_columns(n):
    return ['u%d' % (i+1,) for i in range(n)] + ['r', 'v', 'tau'] \
        + ['kappa_%d' % (i+1,) for i in range(n)] + ['sigma_k', 'cone_margin']

def field_frame(jets, k):
    """DataFrame in dump column order; rows in lexicographic grid order."""
    grid = jets.field.grid
    data = {}
    points = grid.points()
    for i in range(grid.n):
        data['u%d' % (i+1,)] = points[:, i]
    data['r'] = jets.field.flat()
    data['v'] = jets.v
    data['tau'] = jets.tau
    for i in range(grid.n):
        data['kappa_%d' % (i+1,)] = jets.kappa[:, i]
    data['sigma_k'] = elementary(jets.kappa, k)[:, k]
    data['cone_margin'] = cone_margin(k, jets.kappa)
    return pd.DataFrame(data, columns=field_columns(grid.n))

def dump_field(path, jets, k):
    # repr precision so that a reload reproduces every value bitwise.
    field_frame(jets, k).to_csv(path, index=False, float_format='%.17g')

def read_field_table(path):
    return pd.read_csv(path, float_precision='round_trip')
