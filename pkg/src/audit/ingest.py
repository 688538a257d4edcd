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

"""Read a field dump back into a RadialGraphField."""

import numpy as np
import pandas as pd

from weingarten.geometry.fieldio import read_field_table
from weingarten.geometry.grid import RadialGraphField
from weingarten.utils.errors import InputError
from weingarten.utils.validation import validate_finite


def ingest_field(path, grid, annulus):
    """Parse the r column of a CSV dump laid out on grid.

    Only u1..un and r are read; the derived columns are recomputed by the
    audit. The barrier is not checked here.
    """
    try:
        frame = read_field_table(path)
    except (pd.errors.ParserError, pd.errors.EmptyDataError,
            OSError, UnicodeDecodeError) as e:
        raise InputError('Cannot parse %s: %s' % (path, e))
    columns = ['u%d' % (i+1,) for i in range(grid.n)] + ['r']
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise InputError('%s lacks columns %s.' % (path, missing))
    if len(frame) != grid.size:
        raise InputError('Shape mismatch: %s has %d rows, grid has %d nodes.'
            % (path, len(frame), grid.size))
    try:
        values = frame[columns].to_numpy(dtype=float)
    except (TypeError, ValueError) as e:
        raise InputError('Non-numeric entries in %s: %s' % (path, e))
    for j, name in enumerate(columns):
        validate_finite(values[:, j], name)
    if np.max(np.abs(values[:, :-1] - grid.points())) > 1e-9:
        raise InputError('Coordinates in %s do not match %s in '
            'lexicographic order.' % (path, grid))
    return RadialGraphField(grid, values[:, -1], annulus)
