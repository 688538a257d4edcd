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

import pytest

from weingarten.inequality.pairwise import expm1_ratio
from weingarten.inequality.pairwise import pairwise_lemma_check
from weingarten.inequality.pairwise import pairwise_sweep
from weingarten.symfunc.curvature import CurvatureVector
from weingarten.utils.errors import DegeneratePairError
from weingarten.utils.errors import PreconditionError


def test_expm1_ratio():
    assert expm1_ratio(0.) == 1.
    assert abs(expm1_ratio(1.) - (1 - math.exp(-1.))) < 1e-15
    # Series branch against the closed form.
    for x in [.99e-4, 1e-5, -1e-5, -.99e-4]:
        assert abs(expm1_ratio(x) + math.expm1(-x) / x) < 1e-15

def test_pairwise_by_hand():
    kappa = CurvatureVector([100., 99., 1.])
    holds, slack = pairwise_lemma_check(kappa, 2, 0, 2)
    lhs = 2 * 100. * (1 - math.exp(-99.)) / 99. * 199.
    assert holds
    assert abs(slack - (lhs - 300.)) < 1e-10

def test_pairwise_preconditions():
    with pytest.raises(DegeneratePairError):
        pairwise_lemma_check([100., 100., 1.], 2, 0, 1)
    with pytest.raises(PreconditionError):
        pairwise_lemma_check([100., 50., 1.], 2, 1, 2)
    with pytest.raises(PreconditionError):
        pairwise_lemma_check([100., 99., 1.], 2, 0, 0)
    with pytest.raises(PreconditionError):
        pairwise_lemma_check([100., 99., 1.], 2, 0, 3)
    with pytest.raises(PreconditionError):
        pairwise_lemma_check([100., 99., -150.], 2, 0, 1)
    with pytest.raises(PreconditionError):
        pairwise_lemma_check([100., 99., 1.], 2, 0, 2, N0=1e5)

def test_pairwise_sweep():
    rows, nondecreasing = pairwise_sweep([100., 99., 1.], 2, 0, 2)
    assert [r[0] for r in rows] == [10., 1e2, 1e3]
    assert isinstance(nondecreasing, bool)
    assert abs(rows[1][1] - pairwise_lemma_check([100., 99., 1.], 2, 0,
        2)[1]) < 1e-9
