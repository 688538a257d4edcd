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

from weingarten.symfunc.lemmas import CHECKS
from weingarten.symfunc.lemmas import identity_errors
from weingarten.symfunc.lemmas import lemma_suite
from weingarten.symfunc.lemmas import lemma_suite_batch
from weingarten.symfunc.lemmas import merge_summaries
from weingarten.symfunc.sampling import sample_cone_batch
from weingarten.utils.errors import PreconditionError
from weingarten.utils.general import gen_rng


ORDERS = [(2, 2), (3, 2), (3, 3), (4, 3), (5, 3)]


def test_lemma_suite_by_hand():
    report = lemma_suite(2, [3., 2., 1.])
    assert all(report.checks[c].passed for c in CHECKS)
    assert report.checks['a'].slack == 3.
    assert report.checks['b'].slack == 7.
    assert report.checks['d'].slack == np.inf
    assert abs(report.checks['e'].slack - 4.) < 1e-12
    assert report.checks['pairwise'].slack == 2.
    assert abs(report.ratio_c - 4. / 6.) < 1e-15

def test_lemma_suite_unsorted_input():
    a = lemma_suite(2, [1., 3., 2.])
    b = lemma_suite(2, [3., 2., 1.])
    assert a == b

def test_lemma_suite_outside_cone():
    with pytest.raises(PreconditionError):
        lemma_suite(2, [1., -5., 1.])
    with pytest.raises(PreconditionError):
        lemma_suite(2, [[3., 2., 1.]])
    with pytest.raises(PreconditionError):
        lemma_suite_batch(2, [3., 2., 1.])

def test_lemma_suite_negative_entry():
    # (3, 2) with kappa_3 < 0: (d) reads 1 - 0.5 = 0.5.
    report = lemma_suite(2, [2., 1., -.5])
    assert report.checks['d'].passed
    assert abs(report.checks['d'].slack - .5) < 1e-15

def test_lemma_batches_no_violations():
    rng = gen_rng(11)
    for n, k in ORDERS:
        kappas = sample_cone_batch(k, n, 10**4, rng=rng)
        summary = lemma_suite_batch(k, kappas)
        assert summary.samples == 10**4
        assert summary.failures == {c: 0 for c in CHECKS}
        assert 0 < summary.ratio_c_min <= summary.ratio_c_max
        errors = identity_errors(k, kappas)
        assert errors['euler'] < 1e-12
        assert errors['count'] < 1e-12

@pytest.mark.integration
def test_lemma_batches_no_violations__ci_():
    rng = gen_rng(12)
    for n, k in ORDERS:
        kappas = sample_cone_batch(k, n, 10**5, rng=rng)
        summary = lemma_suite_batch(k, kappas)
        assert sum(summary.failures.values()) == 0, (n, k, summary)

def test_merge_summaries():
    rng = gen_rng(13)
    kappas = sample_cone_batch(2, 3, 400, rng=rng)
    whole = lemma_suite_batch(2, kappas)
    parts = merge_summaries([lemma_suite_batch(2, kappas[:100]),
        lemma_suite_batch(2, kappas[100:])])
    assert parts.samples == whole.samples
    assert parts.failures == whole.failures
    assert parts.min_slack == whole.min_slack
    assert parts.ratio_c_min == whole.ratio_c_min
    assert parts.ratio_c_max == whole.ratio_c_max
