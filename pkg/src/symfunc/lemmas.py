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

"""Checks of the classical inequalities for sigma_k on the Garding cone.

Each check produces a slack, LHS - RHS of an inequality that holds on
Gamma_k, and a scale built from |kappa| against which round-off is judged.
Part (c) has no explicit constant; only the ratio it bounds is recorded.
"""

from collections import namedtuple

import numpy as np

from weingarten.symfunc.curvature import as_values
from weingarten.symfunc.curvature import sort_descending
from weingarten.symfunc.sigma import cone_margin
from weingarten.symfunc.sigma import elementary
from weingarten.symfunc.sigma import sigma_deleted
from weingarten.symfunc.sigma import sigma_gradient
from weingarten.utils.errors import PreconditionError
from weingarten.utils.general import nCk


CHECKS = ('a', 'b', 'd', 'e', 'pairwise')

# Relative round-off allowance against the |kappa| scale of each check.
RTOL = 1e-10

CheckResult = namedtuple('CheckResult', ['passed', 'slack'])

LemmaReport = namedtuple('LemmaReport', ['checks', 'ratio_c'])

LemmaSummary = namedtuple('LemmaSummary',
    ['samples', 'failures', 'min_slack', 'worst', 'ratio_c_min',
     'ratio_c_max'])


def lemma_slacks(k, kappa):
    """Return ({check: slack}, {check: scale}, ratio_c) for sorted kappa.

    Vacuous checks (no nonpositive entry for (d), k = 1 for (a), n = 1 for
    the pairwise bound) have slack +inf.
    """
    values = sort_descending(as_values(kappa))
    batch, n = values.shape[:-1], values.shape[-1]
    absval = np.abs(values)
    e = elementary(values, n)
    eabs = elementary(absval, n)
    slack, scale = {}, {}
    inf = np.full(batch, np.inf)

    # (a) sigma_l >= kappa_1 ... kappa_l for l < k.
    slack['a'], scale['a'] = inf.copy(), np.ones(batch)
    for l in range(1, k):
        prod = np.prod(values[..., :l], axis=-1)
        s = e[..., l] - prod
        take = s < slack['a']
        slack['a'] = np.where(take, s, slack['a'])
        scale['a'] = np.where(take, eabs[..., l] + np.abs(prod), scale['a'])

    # (b) sigma_k <= C(n,k) kappa_1 ... kappa_k.
    top = nCk(n, k) * np.prod(values[..., :k], axis=-1)
    slack['b'] = top - e[..., k]
    scale['b'] = np.abs(top) + eabs[..., k]

    # (d) -kappa_i < (n-k) kappa_1 / k whenever kappa_i <= 0.
    bound = (n - k) * values[..., :1] / float(k)
    s = np.where(values <= 0, bound + values, np.inf)
    slack['d'] = np.min(s, axis=-1)
    scale['d'] = np.abs(bound[..., 0]) + np.max(absval, axis=-1)

    # (e) sum_i sigma_{k-1}(kappa|i) kappa_i^2 >= (k/n) sigma_1 sigma_k.
    grad = sigma_gradient(k, values)
    grad_abs = sigma_gradient(k, absval)
    lhs = np.sum(grad * values**2, axis=-1)
    rhs = k / float(n) * e[..., 1] * e[..., k]
    slack['e'] = lhs - rhs
    scale['e'] = np.sum(grad_abs * values**2, axis=-1) \
        + k / float(n) * eabs[..., 1] * eabs[..., k]

    # |sigma_{k-1}(kappa|ij)| <= sqrt(k(n-k)/(n-1)) sigma_{k-1}(kappa|j)
    # for kappa_i >= kappa_j, i.e. i < j in sorted order.
    slack['pairwise'], scale['pairwise'] = inf.copy(), np.ones(batch)
    if n > 1:
        factor = np.sqrt(k * (n - k) / float(n - 1))
        for i in range(n):
            for j in range(i+1, n):
                pair = sigma_deleted(k-1, values, [i, j])
                pair_abs = sigma_deleted(k-1, absval, [i, j])
                s = factor * grad[..., j] - np.abs(pair)
                take = s < slack['pairwise']
                slack['pairwise'] = np.where(take, s, slack['pairwise'])
                scale['pairwise'] = np.where(take,
                    factor * grad_abs[..., j] + pair_abs, scale['pairwise'])

    # (c) sigma_{k-1}(kappa|k) <= C sigma_{k-1}(kappa): ratio only.
    ratio_c = grad[..., k-1] / e[..., k-1]
    return slack, scale, ratio_c

def _passed(check, slack, scale):
    tol = RTOL * scale
    if check == 'd':
        return slack > -tol
    return slack >= -tol

def _require_cone(k, values):
    if not 1 <= k <= values.shape[-1]:
        raise PreconditionError('Order k=%d outside [1, %d].'
            % (k, values.shape[-1]))
    bad = np.flatnonzero(np.ravel(cone_margin(k, values)) <= 0)
    if len(bad):
        raise PreconditionError('Curvature %s is not in Gamma_%d.'
            % (values.reshape((-1, values.shape[-1]))[bad[0]].tolist(), k))

def lemma_suite(k, kappa):
    """Evaluate parts (a), (b), (d), (e) and the pairwise bound at kappa.

    Returns a LemmaReport mapping each check to (passed, slack), plus the
    ratio sigma_{k-1}(kappa|k) / sigma_{k-1}(kappa) for part (c).
    """
    values = as_values(kappa)
    if values.ndim != 1:
        raise PreconditionError('lemma_suite takes one vector; use '
            'lemma_suite_batch for stacks.')
    _require_cone(k, values)
    slack, scale, ratio_c = lemma_slacks(k, values)
    checks = {
        c: CheckResult(bool(_passed(c, slack[c], scale[c])), float(slack[c]))
        for c in CHECKS
    }
    return LemmaReport(checks=checks, ratio_c=float(ratio_c))

def lemma_suite_batch(k, kappas):
    """Run the lemma suite on rows of kappas, shape (S, n)."""
    values = np.asarray(kappas, dtype=float)
    if values.ndim != 2:
        raise PreconditionError('Expected a (samples, n) array.')
    _require_cone(k, values)
    slack, scale, ratio_c = lemma_slacks(k, values)
    failures, min_slack, worst = {}, {}, {}
    for c in CHECKS:
        ok = _passed(c, slack[c], scale[c])
        failures[c] = int(np.sum(~ok))
        i = int(np.argmin(slack[c]))
        min_slack[c] = float(slack[c][i])
        worst[c] = values[i].tolist()
    return LemmaSummary(
        samples=len(values),
        failures=failures,
        min_slack=min_slack,
        worst=worst,
        ratio_c_min=float(np.min(ratio_c)),
        ratio_c_max=float(np.max(ratio_c)),
    )

def merge_summaries(summaries):
    """Combine LemmaSummary objects from disjoint batches."""
    assert summaries
    failures = {c: sum(s.failures[c] for s in summaries) for c in CHECKS}
    min_slack, worst = {}, {}
    for c in CHECKS:
        best = min(summaries, key=lambda s: s.min_slack[c])
        min_slack[c] = best.min_slack[c]
        worst[c] = best.worst[c]
    return LemmaSummary(
        samples=sum(s.samples for s in summaries),
        failures=failures,
        min_slack=min_slack,
        worst=worst,
        ratio_c_min=min(s.ratio_c_min for s in summaries),
        ratio_c_max=max(s.ratio_c_max for s in summaries),
    )

def identity_errors(k, kappas):
    """Worst relative residuals of the Euler and count identities.

    sum_i sigma_{k-1}(kappa|i) kappa_i = k sigma_k and
    sum_i sigma_{k-1}(kappa|i) = (n-k+1) sigma_{k-1}, each measured
    against the same expression evaluated at |kappa|.
    """
    values = as_values(kappas)
    n = values.shape[-1]
    absval = np.abs(values)
    e = elementary(values, k)
    e_abs = elementary(absval, k)
    grad = sigma_gradient(k, values)
    euler = np.abs(np.sum(grad * values, axis=-1) - k * e[..., k]) \
        / (k * e_abs[..., k])
    count = np.abs(np.sum(grad, axis=-1) - (n-k+1) * e[..., k-1]) \
        / ((n-k+1) * e_abs[..., k-1])
    return {'euler': float(np.max(euler)), 'count': float(np.max(count))}
