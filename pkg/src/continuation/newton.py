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

"""Damped Newton corrector for the discrete curvature equation."""

import logging

from collections import namedtuple

import numpy as np

from scipy.sparse.linalg import splu

from weingarten.operator.jacobian import jacobian
from weingarten.operator.residual import residual
from weingarten.operator.residual import residual_norm
from weingarten.utils.errors import AdmissibilityError
from weingarten.utils.errors import AdmissibilityLost
from weingarten.utils.errors import BarrierViolated
from weingarten.utils.errors import DomainError
from weingarten.utils.errors import MaxIters
from weingarten.utils.errors import SingularLinearSystem


logger = logging.getLogger(__name__)

NewtonResult = namedtuple('NewtonResult',
    ['field', 'iters', 'residual_norm', 'result'])


def solve_linear(J, rhs):
    """Solve the sparse nonsymmetric system J x = rhs by LU."""
    try:
        x = splu(J.tocsc()).solve(rhs)
    except RuntimeError as e:
        raise SingularLinearSystem('Sparse LU failed: %s' % (e,))
    if not np.all(np.isfinite(x)):
        raise SingularLinearSystem('Sparse LU produced non-finite values.')
    return x

def merit(result):
    """Half the squared 2-norm of the residual."""
    return .5 * float(np.dot(result.values, result.values))

def newton_solve(field0, config, spec, profile, tol=1e-10, max_iters=25,
        damping=1., min_step=2.**-20, armijo=1e-4):
    """Newton iteration at t = config.t from field0.

    Each step halves its length until the trial field stays strictly inside
    the barrier, stays admissible, and meets the Armijo condition
    merit(trial) <= (1 - 2 armijo alpha) merit(field) on half the squared
    2-norm of the residual. Convergence is judged on the max-norm. Returns a
    NewtonResult; iters is 0 when field0 already meets tol.
    """
    t = config.t
    if not field0.within_barrier():
        raise BarrierViolated('Initial field leaves (%g, %g).'
            % field0.annulus, t=t)
    try:
        result = residual(field0, config, spec, profile)
    except AdmissibilityError as e:
        raise AdmissibilityLost('Initial field is inadmissible: %s' % (e,),
            t=t)
    field, norm, iters = field0, residual_norm(result), 0
    value = merit(result)
    logger.debug('newton t=%g: start residual %.3e', t, norm)

    while norm > tol:
        if iters == max_iters:
            raise MaxIters('No convergence in %d iterations at t=%g '
                '(residual %.3e).' % (max_iters, t, norm), field=field, t=t)
        iters += 1
        J = jacobian(field, config, spec, profile, result=result)
        step = solve_linear(J, -result.values).reshape(field.grid.shape)
        alpha, failure = damping, None
        while True:
            if alpha < min_step:
                raise _line_search_error(failure, t, norm, field)
            trial = field.with_values(field.r + alpha * step)
            if not trial.within_barrier():
                failure, alpha = 'barrier', alpha / 2
                continue
            try:
                trial_result = residual(trial, config, spec, profile)
            except AdmissibilityError:
                failure, alpha = 'admissibility', alpha / 2
                continue
            except DomainError:
                failure, alpha = 'barrier', alpha / 2
                continue
            trial_value = merit(trial_result)
            if trial_value <= (1 - 2 * armijo * alpha) * value:
                break
            failure, alpha = 'decrease', alpha / 2
        field, result, value = trial, trial_result, trial_value
        norm = residual_norm(result)
        logger.debug('newton t=%g: iter %d residual %.3e step %g',
            t, iters, norm, alpha)

    return NewtonResult(field=field, iters=iters, residual_norm=norm,
        result=result)

def _line_search_error(failure, t, norm, field):
    if failure == 'admissibility':
        return AdmissibilityLost('No step length keeps the field in the '
            'cone at t=%g.' % (t,), field=field, t=t)
    if failure == 'barrier':
        return BarrierViolated('No step length keeps the field inside the '
            'barrier at t=%g.' % (t,), field=field, t=t)
    return MaxIters('Line search stalled at t=%g with residual %.3e.'
        % (t, norm), field=field, t=t)
