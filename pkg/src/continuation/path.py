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

"""Path following in the homotopy parameter t from the slice r = r_0."""

import logging

from collections import namedtuple

from weingarten.continuation.newton import newton_solve
from weingarten.geometry.grid import RadialGraphField
from weingarten.operator.assumptions import assumption_audit
from weingarten.operator.assumptions import failing_conditions
from weingarten.operator.residual import residual
from weingarten.operator.residual import residual_norm
from weingarten.utils.config import auditable_psi_kinds
from weingarten.utils.errors import PreconditionError
from weingarten.utils.errors import SolverError
from weingarten.utils.errors import StepBelowMinimum


logger = logging.getLogger(__name__)

ContinuationParams = namedtuple('ContinuationParams',
    ['dt0', 'dt_min', 'dt_max', 'dt_grow', 'fast_iters', 'newton_tol',
     'newton_max_iters', 'damping'])
ContinuationParams.__new__.__defaults__ = (
    0.1, 1e-4, 0.25, 1.5, 5, 1e-10, 25, 1.)

ContinuationResult = namedtuple('ContinuationResult',
    ['field', 'trace', 'state'])


class ContinuationState(object):
    """Accepted homotopy states: current t, field, next dt and the trace."""

    def __init__(self, t, field, dt):
        self.t = t
        self.field = field
        self.dt = dt
        self.newton_iters_last = 0
        self.trace = []

    def accept(self, t, field, result, newton_iters, dt):
        assert t >= self.t
        self.t = t
        self.field = field
        self.newton_iters_last = newton_iters
        self.trace.append({
            't': t,
            'residual_norm': residual_norm(result),
            'min_cone_margin': result.min_cone_margin,
            'min_tau': result.min_tau,
            'max_kappa': result.max_kappa,
            'newton_iters': newton_iters,
            'dt': dt,
        })


def initial_solution(config, profile, grid, spec=None):
    """The slice r = r_0 with phi(r_0) = 1, which solves the t = 0 problem."""
    field = RadialGraphField.constant(grid, config.r0, config.annulus)
    result = residual(field, config.at(0.), spec, profile)
    assert residual_norm(result) <= 1e-12, residual_norm(result)
    return field

def continuation_run(config, spec, profile, grid, params=None,
        check_assumptions=True):
    """Follow t from 0 to 1 with an order-0 predictor and adaptive dt.

    A step that Newton resolves in at most fast_iters iterations grows dt by
    dt_grow (capped at dt_max); a failed step halves dt and retries.
    Raises StepBelowMinimum, carrying the last accepted t and field, once dt
    drops below dt_min.
    """
    params = params or ContinuationParams()
    if check_assumptions and spec.kind in auditable_psi_kinds:
        report = assumption_audit(spec, profile, config, grid=grid)
        if not report['passed']:
            raise PreconditionError('Structural assumptions fail: %s.'
                % (', '.join(failing_conditions(report)),))

    field = initial_solution(config, profile, grid, spec=spec)
    state = ContinuationState(0., field, params.dt0)
    state.accept(0., field, residual(field, config.at(0.), spec, profile),
        0, 0.)

    while state.t < 1:
        t = min(1., state.t + state.dt)
        try:
            out = newton_solve(state.field, config.at(t), spec, profile,
                tol=params.newton_tol, max_iters=params.newton_max_iters,
                damping=params.damping)
        except SolverError as e:
            state.dt /= 2
            logger.warning('Rejected step to t=%g (%s: %s); dt -> %g.',
                t, type(e).__name__, e, state.dt)
            if state.dt < params.dt_min:
                raise StepBelowMinimum('Step size fell below %g; last '
                    'accepted t=%g.' % (params.dt_min, state.t),
                    field=state.field, t=state.t)
            continue
        state.accept(t, out.field, out.result, out.iters, t - state.t)
        if out.iters <= params.fast_iters:
            state.dt = min(params.dt_grow * state.dt, params.dt_max)
        logger.info('Accepted t=%g after %d Newton iterations; margin '
            '%.3e, next dt %g.', t, out.iters, out.result.min_cone_margin,
            state.dt)

    return ContinuationResult(field=state.field, trace=state.trace,
        state=state)
