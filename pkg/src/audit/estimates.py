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

"""A priori estimates and identities checked on a computed field."""

from collections import namedtuple

import numpy as np

from weingarten.geometry.laplace import lambda_identity_error
from weingarten.geometry.laplace import tau_gradient_identity_error
from weingarten.operator.residual import residual
from weingarten.symfunc.sigma import sigma_gradient
from weingarten.utils.general import jsonable


AuditReport = namedtuple('AuditReport',
    ['c0_ok', 'c0_slack', 'tau_min', 'kappa_max', 'cone_margin_min',
     'residual_max', 'lambda_identity_error', 'tau_gradient_identity_error',
     'barrier_principle', 'ellipticity_min', 'grid'])


def audit_solution(field, config, spec, profile):
    """Recompute the geometry of field and report every estimate.

    Raises AdmissibilityError when some node is outside Gamma_k.
    """
    result = residual(field, config, spec, profile)
    jets = result.jets
    k, r = config.k, field.flat()
    lower, upper = field.barrier_slack()
    top, bottom = int(np.argmax(r)), int(np.argmin(r))
    slice_value = config.binom * jets.zeta**k
    return AuditReport(
        c0_ok=bool(lower > 0 and upper > 0),
        c0_slack={'lower': lower, 'upper': upper},
        tau_min=float(np.min(jets.tau)),
        kappa_max=float(np.max(np.abs(jets.kappa))),
        cone_margin_min=result.min_cone_margin,
        residual_max=float(np.max(np.abs(result.values))),
        lambda_identity_error=lambda_identity_error(profile, jets),
        tau_gradient_identity_error=tau_gradient_identity_error(jets),
        barrier_principle={
            'at_max': float(result.sigma_k[top] - slice_value[top]),
            'at_min': float(slice_value[bottom] - result.sigma_k[bottom]),
        },
        ellipticity_min=float(np.min(sigma_gradient(k, jets.kappa))),
        grid=field.grid.to_dict(),
    )

def audit_passed(report, residual_tol=1e-8):
    """True when the barrier, tau, cone, curvature and residual checks pass."""
    return bool(report.c0_ok
        and report.tau_min > 0
        and report.cone_margin_min > 0
        and report.ellipticity_min > 0
        and np.isfinite(report.kappa_max)
        and report.residual_max <= residual_tol)

def failed_checks(report, residual_tol=1e-8):
    checks = {
        'c0': report.c0_ok,
        'tau': report.tau_min > 0,
        'cone': report.cone_margin_min > 0,
        'ellipticity': report.ellipticity_min > 0,
        'kappa': np.isfinite(report.kappa_max),
        'residual': report.residual_max <= residual_tol,
    }
    return sorted(name for name, ok in checks.items() if not ok)

def report_dict(report):
    return jsonable(report._asdict())
