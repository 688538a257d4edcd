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

"""F_t[r] = sigma_k(kappa(r)) - psi_t at every node."""

from collections import namedtuple

import numpy as np

from weingarten.geometry.grid import graph_derivatives
from weingarten.geometry.jet import jet_sweep
from weingarten.operator.homotopy import psi_tilde
from weingarten.symfunc.sigma import cone_margin
from weingarten.symfunc.sigma import elementary
from weingarten.utils.errors import AdmissibilityError


ResidualResult = namedtuple('ResidualResult',
    ['values', 'jets', 'sigma_k', 'psi', 'psi_dr', 'margins',
     'min_cone_margin', 'min_tau', 'max_kappa'])


def residual(field, config, spec, profile, derivatives=None):
    """Evaluate the homotopy operator at field.

    Raises AdmissibilityError at the node of smallest cone margin when any
    node has kappa outside Gamma_k.
    """
    if derivatives is None:
        derivatives = graph_derivatives(field)
    jets = jet_sweep(profile, field, derivatives)
    k = config.k
    margins = cone_margin(k, jets.kappa)
    worst = int(np.argmin(margins))
    if not margins[worst] > 0:
        raise AdmissibilityError('Node %d left Gamma_%d with kappa %s.'
            % (worst, k, jets.kappa[worst].tolist()),
            node=worst, kappa=jets.kappa[worst].copy())
    sigma_k = elementary(jets.kappa, k)[:, k]
    psi, psi_dr = psi_tilde(config, spec, profile, field.flat(),
        field.grid.points())
    return ResidualResult(
        values=sigma_k - psi,
        jets=jets,
        sigma_k=sigma_k,
        psi=psi,
        psi_dr=psi_dr,
        margins=margins,
        min_cone_margin=float(margins[worst]),
        min_tau=float(np.min(jets.tau)),
        max_kappa=float(np.max(np.abs(jets.kappa))),
    )

def residual_norm(result):
    return float(np.max(np.abs(result.values)))
