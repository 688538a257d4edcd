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

"""Scans of the structural assumptions on psi and the deformation phi.

Slacks are positive when a condition holds:

  psi_below      psi - C(n,k) zeta^k    for r <= r_1
  psi_above      C(n,k) zeta^k - psi    for r >= r_2
  radial_decay   -d/dr (lambda^k psi)   for r_1 < r < r_2
  phi_a .. phi_d deformation conditions, see HomotopyConfig.phi_conditions
"""

import numpy as np

from weingarten.geometry.grid import BaseGrid
from weingarten.utils.config import auditable_psi_kinds
from weingarten.utils.errors import PreconditionError


STRICT = ('psi_below', 'psi_above', 'phi_a', 'phi_d')


def scan_radii(profile, resolution, margin=None):
    """(below, inside, above) radii: [r_1 - margin, r_1], (r_1, r_2) and
    [r_2, r_2 + margin], kept where lambda > 0 and lambda' > 0."""
    r1, r2 = profile.annulus
    if margin is None:
        margin = .1 * (r2 - r1)
    lo, hi = profile.domain
    start = max(r1 - margin, .5 * (lo + r1))
    stop = r2 + margin if not np.isfinite(hi) else min(r2 + margin,
        .5 * (r2 + hi))
    below = np.linspace(start, r1, resolution)
    inside = np.linspace(r1, r2, resolution + 2)[1:-1]
    above = np.linspace(r2, stop, resolution)
    def monotone(r):
        lam, dlam, _ = profile.derivatives(r)
        return r[(lam > 0) & (dlam > 0)]
    return monotone(below), monotone(inside), monotone(above)

def _worst(slack):
    return float(np.min(slack)) if np.size(slack) else np.inf

def assumption_audit(spec, profile, config, resolution=64, grid=None,
        margin=None):
    """Worst slack of each structural condition over radii x grid nodes.

    Returns {'conditions': {name: {'slack', 'passed'}}, 'passed': bool}.
    """
    if spec.kind not in auditable_psi_kinds:
        raise PreconditionError('Cannot audit psi of kind %s.' % (spec.kind,))
    if grid is None:
        grid = BaseGrid(config.n, 16)
    u = grid.points()
    k, binom = config.k, config.binom
    below, inside, above = scan_radii(profile, resolution, margin=margin)

    def on_nodes(r):
        rr = np.repeat(r, len(u))
        uu = np.tile(u, (len(r), 1))
        lam, dlam, _ = profile.derivatives(rr)
        psi = spec.evaluate(profile, rr, uu)
        return lam, dlam, psi

    slacks = {}
    lam, dlam, psi = on_nodes(below)
    slacks['psi_below'] = _worst(psi.value - binom * (dlam/lam)**k)
    lam, dlam, psi = on_nodes(above)
    slacks['psi_above'] = _worst(binom * (dlam/lam)**k - psi.value)
    lam, dlam, psi = on_nodes(inside)
    growth = k * lam**(k-1) * dlam * psi.value + lam**k * psi.d_dr
    slacks['radial_decay'] = _worst(-growth)
    slacks.update(config.phi_conditions(
        np.concatenate([below, inside, above])))

    conditions = {}
    for name, slack in sorted(slacks.items()):
        passed = slack > 0 if name in STRICT else slack >= 0
        conditions[name] = {'slack': slack, 'passed': bool(passed)}
    return {
        'conditions': conditions,
        'passed': all(c['passed'] for c in conditions.values()),
        'resolution': resolution,
    }

def failing_conditions(report):
    return [name for name, c in sorted(report['conditions'].items())
        if not c['passed']]
