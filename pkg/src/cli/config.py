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

"""Run configuration: one versioned JSON document, defaults filled in."""

import copy
import json

from weingarten.continuation.path import ContinuationParams
from weingarten.geometry.grid import BaseGrid
from weingarten.geometry.warp import make_warp
from weingarten.operator.homotopy import HomotopyConfig
from weingarten.operator.psi import make_psi
from weingarten.utils.config import all_warps
from weingarten.utils.config import auditable_psi_kinds
from weingarten.utils.config import valid_warp
from weingarten.utils.errors import InputError
from weingarten.utils.general import merged
from weingarten.utils.validation import validate_annulus
from weingarten.utils.validation import validate_orders


SCHEMA_VERSION = 1

DEFAULTS = {
    'schema_version': SCHEMA_VERSION,
    'n': 2,
    'k': 2,
    'N': 64,
    'enforce_n_lt_2k': True,
    'warp': {'kind': 'euclidean', 'params': {}},
    'annulus': [1., 3.],
    'psi': {'kind': 'angular', 's_beta': 2.5, 'eps_psi': 0.05},
    'phi_slope': 1.,
    'continuation': {
        'dt0': 0.1,
        'dt_min': 1e-4,
        'dt_max': 0.25,
        'dt_grow': 1.5,
        'fast_iters': 5,
        'newton_tol': 1e-10,
        'newton_max_iters': 25,
        'damping': 1.,
    },
    'mms': {'base': 2., 'amplitude': 0.3, 'perturbation': 0.05,
        'start': 'base', 'error_tol': 1e-9},
    'sweep': {'N': [32, 64, 128], 'refine': 4},
    'audit': {'residual_tol': 1e-8, 'resolution': 64},
    'seed': 1,
    'threads': 0,
    'out': 'out',
}

# Sections whose keys are checked against the defaults.
SECTIONS = ('continuation', 'mms', 'sweep', 'audit')
PSI_KEYS = {
    'radial-beta': ('kind', 's_beta'),
    'angular': ('kind', 's_beta', 'eps_psi'),
}


def resolve(doc):
    """Defaults merged with doc; unknown keys raise InputError."""
    if not isinstance(doc, dict):
        raise InputError('Configuration must be a JSON object.')
    unknown = sorted(set(doc) - set(DEFAULTS))
    if unknown:
        raise InputError('Unknown configuration keys: %s.' % (unknown,))
    resolved = copy.deepcopy(DEFAULTS)
    for key, value in doc.items():
        if isinstance(DEFAULTS[key], dict) and not isinstance(value, dict):
            raise InputError('Section %s must be an object.' % (key,))
        if key in SECTIONS:
            extra = sorted(set(value) - set(DEFAULTS[key]))
            if extra:
                raise InputError('Unknown keys in %s: %s.' % (key, extra))
            resolved[key] = merged(DEFAULTS[key], value)
        elif key == 'psi':
            kind = value.get('kind', DEFAULTS['psi']['kind'])
            base = DEFAULTS['psi'] if kind == 'angular' \
                else {'kind': kind, 's_beta': DEFAULTS['psi']['s_beta']}
            resolved[key] = merged(base, value)
        elif key == 'warp':
            resolved[key] = merged(copy.deepcopy(DEFAULTS['warp']), value)
        else:
            resolved[key] = copy.deepcopy(value)
    if resolved['schema_version'] != SCHEMA_VERSION:
        raise InputError('Unsupported schema_version %s (expected %d).'
            % (resolved['schema_version'], SCHEMA_VERSION))
    return resolved


class RunConfig(object):
    """Validated run configuration.

    Construction builds the warp profile and the right-hand side once so
    that every error in the document surfaces at load time as InputError.
    """

    def __init__(self, doc=None):
        self.doc = resolve({} if doc is None else doc)
        try:
            self._validate()
        except InputError:
            raise
        except ValueError as e:
            raise InputError('Invalid configuration: %s' % (e,))

    @classmethod
    def load(cls, path):
        try:
            with open(path) as f:
                doc = json.load(f)
        except (OSError, ValueError) as e:
            raise InputError('Cannot read configuration %s: %s' % (path, e))
        return cls(doc)

    def _validate(self):
        d = self.doc
        for key in ('n', 'k', 'N', 'seed', 'threads'):
            if not isinstance(d[key], int) or isinstance(d[key], bool):
                raise InputError('%s must be an integer: %r.' % (key, d[key]))
        validate_orders(self.n, self.k, strict_cone=d['enforce_n_lt_2k'])
        if self.seed < 0 or self.threads < 0:
            raise InputError('seed and threads must be nonnegative.')
        validate_annulus(d['annulus'])
        if not valid_warp(d['warp'].get('kind')):
            raise InputError('Unknown warp kind %s, expected one of %s.'
                % (d['warp'].get('kind'), all_warps()))
        kind = d['psi'].get('kind')
        if kind not in auditable_psi_kinds:
            raise InputError('psi kind must be one of %s: %s.'
                % (list(auditable_psi_kinds), kind))
        extra = sorted(set(d['psi']) - set(PSI_KEYS[kind]))
        if extra:
            raise InputError('Unknown keys in psi: %s.' % (extra,))
        if d['mms']['start'] not in ('perturbed', 'base'):
            raise InputError('mms.start must be perturbed or base.')
        error_tol = d['mms']['error_tol']
        if isinstance(error_tol, bool) \
                or not isinstance(error_tol, (int, float)) or not error_tol > 0:
            raise InputError('mms.error_tol must be positive.')
        refine = d['sweep']['refine']
        if not isinstance(refine, int) or refine < 1:
            raise InputError('sweep.refine must be a positive integer.')
        self.grid()
        self.profile()
        self.psi()
        self.homotopy(1.)
        self.continuation_params()

    n = property(lambda self: self.doc['n'])
    k = property(lambda self: self.doc['k'])
    N = property(lambda self: self.doc['N'])
    seed = property(lambda self: self.doc['seed'])
    threads = property(lambda self: self.doc['threads'])
    out = property(lambda self: self.doc['out'])

    @property
    def annulus(self):
        return validate_annulus(self.doc['annulus'])

    def section(self, name):
        return dict(self.doc[name])

    def grid(self, N=None):
        return BaseGrid(self.n, self.N if N is None else N)

    def profile(self):
        warp = self.doc['warp']
        return make_warp(warp['kind'], self.annulus, warp.get('params'))

    def psi(self):
        params = dict(self.doc['psi'])
        kind = params.pop('kind')
        return make_psi(kind, self.k, self.n, self.annulus, **params)

    def homotopy(self, t):
        return HomotopyConfig(t, self.k, self.n, self.annulus,
            phi_slope=self.doc['phi_slope'])

    def continuation_params(self):
        return ContinuationParams(**self.doc['continuation'])

    def override(self, **changes):
        """Copy with top-level keys replaced; None values are ignored."""
        doc = copy.deepcopy(self.doc)
        doc.update({k: v for k, v in changes.items() if v is not None})
        return RunConfig(doc)

    def to_dict(self):
        return copy.deepcopy(self.doc)
