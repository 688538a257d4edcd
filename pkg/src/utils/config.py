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

import importlib
import os


warp_class_lookup = {
    'euclidean'         : ('weingarten.geometry.warp', 'EuclideanWarp'),
    'hyperbolic'        : ('weingarten.geometry.warp', 'HyperbolicWarp'),
    'spherical-cap'     : ('weingarten.geometry.warp', 'SphericalCapWarp'),
    'custom-polynomial' : ('weingarten.geometry.warp', 'PolynomialWarp'),
}

psi_class_lookup = {
    'radial-beta'       : ('weingarten.operator.psi', 'RadialBetaPsi'),
    'angular'           : ('weingarten.operator.psi', 'AngularPsi'),
    'tabulated'         : ('weingarten.operator.psi', 'TabulatedPsi'),
}

# Kinds for which the structural assumptions can be checked analytically.
auditable_psi_kinds = ('radial-beta', 'angular')

def _lookup(table, kind, what):
    if not kind:
        raise ValueError('Specify a %s kind!' % (what,))
    try:
        modulename, classname = table[kind]
    except KeyError:
        raise ValueError('Unknown %s kind: %s' % (what, kind))
    mod = importlib.import_module(modulename)
    return getattr(mod, classname)

def warp_class(kind):
    """Return class object for a named warp preset."""
    return _lookup(warp_class_lookup, kind, 'warp')

def psi_class(kind):
    """Return class object for a named right-hand side preset."""
    return _lookup(psi_class_lookup, kind, 'psi')

def valid_warp(kind):
    return kind in warp_class_lookup

def all_warps():
    return sorted(warp_class_lookup.keys())

def check_env_debug():
    debug = os.environ.get('WEINGARTENDEBUG', None)
    return False if debug is None else int(debug)
