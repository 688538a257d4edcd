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

"""Fork-based parallel map.

Workers are forked after the task is installed in a module global, so the
function and its inputs are shared with children without pickling; only the
results travel back through the pool.
"""

import logging

from multiprocessing import cpu_count
from multiprocessing import get_context


logger = logging.getLogger(__name__)

_task = None


def resolve_parallelism(threads):
    """Worker count for a `threads` setting, where 0 means one per cpu."""
    threads = int(threads)
    if threads < 0:
        raise ValueError('threads must be nonnegative: %d' % (threads,))
    return cpu_count() if threads == 0 else threads

def _run(i):
    f, l = _task
    return f(l[i])

def parallel_map(f, l, parallelism=None):
    """Return [f(x) for x in l], computed by `parallelism` forked workers.

    Output order always matches input order, so reductions over the result
    are independent of the worker count.
    """
    global _task
    l = list(l)
    ncpu = cpu_count() if parallelism is None else parallelism
    ncpu = max(1, min(ncpu, len(l)))
    if ncpu == 1:
        return [f(x) for x in l]
    logger.debug('parallel_map: %d tasks on %d workers', len(l), ncpu)
    _task = (f, l)
    try:
        with get_context('fork').Pool(processes=ncpu) as pool:
            return pool.map(_run, range(len(l)), chunksize=1)
    finally:
        _task = None
