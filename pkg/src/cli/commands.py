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

"""Subcommands. Each returns an exit code and writes its artifacts to out.

Exit codes: 0 success, 2 a theorem or estimate check failed, 3 invalid input
or failed precondition, 4 the solution path failed, 5 linear algebra failed.
The last three are raised as exceptions and mapped in weingarten.cli.main.
"""

import logging
import os
import warnings

import numpy as np
import pandas as pd

from weingarten.audit.estimates import audit_passed
from weingarten.audit.estimates import audit_solution
from weingarten.audit.estimates import failed_checks
from weingarten.audit.estimates import report_dict
from weingarten.audit.ingest import ingest_field
from weingarten.continuation.newton import newton_solve
from weingarten.continuation.path import continuation_run
from weingarten.geometry.fieldio import dump_field
from weingarten.geometry.grid import RadialGraphField
from weingarten.geometry.jet import jet_sweep
from weingarten.geometry.laplace import lambda_identity_error
from weingarten.inequality.conjecture import ConjectureInstance
from weingarten.inequality.conjecture import conjecture_search
from weingarten.inequality.epsdelta import epsilon_delta_search
from weingarten.operator.assumptions import assumption_audit
from weingarten.operator.assumptions import failing_conditions
from weingarten.operator.psi import TabulatedPsi
from weingarten.symfunc.lemmas import identity_errors
from weingarten.symfunc.lemmas import lemma_suite_batch
from weingarten.symfunc.lemmas import merge_summaries
from weingarten.symfunc.sampling import sample_cone_batch
from weingarten.symfunc.sigma import elementary
from weingarten.utils.errors import AdmissibilityError
from weingarten.utils.errors import InputError
from weingarten.utils.errors import PreconditionError
from weingarten.utils.general import dump_json
from weingarten.utils.general import gen_rng
from weingarten.utils.general import split_rngs
from weingarten.utils.parallel_map import parallel_map
from weingarten.utils.parallel_map import resolve_parallelism
from weingarten.utils.timer import Timer
from weingarten.utils.validation import validate_orders


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_INPUT = 3
EXIT_PATH = 4
EXIT_LINALG = 5

EPSILONS = (0.01, 0.1, 0.5, 0.9)
LEMMA_CHUNK = 10**4
IDENTITY_RTOL = 1e-12


def output_dir(out):
    os.makedirs(out, exist_ok=True)
    return out

def _write(out, name, doc):
    path = os.path.join(output_dir(out), name)
    dump_json(doc, path)
    logger.info('Wrote %s.', path)
    return path


# Continuation solve and audit.

def cmd_solve(config):
    """Continue from t = 0 to t = 1 and audit the final field."""
    grid, profile = config.grid(), config.profile()
    spec, target = config.psi(), config.homotopy(1.)
    audit = config.section('audit')
    assumptions = assumption_audit(spec, profile, target,
        resolution=audit['resolution'], grid=grid)
    if not assumptions['passed']:
        raise PreconditionError('Structural assumptions fail: %s.'
            % (', '.join(failing_conditions(assumptions)),))

    with Timer() as timer:
        run = continuation_run(target, spec, profile, grid,
            params=config.continuation_params(), check_assumptions=False)
    logger.info('Reached t=1 in %d steps (%.2fs).', len(run.trace) - 1,
        timer.interval)

    report = audit_solution(run.field, target, spec, profile)
    dump_field(os.path.join(output_dir(config.out), 'solution.csv'),
        jet_sweep(profile, run.field), config.k)
    _write(config.out, 'trace.json', run.trace)
    passed = audit_passed(report, residual_tol=audit['residual_tol'])
    _write(config.out, 'audit.json', {
        'config': config.to_dict(),
        'audit': report_dict(report),
        'passed': passed,
        'failed_checks': failed_checks(report, audit['residual_tol']),
        'assumptions': assumptions,
        'proven_regime': config.k >= config.n - 2,
        'continuation_steps': len(run.trace) - 1,
    })
    if not passed:
        logger.error('Audit failed: %s.',
            ', '.join(failed_checks(report, audit['residual_tol'])))
    return EXIT_OK if passed else EXIT_VIOLATION

def cmd_audit(config, field_path):
    """Audit a dumped field against the t = 1 problem of config."""
    profile, spec, target = config.profile(), config.psi(), \
        config.homotopy(1.)
    field = ingest_field(field_path, config.grid(), config.annulus)
    residual_tol = config.section('audit')['residual_tol']
    doc = {'config': config.to_dict(), 'field': field_path}
    try:
        report = audit_solution(field, target, spec, profile)
    except AdmissibilityError as e:
        logger.error('%s', e)
        doc.update(admissible=False, node=e.node, kappa=e.kappa,
            passed=False, failed_checks=['cone'])
        _write(config.out, 'audit.json', doc)
        return EXIT_VIOLATION
    passed = audit_passed(report, residual_tol=residual_tol)
    doc.update(admissible=True, audit=report_dict(report), passed=passed,
        failed_checks=failed_checks(report, residual_tol))
    _write(config.out, 'audit.json', doc)
    return EXIT_OK if passed else EXIT_VIOLATION


# Manufactured solutions.

def manufactured_field(grid, mms, annulus):
    """r* = base + amplitude * prod_i sin u_i."""
    def exact(*u):
        return mms['base'] + mms['amplitude'] * np.prod(np.sin(u), axis=0)
    return RadialGraphField.from_function(grid, exact, annulus)

def start_field(exact, mms):
    if mms['start'] == 'base':
        return RadialGraphField.constant(exact.grid, mms['base'],
            exact.annulus)
    bump = np.prod(np.cos(exact.grid.coordinates()), axis=0)
    return exact.with_values(exact.r + mms['perturbation'] * bump)

def manufactured_table(config, grid, refine=1):
    """sigma_k(kappa(r*)) at the nodes of grid, computed on grid refined
    by refine and restricted."""
    mms, profile, k = config.section('mms'), config.profile(), config.k
    fine = grid.refine(refine) if refine > 1 else grid
    jets = jet_sweep(profile, manufactured_field(fine, mms, config.annulus))
    table = elementary(jets.kappa, k)[:, k].reshape(fine.shape)
    return table[(slice(None, None, refine),) * grid.n]

def manufactured_solve(config, N=None, refine=1):
    """Solve the t = 1 problem with psi tabulated from r*; compare to r*."""
    grid, profile = config.grid(N), config.profile()
    mms = config.section('mms')
    exact = manufactured_field(grid, mms, config.annulus)
    spec = TabulatedPsi(config.k, config.n, config.annulus, grid,
        manufactured_table(config, grid, refine=refine))
    params = config.continuation_params()
    out = newton_solve(start_field(exact, mms), config.homotopy(1.), spec,
        profile, tol=params.newton_tol, max_iters=params.newton_max_iters,
        damping=params.damping)
    return {
        'N': grid.N,
        'max_error': float(np.max(np.abs(out.field.r - exact.r))),
        'newton_iters': out.iters,
        'residual_norm': out.residual_norm,
        'lambda_identity_error': lambda_identity_error(profile,
            out.result.jets),
    }

def cmd_mms(config):
    """Manufactured solve; fails when the error exceeds mms.error_tol."""
    row = manufactured_solve(config)
    error_tol = config.section('mms')['error_tol']
    passed = row['max_error'] <= error_tol
    logger.info('Manufactured solution N=%d: max error %.3e after %d '
        'Newton iterations.', row['N'], row['max_error'], row['newton_iters'])
    _write(config.out, 'mms.json', dict(row, passed=passed,
        config=config.to_dict()))
    if not passed:
        logger.error('Manufactured error %.3e exceeds %g.', row['max_error'],
            error_tol)
        return EXIT_VIOLATION
    return EXIT_OK

def observed_order(N_a, e_a, N_b, e_b):
    """log(e_a/e_b) / log(N_b/N_a); NaN with a warning when undefined."""
    if N_a == N_b or not (e_a > 0 and e_b > 0):
        warnings.warn('Observed order undefined between N=%d (%g) and N=%d '
            '(%g).' % (N_a, e_a, N_b, e_b))
        return float('nan')
    return float(np.log(e_a / e_b) / np.log(float(N_b) / N_a))

def sweep_table(config, sizes=None):
    """Continuum-manufactured errors and their orders, one row per N."""
    sweep = config.section('sweep')
    sizes = list(sweep['N'] if sizes is None else sizes)
    if len(sizes) < 3:
        raise InputError('A sweep needs at least 3 grid sizes: %s.'
            % (sizes,))
    rows = [manufactured_solve(config, N=N, refine=sweep['refine'])
        for N in sizes]
    for key, order in (('max_error', 'observed_order'),
            ('lambda_identity_error', 'lambda_order')):
        rows[0][order] = float('nan')
        for a, b in zip(rows[:-1], rows[1:]):
            b[order] = observed_order(a['N'], a[key], b['N'], b[key])
    return pd.DataFrame(rows, columns=['N', 'max_error', 'observed_order',
        'lambda_identity_error', 'lambda_order', 'newton_iters'])

def cmd_sweep(config, sizes=None):
    frame = sweep_table(config, sizes=sizes)
    path = os.path.join(output_dir(config.out), 'sweep.csv')
    frame.to_csv(path, index=False, float_format='%.17g')
    logger.info('Wrote %s.', path)
    _write(config.out, 'sweep.json', {
        'config': config.to_dict(),
        'rows': frame.to_dict(orient='records'),
    })
    return EXIT_OK


# Symmetric-function lab.

def _lemma_chunk(task):
    n, k, size, rng = task
    kappas = sample_cone_batch(k, n, size, rng=rng)
    return lemma_suite_batch(k, kappas), identity_errors(k, kappas)

def lemma_run(n, k, samples, seed, threads=1):
    validate_orders(n, k)
    if samples < 1:
        raise InputError('samples must be positive: %s.' % (samples,))
    sizes = [LEMMA_CHUNK] * (samples // LEMMA_CHUNK)
    if samples % LEMMA_CHUNK:
        sizes.append(samples % LEMMA_CHUNK)
    rngs = split_rngs(gen_rng(seed), len(sizes))
    results = parallel_map(_lemma_chunk,
        [(n, k, s, r) for s, r in zip(sizes, rngs)],
        parallelism=resolve_parallelism(threads))
    summary = merge_summaries([s for s, _e in results])
    identities = {key: max(e[key] for _s, e in results)
        for key in ('euler', 'count')}
    return summary, identities

def epsilon_delta_rows(epsilons=EPSILONS):
    rows = []
    for epsilon in epsilons:
        delta, value = epsilon_delta_search(epsilon)
        rows.append({'epsilon': epsilon, 'delta': delta, 'min_f': value,
            'passed': bool(delta < 4 * epsilon and value > 0)})
    return rows

def cmd_lemmas(n, k, samples, seed, threads, out):
    with Timer('lemma suite', logger):
        summary, identities = lemma_run(n, k, samples, seed, threads=threads)
    with Timer('epsilon-delta search', logger):
        epsdelta = epsilon_delta_rows()
    violations = sum(summary.failures.values())
    identities_ok = max(identities.values()) <= IDENTITY_RTOL
    passed = violations == 0 and identities_ok \
        and all(row['passed'] for row in epsdelta)
    logger.info('Lemma suite (n=%d, k=%d): %d samples, %d violations; '
        'identity error %.2e.', n, k, summary.samples, violations,
        max(identities.values()))
    _write(out, 'lemmas.json', {
        'config': {'n': n, 'k': k, 'samples': samples, 'seed': seed,
            'threads': threads},
        'lemmas': summary._asdict(),
        'identities': identities,
        'epsilon_delta': epsdelta,
        'passed': passed,
    })
    return EXIT_OK if passed else EXIT_VIOLATION

def cmd_conjecture(n, k, K, B, N0, N1, budget, seed, threads, out):
    instance = ConjectureInstance(n, k, K, B, N0, N1)
    with Timer('conjecture search', logger):
        report = conjecture_search(instance, budget, rng=gen_rng(seed),
            parallelism=resolve_parallelism(threads))
    doc = report._asdict()
    doc['worst_kappa'] = report.worst_kappa.to_list()
    doc['config'] = dict(instance.to_dict(), budget=budget, seed=seed,
        threads=threads)
    _write(out, 'conjecture.json', doc)
    if not report.holds:
        logger.error('Form is negative (%.3e) at kappa=%s.',
            report.min_eigenvalue, doc['worst_kappa'])
        return EXIT_VIOLATION
    return EXIT_OK
