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

"""Command-line entry point: weingarten <subcommand> [options]."""

import argparse
import logging
import sys

from weingarten.cli import commands
from weingarten.cli.config import RunConfig
from weingarten.utils.errors import AdmissibilityError
from weingarten.utils.errors import InputError
from weingarten.utils.errors import SamplingError
from weingarten.utils.errors import SingularLinearSystem
from weingarten.utils.errors import SolverError
from weingarten.utils.timer import Timer


logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 3), not argparse's exit 2."""

    def error(self, message):
        raise InputError(message)


def _common(parser, config=True):
    if config:
        parser.add_argument('--config', help='JSON run configuration; '
            'defaults apply when omitted')
    parser.add_argument('--out', help='output directory')
    parser.add_argument('--seed', type=int, help='random seed')
    parser.add_argument('--threads', type=int,
        help='worker processes, 0 for one per cpu')

def build_parser():
    parser = ArgumentParser(prog='weingarten',
        description='Numerical lab for prescribed Weingarten curvature '
            'equations in warped products.')
    parser.add_argument('--verbose', action='store_true',
        help='log every Newton iteration')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    _common(sub.add_parser('solve', help='continuation solve and audit'))
    p = sub.add_parser('audit', help='audit a dumped field')
    _common(p)
    p.add_argument('--field', required=True, help='solution CSV to audit')
    p = sub.add_parser('mms', help='manufactured-solution check')
    _common(p)
    p.add_argument('--N', type=int, help='grid size override')
    p = sub.add_parser('sweep', help='refinement sweep')
    _common(p)
    p.add_argument('--N', type=int, nargs='+', help='grid sizes')

    p = sub.add_parser('lemmas', help='lemma suite on cone samples')
    _common(p, config=False)
    p.add_argument('--n', type=int, default=3)
    p.add_argument('--k', type=int, default=2)
    p.add_argument('--samples', type=int, default=10**5)

    p = sub.add_parser('conjecture', help='search for a negative form')
    _common(p, config=False)
    p.add_argument('--n', type=int, default=3)
    p.add_argument('--k', type=int, default=2)
    p.add_argument('--K', type=float, default=5.)
    p.add_argument('--B', type=float, default=10.)
    p.add_argument('--N0', type=float, default=1.)
    p.add_argument('--N1', type=float, default=10.)
    p.add_argument('--budget', type=int, default=10**4)
    return parser

def load_config(args):
    config = RunConfig.load(args.config) if args.config else RunConfig()
    N = getattr(args, 'N', None)
    return config.override(seed=args.seed, threads=args.threads,
        out=args.out, N=N if isinstance(N, int) else None)

def dispatch(args):
    if args.command in ('lemmas', 'conjecture'):
        seed = 1 if args.seed is None else args.seed
        threads = 0 if args.threads is None else args.threads
        out = args.out or 'out'
        if args.command == 'lemmas':
            return commands.cmd_lemmas(args.n, args.k, args.samples, seed,
                threads, out)
        return commands.cmd_conjecture(args.n, args.k, args.K, args.B,
            args.N0, args.N1, args.budget, seed, threads, out)
    config = load_config(args)
    if args.command == 'solve':
        return commands.cmd_solve(config)
    if args.command == 'audit':
        return commands.cmd_audit(config, args.field)
    if args.command == 'mms':
        return commands.cmd_mms(config)
    assert args.command == 'sweep'
    return commands.cmd_sweep(config, sizes=args.N)

def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except InputError as e:
        sys.stderr.write('weingarten: %s\n' % (e,))
        return commands.EXIT_INPUT
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        with Timer() as timer:
            code = dispatch(args)
    except SingularLinearSystem as e:
        logger.error('Linear algebra failure: %s', e)
        return commands.EXIT_LINALG
    except (SolverError, AdmissibilityError) as e:
        logger.error('%s at t=%s: %s', type(e).__name__,
            getattr(e, 't', None), e)
        return commands.EXIT_PATH
    except (ValueError, SamplingError) as e:
        logger.error('%s: %s', type(e).__name__, e)
        return commands.EXIT_INPUT
    logger.info('%s finished with exit code %d in %.2fs.', args.command,
        code, timer.interval)
    return code


if __name__ == '__main__':
    sys.exit(main())
