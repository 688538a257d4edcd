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

"""Exception hierarchy.

Problems with arguments or input files are ValueError subclasses; failures of
an algorithm on valid input are RuntimeError subclasses.
"""


class DomainError(ValueError):
    """Index or coordinate outside the domain of a function."""


class ShapeError(ValueError):
    """Array of the wrong shape, or a matrix that should be symmetric."""


class PreconditionError(ValueError):
    """Input violates a documented precondition (e.g. kappa not in the cone)."""


class DegeneratePairError(ValueError):
    """Pairwise lemma queried with equal curvatures."""


class InterpolationError(ValueError):
    """Tabulated function queried away from its grid."""


class InputError(ValueError):
    """Malformed configuration or data file."""


class SamplingError(RuntimeError):
    """Rejection sampler exhausted its draw budget."""


class AdmissibilityError(RuntimeError):
    """Principal curvatures left the Garding cone at some node."""

    def __init__(self, message, node=None, kappa=None):
        super(AdmissibilityError, self).__init__(message)
        self.node = node
        self.kappa = kappa


class SolverError(RuntimeError):
    """Base class for Newton and continuation failures.

    Carries the last accepted field and homotopy parameter when known.
    """

    def __init__(self, message, field=None, t=None):
        super(SolverError, self).__init__(message)
        self.field = field
        self.t = t


class AdmissibilityLost(SolverError):
    pass


class BarrierViolated(SolverError):
    pass


class MaxIters(SolverError):
    pass


class SingularLinearSystem(SolverError):
    pass


class StepBelowMinimum(SolverError):
    pass
