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

import logging
import time


class Timer(object):
    """Wall-clock context manager; logs `label` and the interval at exit.

        with Timer('continuation', logger) as timer:
            ...
        timer.interval  # seconds
    """

    def __init__(self, label=None, logger=None, level=logging.INFO):
        self.label = label
        self.logger = logger
        self.level = level
        self.interval = None

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *args):
        self.interval = time.perf_counter() - self.start
        if self.label is not None and self.logger is not None:
            self.logger.log(self.level, '%s took %.3fs', self.label,
                self.interval)
