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

import pytest


def pytest_addoption(parser):
    parser.addoption(
        '--integration',
        action='store_true',
        help='run integration tests'
    )

def pytest_configure(config):
    config.addinivalue_line('markers',
        'integration: slow acceptance-scale run, needs --integration')

def pytest_collection_modifyitems(config, items):
    if config.getoption('--integration'):
        return
    skip = pytest.mark.skip(
        reason='specify --integration to run integration tests')
    for item in items:
        if 'integration' in item.keywords:
            item.add_marker(skip)
