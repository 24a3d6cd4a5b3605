# Copyright 2026 The frobqec Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Codes and Weyl systems over finite Frobenius rings."""

import json
import os
from fractions import Fraction

from ._frobqec import (
    ConsistencyError,
    InvalidInputError,
    PhaseSpace as _PhaseSpace,
    ResourceError,
    Ring,
    builtin_examples,
    command_names,
    make_chain_ring,
    make_product,
    make_zm,
)
from ._frobqec import run_command as _run_command

__all__ = [
    "ConsistencyError",
    "InvalidInputError",
    "PhaseSpace",
    "ResourceError",
    "Ring",
    "builtin_examples",
    "command_names",
    "make_chain_ring",
    "make_product",
    "make_zm",
    "ring",
    "run",
    "space",
    "turn",
]

PhaseSpace = _PhaseSpace


def turn(pair):
    """Converts a (num, den) pair into a Fraction in [0, 1)."""
    return Fraction(pair[0], pair[1])


def ring(doc):
    """Builds a Ring from a ring document (dict or JSON text)."""
    return Ring.from_json(doc if isinstance(doc, str) else json.dumps(doc))


def space(ring_doc, k, n, form=None):
    """Builds a PhaseSpace; form defaults to the identity matrix."""
    r = ring_doc if isinstance(ring_doc, Ring) else ring(ring_doc)
    return PhaseSpace(r, k, n, json.dumps(form))


def run(command, scenario=None, max_elems=0):
    """Runs a CLI command on a scenario (dict, JSON text, or file path).

    Returns (exit_code, report) with the report as a dict.
    """
    if scenario is None:
        text = ""
    elif isinstance(scenario, dict):
        text = json.dumps(scenario)
    elif isinstance(scenario, (str, os.PathLike)) and os.path.exists(scenario):
        with open(scenario, encoding="utf-8") as f:
            text = f.read()
    else:
        text = str(scenario)
    code, report = _run_command(command, text, True, max_elems)
    return code, json.loads(report)
