# Copyright (C) 2026  The elpkit authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Epistemic logic programs: answer sets, world views and queries."""

from ._core import (
    CapacityError,
    Error,
    ParseError,
    PreconditionError,
    Program,
    analyze,
    answer_sets,
    bound,
    check_guess,
    derive,
    load,
    load_file,
    query,
    scenarios,
    world_views,
)

__all__ = [
    "CapacityError",
    "Error",
    "ParseError",
    "PreconditionError",
    "Program",
    "analyze",
    "answer_sets",
    "bound",
    "check_guess",
    "derive",
    "load",
    "load_file",
    "query",
    "scenarios",
    "world_views",
]
