# Copyright 2026 The ttw Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python access to the ttw library."""

import json

from ._ttw import (
    AxiomError,
    CapExceeded,
    Category,
    PreconditionError,
    SchemaError,
    UnknownName,
    example,
    example_json,
    example_names,
    parse,
)

__all__ = [
    "AxiomError",
    "CapExceeded",
    "Category",
    "PreconditionError",
    "SchemaError",
    "UnknownName",
    "check",
    "example",
    "example_json",
    "example_names",
    "parse",
]


def check(category, prop):
    """Property verdict as a dict with keys property, holds and, on failure, detail and witness."""
    return json.loads(category.check_json(prop))
