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

import json

import pytest

import ttw


def test_gallery_names():
    assert {"b2", "c3", "q3", "boolean2x2", "m3", "monoid_idem", "z2", "ideals_10"} <= set(ttw.example_names())


def test_q3_subunits_and_support():
    q3 = ttw.example("q3")
    assert q3.subunits() == ["0", "1"]
    assert q3.support("eps->1") == "1"
    assert q3.support("0->1") == "0"


def test_checks():
    assert ttw.check(ttw.example("boolean2x2"), "locale-based")["holds"]
    r = ttw.check(ttw.example("m3"), "univ-finite")
    assert not r["holds"]
    assert r["square"]["right"]


def test_round_trip_through_json():
    for name in ttw.example_names():
        c = ttw.example(name)
        again = ttw.parse(c.to_json())
        assert again.objects == c.objects
        assert again.morphisms == c.morphisms


def test_emitted_example_parses():
    doc = json.loads(ttw.example_json("b2"))
    assert doc["kind"] == "semilattice"
    assert ttw.parse(json.dumps(doc)).subunits() == ["0", "1"]


def test_errors():
    with pytest.raises(ttw.SchemaError):
        ttw.parse('{"kind": "nope"}')
    with pytest.raises(ttw.UnknownName):
        ttw.example("nope")
    with pytest.raises(ttw.UnknownName):
        ttw.example("q3").support("nope")


def test_completion_of_z2_has_no_terminal_object():
    assert not ttw.example("z2").completion("all").has_terminal_object()
    assert ttw.example("b2").completion("all").has_terminal_object()


def test_simple_quotient():
    q = ttw.example("q3").simple_quotient()
    assert q.is_simple()


def test_gallery_documents_match_the_published_schema():
    jsonschema = pytest.importorskip("jsonschema")
    import pathlib

    schema = json.loads((pathlib.Path(__file__).parents[2] / "docs" / "schema.json").read_text())
    for name in ttw.example_names():
        jsonschema.validate(json.loads(ttw.example_json(name)), schema)
        jsonschema.validate(json.loads(ttw.example(name).to_json()), schema)
