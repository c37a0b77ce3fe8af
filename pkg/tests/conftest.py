"""
Shared fixtures
"""

from pathlib import Path

import pytest

from reqlint.report import load_schema

CORPUS = Path(__file__).parent.parent / "corpus"


@pytest.fixture
def corpus():
    """Directory of example requirements files"""
    return CORPUS


@pytest.fixture
def assert_valid_report():
    """Assert that a report dictionary follows report.schema.json"""
    jsonschema = pytest.importorskip("jsonschema")
    validator = jsonschema.Draft7Validator(load_schema())

    def check(data):
        errors = [f"{'.'.join(map(str, e.absolute_path)) or '$'}: {e.message}"
                  for e in validator.iter_errors(data)]
        assert not errors, "\n".join(errors)

    return check
