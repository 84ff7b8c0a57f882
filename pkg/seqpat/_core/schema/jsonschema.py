import logging
import os
from collections.abc import Mapping

from jsonschema import Draft7Validator

from seqpat._core.exceptions import BadSchemaError
from seqpat._core.loader import load_single_document_yaml

logger: logging.Logger = logging.getLogger(__name__)


class SchemaCache:
    """Caches loaded schemas"""

    def __init__(self) -> None:
        self._loaded: dict[str, dict] = {}

    def __call__(self, schema_name: str) -> dict:
        """Load <schema_name>.jsonschema.yaml next to this module and cache it"""
        try:
            return self._loaded[schema_name]
        except KeyError:
            here = os.path.dirname(os.path.abspath(__file__))
            filename = os.path.join(here, f"{schema_name}.jsonschema.yaml")
            self._loaded[schema_name] = load_single_document_yaml(filename)

            logger.debug("Loaded schema from %s", filename)

            return self._loaded[schema_name]


load_schema_file = SchemaCache()


def verify_jsonschema(to_verify: Mapping, schema_name: str) -> None:
    """Verify a document against one of the bundled schemas

    Args:
        to_verify: settings or output document
        schema_name: 'config' or 'output'

    Raises:
        BadSchemaError: Schema did not match
    """
    schema = load_schema_file(schema_name)
    validator = Draft7Validator(schema)

    errors = sorted(validator.iter_errors(to_verify), key=lambda e: list(e.path))
    if errors:
        for error in errors:
            logger.error(
                "%s at %s", error.message, "/".join(str(p) for p in error.path) or "<root>"
            )
        raise BadSchemaError(
            f"document does not match the {schema_name} schema: {errors[0].message}"
        ) from errors[0]
